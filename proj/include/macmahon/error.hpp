#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace macmahon {

enum class Errc {
  invalid_argument,
  parse,
  cap_exceeded,
  inapplicable,
  domain,  // input violates a mathematical precondition (non-forest, non-monomial phi image, ...)
  overflow,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace macmahon
