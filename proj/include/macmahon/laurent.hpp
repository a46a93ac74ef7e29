#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macmahon/integer.hpp"

namespace macmahon {

/// Sparse Laurent polynomial over the integers in an ordered list of named
/// variables. Binary operations between polynomials over different variable
/// lists first embed both into the union of the two lists (left list first).
class LaurentPolynomial {
 public:
  using Exponents = std::vector<std::int64_t>;

  /// Graded order: total degree ascending, then lexicographically descending.
  /// Iteration order of terms() is the serialization order.
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Coeff, TermOrder>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::vector<std::string> variables);

  static LaurentPolynomial constant(Coeff c);
  static LaurentPolynomial variable(const std::string& name, std::int64_t exponent = 1);
  static LaurentPolynomial monomial(std::vector<std::string> variables, Exponents exponents,
                                    Coeff coeff = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  void add_term(const Exponents& exponents, Coeff coeff);
  /// Builds a polynomial from terms in any order; repeated exponents are summed.
  static LaurentPolynomial from_terms(std::vector<std::string> variables,
                                      std::vector<std::pair<Exponents, Coeff>> terms);

  Coeff coefficient(const Exponents& exponents) const;
  /// Coefficient of the monomial given by name -> exponent; unnamed variables
  /// have exponent 0. Names not among variables() must have exponent 0.
  Coeff coefficient(const std::map<std::string, std::int64_t>& monomial) const;

  LaurentPolynomial with_variables(const std::vector<std::string>& superset) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial scaled(Coeff c) const;
  LaurentPolynomial pow(unsigned k) const;

  /// Substitutes an integer for one variable and removes it from the list.
  LaurentPolynomial specialize(const std::string& name, Coeff value) const;
  /// Renames variables; resulting names must stay distinct.
  LaurentPolynomial renamed(const std::map<std::string, std::string>& mapping) const;
  /// Drops variables whose exponent is zero in every term.
  LaurentPolynomial trimmed() const;

  /// Smallest exponent of `name` across all terms (0 for an absent variable
  /// or the zero polynomial).
  std::int64_t min_exponent(const std::string& name) const;
  std::int64_t min_exponent() const;

  Coeff evaluate(const std::map<std::string, Coeff>& values) const;

  /// `<coeff> v1^e1 v2^e2 ...` per term, space separated; "0" for zero.
  std::string serialize() const;

 private:
  struct Unchecked {};
  // variables already known to be distinct
  LaurentPolynomial(Unchecked, std::vector<std::string> variables) : variables_(std::move(variables)) {}

  std::vector<std::string> variables_;
  Terms terms_;
};

}  // namespace macmahon
