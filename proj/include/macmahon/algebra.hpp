#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "macmahon/integer.hpp"
#include "macmahon/laurent.hpp"

namespace macmahon {

/// A vector in N^m: a partition part, or a multidegree.
using Vec = std::vector<std::int64_t>;

/// Unordered multiset of nonzero vectors of common width, stored with parts in
/// descending lexicographic order. Parts live in one flat buffer.
///
/// Ordering (operator<=>) is the canonical partition order used for all
/// serialization and triangularity checks: multidegree, then length, then
/// lexicographic comparison of the part sequence.
class VectorPartition {
 public:
  VectorPartition() = default;
  /// The empty partition of the given width.
  explicit VectorPartition(std::size_t width);

  /// Sorts the parts into canonical order. Throws on a zero part or a part of
  /// the wrong width.
  static VectorPartition canonicalize(std::size_t width, const std::vector<Vec>& parts);
  /// Same, with the parts given back to back in one buffer.
  static VectorPartition canonicalize_flat(std::size_t width, Vec data);

  std::size_t width() const { return width_; }
  std::size_t length() const { return width_ == 0 ? 0 : data_.size() / width_; }
  bool empty() const { return data_.empty(); }
  std::span<const std::int64_t> part(std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  std::vector<Vec> parts() const;
  /// Sum of the parts.
  const Vec& grade() const { return grade_; }

  std::size_t multiplicity(std::span<const std::int64_t> v) const;

  /// Multiset union.
  VectorPartition concat(const VectorPartition& other) const;
  /// Parts whose position bit is set in `mask` (positions in canonical order).
  VectorPartition restrict_to(std::uint64_t mask) const;
  /// Projects every part onto the given coordinates, dropping parts that
  /// become zero.
  VectorPartition project(const std::vector<std::size_t>& coords) const;

  /// `[(a,b),(c,d)]`
  std::string to_string() const;

  friend bool operator==(const VectorPartition& a, const VectorPartition& b) {
    return a.width_ == b.width_ && a.data_ == b.data_;
  }
  friend std::strong_ordering operator<=>(const VectorPartition& a, const VectorPartition& b);

 private:
  // Assumes `data` is already sorted descending by part.
  VectorPartition(std::size_t width, std::vector<std::int64_t> data);

  std::size_t width_ = 0;
  std::vector<std::int64_t> data_;
  Vec grade_;
};

enum class PartDomain {
  positive,  // parts in P^m (every coordinate >= 1)
  nonzero,   // parts in N^m minus the origin
};

/// Every vector partition of `target`, in canonical partition order.
std::vector<VectorPartition> vp_enumerate(const Vec& target, PartDomain domain = PartDomain::positive);

/// Product over distinct vectors v of C(m_v(lambda), m_v(omega)).
Coeff vp_binomial(const VectorPartition& lambda, const VectorPartition& omega);

/// Finite integer combination of power sums p_Lambda of one width.
class MacMahonElement {
 public:
  using Terms = std::map<VectorPartition, Coeff>;

  explicit MacMahonElement(std::size_t width = 2) : width_(width) {}
  static MacMahonElement basis(const VectorPartition& lambda, Coeff c = 1);
  static MacMahonElement one(std::size_t width) { return basis(VectorPartition(width)); }

  std::size_t width() const { return width_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(const VectorPartition& lambda) const;

  void add_term(const VectorPartition& lambda, Coeff c);

  MacMahonElement& operator+=(const MacMahonElement& other);
  friend MacMahonElement operator+(MacMahonElement a, const MacMahonElement& b) { return a += b; }
  friend MacMahonElement operator-(MacMahonElement a, const MacMahonElement& b) {
    return a += b.scaled(-1);
  }
  /// Bilinear extension of p_A p_B = p_{AB}.
  friend MacMahonElement operator*(const MacMahonElement& a, const MacMahonElement& b);
  friend bool operator==(const MacMahonElement& a, const MacMahonElement& b) {
    return a.width_ == b.width_ && a.terms_ == b.terms_;
  }
  MacMahonElement scaled(Coeff c) const;

  /// One `<signed coeff> * p[...]` line per term in canonical order; "0" for zero.
  std::string serialize() const;

 private:
  std::size_t width_;
  Terms terms_;
};

/// Finite integer combination of N-fold tensors p_A1 (x) ... (x) p_AN.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<VectorPartition, N>;
  using Terms = std::map<Key, Coeff>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& key, Coeff c) {
    if (c == 0) return;
    for (std::size_t i = 1; i < N; ++i)
      if (key[i].width() != key[0].width())
        fail(Errc::invalid_argument, "tensor factors must share a width");
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

  std::string serialize() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
      if (!out.empty()) out += '\n';
      out += (c > 0 ? "+" : "") + std::to_string(c) + " *";
      for (std::size_t i = 0; i < N; ++i) {
        if (i > 0) out += " (x)";
        out += " p" + key[i].to_string();
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

using TensorElement = Tensor<2>;

/// Names of the first k variables of each alphabet, ordered color by color:
/// width 1 -> x1..xk; width 2 -> x1 y1 x2 y2 ...; width m > 2 -> x1 y1_1 .. y{m-1}_1 x2 ...
std::vector<std::string> alphabet_variables(std::size_t width, unsigned k);

/// Sets every variable with index > k to zero.
LaurentPolynomial mac_truncate(const MacMahonElement& e, int k);

}  // namespace macmahon
