#include "macmahon/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace macmahon {

namespace {

using PartView = std::span<const std::int64_t>;

bool part_greater(PartView a, PartView b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

VectorPartition::VectorPartition(std::size_t width) : width_(width), grade_(width, 0) {
  if (width == 0) fail(Errc::invalid_argument, "vector partition width must be at least 1");
}

VectorPartition::VectorPartition(std::size_t width, std::vector<std::int64_t> data)
    : width_(width), data_(std::move(data)), grade_(width, 0) {
  for (std::size_t i = 0; i < data_.size(); ++i) grade_[i % width_] += data_[i];
}

VectorPartition VectorPartition::canonicalize(std::size_t width, const std::vector<Vec>& parts) {
  if (width == 0) fail(Errc::invalid_argument, "vector partition width must be at least 1");
  for (const auto& p : parts) {
    if (p.size() != width) fail(Errc::invalid_argument, "vector partition parts have mixed widths");
    if (std::all_of(p.begin(), p.end(), [](auto c) { return c == 0; }))
      fail(Errc::invalid_argument, "vector partition has a zero part");
    if (std::any_of(p.begin(), p.end(), [](auto c) { return c < 0; }))
      fail(Errc::invalid_argument, "vector partition part has a negative coordinate");
  }
  std::vector<const Vec*> order;
  order.reserve(parts.size());
  for (const auto& p : parts) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](const Vec* a, const Vec* b) { return *a > *b; });
  std::vector<std::int64_t> data;
  data.reserve(parts.size() * width);
  for (const Vec* p : order) data.insert(data.end(), p->begin(), p->end());
  return VectorPartition(width, std::move(data));
}

VectorPartition VectorPartition::canonicalize_flat(std::size_t width, Vec data) {
  if (width == 0) fail(Errc::invalid_argument, "vector partition width must be at least 1");
  if (data.size() % width != 0) fail(Errc::invalid_argument, "vector partition parts have mixed widths");
  const std::size_t len = data.size() / width;
  for (std::size_t i = 0; i < len; ++i) {
    std::span<const std::int64_t> p(data.data() + i * width, width);
    if (std::all_of(p.begin(), p.end(), [](auto c) { return c == 0; }))
      fail(Errc::invalid_argument, "vector partition has a zero part");
    if (std::any_of(p.begin(), p.end(), [](auto c) { return c < 0; }))
      fail(Errc::invalid_argument, "vector partition part has a negative coordinate");
  }
  // insertion sort on parts, descending; lengths here are small
  Vec tmp(width);
  for (std::size_t i = 1; i < len; ++i) {
    std::copy_n(data.begin() + i * width, width, tmp.begin());
    std::size_t j = i;
    while (j > 0 && std::lexicographical_compare(data.begin() + (j - 1) * width, data.begin() + j * width,
                                                 tmp.begin(), tmp.end())) {
      std::copy_n(data.begin() + (j - 1) * width, width, data.begin() + j * width);
      --j;
    }
    std::copy_n(tmp.begin(), width, data.begin() + j * width);
  }
  return VectorPartition(width, std::move(data));
}

std::vector<Vec> VectorPartition::parts() const {
  std::vector<Vec> out;
  out.reserve(length());
  for (std::size_t i = 0; i < length(); ++i) {
    auto p = part(i);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

std::size_t VectorPartition::multiplicity(std::span<const std::int64_t> v) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < length(); ++i)
    if (std::equal(v.begin(), v.end(), part(i).begin(), part(i).end())) ++count;
  return count;
}

VectorPartition VectorPartition::concat(const VectorPartition& other) const {
  if (other.width_ != width_) fail(Errc::invalid_argument, "vector partition width mismatch");
  if (other.empty()) return *this;
  if (empty()) return other;
  // merge of two descending part sequences
  std::vector<std::int64_t> data;
  data.reserve(data_.size() + other.data_.size());
  std::size_t i = 0, j = 0;
  const std::size_t la = length(), lb = other.length();
  while (i < la || j < lb) {
    if (j == lb || (i < la && !part_greater(other.part(j), part(i)))) {
      auto p = part(i++);
      data.insert(data.end(), p.begin(), p.end());
    } else {
      auto p = other.part(j++);
      data.insert(data.end(), p.begin(), p.end());
    }
  }
  return VectorPartition(width_, std::move(data));
}

VectorPartition VectorPartition::restrict_to(std::uint64_t mask) const {
  std::vector<std::int64_t> data;
  for (std::size_t i = 0; i < length(); ++i) {
    if ((mask >> i) & 1u) {
      auto p = part(i);
      data.insert(data.end(), p.begin(), p.end());
    }
  }
  VectorPartition out(width_, std::move(data));
  return out;
}

VectorPartition VectorPartition::project(const std::vector<std::size_t>& coords) const {
  if (coords.empty()) fail(Errc::invalid_argument, "projection onto zero coordinates");
  std::vector<Vec> parts;
  for (std::size_t i = 0; i < length(); ++i) {
    Vec v;
    v.reserve(coords.size());
    for (auto c : coords) {
      if (c >= width_) fail(Errc::invalid_argument, "projection coordinate out of range");
      v.push_back(part(i)[c]);
    }
    if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; })) parts.push_back(std::move(v));
  }
  return canonicalize(coords.size(), parts);
}

std::string VectorPartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < length(); ++i) {
    if (i > 0) out += ',';
    out += '(';
    auto p = part(i);
    for (std::size_t k = 0; k < width_; ++k) {
      if (k > 0) out += ',';
      out += std::to_string(p[k]);
    }
    out += ')';
  }
  out += ']';
  return out;
}

std::strong_ordering operator<=>(const VectorPartition& a, const VectorPartition& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  if (auto c = a.grade_ <=> b.grade_; c != 0) return c;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.data_ <=> b.data_;
}

std::vector<VectorPartition> vp_enumerate(const Vec& target, PartDomain domain) {
  const std::size_t m = target.size();
  if (m == 0) fail(Errc::invalid_argument, "vp_enumerate: empty target");
  if (std::any_of(target.begin(), target.end(), [](auto c) { return c < 0; }))
    fail(Errc::invalid_argument, "vp_enumerate: negative target coordinate");
  if (std::all_of(target.begin(), target.end(), [](auto c) { return c == 0; }))
    fail(Errc::invalid_argument, "vp_enumerate: zero target");

  const std::int64_t low = domain == PartDomain::positive ? 1 : 0;
  std::vector<VectorPartition> out;
  std::vector<Vec> current;

  // Parts are chosen in non-increasing lexicographic order, so each multiset
  // is produced exactly once.
  std::function<void(const Vec&, const Vec&)> recurse = [&](const Vec& remaining, const Vec& bound) {
    if (std::all_of(remaining.begin(), remaining.end(), [](auto c) { return c == 0; })) {
      out.push_back(VectorPartition::canonicalize(m, current));
      return;
    }
    Vec v(m, low);
    for (std::size_t k = 0; k < m; ++k)
      if (v[k] > remaining[k]) return;
    while (true) {
      bool nonzero = std::any_of(v.begin(), v.end(), [](auto c) { return c != 0; });
      if (nonzero && v <= bound) {
        Vec rest(m);
        for (std::size_t k = 0; k < m; ++k) rest[k] = remaining[k] - v[k];
        current.push_back(v);
        recurse(rest, v);
        current.pop_back();
      }
      // odometer over the box [low, remaining]
      std::size_t k = m;
      while (k > 0) {
        --k;
        if (v[k] < remaining[k]) {
          ++v[k];
          break;
        }
        v[k] = low;
        if (k == 0) {
          k = m + 1;
          break;
        }
      }
      if (k == m + 1) break;
    }
  };
  recurse(target, target);
  std::sort(out.begin(), out.end());
  return out;
}

Coeff vp_binomial(const VectorPartition& lambda, const VectorPartition& omega) {
  if (lambda.width() != omega.width()) fail(Errc::invalid_argument, "vp_binomial: width mismatch");
  Coeff result = 1;
  std::size_t i = 0;
  while (i < omega.length()) {
    auto v = omega.part(i);
    std::size_t run = 1;
    while (i + run < omega.length() &&
           std::equal(v.begin(), v.end(), omega.part(i + run).begin(), omega.part(i + run).end()))
      ++run;
    const auto have = static_cast<std::int64_t>(lambda.multiplicity(v));
    result = checked_mul(result, binomial(have, static_cast<std::int64_t>(run)));
    if (result == 0) return 0;
    i += run;
  }
  return result;
}

MacMahonElement MacMahonElement::basis(const VectorPartition& lambda, Coeff c) {
  MacMahonElement e(lambda.width());
  e.add_term(lambda, c);
  return e;
}

Coeff MacMahonElement::coefficient(const VectorPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

void MacMahonElement::add_term(const VectorPartition& lambda, Coeff c) {
  if (lambda.width() != width_) fail(Errc::invalid_argument, "MacMahon element width mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

MacMahonElement& MacMahonElement::operator+=(const MacMahonElement& other) {
  if (other.width_ != width_) fail(Errc::invalid_argument, "MacMahon element width mismatch");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

MacMahonElement operator*(const MacMahonElement& a, const MacMahonElement& b) {
  if (a.width_ != b.width_) fail(Errc::invalid_argument, "MacMahon element width mismatch");
  MacMahonElement out(a.width_);
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) out.add_term(la.concat(lb), checked_mul(ca, cb));
  return out;
}

MacMahonElement MacMahonElement::scaled(Coeff c) const {
  MacMahonElement out(width_);
  if (c == 0) return out;
  for (const auto& [lambda, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), lambda, checked_mul(v, c));
  return out;
}

std::string MacMahonElement::serialize() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) out << '\n';
    first = false;
    out << (c > 0 ? "+" : "") << c << " * p" << lambda.to_string();
  }
  return out.str();
}

std::vector<std::string> alphabet_variables(std::size_t width, unsigned k) {
  std::vector<std::string> vars;
  for (unsigned j = 1; j <= k; ++j) {
    const auto color = std::to_string(j);
    vars.push_back("x" + color);
    if (width == 2) {
      vars.push_back("y" + color);
    } else {
      for (std::size_t i = 1; i < width; ++i) vars.push_back("y" + std::to_string(i) + "_" + color);
    }
  }
  return vars;
}

LaurentPolynomial mac_truncate(const MacMahonElement& e, int k) {
  if (k <= 0) fail(Errc::invalid_argument, "mac_truncate: number of colors must be positive");
  const std::size_t m = e.width();
  const auto vars = alphabet_variables(m, static_cast<unsigned>(k));
  LaurentPolynomial result(vars);
  std::map<Vec, LaurentPolynomial> power_sums;

  auto power_sum = [&](std::span<const std::int64_t> part) -> const LaurentPolynomial& {
    Vec key(part.begin(), part.end());
    auto it = power_sums.find(key);
    if (it != power_sums.end()) return it->second;
    LaurentPolynomial p(vars);
    for (int j = 0; j < k; ++j) {
      LaurentPolynomial::Exponents exps(vars.size(), 0);
      for (std::size_t c = 0; c < m; ++c) exps[static_cast<std::size_t>(j) * m + c] = part[c];
      p.add_term(exps, 1);
    }
    return power_sums.emplace(std::move(key), std::move(p)).first->second;
  };

  for (const auto& [lambda, c] : e.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(c).with_variables(vars);
    for (std::size_t i = 0; i < lambda.length(); ++i) term = term * power_sum(lambda.part(i));
    result += term;
  }
  return result;
}

}  // namespace macmahon
