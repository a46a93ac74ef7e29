#include "macmahon/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace macmahon {

namespace {

std::int64_t total_degree(const LaurentPolynomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out = a;
  for (const auto& name : b)
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  return out;
}

Coeff ipow(Coeff base, std::int64_t exp) {
  Coeff r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

bool LaurentPolynomial::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  std::set<std::string> seen(variables_.begin(), variables_.end());
  if (seen.size() != variables_.size())
    fail(Errc::invalid_argument, "LaurentPolynomial: duplicate variable name");
}

LaurentPolynomial LaurentPolynomial::constant(Coeff c) {
  LaurentPolynomial p;
  p.add_term({}, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(const std::string& name, std::int64_t exponent) {
  return monomial({name}, {exponent}, 1);
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> variables,
                                              Exponents exponents, Coeff coeff) {
  LaurentPolynomial p(std::move(variables));
  p.add_term(exponents, coeff);
  return p;
}

std::optional<std::size_t> LaurentPolynomial::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

void LaurentPolynomial::add_term(const Exponents& exponents, Coeff coeff) {
  if (exponents.size() != variables_.size())
    fail(Errc::invalid_argument, "LaurentPolynomial: exponent vector length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<std::string> variables,
                                                std::vector<std::pair<Exponents, Coeff>> terms) {
  LaurentPolynomial out(std::move(variables));
  std::vector<std::pair<std::int64_t, std::size_t>> order;
  order.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].first.size() != out.variables_.size())
      fail(Errc::invalid_argument, "LaurentPolynomial: exponent vector length mismatch");
    order.emplace_back(total_degree(terms[i].first), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    const auto& a = terms[x.second].first;
    const auto& b = terms[y.second].first;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  for (std::size_t i = 0; i < order.size();) {
    auto& exps = terms[order[i].second].first;
    Coeff sum = 0;
    std::size_t j = i;
    for (; j < order.size() && terms[order[j].second].first == exps; ++j)
      sum = checked_add(sum, terms[order[j].second].second);
    if (sum != 0) out.terms_.emplace_hint(out.terms_.end(), std::move(exps), sum);
    i = j;
  }
  return out;
}

Coeff LaurentPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

Coeff LaurentPolynomial::coefficient(const std::map<std::string, std::int64_t>& monomial) const {
  Exponents e(variables_.size(), 0);
  for (const auto& [name, exp] : monomial) {
    auto idx = index_of(name);
    if (!idx) {
      if (exp != 0) return 0;
      continue;
    }
    e[*idx] = exp;
  }
  return coefficient(e);
}

LaurentPolynomial LaurentPolynomial::with_variables(const std::vector<std::string>& superset) const {
  if (superset == variables_) return *this;
  std::vector<std::size_t> position(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(superset.begin(), superset.end(), variables_[i]);
    if (it == superset.end()) {
      // allowed only if the variable never occurs
      if (min_exponent(variables_[i]) != 0 ||
          std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; }))
        fail(Errc::invalid_argument, "with_variables: variable '" + variables_[i] + "' would be lost");
      position[i] = superset.size();
      continue;
    }
    position[i] = static_cast<std::size_t>(it - superset.begin());
  }
  LaurentPolynomial out(superset);
  for (const auto& [exps, c] : terms_) {
    Exponents e(superset.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (position[i] < superset.size()) e[position[i]] = exps[i];
    out.add_term(e, c);
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.variables_ != variables_) {
    auto vars = merged_variables(variables_, other.variables_);
    *this = with_variables(vars);
    const auto aligned = other.with_variables(vars);
    for (const auto& [e, c] : aligned.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += other.scaled(-1);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.variables_ != b.variables_) {
    auto vars = merged_variables(a.variables_, b.variables_);
    return a.with_variables(vars) * b.with_variables(vars);
  }
  LaurentPolynomial out(LaurentPolynomial::Unchecked{}, a.variables_);
  LaurentPolynomial::Exponents e(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

LaurentPolynomial LaurentPolynomial::scaled(Coeff c) const {
  LaurentPolynomial out(Unchecked{}, variables_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, checked_mul(v, c));
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(1).with_variables(variables_);
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::specialize(const std::string& name, Coeff value) const {
  auto idx = index_of(name);
  if (!idx) return *this;
  std::vector<std::string> vars = variables_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(*idx));
  LaurentPolynomial out(vars);
  for (const auto& [e, c] : terms_) {
    const std::int64_t k = e[*idx];
    Coeff factor;
    if (k >= 0) {
      factor = ipow(value, k);
    } else if (value == 1 || value == -1) {
      factor = ipow(value, -k);
    } else {
      fail(Errc::domain, "specialize: cannot substitute " + std::to_string(value) +
                             " for a negative power of " + name);
    }
    Exponents reduced = e;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(*idx));
    out.add_term(reduced, checked_mul(c, factor));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::renamed(const std::map<std::string, std::string>& mapping) const {
  std::vector<std::string> vars = variables_;
  for (auto& v : vars) {
    auto it = mapping.find(v);
    if (it != mapping.end()) v = it->second;
  }
  LaurentPolynomial out(vars);
  out.terms_ = terms_;
  return out;
}

LaurentPolynomial LaurentPolynomial::trimmed() const {
  std::vector<std::string> vars;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    bool used = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; });
    if (used) {
      vars.push_back(variables_[i]);
      keep.push_back(i);
    }
  }
  LaurentPolynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents r;
    r.reserve(keep.size());
    for (auto i : keep) r.push_back(e[i]);
    out.add_term(r, c);
  }
  return out;
}

std::int64_t LaurentPolynomial::min_exponent(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx || terms_.empty()) return 0;
  std::int64_t m = terms_.begin()->first[*idx];
  for (const auto& [e, c] : terms_) m = std::min(m, e[*idx]);
  return m;
}

std::int64_t LaurentPolynomial::min_exponent() const {
  std::int64_t m = 0;
  for (const auto& [e, c] : terms_)
    for (auto k : e) m = std::min(m, k);
  return m;
}

Coeff LaurentPolynomial::evaluate(const std::map<std::string, Coeff>& values) const {
  LaurentPolynomial p = *this;
  for (const auto& name : variables_) {
    auto it = values.find(name);
    if (it == values.end()) fail(Errc::invalid_argument, "evaluate: no value for variable " + name);
    p = p.specialize(name, it->second);
  }
  return p.coefficient(Exponents{});
}

std::string LaurentPolynomial::serialize() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ' ';
    first = false;
    out << (c > 0 ? "+" : "") << c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << ' ' << variables_[i];
      if (e[i] != 1) out << '^' << e[i];
    }
  }
  return out.str();
}

}  // namespace macmahon
