#include "macmahon/hopf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>

#include "macmahon/chromatic.hpp"

namespace macmahon {

namespace {

void check_split_length(const VectorPartition& lambda) {
  if (lambda.length() > 62)
    fail(Errc::cap_exceeded, "coproduct of a partition with more than 62 parts");
}

}  // namespace

void for_each_split(const VectorPartition& lambda,
                    const std::function<void(const VectorPartition&, const VectorPartition&)>& fn) {
  check_split_length(lambda);
  const std::uint64_t full = (std::uint64_t{1} << lambda.length()) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    fn(lambda.restrict_to(mask), lambda.restrict_to(full & ~mask));
}

TensorElement coproduct(const MacMahonElement& e) {
  TensorElement out;
  for (const auto& [lambda, c] : e.terms())
    for_each_split(lambda, [&](const VectorPartition& a, const VectorPartition& b) { out.add_term({a, b}, c); });
  return out;
}

MacMahonElement antipode(const MacMahonElement& e) {
  MacMahonElement out(e.width());
  for (const auto& [lambda, c] : e.terms())
    out.add_term(lambda, lambda.length() % 2 == 0 ? c : checked_mul(c, -1));
  return out;
}

Coeff counit(const MacMahonElement& e) { return e.coefficient(VectorPartition(e.width())); }

Tensor<3> coproduct_left(const TensorElement& t) {
  Tensor<3> out;
  for (const auto& [key, c] : t.terms())
    for_each_split(key[0], [&](const VectorPartition& a, const VectorPartition& b) { out.add_term({a, b, key[1]}, c); });
  return out;
}

Tensor<3> coproduct_right(const TensorElement& t) {
  Tensor<3> out;
  for (const auto& [key, c] : t.terms())
    for_each_split(key[1], [&](const VectorPartition& a, const VectorPartition& b) { out.add_term({key[0], a, b}, c); });
  return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term({ka[0].concat(kb[0]), ka[1].concat(kb[1])}, checked_mul(ca, cb));
  return out;
}

TensorElement tensor_swap(const TensorElement& t) {
  TensorElement out;
  for (const auto& [key, c] : t.terms()) out.add_term({key[1], key[0]}, c);
  return out;
}

MacMahonElement antipode_convolution(const MacMahonElement& e) {
  MacMahonElement out(e.width());
  const auto delta = coproduct(e);
  for (const auto& [key, c] : delta.terms())
    out += (antipode(MacMahonElement::basis(key[0])) * MacMahonElement::basis(key[1])).scaled(c);
  return out;
}

LaurentPolynomial apply(const LinearFunctional& f, const MacMahonElement& e) {
  LaurentPolynomial out;
  for (const auto& [lambda, c] : e.terms()) out += f(lambda).scaled(c);
  return out;
}

LaurentPolynomial convolve(const LinearFunctional& f, const LinearFunctional& g, const MacMahonElement& e) {
  std::map<VectorPartition, LaurentPolynomial> f_values, g_values;
  auto cached = [](std::map<VectorPartition, LaurentPolynomial>& memo, const LinearFunctional& fn,
                   const VectorPartition& lambda) -> const LaurentPolynomial& {
    auto it = memo.find(lambda);
    if (it == memo.end()) it = memo.emplace(lambda, fn(lambda)).first;
    return it->second;
  };
  LaurentPolynomial out;
  const auto delta = coproduct(e);
  for (const auto& [key, c] : delta.terms())
    out += (cached(f_values, f, key[0]) * cached(g_values, g, key[1])).scaled(c);
  return out;
}

LinearFunctional counit_functional() {
  return [](const VectorPartition& lambda) {
    return LaurentPolynomial::constant(lambda.empty() ? 1 : 0);
  };
}

PhiFunctional::PhiFunctional(LaurentPolynomial t, LaurentPolynomial u, std::vector<LaurentPolynomial> v)
    : t_(std::move(t)), u_(std::move(u)), one_minus_u_(LaurentPolynomial::constant(1) - u_), v_(std::move(v)) {
  if (v_.empty()) fail(Errc::invalid_argument, "phi needs at least one weight variable");
}

namespace {

void check_phi_arguments(std::size_t dim, std::int64_t n, std::int64_t length, std::span<const std::int64_t> weight) {
  if (weight.size() != dim)
    fail(Errc::invalid_argument, "phi: partition width does not match the number of weight variables");
  if (n < length || length < 0) fail(Errc::invalid_argument, "phi: length exceeds vertex count");
  for (auto k : weight)
    if (k < 0) fail(Errc::invalid_argument, "phi: negative weight");
}

// Powers of one polynomial, extended on demand.
class PowerCache {
 public:
  PowerCache(const LaurentPolynomial& base, const std::vector<std::string>& vars)
      : pows_{LaurentPolynomial::constant(1).with_variables(vars)}, base_(base.with_variables(vars)) {}
  const LaurentPolynomial& operator[](std::int64_t k) {
    while (static_cast<std::int64_t>(pows_.size()) <= k) pows_.push_back(pows_.back() * base_);
    return pows_[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<LaurentPolynomial> pows_;
  LaurentPolynomial base_;
};

std::vector<std::string> variables_of(std::initializer_list<const PhiFunctional*> fs) {
  std::vector<std::string> vars;
  auto add = [&](const LaurentPolynomial& p) {
    for (const auto& name : p.variables())
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  };
  for (const auto* f : fs) {
    add(f->t());
    add(f->one_minus_u());
    for (const auto& v : f->v()) add(v);
  }
  return vars;
}

// phi values of one functional, memoized by (n, l, w..) for the duration of one computation.
class PhiEvaluator {
 public:
  // all values are expressed over vars, which must contain every variable of f
  PhiEvaluator(const PhiFunctional& f, const std::vector<std::string>& vars)
      : f_(f), t_(f.t(), vars), u_(f.one_minus_u(), vars) {
    for (const auto& v : f.v()) v_.emplace_back(v, vars);
  }

  const LaurentPolynomial& value(std::span<const std::int64_t> stats) {
    Vec key(stats.begin(), stats.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto n = stats[0], length = stats[1];
    const auto weight = stats.subspan(2);
    check_phi_arguments(f_.weight_dim(), n, length, weight);
    LaurentPolynomial out = t_[n] * u_[n - length];
    for (std::size_t i = 0; i < v_.size(); ++i) out = out * v_[i][weight[i]];
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const PhiFunctional& f_;
  PowerCache t_, u_;
  std::vector<PowerCache> v_;
  std::map<Vec, LaurentPolynomial> memo_;
};

// Fast path when t, u and every v_i are single terms: phi(stats) expands to
// sum_j C(n - l, j) (-u)^j t^n v^w, computed with integer exponent vectors.
// Rows are stored flat as (exponents.., coefficient).
class MonomialPhi {
 public:
  static std::optional<MonomialPhi> make(const PhiFunctional& f, const std::vector<std::string>& vars) {
    MonomialPhi m;
    m.dim_ = vars.size();
    auto take = [&](const LaurentPolynomial& p, Vec& exps, Coeff& c) {
      if (p.size() != 1) return false;
      const auto aligned = p.with_variables(vars);
      exps = aligned.terms().begin()->first;
      c = aligned.terms().begin()->second;
      return true;
    };
    if (!take(f.t(), m.t_, m.tc_) || !take(f.u(), m.u_, m.uc_)) return std::nullopt;
    m.v_.resize(f.v().size());
    m.vc_.resize(f.v().size());
    for (std::size_t i = 0; i < f.v().size(); ++i)
      if (!take(f.v()[i], m.v_[i], m.vc_[i])) return std::nullopt;
    return m;
  }

  std::size_t dim() const { return dim_; }

  void expand(std::span<const std::int64_t> stats, Vec& rows) const {
    const auto n = stats[0], length = stats[1];
    const auto weight = stats.subspan(2);
    check_phi_arguments(v_.size(), n, length, weight);
    const auto free = n - length;
    const std::size_t row = dim_ + 1, at = rows.size();
    rows.resize(at + static_cast<std::size_t>(free + 1) * row);
    std::int64_t* base = rows.data() + at;
    Coeff c = power(tc_, n);
    for (std::size_t k = 0; k < dim_; ++k) base[k] = n * t_[k];
    for (std::size_t i = 0; i < v_.size(); ++i) {
      c = checked_mul(c, power(vc_[i], weight[i]));
      for (std::size_t k = 0; k < dim_; ++k) base[k] += weight[i] * v_[i][k];
    }
    base[dim_] = c;
    Coeff up = 1;  // (-uc)^j
    for (std::int64_t j = 1; j <= free; ++j) {
      up = checked_mul(up, -uc_);
      std::int64_t* cur = base + static_cast<std::size_t>(j) * row;
      for (std::size_t k = 0; k < dim_; ++k) cur[k] = (cur - row)[k] + u_[k];
      cur[dim_] = checked_mul(checked_mul(c, binomial(free, j)), up);
    }
  }

 private:
  static Coeff power(Coeff b, std::int64_t e) {
    if (b == 1) return 1;
    if (b == -1) return e % 2 == 0 ? 1 : -1;
    Coeff r = 1;
    for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
  }

  std::size_t dim_ = 0;
  Vec t_, u_;
  std::vector<Vec> v_;
  Coeff tc_ = 1, uc_ = 1;
  std::vector<Coeff> vc_;
};

// Rows of `stride` integers: a key followed by a coefficient. Returns the rows
// sorted by key with equal keys summed and zero sums dropped.
Vec merge_rows(const Vec& rows, std::size_t stride) {
  const std::size_t dim = stride - 1;
  const std::size_t count = rows.size() / stride;
  Vec out;
  if (count == 0) return out;

  // dense accumulation when the keys span a small box; the scan is in lexicographic order
  if (dim > 0 && dim <= 8) {
    std::array<std::int64_t, 8> lo, hi;
    for (std::size_t k = 0; k < dim; ++k) lo[k] = hi[k] = rows[k];
    for (std::size_t i = 1; i < count; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        lo[k] = std::min(lo[k], rows[i * stride + k]);
        hi[k] = std::max(hi[k], rows[i * stride + k]);
      }
    const std::size_t limit = std::min<std::size_t>(4 * count + 256, std::size_t{1} << 16);
    std::size_t volume = 1;
    for (std::size_t k = 0; k < dim && volume <= limit; ++k) volume *= static_cast<std::size_t>(hi[k] - lo[k] + 1);
    if (volume <= limit) {
      thread_local std::vector<Coeff> grid;
      if (grid.size() < volume) grid.resize(volume);
      std::fill_n(grid.begin(), volume, 0);
      for (std::size_t i = 0; i < count; ++i) {
        std::size_t cell = 0;
        for (std::size_t k = 0; k < dim; ++k)
          cell = cell * static_cast<std::size_t>(hi[k] - lo[k] + 1) + static_cast<std::size_t>(rows[i * stride + k] - lo[k]);
        grid[cell] = checked_add(grid[cell], rows[i * stride + dim]);
      }
      for (std::size_t cell = 0; cell < volume; ++cell) {
        if (grid[cell] == 0) continue;
        const std::size_t at = out.size();
        out.resize(at + stride);
        std::size_t rest = cell;
        for (std::size_t k = dim; k-- > 0;) {
          const auto extent = static_cast<std::size_t>(hi[k] - lo[k] + 1);
          out[at + k] = lo[k] + static_cast<std::int64_t>(rest % extent);
          rest /= extent;
        }
        out[at + dim] = grid[cell];
      }
      return out;
    }
  }

  // keys packed into one word when every coordinate fits; packing keeps the order
  const unsigned bits = dim == 0 ? 64 : static_cast<unsigned>(64 / dim);
  if (dim > 0 && bits >= 4) {
    const std::int64_t bias = std::int64_t{1} << (bits - 1);
    bool fits = true;
    for (std::size_t i = 0; i < count && fits; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const auto v = rows[i * stride + k];
        if (v < -bias || v >= bias) {
          fits = false;
          break;
        }
      }
    if (fits) {
      std::vector<std::pair<std::uint64_t, Coeff>> packed(count);
      for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < dim; ++k)
          key = (bits == 64 ? 0 : key << bits) | static_cast<std::uint64_t>(rows[i * stride + k] + bias);
        packed[i] = {key, rows[i * stride + dim]};
      }
      std::sort(packed.begin(), packed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
      for (std::size_t i = 0; i < count;) {
        Coeff sum = 0;
        std::size_t j = i;
        for (; j < count && packed[j].first == packed[i].first; ++j) sum = checked_add(sum, packed[j].second);
        if (sum != 0) {
          const std::size_t at = out.size();
          out.resize(at + stride);
          std::uint64_t key = packed[i].first;
          for (std::size_t k = dim; k-- > 0;) {
            out[at + k] = static_cast<std::int64_t>(key & mask) - bias;
            key = bits == 64 ? 0 : key >> bits;
          }
          out[at + dim] = sum;
        }
        i = j;
      }
      return out;
    }
  }

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  auto key = [&](std::size_t i) { return std::span(rows).subspan(i * stride, dim); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ka = key(a), kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  for (std::size_t i = 0; i < count;) {
    Coeff sum = 0;
    std::size_t j = i;
    for (; j < count && std::ranges::equal(key(order[j]), key(order[i])); ++j)
      sum = checked_add(sum, rows[order[j] * stride + dim]);
    if (sum != 0) {
      auto k = key(order[i]);
      out.insert(out.end(), k.begin(), k.end());
      out.push_back(sum);
    }
    i = j;
  }
  return out;
}

LaurentPolynomial collect_rows(const std::vector<std::string>& vars, const Vec& rows) {
  const std::size_t stride = vars.size() + 1;
  const auto merged = merge_rows(rows, stride);
  std::vector<std::pair<LaurentPolynomial::Exponents, Coeff>> terms;
  terms.reserve(merged.size() / stride);
  for (std::size_t i = 0; i < merged.size(); i += stride)
    terms.emplace_back(Vec(merged.begin() + i, merged.begin() + i + stride - 1), merged[i + stride - 1]);
  return LaurentPolynomial::from_terms(vars, std::move(terms));
}

}  // namespace

LaurentPolynomial PhiFunctional::value(std::int64_t n, std::int64_t length,
                                       std::span<const std::int64_t> weight) const {
  check_phi_arguments(v_.size(), n, length, weight);
  LaurentPolynomial out = t_.pow(static_cast<unsigned>(n)) * one_minus_u_.pow(static_cast<unsigned>(n - length));
  for (std::size_t i = 0; i < v_.size(); ++i) out = out * v_[i].pow(static_cast<unsigned>(weight[i]));
  return out;
}

LaurentPolynomial PhiFunctional::operator()(const VectorPartition& lambda) const {
  const auto& g = lambda.grade();
  return value(g.at(0), static_cast<std::int64_t>(lambda.length()), std::span(g).subspan(1));
}

namespace {

LaurentPolynomial phi_over(const MacMahonElement& e, const PhiFunctional& f, const std::vector<std::string>& vars,
                           const MonomialPhi* mono) {
  if (e.width() != f.weight_dim() + 1)
    fail(Errc::invalid_argument, "phi: element width must be one more than the number of weight variables");
  // rows (n, l, w.., coefficient), merged so each distinct statistic is evaluated once
  const std::size_t key_dim = e.width() + 1;
  Vec rows;
  for (const auto& [lambda, c] : e.terms()) {
    const auto& g = lambda.grade();
    rows.push_back(g[0]);
    rows.push_back(static_cast<std::int64_t>(lambda.length()));
    rows.insert(rows.end(), g.begin() + 1, g.end());
    rows.push_back(c);
  }
  const auto by_stats = merge_rows(rows, key_dim + 1);
  auto stats_at = [&](std::size_t i) { return std::span(by_stats).subspan(i, key_dim); };

  std::optional<MonomialPhi> made;
  if (!mono && (made = MonomialPhi::make(f, vars))) mono = &*made;
  if (mono) {
    Vec terms;
    const std::size_t stride = vars.size() + 1;
    for (std::size_t s = 0; s < by_stats.size(); s += key_dim + 1) {
      const std::size_t from = terms.size();
      mono->expand(stats_at(s), terms);
      for (std::size_t i = from + stride - 1; i < terms.size(); i += stride)
        terms[i] = checked_mul(terms[i], by_stats[s + key_dim]);
    }
    return collect_rows(vars, terms);
  }
  PhiEvaluator eval(f, vars);
  auto out = LaurentPolynomial(vars);
  for (std::size_t s = 0; s < by_stats.size(); s += key_dim + 1)
    out += eval.value(stats_at(s)).scaled(by_stats[s + key_dim]);
  return out;
}

struct SymbolicPhi {
  std::vector<std::string> vars;
  PhiFunctional f;
  std::optional<MonomialPhi> mono;
};

SymbolicPhi make_symbolic_phi(std::size_t r) {
  std::vector<std::string> vars{"t", "u"};
  std::vector<LaurentPolynomial> v;
  for (std::size_t i = 1; i <= r; ++i) {
    vars.push_back(r == 1 ? "v" : "v" + std::to_string(i));
    v.push_back(LaurentPolynomial::variable(vars.back()));
  }
  SymbolicPhi s{vars, PhiFunctional(LaurentPolynomial::variable("t"), LaurentPolynomial::variable("u"), v),
                std::nullopt};
  s.mono = MonomialPhi::make(s.f, vars);
  return s;
}

}  // namespace

LaurentPolynomial phi(const MacMahonElement& e, const PhiFunctional& f) {
  return phi_over(e, f, variables_of({&f}), nullptr);
}

LaurentPolynomial phi(const MacMahonElement& e, const LaurentPolynomial& t, const LaurentPolynomial& u,
                      const std::vector<LaurentPolynomial>& v) {
  return phi(e, PhiFunctional(t, u, v));
}

LaurentPolynomial phi_symbolic(const MacMahonElement& e) {
  const std::size_t r = e.width() - 1;
  if (r == 0) fail(Errc::invalid_argument, "phi needs width at least 2");
  thread_local std::map<std::size_t, SymbolicPhi> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, make_symbolic_phi(r)).first;
  const auto& s = it->second;
  return phi_over(e, s.f, s.vars, s.mono ? &*s.mono : nullptr);
}

namespace {

// Convolution with the result expressed over vars (a superset of the
// variables of f and g).
LaurentPolynomial convolve_over(const PhiFunctional& f, const PhiFunctional& g, const MacMahonElement& e,
                                const std::vector<std::string>& vars, const MonomialPhi* f_mono = nullptr,
                                const MonomialPhi* g_mono = nullptr) {
  const std::size_t m = e.width();
  if (m != f.weight_dim() + 1 || m != g.weight_dim() + 1)
    fail(Errc::invalid_argument, "convolve: element width does not match the functionals");

  // rows: (n, l, w..) of the J half, (n, l, w..) of the complement, coefficient
  const std::size_t half = m + 1, stride = 2 * half + 1;
  Vec rows;
  for (const auto& [lambda, c] : e.terms()) {
    check_split_length(lambda);
    const std::size_t len = lambda.length();
    const auto& total = lambda.grade();
    const std::uint64_t full = (std::uint64_t{1} << len) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const std::size_t at = rows.size();
      rows.resize(at + stride, 0);
      auto* key = rows.data() + at;
      for (std::size_t i = 0; i < len; ++i) {
        if (!((mask >> i) & 1u)) continue;
        auto part = lambda.part(i);
        key[0] += part[0];
        for (std::size_t k = 1; k < m; ++k) key[1 + k] += part[k];
      }
      key[1] = std::popcount(mask);
      key[half] = total[0] - key[0];
      key[half + 1] = static_cast<std::int64_t>(len) - key[1];
      for (std::size_t k = 1; k < m; ++k) key[half + 1 + k] = total[k] - key[1 + k];
      key[stride - 1] = c;
    }
  }
  const auto splits = merge_rows(rows, stride);
  auto stats_at = [&](std::size_t i) { return std::span(splits).subspan(i, stride - 1); };

  std::optional<MonomialPhi> f_made, g_made;
  if (!f_mono && (f_made = MonomialPhi::make(f, vars))) f_mono = &*f_made;
  if (f_mono && !g_mono && (g_made = MonomialPhi::make(g, vars))) g_mono = &*g_made;
  if (f_mono && g_mono) {
    const auto* fm = f_mono;
    const auto* gm = g_mono;
    const std::size_t dim = vars.size(), out_stride = dim + 1;
    Vec terms, a, b;
    for (std::size_t s = 0; s < splits.size(); s += stride) {
      const Coeff c = splits[s + stride - 1];
      a.clear();
      b.clear();
      fm->expand(stats_at(s).first(half), a);
      gm->expand(stats_at(s).subspan(half), b);
      for (std::size_t i = 0; i < a.size(); i += out_stride) {
        const Coeff ca = checked_mul(a[i + dim], c);
        for (std::size_t j = 0; j < b.size(); j += out_stride) {
          for (std::size_t k = 0; k < dim; ++k) terms.push_back(a[i + k] + b[j + k]);
          terms.push_back(checked_mul(ca, b[j + dim]));
        }
      }
    }
    return collect_rows(vars, terms);
  }

  // sum over left stats s of f(s) * (sum over right stats of c * g(.)), one product per distinct s
  PhiEvaluator fe(f, vars), ge(g, vars);
  const LaurentPolynomial zero(vars);
  LaurentPolynomial out = zero, inner = zero;
  std::optional<std::size_t> current;
  auto flush = [&] {
    if (current && !inner.is_zero()) out += fe.value(stats_at(*current).first(half)) * inner;
    inner = zero;
  };
  for (std::size_t s = 0; s < splits.size(); s += stride) {
    if (!current || !std::ranges::equal(stats_at(s).first(half), stats_at(*current).first(half))) {
      flush();
      current = s;
    }
    inner += ge.value(stats_at(s).subspan(half)).scaled(splits[s + stride - 1]);
  }
  flush();
  return out;
}

}  // namespace

LaurentPolynomial convolve(const PhiFunctional& f, const PhiFunctional& g, const MacMahonElement& e) {
  return convolve_over(f, g, e, variables_of({&f, &g}));
}

ForestStats recover_stats(const MacMahonElement& e) {
  const auto image = phi_symbolic(e);
  if (image.size() != 1 || image.terms().begin()->second != 1)
    fail(Errc::domain, "phi image is not a single monic monomial (" + image.serialize() +
                           "); input is not the CMF of a weighted forest");
  const auto& exps = image.terms().begin()->first;
  for (auto k : exps)
    if (k < 0) fail(Errc::domain, "phi image has a negative exponent; input is not a forest CMF");
  ForestStats stats;
  stats.vertices = exps[0];
  stats.edges = exps[1];
  stats.weight.assign(exps.begin() + 2, exps.end());
  stats.components = stats.vertices - stats.edges;
  if (stats.components < 0) fail(Errc::domain, "recovered edge count exceeds vertex count");
  return stats;
}

namespace {

struct GammaFunctionals {
  std::vector<std::string> vars;
  PhiFunctional left, right;
  std::optional<MonomialPhi> left_mono, right_mono;
};

GammaFunctionals make_gamma_functionals(std::size_t r) {
  const auto vars = egdp_variables(r);
  const auto w = LaurentPolynomial::variable("w");
  const auto w_inv = LaurentPolynomial::variable("w", -1);
  std::vector<LaurentPolynomial> ys, ones;
  for (std::size_t i = 0; i < r; ++i) {
    ys.push_back(LaurentPolynomial::variable(vars[2 + i]));
    ones.push_back(LaurentPolynomial::constant(1));
  }
  GammaFunctionals g{vars, PhiFunctional(w * LaurentPolynomial::variable("x"), w_inv * LaurentPolynomial::variable("z"), ys),
                     PhiFunctional(w, w_inv, ones), std::nullopt, std::nullopt};
  g.left_mono = MonomialPhi::make(g.left, vars);
  g.right_mono = MonomialPhi::make(g.right, vars);
  return g;
}

}  // namespace

LaurentPolynomial gamma(const MacMahonElement& e) {
  const std::size_t r = e.width() - 1;
  if (r == 0) fail(Errc::invalid_argument, "gamma needs width at least 2");
  thread_local std::map<std::size_t, GammaFunctionals> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, make_gamma_functionals(r)).first;
  const auto& g = it->second;
  return convolve_over(g.left, g.right, e, g.vars, g.left_mono ? &*g.left_mono : nullptr,
                       g.right_mono ? &*g.right_mono : nullptr);
}

LaurentPolynomial recover_egdp_hopf(const MacMahonElement& e) {
  const auto stats = recover_stats(e);
  const auto g = gamma(e);
  std::vector<std::pair<LaurentPolynomial::Exponents, Coeff>> terms;
  terms.reserve(g.size());
  for (const auto& [term, c] : g.terms()) {
    auto exps = term;
    exps[0] -= stats.components;  // w comes first
    if (std::any_of(exps.begin(), exps.end(), [](auto k) { return k < 0; }))
      fail(Errc::domain, "gamma(e) / w^c has negative exponents; input is not a forest CMF");
    terms.emplace_back(std::move(exps), c);
  }
  return LaurentPolynomial::from_terms(g.variables(), std::move(terms));
}

}  // namespace macmahon
