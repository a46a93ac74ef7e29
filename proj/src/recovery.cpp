#include "macmahon/recovery.hpp"

#include <algorithm>
#include <tuple>

namespace macmahon {

namespace {

std::string index_string(const EgdpIndex& i) {
  return "(a,b,c,d)=(" + std::to_string(i[0]) + "," + std::to_string(i[1]) + "," + std::to_string(i[2]) + "," +
         std::to_string(i[3]) + ")";
}

bool positive_part(std::span<const std::int64_t> p) {
  return std::all_of(p.begin(), p.end(), [](auto c) { return c >= 1; });
}

void check_bitype_shape(const VectorPartition& lambda, std::int64_t n) {
  if (lambda.width() != 2) fail(Errc::invalid_argument, "omega: partitions must have width 2");
  if (lambda.grade()[0] != n)
    fail(Errc::invalid_argument, "omega: partition " + lambda.to_string() + " is not a partition of n = " +
                                     std::to_string(n) + " vertices");
}

}  // namespace

Coeff omega(const VectorPartition& lambda, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
            std::int64_t n, std::int64_t e) {
  check_bitype_shape(lambda, n);
  if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0) fail(Errc::invalid_argument, "omega: negative parameter");
  const auto ell = static_cast<std::int64_t>(lambda.length());

  std::vector<VectorPartition> omegas;
  if (b == 0 && c == 0) {
    omegas.emplace_back(2);
  } else if (b > 0 && c > 0) {
    omegas = vp_enumerate({b, c}, PartDomain::positive);
  }

  Coeff sum = 0;
  for (const auto& om : omegas) {
    const Coeff choose = vp_binomial(lambda, om);
    if (choose == 0) continue;
    const auto ell_om = static_cast<std::int64_t>(om.length());
    const std::int64_t inside = b - ell_om;
    const std::int64_t outside = n - ell + ell_om - b;
    if (inside < 0 || outside < 0) continue;
    Coeff term = checked_mul(binomial(inside, d), choose);
    term = checked_mul(term, binomial(outside, e - a - d));
    sum = checked_add(sum, term);
  }
  return checked_mul(sign_of_parity(e - a), sum);
}

namespace {

OmegaTable compute_omega_table(const VectorPartition& lambda, std::int64_t n, std::int64_t e) {
  const auto ell = static_cast<std::int64_t>(lambda.length());

  // distinct P^2 parts of lambda with multiplicities
  struct Run {
    std::int64_t size, weight, mult;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    auto p = lambda.part(i);
    if (!positive_part(p)) continue;
    if (!runs.empty() && runs.back().size == p[0] && runs.back().weight == p[1]) {
      ++runs.back().mult;
    } else {
      runs.push_back({p[0], p[1], 1});
    }
  }

  std::map<EgdpIndex, Coeff> table;
  std::vector<std::int64_t> take(runs.size(), 0);
  while (true) {
    std::int64_t b = 0, c = 0, ell_om = 0;
    Coeff choose = 1;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      b += take[i] * runs[i].size;
      c += take[i] * runs[i].weight;
      ell_om += take[i];
      choose = checked_mul(choose, binomial(runs[i].mult, take[i]));
    }
    const std::int64_t inside = b - ell_om;
    const std::int64_t outside = n - ell + ell_om - b;
    if (inside >= 0 && outside >= 0) {
      for (std::int64_t d = 0; d <= inside; ++d) {
        for (std::int64_t q = 0; q <= outside; ++q) {
          const std::int64_t a = e - d - q;
          if (a < 0) continue;
          Coeff term = checked_mul(checked_mul(binomial(inside, d), choose), binomial(outside, q));
          term = checked_mul(sign_of_parity(e - a), term);
          auto [it, inserted] = table.try_emplace(EgdpIndex{a, b, c, d}, term);
          if (!inserted) it->second = checked_add(it->second, term);
        }
      }
    }
    std::size_t k = 0;
    while (k < runs.size() && take[k] == runs[k].mult) take[k++] = 0;
    if (k == runs.size()) break;
    ++take[k];
  }
  OmegaTable out;
  for (const auto& [index, value] : table)
    if (value != 0) out.emplace_back(index, value);
  return out;
}

}  // namespace

const OmegaTable& omega_table(const VectorPartition& lambda, std::int64_t n, std::int64_t e) {
  check_bitype_shape(lambda, n);
  // tables recur across forests, so keep a bounded per-thread memo
  thread_local std::map<std::tuple<VectorPartition, std::int64_t, std::int64_t>, OmegaTable> memo;
  auto key = std::make_tuple(lambda, n, e);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto table = compute_omega_table(lambda, n, e);
  if (memo.size() >= 200'000) memo.clear();
  return memo.emplace(std::move(key), std::move(table)).first->second;
}

std::map<EgdpIndex, Coeff> explicit_egdp_coefficients(const BetaTable& beta, std::int64_t n, std::int64_t w,
                                                      std::int64_t e) {
  if (n < 0 || w < 0 || e < 0) fail(Errc::invalid_argument, "recover_egdp_explicit: negative parameter");
  if (n > 62) fail(Errc::cap_exceeded, "recover_egdp_explicit: too many vertices");
  if (beta.empty()) fail(Errc::invalid_argument, "recover_egdp_explicit: empty beta table");
  std::int64_t min_length = INT64_MAX;
  for (const auto& [lambda, count] : beta) {
    if (lambda.width() != 2 || lambda.grade() != Vec{n, w})
      fail(Errc::invalid_argument, "beta table key " + lambda.to_string() + " is not a partition of (" +
                                       std::to_string(n) + "," + std::to_string(w) + ")");
    if (count < 0) fail(Errc::invalid_argument, "beta table has a negative count");
    if (count > 0) min_length = std::min(min_length, static_cast<std::int64_t>(lambda.length()));
  }
  if (min_length != INT64_MAX && n - min_length != e)
    fail(Errc::invalid_argument, "beta table support implies " + std::to_string(n - min_length) +
                                     " edges, but e = " + std::to_string(e));

  // dense accumulation over 0 <= a, d <= e, 0 <= b <= n, 0 <= c <= w when the box is small
  const auto extent_ae = static_cast<std::size_t>(e + 1), extent_b = static_cast<std::size_t>(n + 1),
             extent_c = static_cast<std::size_t>(w + 1);
  const bool dense = extent_c <= (std::size_t{1} << 20) / (extent_ae * extent_ae * extent_b);
  std::vector<Coeff> grid(dense ? extent_ae * extent_b * extent_c * extent_ae : 0, 0);
  std::map<EgdpIndex, Coeff> g;
  for (const auto& [lambda, count] : beta) {
    if (count == 0) continue;
    const Coeff weight = checked_mul(count, sign_of_parity(n - static_cast<std::int64_t>(lambda.length())));
    for (const auto& [index, value] : omega_table(lambda, n, e)) {
      const Coeff term = checked_mul(weight, value);
      if (dense) {
        auto& cell = grid[((static_cast<std::size_t>(index[0]) * extent_b + static_cast<std::size_t>(index[1])) *
                               extent_c + static_cast<std::size_t>(index[2])) * extent_ae +
                          static_cast<std::size_t>(index[3])];
        cell = checked_add(cell, term);
        continue;
      }
      auto [it, inserted] = g.try_emplace(index, term);
      if (!inserted) it->second = checked_add(it->second, term);
    }
  }
  if (dense) {
    std::size_t cell = 0;
    for (std::int64_t a = 0; a <= e; ++a)
      for (std::int64_t b = 0; b <= n; ++b)
        for (std::int64_t c = 0; c <= w; ++c)
          for (std::int64_t d = 0; d <= e; ++d, ++cell)
            if (grid[cell] != 0) g.emplace_hint(g.end(), EgdpIndex{a, b, c, d}, grid[cell]);
  }
  std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
  return g;
}

LaurentPolynomial recover_egdp_explicit(const BetaTable& beta, std::int64_t n, std::int64_t w, std::int64_t e) {
  const auto g = explicit_egdp_coefficients(beta, n, w, e);
  std::vector<std::pair<LaurentPolynomial::Exponents, Coeff>> terms;
  terms.reserve(g.size());
  Coeff total = 0;
  for (const auto& [index, value] : g) {
    if (value < 0)
      fail(Errc::domain, "explicit reconstruction produced a negative coefficient " + std::to_string(value) +
                             " at " + index_string(index));
    total = checked_add(total, value);
    terms.emplace_back(LaurentPolynomial::Exponents{index[0], index[1], index[2], index[3]}, value);
  }
  if (total != (Coeff{1} << n))
    fail(Errc::domain, "explicit reconstruction coefficients sum to " + std::to_string(total) + ", expected 2^" +
                           std::to_string(n));
  return LaurentPolynomial::from_terms(egdp_variables(1), std::move(terms));
}

Coeff signed_binomial_sum(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) fail(Errc::invalid_argument, "signed_binomial_sum: negative argument");
  Coeff sum = 0;
  for (std::int64_t k = 0; k <= p; ++k)
    sum = checked_add(sum, checked_mul(sign_of_parity(k + q), checked_mul(binomial(p, k), binomial(k, q))));
  return sum;
}

Coeff signed_binomial_indicator(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) fail(Errc::invalid_argument, "signed_binomial_indicator: negative argument");
  return p == q ? 1 : 0;
}

}  // namespace macmahon
