#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "macmahon/algebra.hpp"
#include "macmahon/chromatic.hpp"
#include "macmahon/laurent.hpp"

namespace macmahon {

/// Exponent tuple (ext, |A|, wt(A), int) of one EGDP coefficient.
using EgdpIndex = std::array<std::int64_t, 4>;

/// omega(Lambda, a, b, c, d) for a forest with n vertices and e edges:
///
///   (-1)^(e-a) * sum over Omega |- (b, c) with parts in P^2 of
///     C(b - l(Omega), d) * C(Lambda, Omega) * C(n - l(Lambda) + l(Omega) - b, e - a - d)
///
/// For trees (e = n - 1) the sign is (-1)^(n-a-1). Evaluated literally by
/// enumerating the partitions of (b, c).
Coeff omega(const VectorPartition& lambda, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
            std::int64_t n, std::int64_t e);

/// Nonzero omega values keyed by (a, b, c, d), sorted by key.
using OmegaTable = std::vector<std::pair<EgdpIndex, Coeff>>;

/// All nonzero omega(Lambda, a, b, c, d) at once. Only sub-multisets Omega of
/// Lambda contribute (C(Lambda, Omega) vanishes otherwise), so they are
/// enumerated directly instead of all partitions of (b, c). The reference
/// stays valid until the next call on the same thread.
const OmegaTable& omega_table(const VectorPartition& lambda, std::int64_t n, std::int64_t e);

/// Raw g(a, b, c, d) values of the reconstruction below, without validation.
std::map<EgdpIndex, Coeff> explicit_egdp_coefficients(const BetaTable& beta, std::int64_t n, std::int64_t w,
                                                      std::int64_t e);

/// g(a, b, c, d) = sum over Lambda of beta_Lambda (-1)^(n - l(Lambda)) omega(Lambda, a, b, c, d),
/// returned as sum g w^a x^b y^c z^d. Throws Errc::domain (naming the
/// offending (a, b, c, d)) on a negative coefficient, and if the
/// coefficients do not sum to 2^n.
LaurentPolynomial recover_egdp_explicit(const BetaTable& beta, std::int64_t n, std::int64_t w, std::int64_t e);

/// sum_{k=0}^{p} C(p, k) (-1)^(k+q) C(k, q), evaluated term by term.
Coeff signed_binomial_sum(std::int64_t p, std::int64_t q);
/// Closed form of the above: 1 if p == q, else 0.
Coeff signed_binomial_indicator(std::int64_t p, std::int64_t q);

}  // namespace macmahon
