#pragma once

#include <functional>
#include <vector>

#include "macmahon/algebra.hpp"
#include "macmahon/laurent.hpp"

namespace macmahon {

/// Delta(p_Lambda) = sum over subsets J of part positions of p_{Lambda|J} (x) p_{Lambda|J^c}.
TensorElement coproduct(const MacMahonElement& e);

/// Calls fn(Lambda|J, Lambda|J^c) for each of the 2^l(Lambda) position subsets J.
void for_each_split(const VectorPartition& lambda,
                    const std::function<void(const VectorPartition&, const VectorPartition&)>& fn);

/// S(p_Lambda) = (-1)^l(Lambda) p_Lambda.
MacMahonElement antipode(const MacMahonElement& e);

/// Coefficient of p_empty.
Coeff counit(const MacMahonElement& e);

/// (Delta (x) I) and (I (x) Delta) applied to a 2-tensor.
Tensor<3> coproduct_left(const TensorElement& t);
Tensor<3> coproduct_right(const TensorElement& t);
/// (m_13 (x) m_24)(a (x) b).
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
TensorElement tensor_swap(const TensorElement& t);
/// m o (S (x) I) o Delta.
MacMahonElement antipode_convolution(const MacMahonElement& e);

/// A linear map Mac^m -> Laurent polynomials, given by its value on basis elements.
using LinearFunctional = std::function<LaurentPolynomial(const VectorPartition&)>;

LaurentPolynomial apply(const LinearFunctional& f, const MacMahonElement& e);
/// (f * g)(e) = sum f(e1) g(e2) over the coproduct of e.
LaurentPolynomial convolve(const LinearFunctional& f, const LinearFunctional& g, const MacMahonElement& e);
LinearFunctional counit_functional();

/// phi_{t,u,v}(p_Lambda) = t^n (1 - u)^(n - l(Lambda)) prod_i v_i^(w_i) for
/// Lambda |- (n, w_1..w_r). The value depends only on (n, l, w).
class PhiFunctional {
 public:
  PhiFunctional(LaurentPolynomial t, LaurentPolynomial u, std::vector<LaurentPolynomial> v);

  LaurentPolynomial value(std::int64_t n, std::int64_t length, std::span<const std::int64_t> weight) const;
  LaurentPolynomial operator()(const VectorPartition& lambda) const;
  std::size_t weight_dim() const { return v_.size(); }

  const LaurentPolynomial& t() const { return t_; }
  const LaurentPolynomial& u() const { return u_; }
  const LaurentPolynomial& one_minus_u() const { return one_minus_u_; }
  const std::vector<LaurentPolynomial>& v() const { return v_; }

 private:
  LaurentPolynomial t_;
  LaurentPolynomial u_;
  LaurentPolynomial one_minus_u_;
  std::vector<LaurentPolynomial> v_;
};

LaurentPolynomial phi(const MacMahonElement& e, const PhiFunctional& f);
LaurentPolynomial phi(const MacMahonElement& e, const LaurentPolynomial& t, const LaurentPolynomial& u,
                      const std::vector<LaurentPolynomial>& v);
/// phi with symbolic t, u and v (or v1..vr).
LaurentPolynomial phi_symbolic(const MacMahonElement& e);

/// Convolution of two phi functionals. Splits are first aggregated by the
/// statistics (n, l, w) of both halves, so each distinct pair is evaluated once.
LaurentPolynomial convolve(const PhiFunctional& f, const PhiFunctional& g, const MacMahonElement& e);

struct ForestStats {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  Vec weight;
  std::int64_t components = 0;
  friend bool operator==(const ForestStats&, const ForestStats&) = default;
};

/// Reads (n, e, w) off phi_{t,u,v}(e) = t^n u^e v^w. Throws Errc::domain if the
/// image is not a single monic monomial (the input is not a forest CMF).
ForestStats recover_stats(const MacMahonElement& e);

/// phi_{wx, z/w, y} * phi_{w, 1/w, 1}, in variables (w, x, y.., z).
LaurentPolynomial gamma(const MacMahonElement& e);

/// gamma(e) / w^c. Throws Errc::domain if a negative exponent remains.
LaurentPolynomial recover_egdp_hopf(const MacMahonElement& e);

}  // namespace macmahon
