#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace optpred {

using cplx = std::complex<double>;

/// Complex-coefficient polynomial in the Chebyshev basis: p = sum_k c_k T_k.
///
/// Trailing exact zeros are trimmed on construction, so the zero polynomial
/// has no coefficients and degree -1.
class ComplexPoly {
public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cplx> chebyshev_coeffs);
  ComplexPoly(std::initializer_list<cplx> chebyshev_coeffs);

  /// Converts monomial coefficients (m_0 + m_1 z + ...) to the Chebyshev basis.
  static ComplexPoly from_monomial(std::span<const cplx> monomial_coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of T_k, zero beyond the degree.
  cplx coeff(int k) const noexcept;

  /// Clenshaw evaluation.
  cplx operator()(cplx z) const noexcept;
  cplx operator()(double x) const noexcept { return (*this)(cplx(x, 0.0)); }

  /// z * p(z), using z T_k = (T_{k+1} + T_{|k-1|}) / 2.
  ComplexPoly times_z() const;

  /// p(-z).
  ComplexPoly reflected() const;

  std::vector<cplx> to_monomial() const;

  /// Largest |Im c_k|.
  double max_imag_coeff() const noexcept;

  ComplexPoly& operator+=(const ComplexPoly& other);
  ComplexPoly& operator-=(const ComplexPoly& other);
  ComplexPoly& operator*=(cplx scale);

  friend ComplexPoly operator+(ComplexPoly lhs, const ComplexPoly& rhs) { return lhs += rhs; }
  friend ComplexPoly operator-(ComplexPoly lhs, const ComplexPoly& rhs) { return lhs -= rhs; }
  friend ComplexPoly operator*(ComplexPoly p, cplx s) { return p *= s; }
  friend ComplexPoly operator*(cplx s, ComplexPoly p) { return p *= s; }

private:
  void trim();

  std::vector<cplx> coeffs_;
};

/// Largest coefficientwise difference.
double max_coeff_distance(const ComplexPoly& p, const ComplexPoly& q);

/// Strictly increasing nodes in [-1, 1], at least two of them.
class NodeSet {
public:
  explicit NodeSet(std::vector<double> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  double operator[](std::size_t i) const noexcept { return nodes_[i]; }
  std::span<const double> values() const noexcept { return nodes_; }
  auto begin() const noexcept { return nodes_.begin(); }
  auto end() const noexcept { return nodes_.end(); }

  /// x -> -x, re-sorted.
  NodeSet reflected() const;

  bool operator==(const NodeSet&) const = default;

private:
  std::vector<double> nodes_;
};

/// ell_i(z) = prod_{j != i} (z - x_j) / (x_i - x_j).
cplx lagrange_eval(const NodeSet& nodes, std::size_t i, cplx z);

/// All ell_i(z) at once.
std::vector<cplx> lagrange_values(const NodeSet& nodes, cplx z);

/// sum_i c_i ell_i as a ComplexPoly of degree <= size - 1.
ComplexPoly from_lagrange_combination(const NodeSet& nodes, std::span<const cplx> coefficients);

struct SupNormEstimate {
  double value = 0.0;
  double argmax = 0.0;
  /// Refined local maxima with |p| >= value - tol, increasing.
  std::vector<double> near_extreme_points;
};

/// max_{x in [-1,1]} |p(x)|: |p|^2 sampled on a Chebyshev grid of
/// max(1024, 32 deg) points, each local maximum (and each endpoint)
/// refined by golden-section search.
SupNormEstimate sup_norm_interval(const ComplexPoly& p, double near_tol = 1e-8);

/// One root per (lo, hi) bracket by bisection to width <= 1e-14.
/// p must be real on the real line. Output is strictly increasing.
std::vector<double> real_roots_bracketed(const ComplexPoly& p,
                                         std::span<const std::pair<double, double>> brackets);

} // namespace optpred
