#include "optpred/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "optpred/errors.hpp"

namespace optpred {

ComplexPoly::ComplexPoly(std::vector<cplx> chebyshev_coeffs) : coeffs_(std::move(chebyshev_coeffs)) {
  trim();
}

ComplexPoly::ComplexPoly(std::initializer_list<cplx> chebyshev_coeffs) : coeffs_(chebyshev_coeffs) {
  trim();
}

void ComplexPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cplx(0.0, 0.0)) coeffs_.pop_back();
}

ComplexPoly ComplexPoly::from_monomial(std::span<const cplx> monomial_coeffs) {
  ComplexPoly p;
  for (auto it = monomial_coeffs.rbegin(); it != monomial_coeffs.rend(); ++it) {
    p = p.times_z();
    p += ComplexPoly{*it};
  }
  return p;
}

cplx ComplexPoly::coeff(int k) const noexcept {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx ComplexPoly::operator()(cplx z) const noexcept {
  if (coeffs_.empty()) return {0.0, 0.0};
  cplx b1(0.0), b2(0.0);
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    const cplx b0 = coeffs_[k] + 2.0 * z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + z * b1 - b2;
}

ComplexPoly ComplexPoly::times_z() const {
  if (coeffs_.empty()) return {};
  std::vector<cplx> out(coeffs_.size() + 1, cplx(0.0));
  out[1] += coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k + 1] += 0.5 * coeffs_[k];
    out[k - 1] += 0.5 * coeffs_[k];
  }
  return ComplexPoly(std::move(out));
}

ComplexPoly ComplexPoly::reflected() const {
  std::vector<cplx> out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return ComplexPoly(std::move(out));
}

std::vector<cplx> ComplexPoly::to_monomial() const {
  std::vector<cplx> out(coeffs_.size(), cplx(0.0));
  if (coeffs_.empty()) return out;
  // Monomial expansions of T_{k-1} and T_k, advanced by T_{k+1} = 2z T_k - T_{k-1}.
  std::vector<double> prev(coeffs_.size(), 0.0), cur(coeffs_.size(), 0.0);
  prev[0] = 1.0;
  if (coeffs_.size() > 1) cur[1] = 1.0;
  out[0] += coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) out[j] += coeffs_[k] * cur[j];
    if (k + 1 == coeffs_.size()) break;
    std::vector<double> next(coeffs_.size(), 0.0);
    for (std::size_t j = 0; j <= k; ++j) next[j + 1] += 2.0 * cur[j];
    for (std::size_t j = 0; j < k; ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

double ComplexPoly::max_imag_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c.imag()));
  return m;
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), cplx(0.0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), cplx(0.0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(cplx scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

double max_coeff_distance(const ComplexPoly& p, const ComplexPoly& q) {
  const int top = std::max(p.degree(), q.degree());
  double d = 0.0;
  for (int k = 0; k <= top; ++k) d = std::max(d, std::abs(p.coeff(k) - q.coeff(k)));
  return d;
}

NodeSet::NodeSet(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw InputError("node set needs at least 2 nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double x = nodes_[i];
    if (!std::isfinite(x) || x < -1.0 || x > 1.0) {
      throw InputError("node " + std::to_string(i) + " outside [-1, 1]");
    }
    if (i > 0 && !(nodes_[i - 1] < x)) {
      throw InputError("nodes must be strictly increasing (at index " + std::to_string(i) + ")");
    }
  }
}

NodeSet NodeSet::reflected() const {
  std::vector<double> out(nodes_.rbegin(), nodes_.rend());
  for (auto& x : out) x = -x;
  return NodeSet(std::move(out));
}

cplx lagrange_eval(const NodeSet& nodes, std::size_t i, cplx z) {
  if (i >= nodes.size()) {
    throw InputError("lagrange index " + std::to_string(i) + " out of range");
  }
  cplx value(1.0, 0.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == i) continue;
    value *= (z - nodes[j]) / (nodes[i] - nodes[j]);
  }
  return value;
}

std::vector<cplx> lagrange_values(const NodeSet& nodes, cplx z) {
  std::vector<cplx> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = lagrange_eval(nodes, i, z);
  return out;
}

ComplexPoly from_lagrange_combination(const NodeSet& nodes, std::span<const cplx> coefficients) {
  if (coefficients.size() != nodes.size()) {
    throw InputError("expected " + std::to_string(nodes.size()) + " coefficients, got " +
                     std::to_string(coefficients.size()));
  }
  // Interpolate (x_i, c_i) by solving the Chebyshev-Vandermonde system.
  const auto size = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd v(size, size);
  Eigen::VectorXcd rhs(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const double x = nodes[static_cast<std::size_t>(i)];
    v(i, 0) = 1.0;
    if (size > 1) v(i, 1) = x;
    for (Eigen::Index k = 2; k < size; ++k) v(i, k) = 2.0 * x * v(i, k - 1) - v(i, k - 2);
    rhs(i) = coefficients[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd c = v.cast<cplx>().partialPivLu().solve(rhs);
  return ComplexPoly(std::vector<cplx>(c.data(), c.data() + c.size()));
}

namespace {

struct LocalMax {
  double x;
  double value2;
};

template <typename F>
LocalMax golden_max(F&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? LocalMax{c, fc} : LocalMax{d, fd};
}

} // namespace

SupNormEstimate sup_norm_interval(const ComplexPoly& p, double near_tol) {
  if (p.is_zero()) throw InputError("sup norm of the zero polynomial");
  const auto mod2 = [&p](double x) { return std::norm(p(x)); };

  const std::size_t m = std::max<std::size_t>(1024, 32 * static_cast<std::size_t>(p.degree()));
  std::vector<double> grid(m), values(m);
  for (std::size_t k = 0; k < m; ++k) {
    grid[k] = -std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(m - 1));
    values[k] = mod2(grid[k]);
  }
  grid.front() = -1.0;
  grid.back() = 1.0;

  std::vector<LocalMax> maxima;
  const auto refine = [&](double lo, double hi, double anchor_x, double anchor_v) {
    LocalMax best = golden_max(mod2, lo, hi);
    if (anchor_v >= best.value2) best = {anchor_x, anchor_v};
    maxima.push_back(best);
  };
  refine(grid[0], grid[1], grid[0], values[0]);
  refine(grid[m - 2], grid[m - 1], grid[m - 1], values[m - 1]);
  for (std::size_t k = 1; k + 1 < m; ++k) {
    if (values[k] >= values[k - 1] && values[k] >= values[k + 1]) {
      refine(grid[k - 1], grid[k + 1], grid[k], values[k]);
    }
  }

  std::sort(maxima.begin(), maxima.end(), [](const LocalMax& a, const LocalMax& b) { return a.x < b.x; });
  SupNormEstimate est;
  for (const auto& lm : maxima) {
    if (lm.value2 > est.value * est.value) {
      est.value = std::sqrt(lm.value2);
      est.argmax = lm.x;
    }
  }
  // Neighbouring brackets can refine onto the same flat peak, located only to ~sqrt(eps).
  for (const auto& lm : maxima) {
    if (std::sqrt(lm.value2) < est.value - near_tol) continue;
    if (!est.near_extreme_points.empty() && lm.x - est.near_extreme_points.back() < 1e-7) continue;
    est.near_extreme_points.push_back(lm.x);
  }
  est.value = std::abs(p(est.argmax));
  return est;
}

std::vector<double> real_roots_bracketed(const ComplexPoly& p,
                                         std::span<const std::pair<double, double>> brackets) {
  double scale = 1.0;
  for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
  if (p.max_imag_coeff() > 1e-13 * scale) {
    throw InputError("real_roots_bracketed needs a polynomial that is real on the real line");
  }
  const auto f = [&p](double x) { return p(x).real(); };

  std::vector<double> roots;
  roots.reserve(brackets.size());
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    double lo = brackets[b].first, hi = brackets[b].second;
    double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo * fhi < 0.0)) {
      throw BracketError(b, "no sign change in bracket " + std::to_string(b) + " [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    while (hi - lo > 1e-14) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (!(roots[i - 1] < roots[i])) throw InputError("brackets produced coincident roots");
  }
  return roots;
}

} // namespace optpred
