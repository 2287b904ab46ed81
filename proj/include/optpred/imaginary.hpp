#pragma once

#include "optpred/design.hpp"
#include "optpred/polynomial.hpp"

namespace optpred::imaginary {

/// Q_1 = -(a z + i) / s, Q_2 = (-(a + s) z^2 - i z + s) / s with
/// s = sqrt(a^2 + 1), then Q_{n+1} = 2 z Q_n - Q_{n-1}. Requires a > 0, n >= 1.
ComplexPoly q_poly(int n, double a);

/// R_0 = a / s, R_1 = (a + s) z / s, then R_{n+1} = 2 z R_n - R_{n-1}.
/// Requires a > 0, n >= 0.
ComplexPoly r_poly(int n, double a);

/// | |Q_n(x)|^2 - (x^2 - 1) R_{n-1}(x)^2 - 1 |.
double pell_residual(int n, double a, double x);

/// Zeros of R_m in (-1, 1), increasing; bracketed by the extreme points of T_m.
std::vector<double> r_zeros(int m, double a);

/// Optimal design at z0 = a i: support {-1} + zeros(R_{n-1}) + {+1} with
/// Hoel-Levine weights. For a < 0 the a > 0 support is reflected.
Design imaginary_design(int n, double a);

/// max |p(ai)| over ||p||_[-1,1] <= 1: sqrt(a^2+1) (|a| + sqrt(a^2+1))^{n-1}.
double growth_value(int n, double a);

/// Squared growth value, the optimal K_n at ai.
double optimal_K(int n, double a);

struct GrowthGap {
  double lhs = 0.0;  ///< growth_value - |T_n(ai)|
  double rhs = 0.0;  ///< (sqrt(a^2+1) - |a|) |T_{n-1}(ai)|
};

GrowthGap growth_gap(int n, double a);

} // namespace optpred::imaginary
