#pragma once

#include <complex>

namespace optpred::chebyshev {

using cplx = std::complex<double>;

/// Degrees above this are rejected with DomainError.
inline constexpr int kMaxDegree = 512;

/// T_n(z) by the three-term recurrence T_{k+1} = 2z T_k - T_{k-1}.
cplx T(int n, cplx z);
double T(int n, double x);

/// U_n(z) for n >= -1, with the convention U_{-1} = 0.
cplx U(int n, cplx z);
double U(int n, double x);

/// |T_n(z)^2 - (z^2 - 1) U_{n-1}(z)^2 - 1|, n >= 1.
double pell_residual(int n, cplx z);

} // namespace optpred::chebyshev
