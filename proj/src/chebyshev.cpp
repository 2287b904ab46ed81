#include "optpred/chebyshev.hpp"

#include <string>

#include "optpred/errors.hpp"

namespace optpred::chebyshev {

namespace {

void check_degree(int n, int lowest) {
  if (n < lowest || n > kMaxDegree) {
    throw DomainError("chebyshev degree " + std::to_string(n) + " outside [" +
                      std::to_string(lowest) + ", " + std::to_string(kMaxDegree) + "]");
  }
}

// T and U share the recurrence and differ only in the k = 1 term.
template <typename Scalar>
Scalar recurrence(int n, Scalar z, Scalar first) {
  if (n < 0) return Scalar(0);
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  Scalar cur = first;
  for (int k = 1; k < n; ++k) {
    Scalar next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace

cplx T(int n, cplx z) {
  check_degree(n, 0);
  return recurrence(n, z, z);
}

double T(int n, double x) {
  check_degree(n, 0);
  return recurrence(n, x, x);
}

cplx U(int n, cplx z) {
  check_degree(n, -1);
  return recurrence(n, z, 2.0 * z);
}

double U(int n, double x) {
  check_degree(n, -1);
  return recurrence(n, x, 2.0 * x);
}

double pell_residual(int n, cplx z) {
  if (n < 1) throw DomainError("pell_residual requires n >= 1");
  const cplx t = T(n, z);
  const cplx u = U(n - 1, z);
  return std::abs(t * t - (z * z - 1.0) * u * u - 1.0);
}

} // namespace optpred::chebyshev
