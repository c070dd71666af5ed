#include "mtc/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtc::kernels {

VerlindeTensor verlinde_omp(const CMat& S) {
  const int n = static_cast<int>(S.rows());
  VerlindeTensor out;
  out.n = n;
  out.N.assign(static_cast<std::size_t>(n) * n * n, 0);
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : worst)
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      for (int nu = 0; nu < n; ++nu) {
        std::complex<double> acc(0.0, 0.0);
        for (int s = 0; s < n; ++s) {
          acc += S(l, s) * S(m, s) * std::conj(S(nu, s)) / S(0, s);
        }
        double rounded = std::round(acc.real());
        double res = std::hypot(acc.real() - rounded, acc.imag());
        if (res > worst) worst = res;
        out.N[(static_cast<std::size_t>(l) * n + m) * n + nu] =
            static_cast<std::int64_t>(rounded);
      }
    }
  }
  out.max_residual = worst;
  return out;
}

double unitarity_residual_omp(const CMat& S) {
  const int n = static_cast<int>(S.rows());
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : worst)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) acc += S(i, k) * std::conj(S(j, k));
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double charge_conjugation_residual_omp(const CMat& S, const std::vector<int>& conj) {
  const int n = static_cast<int>(S.rows());
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : worst)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) acc += S(i, k) * S(k, j);
      if (conj[static_cast<std::size_t>(i)] == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double st_cubed_residual_omp(const CMat& S, const CVec& Tdiag) {
  const int n = static_cast<int>(S.rows());
  CMat ST(n, n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ST(i, j) = S(i, j) * Tdiag(j);
  CMat ST2(n, n), S2(n, n);
#pragma omp parallel for collapse(2) schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> a(0, 0), b(0, 0);
      for (int k = 0; k < n; ++k) {
        a += ST(i, k) * ST(k, j);
        b += S(i, k) * S(k, j);
      }
      ST2(i, j) = a;
      S2(i, j) = b;
    }
  }
  double worst = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : worst)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> a(0, 0);
      for (int k = 0; k < n; ++k) a += ST2(i, k) * ST(k, j);
      worst = std::max(worst, std::abs(a - S2(i, j)));
    }
  }
  return worst;
}

std::optional<std::array<int, 4>> associativity_violation_omp(
    int n, const std::vector<std::int32_t>& N) {
  const auto at = [&](int a, int b, int c) -> std::int64_t {
    return N[(static_cast<std::size_t>(a) * n + b) * n + c];
  };
  // collect the lexicographically first witness so output is schedule-independent
  long best = -1;
#pragma omp parallel
  {
    long local_best = -1;
#pragma omp for schedule(static) nowait
    for (int lm = 0; lm < n * n; ++lm) {
      if (local_best >= 0) continue;
      const int l = lm / n;
      const int m = lm % n;
      for (int nu = 0; nu < n && local_best < 0; ++nu) {
        for (int t = 0; t < n && local_best < 0; ++t) {
          std::int64_t lhs = 0, rhs = 0;
          for (int s = 0; s < n; ++s) {
            lhs += static_cast<std::int64_t>(at(l, m, s)) * at(s, nu, t);
            rhs += static_cast<std::int64_t>(at(m, nu, s)) * at(l, s, t);
          }
          if (lhs != rhs)
            local_best = ((static_cast<long>(lm) * n + nu) * n + t);
        }
      }
    }
#pragma omp critical
    {
      if (local_best >= 0 && (best < 0 || local_best < best)) best = local_best;
    }
  }
  if (best < 0) return std::nullopt;
  int t = static_cast<int>(best % n);
  long rest = best / n;
  int nu = static_cast<int>(rest % n);
  rest /= n;
  int m = static_cast<int>(rest % n);
  int l = static_cast<int>(rest / n);
  return std::array<int, 4>{l, m, nu, t};
}

}  // namespace mtc::kernels
