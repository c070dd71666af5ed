#include "mtc/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace mtc::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel_enabled(bool on) { g_parallel.store(on); }

VerlindeTensor verlinde_serial(const CMat& S) {
  const int n = static_cast<int>(S.rows());
  VerlindeTensor out;
  out.n = n;
  out.N.assign(static_cast<std::size_t>(n) * n * n, 0);
  double worst = 0.0;
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

double unitarity_residual_serial(const CMat& S) {
  const int n = static_cast<int>(S.rows());
  double worst = 0.0;
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

double charge_conjugation_residual_serial(const CMat& S, const std::vector<int>& conj) {
  const int n = static_cast<int>(S.rows());
  double worst = 0.0;
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

double st_cubed_residual_serial(const CMat& S, const CVec& Tdiag) {
  const int n = static_cast<int>(S.rows());
  CMat ST(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ST(i, j) = S(i, j) * Tdiag(j);
  CMat ST2(n, n), ST3(n, n), S2(n, n);
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
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> a(0, 0);
      for (int k = 0; k < n; ++k) a += ST2(i, k) * ST(k, j);
      ST3(i, j) = a;
      worst = std::max(worst, std::abs(ST3(i, j) - S2(i, j)));
    }
  }
  return worst;
}

std::optional<std::array<int, 4>> associativity_violation_serial(
    int n, const std::vector<std::int32_t>& N) {
  const auto at = [&](int a, int b, int c) -> std::int64_t {
    return N[(static_cast<std::size_t>(a) * n + b) * n + c];
  };
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      for (int nu = 0; nu < n; ++nu) {
        for (int t = 0; t < n; ++t) {
          std::int64_t lhs = 0, rhs = 0;
          for (int s = 0; s < n; ++s) {
            lhs += static_cast<std::int64_t>(at(l, m, s)) * at(s, nu, t);
            rhs += static_cast<std::int64_t>(at(m, nu, s)) * at(l, s, t);
          }
          if (lhs != rhs) return std::array<int, 4>{l, m, nu, t};
        }
      }
    }
  }
  return std::nullopt;
}

VerlindeTensor verlinde(const CMat& S) {
  if (parallel_enabled() && S.rows() >= 16) return verlinde_omp(S);
  return verlinde_serial(S);
}

double unitarity_residual(const CMat& S) {
  if (parallel_enabled() && S.rows() >= 64) return unitarity_residual_omp(S);
  return unitarity_residual_serial(S);
}

double charge_conjugation_residual(const CMat& S, const std::vector<int>& conj) {
  if (parallel_enabled() && S.rows() >= 64) return charge_conjugation_residual_omp(S, conj);
  return charge_conjugation_residual_serial(S, conj);
}

double st_cubed_residual(const CMat& S, const CVec& Tdiag) {
  if (parallel_enabled() && S.rows() >= 64) return st_cubed_residual_omp(S, Tdiag);
  return st_cubed_residual_serial(S, Tdiag);
}

std::optional<std::array<int, 4>> associativity_violation(int n,
                                                          const std::vector<std::int32_t>& N) {
  if (parallel_enabled() && n >= 16) return associativity_violation_omp(n, N);
  return associativity_violation_serial(n, N);
}

}  // namespace mtc::kernels
