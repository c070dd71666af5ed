#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

// Numeric hot loops, each in a serial reference version and an OpenMP
// version.  The serial versions are the ground truth the parallel ones are
// tested against; the unsuffixed entry points dispatch on problem size and
// thread availability.
namespace mtc::kernels {

bool parallel_enabled();
void set_parallel_enabled(bool on);

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct VerlindeTensor {
  int n = 0;
  std::vector<std::int64_t> N;  // flattened n^3, index (l*n + m)*n + nu
  double max_residual = 0.0;    // max distance of a raw entry from its integer

  std::int64_t at(int l, int m, int nu) const {
    return N[(static_cast<std::size_t>(l) * n + m) * n + nu];
  }
};

/// N_{lm}^nu = sum_s S_ls S_ms conj(S_nus) / S_0s, rounded entrywise.
VerlindeTensor verlinde_serial(const CMat& S);
VerlindeTensor verlinde_omp(const CMat& S);
VerlindeTensor verlinde(const CMat& S);

/// max |(S S^dagger - I)_{ij}|
double unitarity_residual_serial(const CMat& S);
double unitarity_residual_omp(const CMat& S);
double unitarity_residual(const CMat& S);

/// max |(S^2 - C)_{ij}| with C the conjugation permutation matrix.
double charge_conjugation_residual_serial(const CMat& S, const std::vector<int>& conj);
double charge_conjugation_residual_omp(const CMat& S, const std::vector<int>& conj);
double charge_conjugation_residual(const CMat& S, const std::vector<int>& conj);

/// max |((S T)^3 - S^2)_{ij}| with T diagonal.
double st_cubed_residual_serial(const CMat& S, const CVec& Tdiag);
double st_cubed_residual_omp(const CMat& S, const CVec& Tdiag);
double st_cubed_residual(const CMat& S, const CVec& Tdiag);

/// First associativity violation of a fusion tensor, or nullopt if none:
/// sum_s N[l][m][s] N[s][nu][t] == sum_s N[m][nu][s] N[l][s][t].
std::optional<std::array<int, 4>> associativity_violation_serial(
    int n, const std::vector<std::int32_t>& N);
std::optional<std::array<int, 4>> associativity_violation_omp(
    int n, const std::vector<std::int32_t>& N);
std::optional<std::array<int, 4>> associativity_violation(int n,
                                                          const std::vector<std::int32_t>& N);

}  // namespace mtc::kernels
