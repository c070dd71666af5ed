#pragma once

#include "mtc/fusion.hpp"
#include "mtc/kernels.hpp"

#include <Eigen/Core>

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace mtc::modular {

class ModularDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Modular data of a non-degenerately braided system: quantum dimensions,
/// twists, S and T matrices, Gauss sum.  T is stored as its diagonal;
/// Tdiag = anomaly * omega^orientation where the anomaly is a cube root of
/// sigma/|sigma| selected so that (ST)^3 = S^2 holds.
struct ModularData {
  fusion::FusionRing ring;
  std::vector<double> d;
  double w = 0.0;
  Eigen::VectorXcd omega;
  Eigen::MatrixXcd S;
  Eigen::VectorXcd Tdiag;
  std::complex<double> gauss_sum{0.0, 0.0};  // sigma = sum d^2 / omega
  int t_orientation = +1;                    // omega exponent used inside T
  std::string name;

  int size() const { return ring.size(); }
};

struct Sl2zReport {
  double unitarity = 0.0;
  double symmetry = 0.0;
  double charge_conjugation = 0.0;  // S^2 vs C
  double st_relation = 0.0;         // (ST)^3 vs S^2
  double gauss_modulus = 0.0;       // | |sigma| - sqrt(w) |
  double vacuum_row_min = 0.0;      // min real part of S row 0
  bool pass(double tol) const;
};

/// Residuals of the SL(2,Z) relations for the given data.
Sl2zReport check_sl2z(const ModularData& md, double tol = 1e-9);

struct VerlindeResult {
  int n = 0;
  std::vector<std::int64_t> N;
  double max_residual = 0.0;
  std::int64_t at(int l, int m, int nu) const {
    return N[(static_cast<std::size_t>(l) * n + m) * n + nu];
  }
};

/// Fusion tensor from the Verlinde sum.  Every raw entry must round to a
/// nonnegative integer within tol_round, otherwise ModularDataError.
VerlindeResult verlinde(const Eigen::MatrixXcd& S, double tol_round = 1e-6);

/// Hopf-link matrix Y = sqrt(w) S.
Eigen::MatrixXcd y_matrix(const ModularData& md);

/// Labels lambda with Y[lambda][mu] = d_lambda d_mu for all mu, cross-checked
/// against invertibility of Y (condition number); disagreement between the
/// two criteria is an error.
std::vector<int> degenerate_sectors(const Eigen::MatrixXcd& Y, const std::vector<double>& d,
                                    double tol = 1e-9, double cond_limit = 1e9);
std::vector<int> degenerate_sectors(const ModularData& md, double tol = 1e-9);

/// omega vector and anomaly phase from a diagonal T.
std::pair<Eigen::VectorXcd, std::complex<double>> twists_from_T(const Eigen::VectorXcd& Tdiag);

// Closed wire diagrams with known scalar values.  Anything needing 6j data
// is represented by GeneralLink and rejected.
struct Unknot {
  int label;
};
struct TwistedUnknot {
  int label;
  int framing;
};
struct HopfLink {
  int a;
  int b;
};
struct GeneralLink {
  std::string description;
};
struct Diagram;
struct DisjointUnion {
  std::vector<Diagram> parts;
};
struct Diagram {
  std::variant<Unknot, TwistedUnknot, HopfLink, DisjointUnion, GeneralLink> node;
};

std::complex<double> diagram_value(const ModularData& md, const Diagram& diagram);

struct MakeOptions {
  double tol_relation = 1e-9;
  double tol_round = 1e-6;
  bool validate_verlinde = true;  // exact round-trip against ring.tensor()
};

/// Assembles and validates ModularData from a ring, dimensions, twists and
/// an S matrix: picks the T anomaly cube root and twist orientation (six
/// combinations, fixed order, first that satisfies (ST)^3 = S^2), then
/// verifies unitarity, symmetry, S^2 = C, the vacuum row S[0][l] = d_l/sqrt(w)
/// and optionally the exact Verlinde round trip.
ModularData make_modular_data(fusion::FusionRing ring, std::vector<double> d,
                              Eigen::VectorXcd omega, Eigen::MatrixXcd S, std::string name,
                              const MakeOptions& opts = {});

}  // namespace mtc::modular
