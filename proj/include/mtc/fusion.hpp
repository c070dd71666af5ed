#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mtc::fusion {

struct SectorLabel {
  int id = 0;
  std::string name;
};

struct AxiomViolation {
  std::string axiom;       // "unit", "associativity", "frobenius", "conjugation"
  std::array<int, 4> idx;  // witnessing labels; unused slots are -1
  std::string detail;
};

class RingValidationError : public std::runtime_error {
 public:
  RingValidationError(std::string msg, std::vector<AxiomViolation> violations)
      : std::runtime_error(std::move(msg)), violations_(std::move(violations)) {}
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

/// Finite fusion ring: nonnegative structure constants N[l][m][nu], unit
/// sector 0, involutive conjugation.  Instances are validated on
/// construction and immutable afterwards.
class FusionRing {
 public:
  /// Validates all axioms (unit, associativity, Frobenius symmetry,
  /// conjugation); throws RingValidationError carrying every witnessed
  /// violation (up to a reporting cap).  Commutativity is deliberately not
  /// an axiom.
  static FusionRing make(int n, std::vector<std::int32_t> tensor, std::vector<int> conj,
                         std::vector<std::string> names = {});

  /// Collects violations without throwing (for the CLI axiom report).
  static std::vector<AxiomViolation> check(int n, const std::vector<std::int32_t>& tensor,
                                           const std::vector<int>& conj);

  int size() const { return n_; }
  std::int32_t N(int l, int m, int nu) const {
    return tensor_[(static_cast<std::size_t>(l) * n_ + m) * n_ + nu];
  }
  const std::vector<std::int32_t>& tensor() const { return tensor_; }
  int conj(int l) const { return conj_[static_cast<std::size_t>(l)]; }
  const std::vector<int>& conj_map() const { return conj_; }
  const std::string& name(int l) const { return names_[static_cast<std::size_t>(l)]; }

  /// lambda . mu as a multiset {(nu, multiplicity)} with multiplicity > 0.
  std::vector<std::pair<int, int>> fuse(int l, int m) const;

 private:
  FusionRing() = default;
  int n_ = 0;
  std::vector<std::int32_t> tensor_;
  std::vector<int> conj_;
  std::vector<std::string> names_;
};

struct DimensionVector {
  std::vector<double> d;
  double w = 0.0;  // sum of squares (global index)
};

/// Perron-Frobenius quantum dimensions: d[l] is the PF eigenvalue of the
/// fusion matrix N[l][.][.], by power iteration on N+I (all-ones start,
/// Rayleigh threshold 1e-13, at most 1e5 iterations).
DimensionVector pf_dims(const FusionRing& ring);

}  // namespace mtc::fusion
