#include "mtc/fusion.hpp"

#include "mtc/kernels.hpp"

#include <cmath>
#include <sstream>

namespace mtc::fusion {

namespace {

constexpr std::size_t kMaxReported = 20;

void require_shape(int n, const std::vector<std::int32_t>& tensor, const std::vector<int>& conj) {
  if (n <= 0) throw std::invalid_argument("fusion ring needs at least one sector");
  if (tensor.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("fusion tensor must have n^3 entries");
  if (conj.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("conjugation map must have n entries");
  for (int c : conj)
    if (c < 0 || c >= n) throw std::invalid_argument("conjugation label out of range");
  for (std::int32_t v : tensor)
    if (v < 0) throw std::invalid_argument("fusion coefficients must be nonnegative");
}

}  // namespace

std::vector<AxiomViolation> FusionRing::check(int n, const std::vector<std::int32_t>& tensor,
                                              const std::vector<int>& conj) {
  require_shape(n, tensor, conj);
  const auto at = [&](int a, int b, int c) -> std::int32_t {
    return tensor[(static_cast<std::size_t>(a) * n + b) * n + c];
  };
  std::vector<AxiomViolation> out;
  const auto report = [&](const char* axiom, std::array<int, 4> idx, std::string detail) {
    if (out.size() < kMaxReported) out.push_back({axiom, idx, std::move(detail)});
  };

  for (int m = 0; m < n; ++m) {
    for (int nu = 0; nu < n; ++nu) {
      std::int32_t want = (m == nu) ? 1 : 0;
      if (at(0, m, nu) != want)
        report("unit", {0, m, nu, -1},
               "N[0][m][nu] != delta: got " + std::to_string(at(0, m, nu)));
      if (at(m, 0, nu) != want)
        report("unit", {m, 0, nu, -1},
               "N[m][0][nu] != delta: got " + std::to_string(at(m, 0, nu)));
    }
  }

  if (auto w = kernels::associativity_violation(n, tensor)) {
    std::int64_t lhs = 0, rhs = 0;
    for (int s = 0; s < n; ++s) {
      lhs += static_cast<std::int64_t>(at((*w)[0], (*w)[1], s)) * at(s, (*w)[2], (*w)[3]);
      rhs += static_cast<std::int64_t>(at((*w)[1], (*w)[2], s)) * at((*w)[0], s, (*w)[3]);
    }
    report("associativity", *w,
           "sum N[l][m][s]N[s][nu][t] = " + std::to_string(lhs) +
               " != " + std::to_string(rhs) + " = sum N[m][nu][s]N[l][s][t]");
  }

  for (int l = 0; l < n && out.size() < kMaxReported; ++l) {
    for (int m = 0; m < n; ++m) {
      for (int nu = 0; nu < n; ++nu) {
        std::int32_t base = at(l, m, nu);
        if (at(conj[static_cast<std::size_t>(l)], nu, m) != base)
          report("frobenius", {l, m, nu, -1}, "N[l][m][nu] != N[conj(l)][nu][m]");
        if (at(nu, conj[static_cast<std::size_t>(m)], l) != base)
          report("frobenius", {l, m, nu, -1}, "N[l][m][nu] != N[nu][conj(m)][l]");
      }
    }
  }

  if (conj[0] != 0) report("conjugation", {0, -1, -1, -1}, "conj(0) != 0");
  for (int l = 0; l < n; ++l) {
    if (conj[static_cast<std::size_t>(conj[static_cast<std::size_t>(l)])] != l)
      report("conjugation", {l, -1, -1, -1}, "conj is not an involution at this label");
    if (at(l, conj[static_cast<std::size_t>(l)], 0) != 1)
      report("conjugation", {l, conj[static_cast<std::size_t>(l)], 0, -1},
             "N[l][conj(l)][0] != 1");
  }

  return out;
}

FusionRing FusionRing::make(int n, std::vector<std::int32_t> tensor, std::vector<int> conj,
                            std::vector<std::string> names) {
  auto violations = check(n, tensor, conj);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "fusion ring axioms violated (" << violations.size() << " reported):";
    for (const auto& v : violations) {
      os << "\n  [" << v.axiom << "] (";
      for (int i = 0; i < 4; ++i) {
        if (v.idx[static_cast<std::size_t>(i)] < 0) break;
        if (i) os << ",";
        os << v.idx[static_cast<std::size_t>(i)];
      }
      os << ") " << v.detail;
    }
    throw RingValidationError(os.str(), std::move(violations));
  }
  FusionRing r;
  r.n_ = n;
  r.tensor_ = std::move(tensor);
  r.conj_ = std::move(conj);
  if (names.empty()) {
    names.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = "s" + std::to_string(i);
  }
  if (names.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("names must match sector count");
  r.names_ = std::move(names);
  return r;
}

std::vector<std::pair<int, int>> FusionRing::fuse(int l, int m) const {
  if (l < 0 || l >= n_ || m < 0 || m >= n_)
    throw std::out_of_range("fuse: sector label out of range");
  std::vector<std::pair<int, int>> out;
  for (int nu = 0; nu < n_; ++nu) {
    std::int32_t c = N(l, m, nu);
    if (c > 0) out.emplace_back(nu, c);
  }
  return out;
}

DimensionVector pf_dims(const FusionRing& ring) {
  const int n = ring.size();
  DimensionVector dv;
  dv.d.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    // power iteration on N_l + I; the shift keeps periodic fusion matrices
    // (swaps, cycles) aperiodic without moving the PF eigenvector
    x.assign(static_cast<std::size_t>(n), 1.0);
    double rayleigh = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
      for (int m = 0; m < n; ++m) {
        double acc = x[static_cast<std::size_t>(m)];
        for (int nu = 0; nu < n; ++nu)
          acc += ring.N(l, m, nu) * x[static_cast<std::size_t>(nu)];
        y[static_cast<std::size_t>(m)] = acc;
      }
      double num = 0.0, den = 0.0, norm = 0.0;
      for (int m = 0; m < n; ++m) {
        num += y[static_cast<std::size_t>(m)] * x[static_cast<std::size_t>(m)];
        den += x[static_cast<std::size_t>(m)] * x[static_cast<std::size_t>(m)];
        norm = std::max(norm, std::abs(y[static_cast<std::size_t>(m)]));
      }
      double r = num / den;
      for (int m = 0; m < n; ++m) x[static_cast<std::size_t>(m)] = y[static_cast<std::size_t>(m)] / norm;
      if (iter > 0 && std::abs(r - rayleigh) < 1e-13) {
        rayleigh = r;
        break;
      }
      rayleigh = r;
    }
    dv.d[static_cast<std::size_t>(l)] = rayleigh - 1.0;
  }
  dv.w = 0.0;
  for (double d : dv.d) dv.w += d * d;
  return dv;
}

}  // namespace mtc::fusion
