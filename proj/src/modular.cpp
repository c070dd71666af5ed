#include "mtc/modular.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <sstream>

namespace mtc::modular {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> int_pow(std::complex<double> z, int e) {
  if (e < 0) return 1.0 / int_pow(z, -e);
  std::complex<double> r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool Sl2zReport::pass(double tol) const {
  return unitarity < tol && symmetry < tol && charge_conjugation < tol && st_relation < tol &&
         gauss_modulus < tol && vacuum_row_min > 0.0;
}

Sl2zReport check_sl2z(const ModularData& md, double /*tol*/) {
  Sl2zReport rep;
  rep.unitarity = kernels::unitarity_residual(md.S);
  rep.symmetry = (md.S - md.S.transpose()).cwiseAbs().maxCoeff();
  rep.charge_conjugation = kernels::charge_conjugation_residual(md.S, md.ring.conj_map());
  rep.st_relation = kernels::st_cubed_residual(md.S, md.Tdiag);
  rep.gauss_modulus = std::abs(std::abs(md.gauss_sum) - std::sqrt(md.w));
  rep.vacuum_row_min = md.S.row(0).real().minCoeff();
  return rep;
}

VerlindeResult verlinde(const Eigen::MatrixXcd& S, double tol_round) {
  const int n = static_cast<int>(S.rows());
  for (int s = 0; s < n; ++s)
    if (std::abs(S(0, s)) < 1e-14)
      throw ModularDataError("verlinde: vanishing vacuum-row entry at column " +
                             std::to_string(s));
  kernels::VerlindeTensor t = kernels::verlinde(S);
  if (t.max_residual > tol_round) {
    std::ostringstream os;
    os << "verlinde: entries are not integral within " << tol_round
       << " (max residual " << t.max_residual << "); input is not modular";
    throw ModularDataError(os.str());
  }
  for (std::int64_t v : t.N)
    if (v < 0) throw ModularDataError("verlinde: negative integer entry; input is not modular");
  VerlindeResult r;
  r.n = n;
  r.N = std::move(t.N);
  r.max_residual = t.max_residual;
  return r;
}

Eigen::MatrixXcd y_matrix(const ModularData& md) { return std::sqrt(md.w) * md.S; }

std::vector<int> degenerate_sectors(const Eigen::MatrixXcd& Y, const std::vector<double>& d,
                                    double tol, double cond_limit) {
  const int n = static_cast<int>(Y.rows());
  std::vector<int> deg;
  for (int l = 0; l < n; ++l) {
    double worst = 0.0;
    for (int m = 0; m < n; ++m)
      worst = std::max(worst,
                       std::abs(Y(l, m) - d[static_cast<std::size_t>(l)] *
                                              d[static_cast<std::size_t>(m)]));
    if (worst < tol) deg.push_back(l);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Y);
  double smin = svd.singularValues()(n - 1);
  double smax = svd.singularValues()(0);
  bool invertible = smin > 0.0 && smax / smin < cond_limit;
  bool only_vacuum = (deg.size() == 1 && deg[0] == 0);
  if (invertible != only_vacuum)
    throw ModularDataError(
        "degeneracy criteria disagree: Y-criterion found " + std::to_string(deg.size()) +
        " degenerate sector(s) but Y condition number is " +
        std::to_string(smin > 0 ? smax / smin : std::numeric_limits<double>::infinity()));
  return deg;
}

std::vector<int> degenerate_sectors(const ModularData& md, double tol) {
  return degenerate_sectors(y_matrix(md), md.d, tol);
}

std::pair<Eigen::VectorXcd, std::complex<double>> twists_from_T(const Eigen::VectorXcd& Tdiag) {
  std::complex<double> anomaly = Tdiag(0);
  Eigen::VectorXcd omega = Tdiag / anomaly;
  return {omega, anomaly};
}

std::complex<double> diagram_value(const ModularData& md, const Diagram& diagram) {
  const int n = md.size();
  const auto check_label = [&](int l) {
    if (l < 0 || l >= n) throw std::out_of_range("diagram label out of range");
  };
  return std::visit(
      [&](const auto& node) -> std::complex<double> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Unknot>) {
          check_label(node.label);
          return md.d[static_cast<std::size_t>(node.label)];
        } else if constexpr (std::is_same_v<T, TwistedUnknot>) {
          check_label(node.label);
          return int_pow(md.omega(node.label), node.framing) *
                 md.d[static_cast<std::size_t>(node.label)];
        } else if constexpr (std::is_same_v<T, HopfLink>) {
          check_label(node.a);
          check_label(node.b);
          return std::sqrt(md.w) * md.S(node.a, node.b);
        } else if constexpr (std::is_same_v<T, DisjointUnion>) {
          std::complex<double> prod{1.0, 0.0};
          for (const auto& part : node.parts) prod *= diagram_value(md, part);
          return prod;
        } else {
          throw ModularDataError(
              "unsupported diagram shape (general links need 6j data): " + node.description);
        }
      },
      diagram.node);
}

ModularData make_modular_data(fusion::FusionRing ring, std::vector<double> d,
                              Eigen::VectorXcd omega, Eigen::MatrixXcd S, std::string name,
                              const MakeOptions& opts) {
  const int n = ring.size();
  if (static_cast<int>(d.size()) != n || omega.size() != n || S.rows() != n || S.cols() != n)
    throw std::invalid_argument("make_modular_data: inconsistent sizes");

  ModularData md;
  md.ring = std::move(ring);
  md.d = std::move(d);
  md.omega = std::move(omega);
  md.S = std::move(S);
  md.name = std::move(name);
  md.w = 0.0;
  for (double x : md.d) md.w += x * x;

  std::complex<double> sigma{0.0, 0.0};
  for (int l = 0; l < n; ++l)
    sigma += md.d[static_cast<std::size_t>(l)] * md.d[static_cast<std::size_t>(l)] /
             md.omega(l);
  md.gauss_sum = sigma;

  // T anomaly: a cube root of sigma/|sigma|, orientation omega or omega^-1.
  // Six candidates in fixed order; first that satisfies (ST)^3 = S^2 wins.
  std::complex<double> unit = sigma / std::abs(sigma);
  std::complex<double> principal = std::pow(unit, 1.0 / 3.0);
  bool found = false;
  for (int root = 0; root < 3 && !found; ++root) {
    std::complex<double> t0 =
        principal * std::exp(2.0 * std::numbers::pi * kI * (static_cast<double>(root) / 3.0));
    for (int orient : {+1, -1}) {
      Eigen::VectorXcd T(n);
      for (int l = 0; l < n; ++l) T(l) = t0 * int_pow(md.omega(l), orient);
      if (kernels::st_cubed_residual(md.S, T) < opts.tol_relation) {
        md.Tdiag = T;
        md.t_orientation = orient;
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw ModularDataError("make_modular_data(" + md.name +
                           "): no T cube-root/orientation satisfies (ST)^3 = S^2");

  Sl2zReport rep = check_sl2z(md, opts.tol_relation);
  if (!rep.pass(opts.tol_relation)) {
    std::ostringstream os;
    os << "make_modular_data(" << md.name << "): SL(2,Z) validation failed"
       << " unitarity=" << rep.unitarity << " symmetry=" << rep.symmetry
       << " S2=C=" << rep.charge_conjugation << " (ST)^3=" << rep.st_relation
       << " gauss=" << rep.gauss_modulus << " vacuum_min=" << rep.vacuum_row_min;
    throw ModularDataError(os.str());
  }

  const double sqw = std::sqrt(md.w);
  for (int l = 0; l < n; ++l) {
    double expect = md.d[static_cast<std::size_t>(l)] / sqw;
    if (std::abs(md.S(0, l) - expect) > 1e-8)
      throw ModularDataError("make_modular_data(" + md.name +
                             "): vacuum row of S does not match d/sqrt(w) at " +
                             std::to_string(l));
  }

  if (opts.validate_verlinde) {
    VerlindeResult v = verlinde(md.S, opts.tol_round);
    for (std::size_t i = 0; i < v.N.size(); ++i) {
      if (v.N[i] != md.ring.tensor()[i])
        throw ModularDataError("make_modular_data(" + md.name +
                               "): Verlinde round trip disagrees with the fusion ring");
    }
  }
  return md;
}

}  // namespace mtc::modular
