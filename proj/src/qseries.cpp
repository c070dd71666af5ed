#include "mtc/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace mtc::qs {

namespace {

bool all_integral(const std::vector<mpq_class>& v) {
  for (const auto& c : v) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

void QSeries::normalize() {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
    lead_ += static_cast<long>(skip);
  }
  if (coeffs_.empty()) lead_ = order_;
}

QSeries QSeries::zero(long order) {
  QSeries s;
  s.lead_ = order;
  s.order_ = order;
  return s;
}

QSeries QSeries::one(long order) { return monomial(1, 0, order); }

QSeries QSeries::monomial(const mpz_class& c, long exp, long order) {
  return monomial_q(mpq_class(c), exp, order);
}

QSeries QSeries::monomial_q(const mpq_class& c, long exp, long order) {
  if (order <= exp) throw SeriesError("monomial: order must exceed exponent");
  QSeries s;
  s.lead_ = exp;
  s.order_ = order;
  s.coeffs_.assign(static_cast<std::size_t>(order - exp), mpq_class(0));
  s.coeffs_[0] = c;
  s.rational_ = (c.get_den() != 1);
  s.normalize();
  return s;
}

QSeries QSeries::from_coeffs(std::vector<mpz_class> coeffs, long lead) {
  std::vector<mpq_class> q(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) q[i] = mpq_class(coeffs[i]);
  QSeries s = from_coeffs_q(std::move(q), lead);
  s.rational_ = false;
  return s;
}

QSeries QSeries::from_coeffs_q(std::vector<mpq_class> coeffs, long lead) {
  QSeries s;
  s.lead_ = lead;
  s.order_ = lead + static_cast<long>(coeffs.size());
  s.coeffs_ = std::move(coeffs);
  s.rational_ = !all_integral(s.coeffs_);
  s.normalize();
  return s;
}

mpq_class QSeries::coeff(long e) const {
  if (e >= order_)
    throw SeriesError("coefficient of q^" + std::to_string(e) +
                      " is beyond the truncation order " + std::to_string(order_));
  if (e < lead_) return 0;
  return coeffs_[static_cast<std::size_t>(e - lead_)];
}

mpz_class QSeries::coeff_z(long e) const {
  mpq_class c = coeff(e);
  if (c.get_den() != 1) throw SeriesError("coefficient is not an integer");
  return c.get_num();
}

QSeries QSeries::truncated(long new_order) const {
  if (new_order > order_) throw SeriesError("cannot extend truncation order");
  QSeries s = *this;
  s.order_ = new_order;
  if (new_order <= s.lead_) {
    s.coeffs_.clear();
    s.lead_ = new_order;
  } else {
    s.coeffs_.resize(static_cast<std::size_t>(new_order - s.lead_));
  }
  s.normalize();
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long order = std::min(a.order_, b.order_);
  long lead = std::min(a.lead_, b.lead_);
  QSeries s;
  s.lead_ = lead;
  s.order_ = order;
  s.rational_ = a.rational_ || b.rational_;
  if (order > lead) {
    s.coeffs_.assign(static_cast<std::size_t>(order - lead), mpq_class(0));
    for (long e = lead; e < order; ++e) {
      mpq_class v(0);
      if (e >= a.lead_ && e < a.order_) v += a.coeffs_[static_cast<std::size_t>(e - a.lead_)];
      if (e >= b.lead_ && e < b.order_) v += b.coeffs_[static_cast<std::size_t>(e - b.lead_)];
      s.coeffs_[static_cast<std::size_t>(e - lead)] = v;
    }
  } else {
    s.lead_ = order;
  }
  s.normalize();
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  // Unknown coefficients at a.order_ first pollute exponent a.order_ + b.lead_,
  // and symmetrically; everything strictly below the min is exact.
  long order = std::min(a.order_ + b.lead_, b.order_ + a.lead_);
  long lead = a.lead_ + b.lead_;
  QSeries s;
  s.rational_ = a.rational_ || b.rational_;
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    s.lead_ = order;
    s.order_ = order;
    return s;
  }
  s.lead_ = lead;
  s.order_ = order;
  if (order <= lead) {
    s.lead_ = order;
    return s;
  }
  s.coeffs_.assign(static_cast<std::size_t>(order - lead), mpq_class(0));
  mpq_class tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    long emax = order - (a.lead_ + static_cast<long>(i)) - b.lead_;
    std::size_t jmax = std::min<std::size_t>(b.coeffs_.size(),
                                             emax > 0 ? static_cast<std::size_t>(emax) : 0);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b.coeffs_[j] == 0) continue;
      tmp = a.coeffs_[i] * b.coeffs_[j];
      s.coeffs_[i + j] += tmp;
    }
  }
  s.normalize();
  return s;
}

QSeries operator*(const QSeries& a, const mpz_class& c) {
  QSeries s = a;
  for (auto& x : s.coeffs_) x *= c;
  s.normalize();
  return s;
}

QSeries operator+(const QSeries& a, const mpz_class& c) {
  return a + QSeries::monomial(c, 0, a.order_);
}

QSeries operator-(const QSeries& a, const mpz_class& c) { return a + mpz_class(-c); }

bool QSeries::operator==(const QSeries& b) const {
  long order = std::min(order_, b.order_);
  long lo = std::min(lead_, b.lead_);
  for (long e = lo; e < order; ++e) {
    mpq_class x = (e < lead_) ? mpq_class(0) : coeff(e);
    mpq_class y = (e < b.lead_) ? mpq_class(0) : b.coeff(e);
    if (x != y) return false;
  }
  return true;
}

std::string QSeries::to_string(long max_terms) const {
  std::ostringstream os;
  long printed = 0;
  bool first = true;
  for (long e = lead_; e < order_ && printed < max_terms; ++e) {
    mpq_class c = coeff(e);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
    ++printed;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ << ")";
  return os.str();
}

QSeries pow(const QSeries& a, long e) {
  if (e < 0) return pow(invert(a), -e);
  if (e == 0) return QSeries::one(a.order() - a.lead());
  QSeries base = a;
  QSeries result;
  bool have = false;
  long n = e;
  while (n > 0) {
    if (n & 1) {
      result = have ? result * base : base;
      have = true;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QSeries invert(const QSeries& a) {
  if (a.is_zero()) throw SeriesError("cannot invert the zero series");
  long L = a.lead();
  long K = a.order() - a.lead();
  mpq_class a0 = a.coeff(L);
  if (!a.rational_mode()) {
    if (a0 != 1 && a0 != -1)
      throw SeriesError("integer-mode inversion requires lowest coefficient +-1, got " +
                        a0.get_str());
  }
  std::vector<mpq_class> b(static_cast<std::size_t>(K), mpq_class(0));
  b[0] = mpq_class(1) / a0;
  for (long n = 1; n < K; ++n) {
    mpq_class s(0);
    for (long j = 1; j <= n; ++j) {
      mpq_class aj = a.coeff(L + j);
      if (aj == 0) continue;
      s += aj * b[static_cast<std::size_t>(n - j)];
    }
    b[static_cast<std::size_t>(n)] = -s / a0;
  }
  QSeries r = QSeries::from_coeffs_q(std::move(b), -L);
  return r;
}

mpz_class sigma3(long n) {
  if (n <= 0) throw SeriesError("sigma3 requires n >= 1");
  mpz_class total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class a(d);
    total += a * a * a;
    long e = n / d;
    if (e != d) {
      mpz_class b(e);
      total += b * b * b;
    }
  }
  return total;
}

QSeries eisenstein_e4(long nmax) {
  std::vector<mpz_class> c(static_cast<std::size_t>(nmax + 1));
  c[0] = 1;
  for (long n = 1; n <= nmax; ++n) c[static_cast<std::size_t>(n)] = 240 * sigma3(n);
  return QSeries::from_coeffs(std::move(c), 0);
}

QSeries euler_product(long nmax) {
  std::vector<mpz_class> c(static_cast<std::size_t>(nmax + 1), mpz_class(0));
  // sum over integers k of (-1)^k q^(k(3k-1)/2)
  c[0] = 1;
  for (long k = 1;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 > nmax) break;
    mpz_class sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(e1)] += sign;
    if (e2 <= nmax) c[static_cast<std::size_t>(e2)] += sign;
  }
  return QSeries::from_coeffs(std::move(c), 0);
}

QSeries j_series(long nmax) {
  if (nmax < -1) throw SeriesError("j_series requires nmax >= -1");
  long work = std::max<long>(nmax + 2, 2);  // window length
  QSeries e4 = eisenstein_e4(work - 1);
  QSeries num = e4 * e4 * e4;
  QSeries eta = euler_product(work - 1);
  QSeries eta24 = pow(eta, 24);
  QSeries den = QSeries::monomial(1, 1, work + 1) * eta24;  // q * prod(1-q^n)^24
  QSeries j = num * invert(den);
  return j.truncated(nmax + 1);
}

QSeries J_series(long nmax) { return j_series(nmax) - mpz_class(744); }

bool CharacterSeries::offset_is_integral() const { return offset.get_den() == 1; }

QSeries CharacterSeries::normalized() const {
  if (!offset_is_integral())
    throw SeriesError("character exponent offset " + offset.get_str() + " is not integral");
  long shift = static_cast<long>(offset.get_num().get_si());
  std::vector<mpq_class> c(static_cast<std::size_t>(series.order() - series.lead()));
  for (long e = series.lead(); e < series.order(); ++e)
    c[static_cast<std::size_t>(e - series.lead())] = series.coeff(e);
  return QSeries::from_coeffs_q(std::move(c), series.lead() + shift);
}

CharacterSeries character(const CharacterSpec& spec, long nmax) {
  if (spec.dims.empty()) throw SeriesError("character: dims must be non-empty");
  if (nmax < 0) throw SeriesError("character: nmax must be >= 0");
  std::vector<mpz_class> c(static_cast<std::size_t>(nmax + 1), mpz_class(0));
  for (std::size_t n = 0; n < spec.dims.size() && n <= static_cast<std::size_t>(nmax); ++n) {
    if (spec.dims[n] < 0) throw SeriesError("character: dims must be nonnegative");
    c[n] = spec.dims[n];
  }
  CharacterSeries cs;
  cs.series = QSeries::from_coeffs(std::move(c), 0);
  cs.offset = spec.h - spec.c / 24;
  cs.offset.canonicalize();
  return cs;
}

namespace {

// Greedy-from-the-top with backtracking: largest dimension first, dims[0] == 1
// absorbs whatever remainder is left if it fits the multiplicity bound.
void mckay_rec(const mpz_class& remaining, const std::vector<mpz_class>& dims, long bound,
               std::size_t idx, std::map<std::size_t, long>& current,
               std::vector<McKayDecomposition>& out) {
  if (idx == 0) {
    if (remaining <= bound) {
      if (remaining > 0) current[0] = static_cast<long>(remaining.get_si());
      McKayDecomposition d;
      d.mult = current;
      out.push_back(std::move(d));
      current.erase(0);
    }
    return;
  }
  const mpz_class& dim = dims[idx];
  long max_mult = bound;
  mpz_class fit = remaining / dim;
  if (fit < max_mult) max_mult = static_cast<long>(fit.get_si());
  for (long m = max_mult; m >= 0; --m) {
    mpz_class rest = remaining - m * dim;
    if (m > 0)
      current[idx] = m;
    else
      current.erase(idx);
    mckay_rec(rest, dims, bound, idx - 1, current, out);
  }
  current.erase(idx);
}

}  // namespace

std::vector<McKayDecomposition> mckay_check(const mpz_class& value,
                                            const std::vector<mpz_class>& dims, long bound) {
  if (dims.empty() || dims[0] != 1)
    throw SeriesError("mckay_check: dims must be ascending with dims[0] == 1");
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] < dims[i - 1]) throw SeriesError("mckay_check: dims must be ascending");
  if (value < 0) throw SeriesError("mckay_check: value must be nonnegative");
  std::vector<McKayDecomposition> out;
  std::map<std::size_t, long> current;
  mckay_rec(value, dims, bound, dims.size() - 1, current, out);
  return out;
}

mpz_class monster_order() {
  struct PrimePower {
    long p;
    long e;
  };
  static const PrimePower factors[] = {{2, 46}, {3, 20}, {5, 9},  {7, 6},  {11, 2},
                                       {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
                                       {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
  mpz_class order = 1;
  for (const auto& f : factors) {
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(f.p),
                  static_cast<unsigned long>(f.e));
    order *= pe;
  }
  return order;
}

}  // namespace mtc::qs
