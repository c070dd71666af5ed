#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtc::qs {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated formal Laurent series in q with exact coefficients.
///
/// Coefficients are exact rationals (GMP); a series constructed through the
/// integer factories stays in integer mode, where inversion demands a unit
/// (+-1) lowest coefficient.  Exponents in [lead, order) are known; anything
/// at or above `order` is unknown and never fabricated by arithmetic.
class QSeries {
 public:
  QSeries() : lead_(0), order_(0), rational_(false) {}

  static QSeries zero(long order);
  static QSeries one(long order);
  /// c * q^exp, known through exponents < order.
  static QSeries monomial(const mpz_class& c, long exp, long order);
  static QSeries monomial_q(const mpq_class& c, long exp, long order);
  /// coeffs[i] is the coefficient of q^(lead+i); order = lead + coeffs.size().
  static QSeries from_coeffs(std::vector<mpz_class> coeffs, long lead);
  static QSeries from_coeffs_q(std::vector<mpq_class> coeffs, long lead);

  long lead() const { return lead_; }
  long order() const { return order_; }
  bool rational_mode() const { return rational_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^e; throws for e >= order (unknown territory).
  mpq_class coeff(long e) const;
  mpz_class coeff_z(long e) const;

  QSeries truncated(long new_order) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

  friend QSeries operator*(const QSeries& a, const mpz_class& c);
  friend QSeries operator+(const QSeries& a, const mpz_class& c);
  friend QSeries operator-(const QSeries& a, const mpz_class& c);

  bool operator==(const QSeries& b) const;

  std::string to_string(long max_terms = 12) const;

 private:
  void normalize();

  long lead_;
  long order_;
  std::vector<mpq_class> coeffs_;  // dense window [lead_, order_)
  bool rational_;
};

QSeries pow(const QSeries& a, long e);
/// Multiplicative inverse; integer mode requires lowest coefficient +-1.
QSeries invert(const QSeries& a);

/// Sum of cubes of the divisors of n (n >= 1).
mpz_class sigma3(long n);

/// 1 + 240 sum_{n>0} sigma3(n) q^n, known through q^nmax.
QSeries eisenstein_e4(long nmax);
/// prod_{n>0} (1 - q^n), known through q^nmax (pentagonal-number expansion).
QSeries euler_product(long nmax);
/// Laurent expansion of the modular j-function, q^-1 + 744 + 196884 q + ...
QSeries j_series(long nmax);
/// J = j - 744 (constant term removed).
QSeries J_series(long nmax);

/// Graded-dimension data for a character ch = sum dims[n] q^(n + h - c/24).
struct CharacterSpec {
  std::vector<mpz_class> dims;
  mpq_class h;
  mpq_class c;
};

/// A q-power series plus the exact rational exponent offset h - c/24.
struct CharacterSeries {
  QSeries series;  // integer exponents n = 0,1,2,...
  mpq_class offset;

  bool offset_is_integral() const;
  /// Folds an integral offset into the series lead; throws otherwise.
  QSeries normalized() const;
};

CharacterSeries character(const CharacterSpec& spec, long nmax);

/// One way to write `value` as sum_i mult[i] * dims[i] with bounded
/// multiplicities.  Keys are indices into the input dimension list.
struct McKayDecomposition {
  std::map<std::size_t, long> mult;
};

/// All bounded-multiplicity nonnegative decompositions of `value` over
/// `dims` (ascending, dims[0] == 1).  Empty result means none exist within
/// the bound; that is a verdict, not an error.
std::vector<McKayDecomposition> mckay_check(const mpz_class& value,
                                            const std::vector<mpz_class>& dims,
                                            long bound = 10);

/// Order of the Monster group as the exact product of its prime powers.
mpz_class monster_order();

}  // namespace mtc::qs
