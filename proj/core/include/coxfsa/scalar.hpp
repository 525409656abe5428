#pragma once

// Exact arithmetic in the real cyclotomic field Q(2cos(pi/N)).
//
// Every entry of the geometric representation of a Coxeter group is a
// polynomial in theta = 2cos(pi/N) where N is the lcm of the finite labels.
// Scalars are stored as rational polynomials in theta reduced modulo the
// minimal polynomial psi of theta, so equality is coefficientwise. Signs are
// decided by exact rational interval evaluation over an isolating interval of
// theta.

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace coxfsa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A Coxeter label m_st: an integer >= 1 or infinity. Infinity is a
// distinguished value, never a large integer.
class Order {
 public:
  constexpr Order() = default;  // infinity
  constexpr explicit Order(unsigned m) : m_(m) {}

  static constexpr Order infinity() { return Order(); }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr bool is_finite() const { return m_ != 0; }
  // Precondition: is_finite().
  constexpr unsigned value() const { return m_; }

  constexpr bool operator==(const Order&) const = default;

  std::string to_string() const;

 private:
  unsigned m_ = 0;
};

class CycloField;

class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  // The zero scalar. It is compatible with every field.
  Scalar() = default;

  const CycloField* field() const { return field_; }

  // Coefficient of theta^k; zero beyond the stored length.
  Rational coefficient(std::size_t k) const;
  // Trailing zeros are trimmed, so zero has no stored coefficients.
  const Coeffs& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  // Sign of the real number this scalar represents: -1, 0 or +1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator*=(const Rational& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }

  // Coefficientwise; the representation is canonical.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.coeffs_ == b.coeffs_;
  }
  // Total order on representations (not on real values); used for keys.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  friend class CycloField;

  Scalar(const CycloField* field, Coeffs coeffs);
  void trim();
  const CycloField* adopt(const Scalar& other) const;

  const CycloField* field_ = nullptr;
  Coeffs coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& a);

class CycloField {
 public:
  // Builds Q(2cos(pi/n)). n = 1 gives the rationals (theta = -2).
  // Throws PreconditionError for n = 0 or n = 2 (use n = 1 instead).
  explicit CycloField(unsigned n);

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

  // N from a list of labels: lcm of the finite labels >= 3, or 1 if none.
  // Labels 2 contribute only 2cos(pi/2) = 0, which is rational.
  static unsigned conductor(std::span<const Order> labels);

  unsigned n() const { return n_; }
  std::size_t degree() const { return psi_.size() - 1; }
  // Coefficients of psi, constant term first; psi is monic.
  const std::vector<BigInt>& psi() const { return psi_; }
  // Rational interval containing theta and no other root of psi.
  std::pair<Rational, Rational> isolating_interval() const {
    return {lo_, hi_};
  }

  Scalar zero() const { return Scalar(this, {}); }
  Scalar one() const { return from_rational(Rational(1)); }
  Scalar from_rational(const Rational& q) const;
  Scalar from_coefficients(std::span<const Rational> coeffs) const;
  Scalar theta() const;
  // 2cos(pi/m); 2 for m = infinity. Throws MismatchError when m does not
  // belong to this field.
  Scalar cos_embed(Order m) const;
  // The Chebyshev-like sequence p_0 = 2, p_1 = theta, p_{k+1} =
  // theta p_k - p_{k-1}, i.e. p_k = 2cos(k pi / N).
  Scalar chebyshev(unsigned k) const;

  int sign(const Scalar& a) const;

  // Evaluates psi at a rational point.
  Rational eval_psi(const Rational& x) const;

 private:
  friend class Scalar;

  void reduce(Scalar::Coeffs& coeffs) const;
  // Interval evaluation of a over [lo, hi]; lo > 0 is required.
  static std::pair<Rational, Rational> interval_eval(
      const Scalar::Coeffs& coeffs, const std::vector<Rational>& lo_pows,
      const std::vector<Rational>& hi_pows);

  unsigned n_;
  std::vector<BigInt> psi_;
  Rational lo_, hi_;
  std::vector<Rational> lo_pows_, hi_pows_;
};

// Euler's totient.
unsigned euler_phi(unsigned n);
// Cyclotomic polynomial Phi_n, constant term first.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

}  // namespace coxfsa

template <>
struct std::hash<coxfsa::Scalar> {
  std::size_t operator()(const coxfsa::Scalar& a) const { return a.hash(); }
};
