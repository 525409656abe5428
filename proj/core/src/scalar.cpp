#include "coxfsa/scalar.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "coxfsa/errors.hpp"

namespace coxfsa {

namespace {

using Poly = std::vector<BigInt>;

void trim_poly(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial; the remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw InvariantError("cyclotomic division");
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const BigInt c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  trim_poly(num);
  if (!num.empty()) throw InvariantError("cyclotomic division left a remainder");
  return quot;
}

int rational_sign(const Rational& q) { return q.sign(); }

}  // namespace

std::string Order::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(m_);
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw PreconditionError("cyclotomic_polynomial: n must be >= 1");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const CycloField* field, Coeffs coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  trim();
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Scalar::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const CycloField* Scalar::adopt(const Scalar& other) const {
  if (field_ == nullptr) return other.field_;
  if (other.field_ == nullptr || other.field_ == field_) return field_;
  if (other.field_->n() != field_->n()) {
    throw MismatchError("scalars from different fields (N=" +
                        std::to_string(field_->n()) + " vs N=" +
                        std::to_string(other.field_->n()) + ")");
  }
  return field_;
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  return field_->sign(*this);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  field_ = adopt(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  field_ = adopt(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  field_ = adopt(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (coeffs_.size() == 1 && rhs.coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  Coeffs prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  field_->reduce(prod);
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) {
    return a.coeffs_.size() <=> b.coeffs_.size();
  }
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] < b.coeffs_[k]) return std::strong_ordering::less;
    if (b.coeffs_[k] < a.coeffs_[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Scalar::hash() const {
  std::size_t h = coeffs_.size();
  static const BigInt kMod = 1000000007;
  for (const auto& c : coeffs_) {
    const auto num = static_cast<std::size_t>(
        static_cast<long long>(BigInt(numerator(c) % kMod)));
    const auto den = static_cast<std::size_t>(
        static_cast<long long>(BigInt(denominator(c) % kMod)));
    h ^= num + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= den + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k == 1) os << "*theta";
    if (k > 1) os << "*theta^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) {
  return os << a.to_string();
}

// ---------------------------------------------------------------------------
// CycloField

unsigned CycloField::conductor(std::span<const Order> labels) {
  unsigned n = 1;
  for (const Order& m : labels) {
    if (m.is_infinite() || m.value() < 3) continue;
    n = std::lcm(n, m.value());
  }
  return n;
}

CycloField::CycloField(unsigned n) : n_(n) {
  if (n == 0 || n == 2) {
    throw PreconditionError("CycloField: N must be 1 or >= 3, got " +
                            std::to_string(n));
  }
  if (n == 1) {
    // theta = 2cos(pi) = -2.
    psi_ = {BigInt(2), BigInt(1)};
    lo_ = -2;
    hi_ = -2;
    return;
  }

  // x^{-h} Phi_{2N}(x) written in theta = x + 1/x using
  // x^k + x^{-k} = p_k(theta).
  const Poly cyc = cyclotomic_polynomial(2 * n);
  const std::size_t h = (cyc.size() - 1) / 2;
  std::vector<Poly> p(h + 1);
  p[0] = {BigInt(2)};
  if (h >= 1) p[1] = {BigInt(0), BigInt(1)};
  for (std::size_t k = 1; k < h; ++k) {
    Poly next(k + 2, 0);
    for (std::size_t j = 0; j < p[k].size(); ++j) next[j + 1] += p[k][j];
    for (std::size_t j = 0; j < p[k - 1].size(); ++j) next[j] -= p[k - 1][j];
    p[k + 1] = std::move(next);
  }
  psi_.assign(h + 1, 0);
  psi_[0] = cyc[h];
  for (std::size_t k = 1; k <= h; ++k) {
    for (std::size_t j = 0; j < p[k].size(); ++j) psi_[j] += cyc[h + k] * p[k][j];
  }
  if (psi_.back() != 1 || degree() != euler_phi(2 * n) / 2) {
    throw InvariantError("minimal polynomial has the wrong shape for N=" +
                         std::to_string(n));
  }

  if (degree() == 1) {
    // theta is rational; psi = x - theta.
    lo_ = hi_ = Rational(-psi_[0]);
  } else {
    // theta is the largest real root of psi. The float only seeds the
    // interval; the sign change below certifies it.
    const double approx = 2.0 * std::cos(std::numbers::pi / n);
    lo_ = Rational(approx) - Rational(1, BigInt(1) << 20);
    hi_ = 2;
    const int s_lo = rational_sign(eval_psi(lo_));
    const int s_hi = rational_sign(eval_psi(hi_));
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
      throw InvariantError("isolating interval for 2cos(pi/" +
                           std::to_string(n) + ") failed validation");
    }
    const Rational target_width(1, BigInt(1) << 64);
    while (hi_ - lo_ > target_width) {
      const Rational mid = (lo_ + hi_) / 2;
      const int s_mid = rational_sign(eval_psi(mid));
      if (s_mid == 0) throw InvariantError("psi has a rational root");
      if (s_mid == s_lo) {
        lo_ = mid;
      } else {
        hi_ = mid;
      }
    }
    lo_pows_.assign(degree(), Rational(1));
    hi_pows_.assign(degree(), Rational(1));
    for (std::size_t k = 1; k < degree(); ++k) {
      lo_pows_[k] = lo_pows_[k - 1] * lo_;
      hi_pows_[k] = hi_pows_[k - 1] * hi_;
    }
  }

  // p_N(theta) = 2cos(pi) = -2 must hold exactly modulo psi.
  if (chebyshev(n) != from_rational(Rational(-2))) {
    throw InvariantError("Chebyshev relation p_N = -2 fails for N=" +
                         std::to_string(n));
  }
}

Rational CycloField::eval_psi(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = psi_.size(); k-- > 0;) acc = acc * x + Rational(psi_[k]);
  return acc;
}

void CycloField::reduce(Scalar::Coeffs& coeffs) const {
  const std::size_t d = degree();
  for (std::size_t k = coeffs.size(); k-- > d;) {
    const Rational c = coeffs[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) coeffs[k - d + j] -= c * Rational(psi_[j]);
    coeffs[k] = 0;
  }
  if (coeffs.size() > d) coeffs.resize(d);
}

Scalar CycloField::from_rational(const Rational& q) const {
  Scalar::Coeffs c;
  c.push_back(q);
  return Scalar(this, std::move(c));
}

Scalar CycloField::from_coefficients(std::span<const Rational> coeffs) const {
  Scalar::Coeffs c(coeffs.begin(), coeffs.end());
  reduce(c);
  return Scalar(this, std::move(c));
}

Scalar CycloField::theta() const {
  Scalar::Coeffs c{Rational(0), Rational(1)};
  reduce(c);
  return Scalar(this, std::move(c));
}

Scalar CycloField::chebyshev(unsigned k) const {
  Scalar prev = from_rational(2);
  if (k == 0) return prev;
  Scalar cur = theta();
  const Scalar th = theta();
  for (unsigned j = 1; j < k; ++j) {
    Scalar next = th * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Scalar CycloField::cos_embed(Order m) const {
  if (m.is_infinite()) return from_rational(2);
  const unsigned v = m.value();
  if (v == 2) return zero();
  if (n_ % v == 0) return chebyshev(n_ / v);
  if (v == 3) return one();
  throw MismatchError("label " + std::to_string(v) +
                      " does not divide the field conductor N=" +
                      std::to_string(n_));
}

std::pair<Rational, Rational> CycloField::interval_eval(
    const Scalar::Coeffs& coeffs, const std::vector<Rational>& lo_pows,
    const std::vector<Rational>& hi_pows) {
  Rational lower = 0, upper = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c > 0) {
      lower += c * lo_pows[k];
      upper += c * hi_pows[k];
    } else if (c < 0) {
      lower += c * hi_pows[k];
      upper += c * lo_pows[k];
    }
  }
  return {lower, upper};
}

int CycloField::sign(const Scalar& a) const {
  if (a.is_zero()) return 0;
  if (degree() == 1) return a.coeffs_[0].sign();

  // theta >= sqrt(2) > 0 here, so powers are monotone on the interval.
  auto [lower, upper] = interval_eval(a.coeffs_, lo_pows_, hi_pows_);
  if (lower > 0) return 1;
  if (upper < 0) return -1;

  // Refine a local copy; terminates because a(theta) != 0.
  Rational lo = lo_, hi = hi_;
  const int s_lo = rational_sign(eval_psi(lo));
  std::vector<Rational> lp(degree(), Rational(1)), hp(degree(), Rational(1));
  for (;;) {
    const Rational mid = (lo + hi) / 2;
    if (rational_sign(eval_psi(mid)) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    for (std::size_t k = 1; k < degree(); ++k) {
      lp[k] = lp[k - 1] * lo;
      hp[k] = hp[k - 1] * hi;
    }
    std::tie(lower, upper) = interval_eval(a.coeffs_, lp, hp);
    if (lower > 0) return 1;
    if (upper < 0) return -1;
  }
}

}  // namespace coxfsa
