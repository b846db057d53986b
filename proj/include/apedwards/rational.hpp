#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apedwards {

using Int = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(ZeroDenominator) when den == 0.
  Rat(const Int& num, const Int& den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  static Rat from_mpq(const mpq_class& q);
  /// Parses "p", "-p" or "p/q" (base 10). Throws Error(Parse).
  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat abs() const;
  Rat inverse() const;  // throws Error(DivisionByZero) for 0
  Rat pow(unsigned e) const;

  std::string str() const { return q_.get_str(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { Rat r; r.q_ = -q_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Reduced representative of num/den. Throws Error(ZeroDenominator).
Rat rat_reduce(const Int& num, const Int& den);

/// Non-negative integer square root if n is a perfect square.
std::optional<Int> int_sqrt_exact(const Int& n);

/// Non-negative rational square root of r, if r is the square of a rational.
std::optional<Rat> is_square(const Rat& r);

/// H(p/q) = max(|p|, q).
Int height(const Rat& r);

/// Scales a rational vector to a primitive integer vector (gcd 1) with the
/// same projective class. The sign of the input is preserved.
std::vector<Int> primitive_integer_vector(std::span<const Rat> coords);

/// Height of a projective point: max |X_i| of its primitive integer form.
Int projective_height(std::span<const Rat> coords);

/// Squarefree part of a nonzero integer, keeping the sign
/// (e.g. -24 -> -6, 50 -> 2).
Int squarefree_part(const Int& n);

/// Trial-division factorisation for the small integers that occur in
/// model coefficients. Cofactors above the trial bound are returned as a
/// single (assumed prime) entry.
std::vector<std::pair<Int, unsigned>> factor_small(Int n);

std::string to_string(const Int& n);

}  // namespace apedwards
