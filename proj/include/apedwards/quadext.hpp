#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "apedwards/rational.hpp"

namespace apedwards {

/// Element base + coef * sqrt(disc) of the quadratic field Q(sqrt(disc)).
/// disc is a squarefree integer different from 0 and 1; elements only
/// combine with elements of the same field.
class QuadExtElem {
 public:
  /// Builds base + coef*sqrt(d) for an arbitrary rational d. Square factors
  /// are pulled out of d into the coefficient. When d is the square of a
  /// rational the result is the plain rational it denotes.
  static std::variant<Rat, QuadExtElem> make(const Rat& base, const Rat& coef, const Rat& d);

  /// Element of Q(sqrt(disc)); disc must already be squarefree and not 0/1.
  QuadExtElem(Rat base, Rat coef, Int disc);

  /// Parses "a+b*sqrt(D)" (as produced by str()).
  static QuadExtElem parse(std::string_view text);

  const Rat& base() const { return base_; }
  const Rat& coef() const { return coef_; }
  const Int& disc() const { return disc_; }

  bool is_zero() const { return base_.is_zero() && coef_.is_zero(); }
  bool is_rational() const { return coef_.is_zero(); }

  /// base^2 - disc * coef^2.
  Rat norm() const;
  QuadExtElem conjugate() const { return {base_, -coef_, disc_}; }
  QuadExtElem inverse() const;

  /// Square root inside the same field, when one exists.
  std::optional<QuadExtElem> sqrt() const;

  std::string str() const;

  QuadExtElem& operator+=(const QuadExtElem& o);
  QuadExtElem& operator-=(const QuadExtElem& o);
  QuadExtElem& operator*=(const QuadExtElem& o);
  QuadExtElem& operator/=(const QuadExtElem& o);

  friend QuadExtElem operator+(QuadExtElem a, const QuadExtElem& b) { return a += b; }
  friend QuadExtElem operator-(QuadExtElem a, const QuadExtElem& b) { return a -= b; }
  friend QuadExtElem operator*(QuadExtElem a, const QuadExtElem& b) { return a *= b; }
  friend QuadExtElem operator/(QuadExtElem a, const QuadExtElem& b) { return a /= b; }
  QuadExtElem operator-() const { return {-base_, -coef_, disc_}; }

  friend bool operator==(const QuadExtElem&, const QuadExtElem&) = default;

 private:
  void check_field(const QuadExtElem& o) const;

  Rat base_;
  Rat coef_;
  Int disc_;
};

/// A number that is either rational or lies in one quadratic field.
/// Arithmetic lifts rationals into the field of the other operand.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Rat r) : v_(std::move(r)) {}          // NOLINT(google-explicit-constructor)
  FieldElem(long r) : v_(Rat(r)) {}               // NOLINT(google-explicit-constructor)
  FieldElem(QuadExtElem q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  FieldElem(std::variant<Rat, QuadExtElem> v) : v_(std::move(v)) {}  // NOLINT

  bool is_rational() const;
  /// The rational value, if the element is rational (including b = 0).
  std::optional<Rat> as_rational() const;
  /// Discriminant of the field the element lives in (absent for Q).
  std::optional<Int> disc() const;
  const std::variant<Rat, QuadExtElem>& value() const { return v_; }

  bool is_zero() const;
  /// Square root in Q, or in Q(sqrt(field_disc)) when a field is given.
  std::optional<FieldElem> sqrt(const std::optional<Int>& field_disc = std::nullopt) const;

  std::string str() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  /// Numeric equality; a rational equals a field element with zero coef.
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  std::variant<Rat, QuadExtElem> v_;
};

/// Parses either a rational "p/q" or "a+b*sqrt(D)".
FieldElem parse_field_elem(std::string_view text);

}  // namespace apedwards
