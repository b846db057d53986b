#pragma once

#include <optional>
#include <vector>

#include "apedwards/rational.hpp"

namespace apedwards {

struct EdwardsPoint {
  Rat x;
  Rat y;
  friend bool operator==(const EdwardsPoint&, const EdwardsPoint&) = default;
};

/// E_d : x^2 + y^2 = 1 + d x^2 y^2 over Q, d not in {0, 1}.
class EdwardsCurve {
 public:
  explicit EdwardsCurve(Rat d);

  const Rat& d() const { return d_; }

  bool contains(const Rat& x, const Rat& y) const;
  bool contains(const EdwardsPoint& p) const { return contains(p.x, p.y); }

  /// y >= 0 with (x, y) on the curve, if any.
  std::optional<Rat> x_coordinate_member(const Rat& x) const;

  /// Unified addition law with identity (0, 1). Throws
  /// Error(ExceptionalPair) when a denominator vanishes.
  EdwardsPoint add(const EdwardsPoint& p, const EdwardsPoint& q) const;
  EdwardsPoint negate(const EdwardsPoint& p) const { return {-p.x, p.y}; }
  static EdwardsPoint identity() { return {Rat(0), Rat(1)}; }

 private:
  Rat d_;
};

/// d(x, y) = (x^2 + y^2 - 1) / (x^2 y^2), the unique d with (x, y) on E_d.
Rat recover_d(const Rat& x, const Rat& y);

/// d_n = d(a + n q, w / z).
Rat d_n(const Rat& a, const Rat& q, long n, const Rat& w, const Rat& z);

struct ProgressionCheck {
  bool ok = false;
  /// One entry per term a + k q; absent where the term is not an x-coordinate.
  std::vector<std::optional<Rat>> witnesses;
};

/// Checks that a, a+q, ..., a+(m-1)q are all x-coordinates of rational
/// points on E_d.
ProgressionCheck verify_progression(const Rat& d, const Rat& a, const Rat& q, long m);

}  // namespace apedwards
