#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apedwards/rational.hpp"

namespace apedwards {

/// Affine point or the point at infinity O.
struct WPoint {
  bool infinity = false;
  Rat x;
  Rat y;

  static WPoint at_infinity() { return {true, Rat(0), Rat(0)}; }
  static WPoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
  bool is_integral() const { return infinity || (x.is_integer() && y.is_integer()); }

  friend bool operator==(const WPoint& a, const WPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// y^2 = x^3 + c2 x^2 + c4 x + c6 over Q with nonzero discriminant.
class WeierstrassCurve {
 public:
  WeierstrassCurve(Rat c2, Rat c4, Rat c6);

  /// y^2 = x^3 + A x + B.
  static WeierstrassCurve short_form(const Rat& a, const Rat& b) { return {Rat(0), a, b}; }
  /// y^2 = (x - e1)(x - e2)(x - e3); keeps the roots for 2-torsion work.
  static WeierstrassCurve from_roots(const Rat& e1, const Rat& e2, const Rat& e3);

  const Rat& c2() const { return c2_; }
  const Rat& c4() const { return c4_; }
  const Rat& c6() const { return c6_; }
  bool is_short() const { return c2_.is_zero(); }
  bool has_integer_coefficients() const;

  Rat discriminant() const;  // of the cubic
  Rat rhs(const Rat& x) const;
  bool contains(const WPoint& p) const;

  WPoint add(const WPoint& p, const WPoint& r) const;
  WPoint negate(const WPoint& p) const;
  WPoint multiply(const WPoint& p, long n) const;

  /// The three rational roots of the cubic when the 2-torsion is fully
  /// rational, absent otherwise.
  std::optional<std::array<Rat, 3>> two_torsion_roots() const;

  /// Depressed short form y^2 = x^3 + A x + B obtained by x -> x - c2/3.
  WeierstrassCurve depressed() const;

  std::string str() const;

 private:
  Rat c2_, c4_, c6_;
  std::optional<std::array<Rat, 3>> roots_;
};

/// (x, y) -> (u^2 (x + shift), u^3 y) carrying a curve onto an integral
/// short model.
struct ModelMap {
  Rat shift;
  Rat u;
  WPoint apply(const WPoint& p) const;
};

struct IntegralModel {
  WeierstrassCurve curve;
  ModelMap map;
};

/// Kills the quadratic term, then scales by the least positive integer u
/// making A and B integral.
IntegralModel integral_model(const WeierstrassCurve& c);

/// Positive rational u with A2 = u^4 A1 and B2 = u^6 B1 for short models.
std::optional<Rat> match_models(const WeierstrassCurve& c1, const WeierstrassCurve& c2);

enum class CertMethod { NagellLutz, MazurTwoTorsion, MazurOrderBound };
const char* cert_method_name(CertMethod m);

struct NagellLutzOutcome {
  bool decided = false;
  bool infinite_order = false;
  long n = 0;        // first multiple that is non-integral (or O for torsion)
  WPoint multiple;   // n Q' in the model used
};

struct MazurOutcome {
  bool applicable = false;  // requires full rational 2-torsion
  bool infinite_order = false;
  std::vector<WPoint> multiples;  // n Q for n = 1..4 (stops early on torsion)
};

/// Audit record for the infinite-order decision of a point.
struct RankCertificate {
  WeierstrassCurve curve;
  WPoint point;
  IntegralModel integral;
  /// Present when the Nagell-Lutz run used a caller-supplied model.
  std::optional<WeierstrassCurve> reference_model;
  std::optional<Rat> reference_u;
  WPoint model_point;  // image of point in the model used for Nagell-Lutz
  NagellLutzOutcome nagell_lutz;
  MazurOutcome mazur;
  CertMethod method = CertMethod::NagellLutz;
  bool infinite_order = false;
  bool verdicts_agree = true;
};

/// Decides whether q has infinite order. Nagell-Lutz runs on the integral
/// model (or on `reference` when given, which must be Q-isomorphic to the
/// integral model); the 2-torsion criterion runs independently when the
/// curve has full rational 2-torsion. Throws Error(Internal) if the two
/// verdicts disagree.
RankCertificate certify_infinite_order(const WeierstrassCurve& c, const WPoint& q,
                                       const std::optional<WeierstrassCurve>& reference = std::nullopt);

/// Integer roots of x^3 + a x + b (a, b integers), found by exact bisection
/// on the monotone pieces of the cubic.
std::vector<Int> integer_roots_depressed_cubic(const Int& a, const Int& b);

}  // namespace apedwards
