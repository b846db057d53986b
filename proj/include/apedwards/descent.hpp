#pragma once

#include <array>
#include <optional>
#include <string>

#include "apedwards/quadext.hpp"
#include "apedwards/rational.hpp"

namespace apedwards {

/// Monic t^2 + c1 t + c0.
struct MonicQuadratic {
  FieldElem c1;
  FieldElem c0;
  FieldElem eval(const Rat& t) const { return FieldElem(t * t) + c1 * FieldElem(t) + c0; }
  std::string str() const;
};

struct DescentRow {
  int k = 3;
  int l = 1;
  Rat d;  // d_{k,l}
  Rat e;  // e_{k,l}
  FieldElem alpha;  // sqrt(d_{k,l}), rational when d_{k,l} is a square
  MonicQuadratic p_plus;
  MonicQuadratic p_minus;
};

/// Row l of the descent table for b_k (k = 3 uses b3, k = 4 uses b4).
DescentRow descent_row(const Rat& b2, const Rat& b3, const Rat& b4, int k, int l);

/// delta z^2 = p_{3,l3,s3}(t) p_{4,l4,s4}(t) over L = Q(sqrt(D)).
struct HCurve {
  Rat delta;
  int s3 = 1;
  int s4 = 1;
  std::optional<Int> disc;            // absent when L = Q
  std::array<FieldElem, 5> coeffs{};  // c0..c4, c4 = 1

  FieldElem evaluate(const Rat& t) const;
  /// Whether t (absent = oo) lifts to a point (t, z) with z in L.
  bool has_point_at(const std::optional<Rat>& t) const;
};

/// Throws Error(FieldMismatch) when the two rows live in different fields.
HCurve h_curve(const DescentRow& row3, const DescentRow& row4, const Rat& delta, int s3, int s4);

/// The t in P^1(Q) over the trivial points [1:+-1:...:+-1]: 0, 1, b2, oo.
bool is_trivial_t(const std::optional<Rat>& t, const Rat& b2);

}  // namespace apedwards
