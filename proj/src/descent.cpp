#include "apedwards/descent.hpp"

#include "apedwards/error.hpp"

namespace apedwards {

std::string MonicQuadratic::str() const { return "t^2 + (" + c1.str() + ")*t + (" + c0.str() + ")"; }

DescentRow descent_row(const Rat& b2, const Rat& b3, const Rat& b4, int k, int l) {
  if (k != 3 && k != 4) throw Error(ErrorCode::InvalidArgument, "descent rows exist for k = 3, 4");
  if (l < 1 || l > 3) throw Error(ErrorCode::InvalidArgument, "descent rows exist for l = 1, 2, 3");
  const Rat& bk = k == 3 ? b3 : b4;
  const Rat one(1);
  DescentRow r;
  r.k = k;
  r.l = l;
  switch (l) {
    case 1:
      r.d = bk * (bk - one);
      r.e = bk * (one - b2);
      break;
    case 2:
      r.d = (bk - one) * (bk - b2);
      r.e = bk - b2;
      break;
    default:
      r.d = bk * (bk - b2);
      r.e = Rat(0);
  }
  r.alpha = FieldElem(QuadExtElem::make(Rat(0), Rat(1), r.d));
  for (int sign : {1, -1}) {
    FieldElem c = FieldElem(bk) + (sign > 0 ? r.alpha : -r.alpha);
    FieldElem c0;
    switch (l) {
      case 1: c0 = FieldElem(b2) * (FieldElem(-1) + FieldElem(2) * c); break;
      case 2: c0 = FieldElem(b2); break;
      default: c0 = FieldElem(-b2) + FieldElem(2) * c;
    }
    MonicQuadratic p{FieldElem(-2) * c, c0};
    (sign > 0 ? r.p_plus : r.p_minus) = p;
  }
  return r;
}

FieldElem HCurve::evaluate(const Rat& t) const {
  FieldElem acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * FieldElem(t) + coeffs[i];
  return acc;
}

bool HCurve::has_point_at(const std::optional<Rat>& t) const {
  FieldElem v = t ? evaluate(*t) : coeffs[4];
  if (v.is_zero()) return true;
  return (v / FieldElem(delta)).sqrt(disc).has_value();
}

HCurve h_curve(const DescentRow& row3, const DescentRow& row4, const Rat& delta, int s3, int s4) {
  if (delta.is_zero()) throw Error(ErrorCode::InvalidArgument, "delta must be nonzero");
  if (row3.k != 3 || row4.k != 4) throw Error(ErrorCode::InvalidArgument, "h_curve expects a k=3 row and a k=4 row");
  auto d3 = row3.alpha.disc();
  auto d4 = row4.alpha.disc();
  if (d3 && d4 && *d3 != *d4) {
    throw Error(ErrorCode::FieldMismatch, "L = Q(alpha_3, alpha_4) is not a quadratic field: Q(sqrt(" +
                                              to_string(*d3) + ")) != Q(sqrt(" + to_string(*d4) + "))");
  }
  HCurve h;
  h.delta = delta;
  h.s3 = s3 >= 0 ? 1 : -1;
  h.s4 = s4 >= 0 ? 1 : -1;
  h.disc = d3 ? d3 : d4;
  const MonicQuadratic& p = h.s3 > 0 ? row3.p_plus : row3.p_minus;
  const MonicQuadratic& r = h.s4 > 0 ? row4.p_plus : row4.p_minus;
  h.coeffs = {p.c0 * r.c0, p.c1 * r.c0 + p.c0 * r.c1, p.c0 + r.c0 + p.c1 * r.c1, p.c1 + r.c1, FieldElem(1)};
  return h;
}

bool is_trivial_t(const std::optional<Rat>& t, const Rat& b2) {
  return !t || t->is_zero() || *t == Rat(1) || *t == b2;
}

}  // namespace apedwards
