#include "apedwards/edwards.hpp"

#include "apedwards/error.hpp"

namespace apedwards {

namespace {

void check_parameter(const Rat& d) {
  if (d.is_zero() || d == Rat(1)) {
    throw Error(ErrorCode::DegenerateParameter, "Edwards parameter d must not be 0 or 1 (got " + d.str() + ")");
  }
}

}  // namespace

EdwardsCurve::EdwardsCurve(Rat d) : d_(std::move(d)) { check_parameter(d_); }

bool EdwardsCurve::contains(const Rat& x, const Rat& y) const {
  Rat x2 = x * x;
  Rat y2 = y * y;
  return x2 + y2 == Rat(1) + d_ * x2 * y2;
}

std::optional<Rat> EdwardsCurve::x_coordinate_member(const Rat& x) const {
  Rat x2 = x * x;
  Rat num = Rat(1) - x2;
  if (num.is_zero()) return Rat(0);
  Rat den = Rat(1) - d_ * x2;
  if (den.is_zero()) return std::nullopt;
  return is_square(num / den);
}

EdwardsPoint EdwardsCurve::add(const EdwardsPoint& p, const EdwardsPoint& q) const {
  Rat t = d_ * p.x * q.x * p.y * q.y;
  Rat dx = Rat(1) + t;
  Rat dy = Rat(1) - t;
  if (dx.is_zero() || dy.is_zero()) {
    throw Error(ErrorCode::ExceptionalPair, "exceptional pair for the Edwards addition law");
  }
  return {(p.x * q.y + q.x * p.y) / dx, (p.y * q.y - p.x * q.x) / dy};
}

Rat recover_d(const Rat& x, const Rat& y) {
  if (x.is_zero() || y.is_zero()) {
    throw Error(ErrorCode::TrivialPoint, "d cannot be recovered from a trivial point (x*y = 0)");
  }
  Rat x2 = x * x;
  Rat y2 = y * y;
  Rat d = (x2 + y2 - Rat(1)) / (x2 * y2);
  check_parameter(d);
  return d;
}

Rat d_n(const Rat& a, const Rat& q, long n, const Rat& w, const Rat& z) {
  Rat x = a + Rat(n) * q;
  if (x.is_zero()) throw Error(ErrorCode::TrivialPoint, "a + n q = 0");
  if (x == Rat(1) || x == Rat(-1)) throw Error(ErrorCode::DegenerateParameter, "a + n q = +-1 forces d = 1");
  if (z.is_zero()) throw Error(ErrorCode::InvalidArgument, "z = 0");
  if (w.is_zero()) throw Error(ErrorCode::TrivialPoint, "w = 0");
  if (w == z || w == -z) throw Error(ErrorCode::DegenerateParameter, "w = +-z forces d = 1");
  Rat x2 = x * x;
  Rat w2 = w * w;
  return (w2 + z * z * (x2 - Rat(1))) / (x2 * w2);
}

ProgressionCheck verify_progression(const Rat& d, const Rat& a, const Rat& q, long m) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "progression step q must be nonzero");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "progression length must be positive");
  EdwardsCurve curve(d);
  ProgressionCheck out;
  out.ok = true;
  out.witnesses.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    auto y = curve.x_coordinate_member(a + Rat(k) * q);
    if (!y) out.ok = false;
    out.witnesses.push_back(std::move(y));
  }
  return out;
}

}  // namespace apedwards
