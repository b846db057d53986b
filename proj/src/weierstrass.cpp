#include "apedwards/weierstrass.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "apedwards/error.hpp"

namespace apedwards {

namespace {

constexpr long kMazurTorsionBound = 12;

std::string signed_term(const Rat& c, const std::string& var) {
  if (c.is_zero()) return "";
  std::string out = c.sign() < 0 ? " - " : " + ";
  Rat a = c.abs();
  if (var.empty()) return out + a.str();
  if (a != Rat(1)) out += a.str();
  return out + var;
}

Int ceil_div(unsigned a, unsigned b) { return Int((a + b - 1) / b); }

}  // namespace

WeierstrassCurve::WeierstrassCurve(Rat c2, Rat c4, Rat c6)
    : c2_(std::move(c2)), c4_(std::move(c4)), c6_(std::move(c6)) {
  if (discriminant().is_zero()) {
    throw Error(ErrorCode::Degenerate, "singular Weierstrass cubic: " + str());
  }
}

WeierstrassCurve WeierstrassCurve::from_roots(const Rat& e1, const Rat& e2, const Rat& e3) {
  if (e1 == e2 || e1 == e3 || e2 == e3) {
    throw Error(ErrorCode::Degenerate, "repeated root in factored Weierstrass model");
  }
  WeierstrassCurve c(-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -(e1 * e2 * e3));
  c.roots_ = std::array<Rat, 3>{e1, e2, e3};
  return c;
}

bool WeierstrassCurve::has_integer_coefficients() const {
  return c2_.is_integer() && c4_.is_integer() && c6_.is_integer();
}

Rat WeierstrassCurve::discriminant() const {
  const Rat& b = c2_;
  const Rat& c = c4_;
  const Rat& d = c6_;
  return b * b * c * c - Rat(4) * c * c * c - Rat(4) * b * b * b * d - Rat(27) * d * d + Rat(18) * b * c * d;
}

Rat WeierstrassCurve::rhs(const Rat& x) const { return ((x + c2_) * x + c4_) * x + c6_; }

bool WeierstrassCurve::contains(const WPoint& p) const {
  if (p.infinity) return true;
  return p.y * p.y == rhs(p.x);
}

WPoint WeierstrassCurve::negate(const WPoint& p) const {
  if (p.infinity) return p;
  return WPoint::affine(p.x, -p.y);
}

WPoint WeierstrassCurve::add(const WPoint& p, const WPoint& r) const {
  if (p.infinity) return r;
  if (r.infinity) return p;
  Rat lambda;
  if (p.x == r.x) {
    if ((p.y + r.y).is_zero()) return WPoint::at_infinity();
    lambda = (Rat(3) * p.x * p.x + Rat(2) * c2_ * p.x + c4_) / (Rat(2) * p.y);
  } else {
    lambda = (r.y - p.y) / (r.x - p.x);
  }
  Rat x3 = lambda * lambda - c2_ - p.x - r.x;
  Rat y3 = -(p.y + lambda * (x3 - p.x));
  return WPoint::affine(std::move(x3), std::move(y3));
}

WPoint WeierstrassCurve::multiply(const WPoint& p, long n) const {
  WPoint base = n < 0 ? negate(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  WPoint acc = WPoint::at_infinity();
  while (k > 0) {
    if (k & 1UL) acc = add(acc, base);
    k >>= 1;
    if (k > 0) base = add(base, base);
  }
  return acc;
}

WeierstrassCurve WeierstrassCurve::depressed() const {
  Rat s = c2_ / Rat(3);
  Rat a = c4_ - c2_ * c2_ / Rat(3);
  Rat b = c6_ - c2_ * c4_ / Rat(3) + Rat(2) * c2_ * c2_ * c2_ / Rat(27);
  WeierstrassCurve out = short_form(a, b);
  if (roots_) out.roots_ = std::array<Rat, 3>{(*roots_)[0] + s, (*roots_)[1] + s, (*roots_)[2] + s};
  return out;
}

std::optional<std::array<Rat, 3>> WeierstrassCurve::two_torsion_roots() const {
  if (roots_) return roots_;
  IntegralModel im = integral_model(*this);
  auto roots = integer_roots_depressed_cubic(im.curve.c4().num(), im.curve.c6().num());
  if (roots.size() != 3) return std::nullopt;
  std::array<Rat, 3> out;
  Rat u2 = im.map.u * im.map.u;
  for (std::size_t i = 0; i < 3; ++i) out[i] = Rat(roots[i]) / u2 - im.map.shift;
  return out;
}

std::string WeierstrassCurve::str() const {
  return "y^2 = x^3" + signed_term(c2_, "x^2") + signed_term(c4_, "x") + signed_term(c6_, "");
}

WPoint ModelMap::apply(const WPoint& p) const {
  if (p.infinity) return p;
  Rat u2 = u * u;
  return WPoint::affine(u2 * (p.x + shift), u2 * u * p.y);
}

IntegralModel integral_model(const WeierstrassCurve& c) {
  WeierstrassCurve d = c.depressed();
  std::map<Int, unsigned> need;  // prime -> exponent of u
  auto require = [&](const Int& den, unsigned power) {
    for (const auto& [p, e] : factor_small(den)) {
      unsigned k = static_cast<unsigned>(ceil_div(e, power).get_ui());
      need[p] = std::max(need[p], k);
    }
  };
  require(d.c4().den(), 4);
  require(d.c6().den(), 6);
  Int u = 1;
  for (const auto& [p, k] : need) {
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    u *= pk;
  }
  Rat ur(u);
  Rat u2 = ur * ur;
  WeierstrassCurve out = WeierstrassCurve::short_form(d.c4() * u2 * u2, d.c6() * u2 * u2 * u2);
  return IntegralModel{out, ModelMap{c.c2() / Rat(3), ur}};
}

std::optional<Rat> match_models(const WeierstrassCurve& c1, const WeierstrassCurve& c2) {
  if (!c1.is_short() || !c2.is_short()) {
    throw Error(ErrorCode::InvalidArgument, "match_models expects short Weierstrass models");
  }
  const Rat &a1 = c1.c4(), &b1 = c1.c6(), &a2 = c2.c4(), &b2 = c2.c6();
  if (a1.is_zero() != a2.is_zero() || b1.is_zero() != b2.is_zero()) return std::nullopt;
  std::optional<Rat> u2;
  if (!a1.is_zero() && !b1.is_zero()) {
    u2 = (b2 / b1) / (a2 / a1);
    if (*u2 * *u2 != a2 / a1) return std::nullopt;
  } else if (!a1.is_zero()) {
    u2 = is_square(a2 / a1);  // u^4 = a2/a1
  } else {
    // u^6 = b2/b1: u^2 is the rational cube root.
    Rat r = b2 / b1;
    Int n, d;
    if (mpz_root(n.get_mpz_t(), r.num().get_mpz_t(), 3) == 0 ||
        mpz_root(d.get_mpz_t(), r.den().get_mpz_t(), 3) == 0) {
      return std::nullopt;
    }
    u2 = Rat(n, d);
  }
  if (!u2 || u2->sign() <= 0) return std::nullopt;
  return is_square(*u2);
}

const char* cert_method_name(CertMethod m) {
  switch (m) {
    case CertMethod::NagellLutz: return "nagell-lutz";
    case CertMethod::MazurTwoTorsion: return "mazur-two-torsion";
    case CertMethod::MazurOrderBound: return "mazur-order-bound";
  }
  return "unknown";
}

RankCertificate certify_infinite_order(const WeierstrassCurve& c, const WPoint& q,
                                       const std::optional<WeierstrassCurve>& reference) {
  if (q.infinity) throw Error(ErrorCode::InvalidArgument, "the identity has finite order");
  if (!c.contains(q)) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");

  RankCertificate cert{c, q, integral_model(c), std::nullopt, std::nullopt, WPoint{}, {}, {}, {}, false, true};
  const WeierstrassCurve* model = &cert.integral.curve;
  cert.model_point = cert.integral.map.apply(q);
  if (reference) {
    if (!reference->is_short() || !reference->has_integer_coefficients()) {
      throw Error(ErrorCode::InvalidArgument, "reference model must be short with integer coefficients");
    }
    auto u = match_models(cert.integral.curve, *reference);
    if (!u) throw Error(ErrorCode::InvalidArgument, "reference model is not isomorphic to the integral model");
    cert.reference_model = *reference;
    cert.reference_u = *u;
    cert.model_point = ModelMap{Rat(0), *u}.apply(cert.model_point);
    model = &*cert.reference_model;
  }

  // Nagell-Lutz: torsion points of an integral model have integral coordinates.
  bool reached_identity = false;
  WPoint r = cert.model_point;
  for (long n = 1; n <= kMazurTorsionBound; ++n) {
    if (r.infinity) {
      cert.nagell_lutz = {true, false, n, r};
      reached_identity = true;
      break;
    }
    if (!r.is_integral()) {
      cert.nagell_lutz = {true, true, n, r};
      break;
    }
    r = model->add(r, cert.model_point);
  }

  if (auto roots = c.two_torsion_roots()) {
    cert.mazur.applicable = true;
    cert.mazur.infinite_order = true;
    WPoint m = q;
    for (long n = 1; n <= 4; ++n) {
      cert.mazur.multiples.push_back(m);
      if (m.infinity || m.y.is_zero()) {
        cert.mazur.infinite_order = false;
        break;
      }
      m = c.add(m, q);
    }
  }

  if (cert.nagell_lutz.decided) {
    cert.method = CertMethod::NagellLutz;
    cert.infinite_order = cert.nagell_lutz.infinite_order;
  } else if (cert.mazur.applicable) {
    cert.method = CertMethod::MazurTwoTorsion;
    cert.infinite_order = cert.mazur.infinite_order;
  } else {
    // No multiple up to the torsion bound is O.
    cert.method = CertMethod::MazurOrderBound;
    cert.infinite_order = !reached_identity;
  }
  if (cert.mazur.applicable) {
    cert.verdicts_agree = cert.mazur.infinite_order == cert.infinite_order;
    if (!cert.verdicts_agree) {
      throw Error(ErrorCode::Internal, "Nagell-Lutz and 2-torsion verdicts disagree on " + c.str());
    }
  }
  return cert;
}

namespace {

Int eval_cubic(const Int& x, const Int& a, const Int& b) { return (x * x + a) * x + b; }

// Integer root of an increasing (sign = +1) or decreasing (sign = -1)
// cubic restricted to [lo, hi].
std::optional<Int> monotone_root(Int lo, Int hi, const Int& a, const Int& b, int sign) {
  if (lo > hi) return std::nullopt;
  auto f = [&](const Int& x) -> Int { return sign * eval_cubic(x, a, b); };
  if (f(lo) > 0 || f(hi) < 0) return std::nullopt;
  while (lo < hi) {
    Int mid = lo + (hi - lo) / 2;
    if (f(mid) < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (f(lo) == 0) return lo;
  return std::nullopt;
}

}  // namespace

std::vector<Int> integer_roots_depressed_cubic(const Int& a, const Int& b) {
  Int bound = 1 + (abs(a) > abs(b) ? Int(abs(a)) : Int(abs(b)));
  std::vector<Int> roots;
  auto push = [&](std::optional<Int> r) {
    if (r && std::find(roots.begin(), roots.end(), *r) == roots.end()) roots.push_back(*r);
  };
  if (a >= 0) {
    push(monotone_root(-bound, bound, a, b, 1));
  } else {
    // Critical points at +-sqrt(-a/3); k = floor(sqrt(-a/3)).
    Int k;
    Int third = (-a) / 3;
    mpz_sqrt(k.get_mpz_t(), third.get_mpz_t());
    push(monotone_root(-bound, -(k + 1), a, b, 1));
    push(monotone_root(-k, k, a, b, -1));
    push(monotone_root(k + 1, bound, a, b, 1));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace apedwards
