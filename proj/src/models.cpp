#include "apedwards/models.hpp"

#include "apedwards/error.hpp"

namespace apedwards {

namespace {

std::vector<Int> primitive_row(const std::vector<Rat>& coeffs) {
  std::vector<Int> row = primitive_integer_vector(coeffs);
  if (row[0] < 0) {
    for (auto& c : row) c = -c;
  }
  return row;
}

}  // namespace

bool QuadricModel::contains(std::span<const Int> point) const {
  if (point.size() != variables) return false;
  for (const auto& row : quadrics) {
    Int acc = 0;
    for (std::size_t i = 0; i < variables; ++i) acc += row[i] * point[i] * point[i];
    if (acc != 0) return false;
  }
  return true;
}

bool QuadricModel::contains(std::span<const Rat> point) const {
  if (point.size() != variables) return false;
  for (const auto& row : quadrics) {
    Rat acc = 0;
    for (std::size_t i = 0; i < variables; ++i) acc += Rat(row[i]) * point[i] * point[i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

QuadricModel quadric_model_from_coefficients(const std::vector<Rat>& a_j) {
  QuadricModel m;
  m.variables = a_j.size() + 2;
  for (std::size_t j = 0; j < a_j.size(); ++j) {
    const Rat& s = a_j[j];
    if (s.is_zero() || s == Rat(1)) {
      throw Error(ErrorCode::Degenerate, "degenerate quadric coefficient a_" + std::to_string(j + 1) + " = " + s.str());
    }
    std::vector<Rat> row(m.variables, Rat(0));
    row[0] = s;
    row[1] = Rat(1) - s;
    row[j + 2] = Rat(-1);
    m.quadrics.push_back(primitive_row(row));
  }
  return m;
}

QuadricModel quadric_model(const Rat& a, const Rat& q, const std::vector<long>& indices) {
  if (indices.size() < 2) throw Error(ErrorCode::InvalidArgument, "a quadric model needs at least two indices");
  std::vector<Rat> coeffs;
  for (std::size_t j = 1; j < indices.size(); ++j) coeffs.push_back(s_coeff(a, q, indices[0], indices[j]));
  QuadricModel m = quadric_model_from_coefficients(coeffs);
  m.indices = indices;
  m.a = a;
  m.q = q;
  return m;
}

QuadricModel quadric_model(const APSpec& spec, const std::vector<long>& S_star) {
  return quadric_model(spec.model_a(), spec.q, S_star);
}

QuadricModel d1234_model(ProgressionKind kind, const Rat& q) {
  if (kind == ProgressionKind::NonSymmetric) {
    throw Error(ErrorCode::InvalidArgument, "D_1234 search models are defined for symmetric progressions");
  }
  Rat a = kind == ProgressionKind::CentralSymmetric ? Rat(0) : -q / Rat(2);
  return quadric_model(a, q, {1, 2, 3, 4});
}

std::array<Rat, 3> conic_parametrize(const Rat& a1, const std::optional<Rat>& t) {
  if (!t) return {Rat(1), Rat(-1), Rat(1)};
  const Rat& u = *t;
  Rat u2 = u * u;
  std::array<Rat, 3> out{u2 - Rat(2) * u + a1, -u2 + a1, u2 - Rat(2) * a1 * u + a1};
  if (out[0].is_zero() && out[1].is_zero() && out[2].is_zero()) {
    throw Error(ErrorCode::Degenerate, "conic parametrization vanishes at t = " + u.str());
  }
  return out;
}

std::array<Rat, 5> quartic_model(const Rat& a1, const Rat& aj) {
  return {a1 * a1, Rat(-4) * a1 * aj, Rat(2) * (-a1 + Rat(2) * aj + Rat(2) * a1 * aj), Rat(-4) * aj, Rat(1)};
}

Rat eval_poly(std::span<const Rat> coeffs, const Rat& t) {
  Rat acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

MarkedCurve weierstrass_model(const Rat& a1, const Rat& aj) {
  WeierstrassCurve c = WeierstrassCurve::from_roots(Rat(0), aj - a1, aj * (Rat(1) - a1));
  return {c, WPoint::affine(aj, a1 * aj)};
}

MarkedCurve elliptic_model(const Rat& a, const Rat& q, long i, long j, long k) {
  return weierstrass_model(s_coeff(a, q, i, j), s_coeff(a, q, i, k));
}

std::array<Rat, 3> b_table_row(const Rat& a, const Rat& q, const std::array<long, 4>& ijkl, int N) {
  if (N < 1 || N > 16) throw Error(ErrorCode::InvalidArgument, "model index N must be in 1..16");
  auto others = [&](long x, long y) {
    std::array<long, 2> o{};
    std::size_t n = 0;
    for (long z : ijkl) {
      if (z != x && z != y) o[n++] = z;
    }
    return o;
  };
  if (N <= 4) {
    long x = ijkl[N - 1];
    std::array<Rat, 3> out;
    std::size_t n = 0;
    for (long z : ijkl) {
      if (z != x) out[n++] = s_coeff(a, q, x, z);
    }
    return out;
  }
  int pair = N - 5;  // ordered pairs (x, y), x major, in ijkl order
  long x = ijkl[pair / 3];
  std::array<long, 3> ys{};
  std::size_t n = 0;
  for (long z : ijkl) {
    if (z != x) ys[n++] = z;
  }
  long y = ys[pair % 3];
  auto o = others(x, y);
  return {r_coeff(a, q, x, y), t_coeff(a, q, x, y, o[0]), t_coeff(a, q, x, y, o[1])};
}

std::vector<GenusFiveModel> genus5_models(const Rat& a, const Rat& q, const std::array<long, 4>& ijkl) {
  std::vector<GenusFiveModel> out;
  out.reserve(48);
  for (int N = 1; N <= 16; ++N) {
    std::optional<std::array<Rat, 3>> row;
    std::string reason;
    try {
      row = b_table_row(a, q, ijkl, N);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Pole) throw;
      reason = e.what();
    }
    for (int slot = 0; slot < 3; ++slot) {
      GenusFiveModel m;
      m.source = ijkl;
      m.N = N;
      m.slot = slot;
      if (row) {
        m.available = true;
        m.b2 = (*row)[slot];
        m.b3 = (*row)[slot == 0 ? 1 : 0];
        m.b4 = (*row)[slot == 2 ? 1 : 2];
      } else {
        m.unavailable_reason = reason;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

QuadricModel genus5_quadrics(const Rat& b2, const Rat& b3, const Rat& b4) {
  return quadric_model_from_coefficients({b2, b3, b4});
}

std::array<MarkedCurve, 5> quotient_curves(const Rat& b2, const Rat& b3, const Rat& b4) {
  const Rat one(1);
  auto from = [](const Rat& e2, const Rat& e3, WPoint q) {
    // y^2 = x (x + e2)(x + e3)
    return MarkedCurve{WeierstrassCurve::from_roots(Rat(0), -e2, -e3), std::move(q)};
  };
  return {
      from((b2 - one) * (b3 - b4), (b4 - one) * (b3 - b2),
           WPoint::affine((b4 - one) * (b2 - one), (b2 - one) * (b3 - one) * (b4 - one))),
      from(b2 * (b3 - b4), b4 * (b3 - b2), WPoint::affine(b2 * b4, b2 * b3 * b4)),
      from(b3 - b4, b4 * (b3 - one), WPoint::affine(b4, b3 * b4)),
      from(b2 - b4, b4 * (b2 - one), WPoint::affine(b4, b2 * b4)),
      from(b2 - b3, b3 * (b2 - one), WPoint::affine(b3, b2 * b3)),
  };
}

QuarticCubicMap::QuarticCubicMap(const std::array<Rat, 5>& quartic)
    : quartic_(quartic),
      alpha_(quartic[3] / Rat(2)),
      beta_((quartic[2] - alpha_ * alpha_) / Rat(2)),
      gamma_(quartic[1] - Rat(2) * alpha_ * beta_),
      delta_(quartic[0] - beta_ * beta_),
      cubic_(alpha_ * alpha_ - Rat(4) * beta_, Rat(2) * alpha_ * gamma_ - Rat(4) * delta_, gamma_ * gamma_) {
  if (quartic[4] != Rat(1)) throw Error(ErrorCode::InvalidArgument, "quartic must be monic");
}

std::optional<std::pair<Rat, Rat>> QuarticCubicMap::to_quartic(const WPoint& p) const {
  if (p.infinity || p.x.is_zero()) return std::nullopt;
  Rat t = (-(alpha_ * p.x + gamma_) + p.y) / (Rat(2) * p.x);
  Rat g = t * t + alpha_ * t + beta_;
  return std::pair<Rat, Rat>{t, p.x / Rat(2) - g};
}

WPoint QuarticCubicMap::to_cubic(const Rat& t, const Rat& X) const {
  Rat g = t * t + alpha_ * t + beta_;
  Rat x = Rat(2) * (X + g);
  if (x.is_zero()) throw Error(ErrorCode::Degenerate, "point lies over x = 0 of the cubic");
  return WPoint::affine(x, Rat(2) * x * t + alpha_ * x + gamma_);
}

}  // namespace apedwards
