#include "apedwards/find.hpp"

#include <algorithm>
#include <numeric>

#include "apedwards/error.hpp"
#include "apedwards/models.hpp"

namespace apedwards {

namespace {

struct Target {
  Rat a, q;      // base point for the indices
  Rat start;     // first term of the verified progression
  long m = 0;
  std::vector<long> indices;
  bool explicit_indices = false;
};

ProgressionCheck check(const Target& tg, const Rat& d) {
  if (!tg.explicit_indices) return verify_progression(d, tg.start, tg.q, tg.m);
  EdwardsCurve c(d);
  ProgressionCheck out;
  out.ok = true;
  for (long k : tg.indices) {
    auto y = c.x_coordinate_member(tg.a + Rat(k) * tg.q);
    if (!y) out.ok = false;
    out.witnesses.push_back(std::move(y));
  }
  return out;
}

class Collector {
 public:
  Collector(const Target& tg, FindDResult& res, long samples) : tg_(tg), res_(res), samples_(samples) {}

  bool full() const { return static_cast<long>(res_.values.size()) >= samples_; }

  // Adds d when new and admissible.
  void offer(const std::optional<Rat>& d, FoundD f) {
    if (!d || full()) return;
    for (const auto& v : res_.values) {
      if (v.d == *d) return;
    }
    f.d = *d;
    f.check = check(tg_, *d);
    if (!f.check.ok) res_.all_verified = false;
    res_.values.push_back(std::move(f));
  }

 private:
  const Target& tg_;
  FindDResult& res_;
  long samples_;
};

std::optional<Rat> try_recover(const Rat& x, const Rat& y) {
  try {
    return recover_d(x, y);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TrivialPoint || e.code() == ErrorCode::DegenerateParameter) return std::nullopt;
    throw;
  }
}

// d from a point [X0 : X1 : X2 : ...] on C_S^{a,q}; every index must agree.
std::optional<Rat> d_from_point(const Target& tg, const std::vector<Rat>& pt) {
  if (pt[0].is_zero()) return std::nullopt;
  std::optional<Rat> d;
  for (std::size_t n = 0; n < tg.indices.size(); ++n) {
    const Rat& z = pt[n + 1];
    if (z.is_zero()) return std::nullopt;
    auto dn = try_recover(tg.a + Rat(tg.indices[n]) * tg.q, pt[0] / z);
    if (!dn) return std::nullopt;
    if (d && *d != *dn) throw Error(ErrorCode::Internal, "d_n disagree along a point of C_S");
    d = dn;
  }
  return d;
}

void sweep_conic(const Target& tg, Collector& col, long samples) {
  Rat a1 = s_coeff(tg.a, tg.q, tg.indices[0], tg.indices[1]);
  QuadricModel model = quadric_model(tg.a, tg.q, tg.indices);
  for (const Rat& t : rationals_by_height(static_cast<std::size_t>(samples) * 8 + 16)) {
    if (col.full()) return;
    auto xs = conic_parametrize(a1, t);
    std::vector<Rat> pt(xs.begin(), xs.end());
    if (!model.contains(std::span<const Rat>(pt))) throw Error(ErrorCode::Internal, "conic parametrization off the model");
    FoundD f;
    f.t = t;
    f.point = pt;
    col.offer(d_from_point(tg, pt), std::move(f));
  }
}

void sweep_elliptic(const Target& tg, Collector& col, long samples) {
  Rat a1 = s_coeff(tg.a, tg.q, tg.indices[0], tg.indices[1]);
  Rat aj = s_coeff(tg.a, tg.q, tg.indices[0], tg.indices[2]);
  MarkedCurve e = weierstrass_model(a1, aj);
  QuadricModel model = quadric_model(tg.a, tg.q, tg.indices);

  // s = 1/t puts the point t = 0, X = a1 (i.e. [1:1:1:1]) at infinity.
  auto quartic = quartic_model(a1, aj);
  Rat lead = a1 * a1;
  std::array<Rat, 5> rev{quartic[4] / lead, quartic[3] / lead, quartic[2] / lead, quartic[1] / lead, Rat(1)};
  QuarticCubicMap map(rev);

  WeierstrassCurve de = e.curve.depressed();
  WeierstrassCurve dc = map.cubic().depressed();
  auto u = match_models(de, dc);
  if (!u) throw Error(ErrorCode::Internal, "quartic cubic is not isomorphic to the Weierstrass model");
  Rat se = e.curve.c2() / Rat(3), sc = map.cubic().c2() / Rat(3);
  Rat u2 = *u * *u;
  auto to_c = [&](const WPoint& p) {
    if (p.infinity) return p;
    return WPoint::affine(u2 * (p.x + se) - sc, u2 * *u * p.y);
  };

  std::vector<WPoint> torsion{WPoint::at_infinity()};
  if (auto roots = e.curve.two_torsion_roots()) {
    for (const auto& r : *roots) torsion.push_back(WPoint::affine(r, Rat(0)));
  }

  WPoint nq = WPoint::at_infinity();
  long limit = std::max<long>(samples, 4) + 8;
  for (long n = 1; n <= limit && !col.full(); ++n) {
    nq = e.curve.add(nq, *e.point);
    if (nq.infinity) break;  // torsion: no further points
    for (const auto& tp : torsion) {
      for (const auto& p : {e.curve.add(nq, tp), e.curve.negate(e.curve.add(nq, tp))}) {
        auto st = map.to_quartic(to_c(p));
        if (!st || st->first.is_zero()) continue;
        Rat t = st->first.inverse();
        Rat X = a1 * st->second * t * t;
        auto xs = conic_parametrize(a1, t);
        std::vector<Rat> pt{xs[0], xs[1], xs[2], X};
        if (!model.contains(std::span<const Rat>(pt))) throw Error(ErrorCode::Internal, "mapped point off the model");
        FoundD f;
        f.t = t;
        f.multiple = n;
        f.point = pt;
        col.offer(d_from_point(tg, pt), std::move(f));
      }
    }
  }
}

}  // namespace

std::vector<Rat> rationals_by_height(std::size_t count) {
  std::vector<Rat> out;
  for (long h = 1; out.size() < count; ++h) {
    std::vector<Rat> level;
    for (long n = 0; n <= h; ++n) {
      for (long d = 1; d <= h; ++d) {
        if (std::max(n, d) != h || std::gcd(n, d) != 1) continue;
        level.emplace_back(n, d);
      }
    }
    std::sort(level.begin(), level.end());
    for (const auto& r : level) out.push_back(r);
    for (const auto& r : level) {
      if (!r.is_zero()) out.push_back(-r);
    }
  }
  out.resize(count);
  return out;
}

FindDResult find_d(const Rat& a, const Rat& q, long m, long samples, const std::optional<std::vector<long>>& indices) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  Target tg;
  FindDResult res;
  if (indices) {
    if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "q must be nonzero");
    tg.a = a;
    tg.q = q;
    tg.start = a;
    tg.indices = *indices;
    tg.explicit_indices = true;
    tg.m = indices->empty() ? 0 : *std::max_element(indices->begin(), indices->end()) + 1;
    res.object = describe_indices(a, q, *indices);
  } else {
    APSpec spec = classify(a, q, m);
    res.object = describe(spec);
    tg.a = spec.model_a();
    tg.q = spec.q;
    tg.start = spec.a;
    tg.m = spec.m;
    tg.indices = res.object.indices;
  }
  res.a = tg.start;
  res.q = tg.q;
  res.m = tg.m;
  res.indices = tg.indices;
  res.explicit_indices = tg.explicit_indices;

  Collector col(tg, res, samples);
  switch (res.object.type) {
    case ModuliType::AnyD:
      for (const Rat& d : rationals_by_height(static_cast<std::size_t>(samples) + 8)) {
        if (d.is_zero() || d == Rat(1)) continue;
        col.offer(d, FoundD{});
      }
      break;
    case ModuliType::SingleD: {
      Rat x = tg.a + Rat(tg.indices[0]) * tg.q;
      for (const Rat& y : rationals_by_height(static_cast<std::size_t>(samples) * 4 + 8)) {
        if (col.full()) break;
        FoundD f;
        f.point = {y, Rat(1)};
        col.offer(try_recover(x, y), std::move(f));
      }
      break;
    }
    case ModuliType::Conic:
      sweep_conic(tg, col, samples);
      break;
    case ModuliType::Elliptic:
      sweep_elliptic(tg, col, samples);
      break;
    case ModuliType::GenusFive:
    case ModuliType::HigherGenus:
      throw Error(ErrorCode::Unsupported, res.object.label + " has genus " + std::to_string(*res.object.genus) +
                                              ": finitely many points, use the search instead");
  }
  return res;
}

}  // namespace apedwards
