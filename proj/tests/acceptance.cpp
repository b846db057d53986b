// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance               all criteria
//   acceptance --criterion N only criterion N (exit status 1 on FAIL)

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "apedwards/edwards.hpp"
#include "apedwards/error.hpp"
#include "apedwards/find.hpp"
#include "apedwards/harness.hpp"
#include "apedwards/models.hpp"
#include "apedwards/search.hpp"

using namespace apedwards;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixture_path() {
  if (const char* e = std::getenv("APE_FIXTURE")) return e;
  return APEDWARDS_FIXTURE;
}

VerificationReport run_group(const std::string& group) {
  VerifyOptions vo;
  vo.groups = {group};
  return verify_tables(load_fixture(fixture_path()), vo);
}

std::string failures(const VerificationReport& rep) {
  std::string s;
  for (const auto& c : rep.checks) {
    if (c.status == CheckStatus::Reproduced) continue;
    s += "; " + c.id + " " + check_status_name(c.status) + " (expected " + c.expected + ", got " + c.got + ")";
  }
  return s;
}

Verdict group_verdict(const std::string& group, std::size_t expected, double limit) {
  auto t0 = Clock::now();
  VerificationReport rep = run_group(group);
  double dt = seconds_since(t0);
  std::size_t ok = rep.count(CheckStatus::Reproduced);
  std::ostringstream os;
  os << ok << "/" << expected << " reproduced in " << dt << " s (limit " << limit << " s)" << failures(rep);
  return {ok == expected && rep.checks.size() == expected && dt < limit, os.str()};
}

Verdict criterion1() {
  Verdict v = group_verdict("b-tuples", 13, 1.0);
  VerificationReport rep = run_group("b-tuples");
  std::size_t relabel = 0;
  for (const auto& c : rep.checks) {
    if (c.note.find("printed N=") != std::string::npos) ++relabel;
  }
  v.detail += "; " + std::to_string(relabel) + " tuples sit at a different b-table row than printed";
  return v;
}

Verdict criterion2() { return group_verdict("integral-models", 11, 10.0); }

Verdict criterion3() {
  MarkedCurve e = elliptic_model(Rat(1), Rat(2, 3), 1, 2, 4);
  WeierstrassCurve ref = WeierstrassCurve::short_form(Rat(-107828175), Rat(Int("-169430080750")));
  RankCertificate cert = certify_infinite_order(e.curve, *e.point, ref);
  WPoint two = ref.multiply(cert.model_point, 2);
  bool ok = *e.point == WPoint::affine(Rat(54, 175), Rat(1458, 21875)) &&
            cert.model_point == WPoint::affine(Rat(16765), Rat(1653750)) && !two.infinity && two.x == Rat(143119, 9);
  Verdict fixture = group_verdict("anchor", 1, 10.0);
  return {ok && fixture.pass, "Q' = (" + cert.model_point.x.str() + ", " + cert.model_point.y.str() +
                                  "), x(2Q') = " + two.x.str() + "; fixture: " + fixture.detail};
}

Verdict criterion4() { return group_verdict("descent", 5, 10.0); }

Verdict criterion5() {
  std::uint64_t total = count_positive_q(100);
  std::uint64_t c = total - excluded_q(ProgressionKind::CentralSymmetric).size();
  std::uint64_t nc = total - excluded_q(ProgressionKind::NonCentralSymmetric).size();
  std::ostringstream os;
  os << "H(q) <= 100: " << total << " positive q; minus the 4 exclusions: " << c << " (central), " << nc
     << " (non-central); required 6087";
  return {c == 6087 && nc == 6087, os.str()};
}

Verdict criterion6() {
  std::vector<Rat> base{Rat(1), Rat(2)};
  std::mt19937_64 rng(20261015);
  std::ostringstream os;
  bool pass = true;
  double worst = 0;
  for (auto kind : {ProgressionKind::CentralSymmetric, ProgressionKind::NonCentralSymmetric}) {
    std::vector<Rat> pool;
    auto ex = excluded_q(kind);
    for (const auto& q : positive_q_of_height(10)) {
      if (std::find(ex.begin(), ex.end(), q) == ex.end() && std::find(base.begin(), base.end(), q) == base.end()) {
        pool.push_back(q);
      }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rat> qs = base;
    qs.insert(qs.end(), pool.begin(), pool.begin() + 5);
    os << (kind == ProgressionKind::CentralSymmetric ? "central" : "; non-central") << ":";
    for (const auto& q : qs) {
      SearchOptions so;
      so.bound = 1000;
      try {
        SearchResult r = enumerate(d1234_model(kind, q), so);
        worst = std::max(worst, r.stats.seconds);
        bool ok = r.exhaustive && r.points.size() == 16 && r.trivial_count == 16;
        pass = pass && ok && r.stats.seconds < 120;
        os << " q=" << q << " " << r.points.size() << "/" << r.trivial_count << (ok ? "" : " FAIL");
      } catch (const Error& e) {
        pass = false;
        os << " q=" << q << " FAIL (" << error_code_name(e.code()) << ": " << e.what() << ")";
      }
    }
  }
  os << "; slowest model " << worst << " s";
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  unsigned w = std::min(8U, hw);
  if (w > 1) {
    SearchOptions s1, sw;
    s1.bound = sw.bound = 1000;
    sw.workers = w;
    QuadricModel m = d1234_model(ProgressionKind::CentralSymmetric, Rat(3, 2));
    double t1 = enumerate(m, s1).stats.seconds, tw = enumerate(m, sw).stats.seconds;
    double speedup = t1 / tw;
    bool fast = speedup >= 0.7 * w;
    pass = pass && fast;
    os << "; speedup " << speedup << "x on " << w << " workers" << (fast ? "" : " (below 0.7 per worker)");
  } else {
    os << "; speedup not measurable on " << hw << " hardware thread";
  }
  return {pass, os.str()};
}

Verdict criterion7() {
  std::mt19937_64 rng(7);
  const long bound = 40;
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<unsigned> shard_pick(1, 9);
  int recovered = 0, total = 0;
  std::string missed;
  while (total < 100) {
    std::vector<Int> p(5);
    Int g = 0;
    for (auto& c : p) {
      c = coord(rng);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1 || p[0] == 0 || p[1] == 0) continue;
    ++total;
    QuadricModel m = planted_model(p, rng());
    SearchOptions so;
    so.bound = bound;
    so.shards = shard_pick(rng);
    so.workers = 1 + total % 3;
    SearchResult r = enumerate(m, so);
    std::vector<Int> want = p;
    for (const auto& c : want) {
      if (c == 0) continue;
      if (c < 0) {
        for (auto& x : want) x = -x;
      }
      break;
    }
    if (std::binary_search(r.points.begin(), r.points.end(), want) && m.contains(std::span<const Int>(p))) {
      ++recovered;
    } else if (missed.size() < 200) {
      missed += " [" + to_string(p[0]) + ":" + to_string(p[1]) + ":...]";
    }
  }
  return {recovered == total, std::to_string(recovered) + "/" + std::to_string(total) + " planted points recovered" +
                                  (missed.empty() ? "" : "; missed" + missed)};
}

Verdict criterion8() {
  struct Case {
    Rat a, q;
    long m, samples;
  };
  std::vector<Case> cases{
      {Rat(1), Rat(1, 7), 3, 15},      {Rat(6, 7), Rat(1, 7), 4, 15},   {Rat(5, 7), Rat(1, 7), 3, 15},
      {Rat(0), Rat(1, 3), 5, 15},      {Rat(1, 3), Rat(1, 7), 3, 10},   {Rat(1), Rat(1, 7), 4, 10},
      {Rat(0), Rat(1, 4), 7, 10},      {Rat(-1, 7), Rat(2, 7), 8, 10},
  };
  int checked = 0, ok = 0, conic = 0, elliptic = 0;
  std::string bad;
  for (const auto& c : cases) {
    FindDResult r = find_d(c.a, c.q, c.m, c.samples);
    for (const auto& f : r.values) {
      ++checked;
      if (r.object.type == ModuliType::Conic) ++conic;
      if (r.object.type == ModuliType::Elliptic) ++elliptic;
      if (verify_progression(f.d, r.a, r.q, r.m).ok) {
        ++ok;
      } else {
        bad += " " + r.object.label;
      }
    }
  }
  std::ostringstream os;
  os << ok << "/" << checked << " d values pass verify_progression (" << conic << " conic, " << elliptic
     << " elliptic)" << bad;
  return {checked >= 100 && ok == checked, os.str()};
}

Rat random_rat(std::mt19937_64& rng, long h) {
  std::uniform_int_distribution<long> n(-h, h), d(1, h);
  return Rat(n(rng), d(rng));
}

// Coefficient list of a polynomial product.
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Verdict criterion9() {
  std::ostringstream os;
  bool pass = genus(2) == 0 && genus(3) == 1 && genus(4) == 5;
  os << "genus 2,3,4 -> " << genus(2) << "," << genus(3) << "," << genus(4);

  std::mt19937_64 rng(9);
  int ids = 0;
  while (ids < 50) {
    Rat a1 = random_rat(rng, 30), aj = random_rat(rng, 30);
    if (a1.is_zero() || aj.is_zero() || a1 == Rat(1) || aj == Rat(1)) continue;
    std::vector<Rat> x0{a1, Rat(-2), Rat(1)}, x1{a1, Rat(0), Rat(-1)}, x2{a1, Rat(-2) * a1, Rat(1)};
    auto x0s = mul(x0, x0), x1s = mul(x1, x1), x2s = mul(x2, x2);
    auto q = quartic_model(a1, aj);
    bool ok = true;
    for (std::size_t i = 0; i < 5; ++i) {
      ok = ok && x2s[i] == a1 * x0s[i] + (Rat(1) - a1) * x1s[i];
      ok = ok && q[i] == aj * x0s[i] + (Rat(1) - aj) * x1s[i];
    }
    auto t = random_rat(rng, 50);
    auto pt = conic_parametrize(a1, t);
    ok = ok && pt[0] == eval_poly(x0, t) && pt[1] == eval_poly(x1, t) && pt[2] == eval_poly(x2, t);
    pass = pass && ok;
    ++ids;
  }
  os << "; quartic and conic identities on " << ids << " random (a1, aj)";

  int quot = 0, on = 0;
  while (quot < 50) {
    Rat b2 = random_rat(rng, 40), b3 = random_rat(rng, 40), b4 = random_rat(rng, 40);
    std::optional<std::array<MarkedCurve, 5>> cs;
    try {
      cs = quotient_curves(b2, b3, b4);
    } catch (const Error&) {
      continue;  // a singular quotient: b's coincide or hit 0, 1
    }
    ++quot;
    bool all = true;
    for (const auto& c : *cs) all = all && c.point && c.curve.contains(*c.point);
    on += all;
  }
  pass = pass && on == quot;
  os << "; Q0..Q4 on E_(0)..E_(4) for " << on << "/" << quot << " random b";

  int triples = 0, laws = 0;
  std::uniform_int_distribution<int> mult(1, 5), tors(0, 3);
  const std::array<EdwardsPoint, 4> torsion{EdwardsPoint{Rat(0), Rat(1)}, EdwardsPoint{Rat(0), Rat(-1)},
                                            EdwardsPoint{Rat(1), Rat(0)}, EdwardsPoint{Rat(-1), Rat(0)}};
  while (triples < 1000) {
    Rat x = random_rat(rng, 20), y = random_rat(rng, 20);
    if (x.is_zero() || y.is_zero()) continue;
    Rat d;
    try {
      d = recover_d(x, y);
    } catch (const Error&) {
      continue;
    }
    if (d.is_zero() || d == Rat(1) || is_square(d)) continue;
    EdwardsCurve c(d);
    EdwardsPoint g{x, y};
    auto multiple = [&](int n) {
      EdwardsPoint p = EdwardsCurve::identity();
      for (int i = 0; i < n; ++i) p = c.add(p, g);
      return p;
    };
    EdwardsPoint P = c.add(multiple(mult(rng)), torsion[tors(rng)]);
    EdwardsPoint Q = c.add(multiple(mult(rng)), torsion[tors(rng)]);
    EdwardsPoint R = c.add(multiple(mult(rng)), torsion[tors(rng)]);
    bool ok = c.contains(P) && c.contains(Q) && c.contains(R);
    ok = ok && c.contains(c.add(P, Q));
    ok = ok && c.add(P, EdwardsCurve::identity()) == P;
    ok = ok && c.add(P, c.negate(P)) == EdwardsCurve::identity();
    ok = ok && c.add(P, Q) == c.add(Q, P);
    ok = ok && c.add(c.add(P, Q), R) == c.add(P, c.add(Q, R));
    laws += ok;
    ++triples;
  }
  pass = pass && laws == triples;
  os << "; Edwards group axioms hold on " << laws << "/" << triples << " random triples";
  return {pass, os.str()};
}

Verdict criterion10() {
  Json fx = load_fixture(fixture_path());
  int rows = 0, agree = 0;
  for (const auto& e : fx.at("integral_models")) {
    auto ijk = e.at("ijk").get<std::vector<long>>();
    MarkedCurve m = elliptic_model(Rat::parse(e.at("a").get<std::string>()), Rat::parse(e.at("q").get<std::string>()),
                                   ijk[0], ijk[1], ijk[2]);
    ++rows;
    try {
      RankCertificate c = certify_infinite_order(m.curve, *m.point);
      agree += c.verdicts_agree && c.mazur.applicable && c.nagell_lutz.decided &&
               c.mazur.infinite_order == c.nagell_lutz.infinite_order;
    } catch (const Error&) {
    }
  }
  std::mt19937_64 rng(10);
  int random_total = 0, random_agree = 0, infinite = 0;
  while (random_total < 50) {
    Rat a = random_rat(rng, 12), q = random_rat(rng, 12);
    if (q.is_zero()) continue;
    MarkedCurve m{WeierstrassCurve(Rat(0), Rat(1), Rat(1)), std::nullopt};
    try {
      m = elliptic_model(a, q, 0, 1, 2);
    } catch (const Error&) {
      continue;  // pole or degenerate curve
    }
    ++random_total;
    try {
      RankCertificate c = certify_infinite_order(m.curve, *m.point);
      bool ok = c.verdicts_agree && c.mazur.applicable &&
                (!c.nagell_lutz.decided || c.mazur.infinite_order == c.nagell_lutz.infinite_order);
      random_agree += ok;
      infinite += c.infinite_order;
    } catch (const Error&) {
    }
  }
  std::ostringstream os;
  os << "table rows " << agree << "/" << rows << " agree; random E_012(a,q) " << random_agree << "/" << random_total
     << " agree (" << infinite << " of infinite order)";
  return {agree == rows && rows == 11 && random_agree == random_total, os.str()};
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Verdict()>>> list{
      {"coefficient tables", criterion1},
      {"integral-model certificates", criterion2},
      {"anchor point", criterion3},
      {"descent polynomials", criterion4},
      {"q-census", criterion5},
      {"search consistency", criterion6},
      {"planted-point exhaustiveness", criterion7},
      {"end-to-end soundness", criterion8},
      {"structural identities", criterion9},
      {"certification cross-validation", criterion10},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const auto& list = criteria();
  if (only < 0 || only > static_cast<int>(list.size())) {
    std::cerr << "criterion must be 1.." << list.size() << "\n";
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Verdict v;
    try {
      v = list[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << " [" << list[i].first << "]: " << (v.pass ? "PASS" : "FAIL") << " - "
              << v.detail << std::endl;
    failed += !v.pass;
  }
  return failed ? 1 : 0;
}
