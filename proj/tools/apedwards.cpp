#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apedwards/apedwards.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kFailure = 3;

struct Ctx {
  Ctx() : p(ape_context_new()) {}
  ~Ctx() { ape_context_free(p); }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
  ape_context* p;
};

// Converts a C API result into JSON, or reports the failure and returns nullopt.
std::optional<Json> take(const Ctx& ctx, ape_status st, char*& out, int& code) {
  if (st != APE_OK) {
    std::cerr << "error (" << ape_status_name(st) << "): " << ape_last_error(ctx.p) << "\n";
    code = (st == APE_INVALID_ARGUMENT || st == APE_PARSE || st == APE_ZERO_DENOMINATOR) ? kUsage : kFailure;
    return std::nullopt;
  }
  Json j = Json::parse(out);
  ape_string_free(out);
  return j;
}

std::string joined(const Json& arr, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string point_text(const Json& p) { return p.is_string() ? p.get<std::string>() : "(" + joined(p) + ")"; }

void print_classification(const Json& j) {
  const Json& p = j["progression"];
  const Json& s = j["index_sets"];
  const Json& m = j["moduli"];
  std::cout << "progression  " << p["kind"].get<std::string>() << ", a=" << p["a"].get<std::string>()
            << ", q=" << p["q"].get<std::string>() << ", m=" << p["m"] << "\n";
  std::cout << "terms        " << joined(p["terms"]) << (p["terms_truncated"].get<bool>() ? ", ..." : "") << "\n";
  std::cout << "S            {" << joined(s["S"]) << "}\n";
  std::cout << "S*           {" << joined(s["S_star"]) << "}\n";
  std::cout << "moduli       " << m["label"].get<std::string>() << " (" << m["type"].get<std::string>();
  if (!m["genus"].is_null()) std::cout << ", genus " << m["genus"];
  std::cout << ")\n";
}

void print_certificate(const Json& j) {
  const Json& c = j["certificate"];
  std::cout << j["object"]["label"].get<std::string>() << ": " << j["curve"]["equation"].get<std::string>() << "\n";
  std::cout << "Q = " << point_text(j["point"]) << "\n";
  for (const auto& step : c["chain"]) {
    std::cout << "  " << step["step"].get<std::string>() << ": " << step["curve"]["equation"].get<std::string>()
              << "  point " << point_text(step["point"]);
    if (step.contains("u")) std::cout << "  u=" << step["u"].get<std::string>();
    std::cout << "\n";
  }
  const Json& nl = c["nagell_lutz"];
  if (nl["decided"].get<bool>()) {
    std::cout << "Nagell-Lutz: n=" << nl["n"] << ", nQ' = " << point_text(nl["multiple"]) << "\n";
  } else {
    std::cout << "Nagell-Lutz: undecided\n";
  }
  const Json& mz = c["mazur"];
  std::cout << "Mazur 2-torsion: "
            << (mz["applicable"].get<bool>() ? (mz["infinite_order"].get<bool>() ? "infinite order" : "torsion")
                                             : "not applicable")
            << "\n";
  std::cout << "verdict: " << (c["infinite_order"].get<bool>() ? "infinite order" : "torsion") << " ("
            << c["method"].get<std::string>() << ")\n";
}

void print_find(const Json& j) {
  std::cout << j["object"]["label"].get<std::string>() << ", verified terms a=" << j["a"].get<std::string>()
            << " q=" << j["q"].get<std::string>() << "\n";
  for (const auto& v : j["values"]) {
    std::cout << "  d = " << v["d"].get<std::string>() << (v["verified"].get<bool>() ? "" : "  NOT VERIFIED");
    if (v.contains("t")) std::cout << "  (t = " << v["t"].get<std::string>() << ")";
    if (v.contains("multiple")) std::cout << "  (n = " << v["multiple"] << ")";
    std::cout << "\n";
  }
}

void print_report(const Json& j, bool verbose) {
  for (const auto& c : j["checks"]) {
    std::string st = c["status"].get<std::string>();
    if (!verbose && st == "reproduced") continue;
    std::cout << st << "  " << c["id"].get<std::string>() << "\n";
    if (c.contains("expected") && st != "skipped") {
      std::cout << "    expected " << c["expected"].get<std::string>() << "\n";
      std::cout << "    got      " << c["got"].get<std::string>() << "\n";
    }
    if (c.contains("note")) std::cout << "    " << c["note"].get<std::string>() << "\n";
  }
  std::cout << j["reproduced"] << " reproduced, " << j["mismatch"] << " mismatch, " << j["skipped"]
            << " skipped\n";
}

void print_points(const Json& r) {
  std::cout << r["points"] << " points (" << r["trivial"] << " trivial), " << r["shards_done"] << "/"
            << r["shards_total"] << " shards" << (r["exhaustive"].get<bool>() ? "" : " (incomplete)");
  if (r["shards_resumed"].get<unsigned>() > 0) std::cout << ", " << r["shards_resumed"] << " resumed";
  std::cout << "\n";
  for (const auto& p : r["nontrivial"]) std::cout << "  non-trivial [" << joined(p, " : ") << "]\n";
  const Json& s = r["stats"];
  std::cout << "pairs " << s["pairs"] << ", sieved out " << s["sieve_rejected"] << ", square tests "
            << s["square_tests"] << ", " << s["seconds"] << " s\n";
}

std::string default_fixture() {
  if (const char* e = std::getenv("APE_FIXTURE")) return e;
#ifdef APEDWARDS_DEFAULT_FIXTURE
  return APEDWARDS_DEFAULT_FIXTURE;
#else
  return "data/reference_tables.json";
#endif
}

void progress(const char* q, size_t points, void*) { std::cerr << "q=" << q << ": " << points << " points\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic progressions on Edwards curves: moduli, certificates, searches and table checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print JSON instead of text");

  int code = kOk;
  Ctx ctx;

  // classify
  std::string ca, cq;
  long cm = 0;
  auto* classify = app.add_subcommand("classify", "Describe AP_m(a, q)");
  classify->add_option("a", ca, "first term (or 0 / -q/2 for symmetric progressions)")->required();
  classify->add_option("q", cq, "common difference")->required();
  classify->add_option("m", cm, "number of terms")->required()->check(CLI::PositiveNumber);
  classify->callback([&] {
    char* out = nullptr;
    auto j = take(ctx, ape_classify(ctx.p, ca.c_str(), cq.c_str(), cm, &out), out, code);
    if (!j) return;
    if (json) {
      std::cout << j->dump(2) << "\n";
    } else {
      print_classification(*j);
    }
  });

  // verify-tables
  std::string fixture = default_fixture(), groups;
  long qlist_bound = 0;
  unsigned vworkers = 1;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify-tables", "Re-derive the tabulated constants and compare");
  verify->add_option("--fixture", fixture, "fixture file")->capture_default_str();
  verify->add_option("--groups", groups, "comma-separated check groups");
  verify->add_option("--q-list-bound", qlist_bound, "point height for the q-list searches");
  verify->add_option("--workers", vworkers, "search threads")->envname("APE_WORKERS")->check(CLI::PositiveNumber);
  verify->add_flag("-v,--verbose", verbose, "also list reproduced checks");
  verify->callback([&] {
    char* out = nullptr;
    int passed = 0;
    auto j = take(ctx,
                  ape_verify_tables(ctx.p, fixture.c_str(), groups.empty() ? nullptr : groups.c_str(), qlist_bound,
                                    vworkers, &out, &passed),
                  out, code);
    if (!j) return;
    if (json) {
      std::cout << j->dump(2) << "\n";
    } else {
      print_report(*j, verbose);
    }
    code = passed ? kOk : kMismatch;
  });

  // search
  std::string kind, sq, sa;
  std::vector<long> sidx;
  long bound = 1000, qheight = 0;
  unsigned workers = 1, shards = 0, max_shards = 0;
  std::string checkpoint;
  bool count_only = false, show_progress = false;
  auto* search = app.add_subcommand("search", "Bounded point search on D_1234 or on a model C_S");
  search->add_option("--kind", kind, "central or non-central")->check(CLI::IsMember({"central", "non-central"}));
  search->add_option("--q", sq, "common difference of a single model");
  search->add_option("--a", sa, "base point for --indices models");
  search->add_option("--indices", sidx, "index set of a model C_S over the literal (a, q)")->delimiter(',');
  search->add_option("--q-height", qheight, "scan every admissible q of height <= H")->check(CLI::PositiveNumber);
  search->add_flag("--count-only", count_only, "with --q-height: only count the q values");
  search->add_option("--bound", bound, "height bound on |X_i|")->capture_default_str()->check(CLI::NonNegativeNumber);
  search->add_option("--shards", shards, "number of X0 shards (0: automatic)");
  search->add_option("--workers", workers, "worker threads")->envname("APE_WORKERS")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
  search->add_option("--max-shards", max_shards, "stop after this many shards (or q values)");
  search->add_flag("--progress", show_progress, "report each q of a scan on stderr");
  search->callback([&] {
    ape_search_options so;
    ape_search_options_init(&so);
    so.bound = bound;
    so.workers = workers;
    so.shards = shards;
    so.max_shards = max_shards;
    so.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
    if (show_progress) so.progress = progress;
    char* out = nullptr;
    if (qheight > 0) {
      if (kind.empty()) throw CLI::ValidationError("--q-height needs --kind");
      auto j = take(ctx, ape_search_scan(ctx.p, kind.c_str(), qheight, count_only ? 0 : 1, &so, &out), out, code);
      if (!j) return;
      if (json) {
        std::cout << j->dump(2) << "\n";
        return;
      }
      std::cout << (*j)["q_total"] << " positive q of height <= " << qheight << ", " << (*j)["q_admissible"]
                << " after excluding the degenerate values\n";
      if (!count_only) {
        std::cout << (*j)["q_scanned"] << " scanned at bound " << bound << ", " << (*j)["hits"].size()
                  << " with non-trivial points\n";
        for (const auto& h : (*j)["hits"]) std::cout << "  q=" << h["q"].get<std::string>() << "\n";
      }
      return;
    }
    if (sq.empty()) throw CLI::ValidationError("search needs --q (or --q-height)");
    ape_status st;
    if (!sidx.empty()) {
      if (sa.empty()) throw CLI::ValidationError("--indices needs --a");
      st = ape_search_model(ctx.p, "indices", sa.c_str(), sq.c_str(), sidx.data(), sidx.size(), &so, &out);
    } else {
      if (kind.empty()) throw CLI::ValidationError("search needs --kind or --indices");
      st = ape_search_model(ctx.p, kind.c_str(), nullptr, sq.c_str(), nullptr, 0, &so, &out);
    }
    auto j = take(ctx, st, out, code);
    if (!j) return;
    if (json) {
      std::cout << j->dump(2) << "\n";
    } else {
      if (j->contains("object")) std::cout << (*j)["object"]["label"].get<std::string>() << "\n";
      print_points((*j)["result"]);
    }
  });

  // certify
  std::string ta, tq, ref_a, ref_b;
  std::vector<long> tidx;
  auto* certify = app.add_subcommand("certify", "Infinite-order certificate for the marked point of E_ijk(a, q)");
  certify->add_option("a", ta, "base point a")->required();
  certify->add_option("q", tq, "common difference")->required();
  certify->add_option("--indices", tidx, "i,j,k")->delimiter(',')->required()->expected(3);
  certify->add_option("--ref-a", ref_a, "A of a reference model y^2 = x^3 + A x + B");
  certify->add_option("--ref-b", ref_b, "B of the reference model");
  certify->callback([&] {
    if (ref_a.empty() != ref_b.empty()) throw CLI::ValidationError("--ref-a and --ref-b go together");
    char* out = nullptr;
    auto j = take(ctx,
                  ape_certify(ctx.p, ta.c_str(), tq.c_str(), tidx.data(), ref_a.empty() ? nullptr : ref_a.c_str(),
                              ref_b.empty() ? nullptr : ref_b.c_str(), &out),
                  out, code);
    if (!j) return;
    if (json) {
      std::cout << j->dump(2) << "\n";
    } else {
      print_certificate(*j);
    }
  });

  // find-d
  std::string fa, fq;
  long fm = 0, samples = 5;
  std::vector<long> fidx;
  auto* findd = app.add_subcommand("find-d", "Values of d for which AP_m(a, q) lies on E_d");
  findd->add_option("a", fa, "first term")->required();
  findd->add_option("q", fq, "common difference")->required();
  findd->add_option("m", fm, "number of terms (ignored with --indices)");
  findd->add_option("--samples", samples, "number of d values")->capture_default_str()->check(CLI::PositiveNumber);
  findd->add_option("--indices", fidx, "explicit index set over the literal (a, q)")->delimiter(',');
  findd->callback([&] {
    if (fidx.empty() && fm <= 0) throw CLI::ValidationError("find-d needs m or --indices");
    char* out = nullptr;
    auto j = take(ctx,
                  ape_find_d(ctx.p, fa.c_str(), fq.c_str(), fm, samples, fidx.empty() ? nullptr : fidx.data(),
                             fidx.size(), &out),
                  out, code);
    if (!j) return;
    if (json) {
      std::cout << j->dump(2) << "\n";
    } else {
      print_find(*j);
    }
    if (!(*j)["all_verified"].get<bool>()) code = kMismatch;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  return code;
}
