#include "apedwards/apedwards.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "apedwards/error.hpp"
#include "apedwards/harness.hpp"

struct ape_context {
  std::string last_error;
};

namespace {

using namespace apedwards;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
ape_status guarded(ape_context* ctx, F&& f) {
  if (!ctx) return APE_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    f();
    return APE_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return static_cast<ape_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return APE_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return APE_INTERNAL;
  }
}

Rat arg(const char* s, const char* name) {
  if (!s) throw Error(ErrorCode::InvalidArgument, std::string(name) + " is required");
  return Rat::parse(s);
}

void emit(char** out, const Json& j) {
  if (!out) throw Error(ErrorCode::InvalidArgument, "out must not be NULL");
  *out = dup(j.dump());
  if (!*out) throw std::bad_alloc();
}

SearchOptions search_options(const ape_search_options* o) {
  SearchOptions so;
  if (!o) return so;
  if (o->bound < 0) throw Error(ErrorCode::InvalidArgument, "bound must be non-negative");
  so.bound = o->bound;
  so.workers = o->workers ? o->workers : 1;
  so.shards = o->shards;
  so.max_shards = o->max_shards;
  if (o->checkpoint_path) so.checkpoint_path = o->checkpoint_path;
  return so;
}

ProgressionKind symmetric_kind(const std::string& k) {
  if (k == "central") return ProgressionKind::CentralSymmetric;
  if (k == "non-central") return ProgressionKind::NonCentralSymmetric;
  throw Error(ErrorCode::InvalidArgument, "kind must be central or non-central, got '" + k + "'");
}

}  // namespace

extern "C" {

ape_context* ape_context_new(void) { return new (std::nothrow) ape_context(); }

void ape_context_free(ape_context* ctx) { delete ctx; }

const char* ape_last_error(const ape_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* ape_status_name(ape_status status) {
  if (status == APE_OK) return "ok";
  if (status < APE_INVALID_ARGUMENT || status > APE_INTERNAL) return "unknown";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* ape_version(void) { return "0.1.0"; }

void ape_string_free(char* s) { std::free(s); }

ape_status ape_classify(ape_context* ctx, const char* a, const char* q, long m, char** out) {
  return guarded(ctx, [&] { emit(out, classification_json(classify(arg(a, "a"), arg(q, "q"), m))); });
}

ape_status ape_certify(ape_context* ctx, const char* a, const char* q, const long* ijk, const char* ref_a,
                       const char* ref_b, char** out) {
  return guarded(ctx, [&] {
    if (!ijk) throw Error(ErrorCode::InvalidArgument, "three indices are required");
    if ((ref_a == nullptr) != (ref_b == nullptr)) {
      throw Error(ErrorCode::InvalidArgument, "give both reference coefficients or neither");
    }
    Rat ra = arg(a, "a"), rq = arg(q, "q");
    ModuliObject obj = describe_indices(ra, rq, {ijk[0], ijk[1], ijk[2]});
    MarkedCurve m = elliptic_model(ra, rq, ijk[0], ijk[1], ijk[2]);
    std::optional<WeierstrassCurve> ref;
    if (ref_a) ref = WeierstrassCurve::short_form(Rat::parse(ref_a), Rat::parse(ref_b));
    RankCertificate cert = certify_infinite_order(m.curve, *m.point, ref);
    Json j{{"object", to_json(obj)}, {"curve", to_json(m.curve)}, {"point", to_json(*m.point)}};
    j["certificate"] = to_json(cert);
    emit(out, j);
  });
}

ape_status ape_find_d(ape_context* ctx, const char* a, const char* q, long m, long samples, const long* indices,
                      size_t n_indices, char** out) {
  return guarded(ctx, [&] {
    std::optional<std::vector<long>> idx;
    if (indices) idx = std::vector<long>(indices, indices + n_indices);
    emit(out, to_json(find_d(arg(a, "a"), arg(q, "q"), m, samples, idx)));
  });
}

ape_status ape_verify_tables(ape_context* ctx, const char* fixture_path, const char* groups, long q_list_bound,
                             unsigned workers, char** out, int* passed) {
  return guarded(ctx, [&] {
    if (!fixture_path) throw Error(ErrorCode::InvalidArgument, "fixture path is required");
    VerifyOptions vo;
    if (groups && *groups) {
      std::stringstream ss(groups);
      std::string g;
      while (std::getline(ss, g, ',')) {
        if (!g.empty()) vo.groups.push_back(g);
      }
    }
    if (q_list_bound > 0) vo.q_list_bound = q_list_bound;
    vo.workers = workers ? workers : 1;
    VerificationReport rep = verify_tables(load_fixture(fixture_path), vo);
    Json j = to_json(rep);
    j["fixture"] = fixture_path;
    if (passed) *passed = rep.passed() ? 1 : 0;
    emit(out, j);
  });
}

void ape_search_options_init(ape_search_options* opts) {
  if (!opts) return;
  SearchOptions d;
  opts->bound = d.bound;
  opts->workers = d.workers;
  opts->shards = 0;
  opts->max_shards = 0;
  opts->checkpoint_path = nullptr;
  opts->progress = nullptr;
  opts->progress_user = nullptr;
}

ape_status ape_search_model(ape_context* ctx, const char* kind, const char* a, const char* q, const long* indices,
                            size_t n_indices, const ape_search_options* opts, char** out) {
  return guarded(ctx, [&] {
    if (!kind) throw Error(ErrorCode::InvalidArgument, "kind is required");
    std::string k = kind;
    QuadricModel model;
    Json head;
    if (k == "indices") {
      if (!indices || n_indices < 3) throw Error(ErrorCode::InvalidArgument, "at least three indices are required");
      std::vector<long> idx(indices, indices + n_indices);
      Rat ra = arg(a, "a"), rq = arg(q, "q");
      model = quadric_model(ra, rq, idx);
      head["object"] = to_json(describe_indices(ra, rq, idx));
    } else {
      ProgressionKind pk = symmetric_kind(k);
      Rat rq = arg(q, "q");
      model = d1234_model(pk, rq);
      head["kind"] = kind_name(pk);
      head["q"] = rq.str();
    }
    SearchOptions so = search_options(opts);
    SearchResult res = enumerate(model, so);
    head["bound"] = so.bound;
    head["model"] = to_json(model);
    head["result"] = to_json(res);
    emit(out, head);
  });
}

ape_status ape_search_scan(ape_context* ctx, const char* kind, long q_height, int scan,
                           const ape_search_options* opts, char** out) {
  return guarded(ctx, [&] {
    if (!kind) throw Error(ErrorCode::InvalidArgument, "kind is required");
    ProgressionKind pk = symmetric_kind(kind);
    SearchOptions so = search_options(opts);
    std::function<void(const Rat&, const SearchResult&)> progress;
    if (opts && opts->progress) {
      progress = [opts](const Rat& qv, const SearchResult& r) {
        opts->progress(qv.str().c_str(), r.points.size(), opts->progress_user);
      };
    }
    emit(out, to_json(batch_q_scan(pk, q_height, so, scan != 0, progress)));
  });
}

ape_status ape_count_q(ape_context* ctx, long height, uint64_t* total) {
  return guarded(ctx, [&] {
    if (!total) throw Error(ErrorCode::InvalidArgument, "total must not be NULL");
    if (height < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
    *total = count_positive_q(height);
  });
}

}  // extern "C"
