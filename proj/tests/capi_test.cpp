// Exercises the shared library through its C interface only.
#include <cstdio>
#include <cstring>
#include <string>

#include "apedwards/apedwards.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      std::fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static bool contains(const char* s, const char* needle) { return s && std::strstr(s, needle) != nullptr; }

int main() {
  ape_context* ctx = ape_context_new();
  EXPECT(ctx != nullptr);
  EXPECT(std::string(ape_version()) == "0.1.0");

  char* out = nullptr;
  EXPECT(ape_classify(ctx, "1/3", "1/7", 3, &out) == APE_OK);
  EXPECT(contains(out, "E_012(1/3,1/7)"));
  ape_string_free(out);

  out = nullptr;
  EXPECT(ape_classify(ctx, "1/x", "1", 3, &out) == APE_PARSE);
  EXPECT(out == nullptr);
  EXPECT(std::strlen(ape_last_error(ctx)) > 0);
  EXPECT(std::string(ape_status_name(APE_PARSE)) == "parse");

  EXPECT(ape_classify(nullptr, "1", "1", 3, &out) == APE_INVALID_ARGUMENT);
  EXPECT(ape_classify(ctx, "1", "0", 3, &out) != APE_OK);

  long ijk[3] = {1, 2, 3};
  EXPECT(ape_certify(ctx, "1", "1/2", ijk, nullptr, nullptr, &out) == APE_OK);
  EXPECT(contains(out, "5714173479/2209"));
  ape_string_free(out);
  EXPECT(ape_certify(ctx, "1", "1/2", ijk, "1", nullptr, &out) == APE_INVALID_ARGUMENT);

  EXPECT(ape_find_d(ctx, "1", "2/3", 5, 1, nullptr, 0, &out) == APE_UNSUPPORTED);
  long idx[3] = {1, 2, 4};
  EXPECT(ape_find_d(ctx, "1", "2/3", 5, 1, idx, 3, &out) == APE_OK);
  EXPECT(contains(out, "E_124"));
  ape_string_free(out);

  uint64_t total = 0;
  EXPECT(ape_count_q(ctx, 100, &total) == APE_OK);
  EXPECT(total == 6087);
  EXPECT(ape_count_q(ctx, 0, &total) == APE_INVALID_ARGUMENT);

  ape_search_options opts;
  ape_search_options_init(&opts);
  opts.bound = 100;
  EXPECT(ape_search_model(ctx, "central", nullptr, "2", nullptr, 0, &opts, &out) == APE_OK);
  EXPECT(contains(out, "\"trivial\":16"));
  ape_string_free(out);
  EXPECT(ape_search_model(ctx, "central", nullptr, "1", nullptr, 0, &opts, &out) == APE_DEGENERATE);
  EXPECT(ape_search_model(ctx, "sideways", nullptr, "2", nullptr, 0, &opts, &out) == APE_INVALID_ARGUMENT);
  opts.bound = -1;
  EXPECT(ape_search_model(ctx, "central", nullptr, "2", nullptr, 0, &opts, &out) == APE_INVALID_ARGUMENT);

  int passed = 0;
  EXPECT(ape_verify_tables(ctx, APEDWARDS_FIXTURE, "b-tuples,anchor", 0, 1, &out, &passed) == APE_OK);
  EXPECT(passed == 1);
  ape_string_free(out);
  EXPECT(ape_verify_tables(ctx, "/nonexistent.json", nullptr, 0, 1, &out, &passed) == APE_IO);

  ape_context_free(ctx);
  if (failures) std::fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
