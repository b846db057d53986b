#include "doctest.h"

#include "apedwards/error.hpp"
#include "apedwards/harness.hpp"

using namespace apedwards;

namespace {
const Json& fixture() {
  static const Json j = load_fixture(APEDWARDS_FIXTURE);
  return j;
}

VerificationReport run(const Json& fx) {
  VerifyOptions vo;
  vo.q_list_bound = 30;
  vo.h_sweep_count = 200;
  return verify_tables(fx, vo);
}
}

TEST_SUITE("harness") {
  TEST_CASE("fixture reproduces") {
    VerificationReport rep = run(fixture());
    CHECK(rep.passed());
    CHECK(rep.count(CheckStatus::Mismatch) == 0);
    CHECK(rep.count(CheckStatus::Reproduced) > 150);
  }

  TEST_CASE("one tampered digit gives exactly one mismatch") {
    Json fx = fixture();
    fx["integral_models"][0]["A"] = "-1698765076";
    VerificationReport rep = run(fx);
    CHECK(rep.count(CheckStatus::Mismatch) == 1);
    for (const auto& c : rep.checks) {
      if (c.status == CheckStatus::Mismatch) CHECK(c.id == "integral-models/im-1");
    }

    Json fx2 = fixture();
    fx2["b_tuples"][0]["b"][1] = "250/83";
    CHECK(run(fx2).count(CheckStatus::Mismatch) == 1);
  }

  TEST_CASE("missing field is skipped, not a failure") {
    Json fx = fixture();
    fx["integral_models"][1].erase("B");
    VerificationReport rep = run(fx);
    CHECK(rep.passed());
    bool skipped = false;
    for (const auto& c : rep.checks) skipped = skipped || (c.id == "integral-models/im-2" && c.status == CheckStatus::Skipped);
    CHECK(skipped);
  }

  TEST_CASE("deterministic report") {
    VerifyOptions vo;
    vo.groups = {"b-tuples", "integral-models", "moduli"};
    CHECK(to_json(verify_tables(fixture(), vo)).dump() == to_json(verify_tables(fixture(), vo)).dump());
  }

  TEST_CASE("group filter") {
    VerifyOptions vo;
    vo.groups = {"anchor"};
    VerificationReport rep = verify_tables(fixture(), vo);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].group == "anchor");
  }

  TEST_CASE("load errors") {
    try {
      load_fixture("/nonexistent/fixture.json");
      FAIL("expected Io");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Io);
    }
  }
}
