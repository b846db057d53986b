#include "doctest.h"

#include <algorithm>
#include <filesystem>

#include "apedwards/error.hpp"
#include "apedwards/search.hpp"

using namespace apedwards;

namespace {
QuadricModel central(const Rat& q) { return d1234_model(ProgressionKind::CentralSymmetric, q); }
}

TEST_SUITE("search") {
  TEST_CASE("sieve argument checks") {
    QuadricModel m = central(Rat(2));
    CHECK_THROWS_AS(mod_p_sieve(m, 2), Error);
    CHECK_THROWS_AS(mod_p_sieve(m, 9), Error);
    SieveTable t = mod_p_sieve(m, 13);
    CHECK(t.p == 13);
    CHECK(t.admissible(1, 1));
    CHECK(t.density() > 0);
    CHECK(t.density() <= 1);
  }

  TEST_CASE("trivial points") {
    CHECK(is_trivial_point({1, -1, 1, -1, 1}));
    CHECK_FALSE(is_trivial_point({1, 0, 1, 1, 1}));
    CHECK_FALSE(is_trivial_point({2, 2, 2, 2, 2}));
  }

  TEST_CASE("D_1234 at small height has only trivial points") {
    SearchOptions so;
    so.bound = 200;
    SearchResult r = enumerate(central(Rat(2)), so);
    CHECK(r.exhaustive);
    CHECK(r.points.size() == 16);
    CHECK(r.trivial_count == 16);
    CHECK(r.nontrivial().empty());
    CHECK(std::is_sorted(r.points.begin(), r.points.end()));
  }

  TEST_CASE("planted point is found") {
    std::vector<Int> p{7, -3, 5, 11, 2};
    QuadricModel m = planted_model(p, 42);
    REQUIRE(m.contains(std::span<const Int>(p)));
    SearchOptions so;
    so.bound = 12;
    SearchResult r = enumerate(m, so);
    CHECK(std::binary_search(r.points.begin(), r.points.end(), p));
    for (const auto& x : r.points) CHECK(m.contains(std::span<const Int>(x)));
  }

  TEST_CASE("worker count does not change the result") {
    QuadricModel m = planted_model({5, 3, -4, 1, 6}, 3);
    SearchOptions a, b;
    a.bound = b.bound = 60;
    b.workers = 4;
    b.shards = 7;
    CHECK(enumerate(m, a).points == enumerate(m, b).points);
  }

  TEST_CASE("checkpoint resumption") {
    auto path = std::filesystem::temp_directory_path() / "apedwards_search_ckpt.json";
    std::filesystem::remove(path);
    QuadricModel m = planted_model({9, 4, 2, -7, 3}, 11);
    SearchOptions so;
    so.bound = 80;
    so.shards = 8;
    SearchResult full = enumerate(m, so);

    so.checkpoint_path = path.string();
    so.max_shards = 3;
    SearchResult part = enumerate(m, so);
    CHECK_FALSE(part.exhaustive);
    CHECK(part.shards_done == 3);

    so.max_shards = 0;
    SearchResult resumed = enumerate(m, so);
    CHECK(resumed.exhaustive);
    CHECK(resumed.shards_resumed == 3);
    CHECK(resumed.points == full.points);

    SearchOptions other = so;
    other.bound = 81;
    CHECK_THROWS_AS(enumerate(m, other), Error);
    std::filesystem::remove(path);
  }

  TEST_CASE("q census") {
    CHECK(count_positive_q(1) == 1);
    CHECK(count_positive_q(2) == 3);
    CHECK(count_positive_q(3) == 7);
    CHECK(count_positive_q(100) == 6087);
    CHECK(positive_q_of_height(3).size() == 7);
    CHECK(excluded_q(ProgressionKind::CentralSymmetric).size() == 4);
    SearchOptions so;
    so.bound = 10;
    ScanReport rep = batch_q_scan(ProgressionKind::CentralSymmetric, 100, so, false);
    CHECK(rep.q_total == 6087);
    CHECK(rep.q_admissible == 6083);
    CHECK(rep.q_scanned == 0);
  }

  TEST_CASE("small scan reports no non-trivial point") {
    SearchOptions so;
    so.bound = 30;
    ScanReport rep = batch_q_scan(ProgressionKind::NonCentralSymmetric, 4, so);
    CHECK(rep.q_scanned == rep.q_admissible);
    CHECK(rep.hits.empty());
  }
}
