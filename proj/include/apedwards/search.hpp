#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apedwards/models.hpp"
#include "apedwards/progression.hpp"

namespace apedwards {

/// Admissible (X0 mod p, X1 mod p) classes: every quadric leaves a square
/// (possibly 0) for its remaining coordinate.
struct SieveTable {
  long p = 0;
  std::vector<std::uint8_t> ok;  // index (x0 % p) * p + (x1 % p)
  bool admissible(long x0, long x1) const { return ok[static_cast<std::size_t>((x0 % p) * p + (x1 % p))] != 0; }
  double density() const;
};

/// Throws Error(InvalidArgument) if p is not an odd prime or divides a
/// model coefficient.
SieveTable mod_p_sieve(const QuadricModel& model, long p);

struct SearchOptions {
  long bound = 1000;
  std::vector<long> sieve_primes{3, 5, 7, 11, 13};
  unsigned workers = 1;
  unsigned shards = 0;  // 0: chosen from the bound
  std::string checkpoint_path;  // empty: no checkpointing
  /// Stop after this many shards (testing resumption); 0 means no limit.
  unsigned max_shards = 0;
};

struct SearchStats {
  std::uint64_t pairs = 0;        // (X0, X1) pairs considered
  std::uint64_t sieve_rejected = 0;
  std::uint64_t square_tests = 0;
  double seconds = 0;
  std::vector<long> sieve_primes_used;
};

struct SearchResult {
  std::vector<std::vector<Int>> points;  // canonical, sorted
  std::size_t trivial_count = 0;
  bool exhaustive = false;  // all shards done
  unsigned shards_total = 0;
  unsigned shards_done = 0;
  unsigned shards_resumed = 0;  // loaded from a checkpoint
  SearchStats stats;

  std::vector<std::vector<Int>> nontrivial() const;
};

/// Every primitive point with |X_i| <= bound on a model whose quadrics each
/// involve X0, X1 and one further variable of their own.
SearchResult enumerate(const QuadricModel& model, const SearchOptions& opts);

/// [1:+-1:...:+-1].
bool is_trivial_point(const std::vector<Int>& p);

/// Number of positive rationals of height <= h.
std::uint64_t count_positive_q(long h);
/// Positive rationals of height <= h in increasing order.
std::vector<Rat> positive_q_of_height(long h);

std::vector<Rat> excluded_q(ProgressionKind kind);

struct ScanHit {
  Rat q;
  std::vector<std::vector<Int>> points;
};

struct ScanReport {
  ProgressionKind kind = ProgressionKind::CentralSymmetric;
  long q_height = 0;
  long point_bound = 0;
  std::uint64_t q_total = 0;       // before exclusions
  std::uint64_t q_admissible = 0;  // after exclusions
  std::uint64_t q_scanned = 0;
  std::vector<ScanHit> hits;
  SearchStats stats;
};

/// Runs enumerate on D_1234 for every admissible q of height <= q_height.
/// When scan is false only the census is filled in.
ScanReport batch_q_scan(ProgressionKind kind, long q_height, const SearchOptions& opts, bool scan = true,
                        const std::function<void(const Rat&, const SearchResult&)>& progress = {});

/// Builds a diagonal model X_k^2 = ... through a prescribed primitive point
/// (X0, X1, X2, ...). Used to plant solutions for exhaustiveness checks.
QuadricModel planted_model(const std::vector<Int>& point, std::uint64_t seed);

}  // namespace apedwards
