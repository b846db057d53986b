#pragma once

#include <optional>
#include <vector>

#include "apedwards/edwards.hpp"
#include "apedwards/progression.hpp"

namespace apedwards {

struct FoundD {
  Rat d;
  std::optional<Rat> t;     // conic parameter the point came from
  long multiple = 0;        // n in n Q (+ torsion) for elliptic cases
  std::vector<Rat> point;   // [X0 : X1 : ...] on C_S^{a,q}
  ProgressionCheck check;
};

struct FindDResult {
  ModuliObject object;
  Rat a, q;  // progression start and step that were verified
  long m = 0;
  std::vector<long> indices;  // over object.a when explicit
  bool explicit_indices = false;
  std::vector<FoundD> values;
  bool all_verified = true;
};

/// Produces up to `samples` distinct d with the progression on E_d: from
/// the conic parametrization, or from multiples of the marked point mapped
/// back through the quartic model. Throws Error(Unsupported) for genus >= 5.
/// With `indices` the literal (a, q) is used and only the terms a + k q,
/// k in indices, are verified.
FindDResult find_d(const Rat& a, const Rat& q, long m, long samples,
                   const std::optional<std::vector<long>>& indices = std::nullopt);

/// Rationals ordered by height (positives before negatives within a height).
std::vector<Rat> rationals_by_height(std::size_t count);

}  // namespace apedwards
