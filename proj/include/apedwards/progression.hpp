#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apedwards/rational.hpp"

namespace apedwards {

enum class ProgressionKind { NonSymmetric, CentralSymmetric, NonCentralSymmetric };
const char* kind_name(ProgressionKind k);

/// The progression a, a+q, ..., a+(m-1)q with q > 0.
struct APSpec {
  Rat a;  // first term
  Rat q;
  long m = 1;
  ProgressionKind kind = ProgressionKind::NonSymmetric;

  /// Base point of the index convention: a itself for non-symmetric
  /// progressions, 0 (central) or -q/2 (non-central) otherwise, so that the
  /// k-th index denotes model_a() + k q.
  Rat model_a() const;
  Rat term(long k) const { return model_a() + Rat(k) * q; }
};

/// q < 0 is normalised through x -> -x, i.e. (a, q) -> (-a, -q).
/// For symmetric progressions both the first-term form a = -((m-1)/2) q and
/// the centred shorthand (a = 0 for m odd, a = -q/2 for m even) are accepted.
APSpec classify(const Rat& a, const Rat& q, long m);

struct RemovedIndex {
  long k;
  int sign;  // a + k q = sign
};

struct IndexSets {
  std::vector<long> S;
  std::vector<long> S_star;  // S without the k where a + k q = +-1
  std::vector<RemovedIndex> removed;
  /// Indices of S_star that actually constrain d: terms equal to 0 and the
  /// second of two terms with equal absolute value impose nothing new.
  std::vector<long> effective;
};

IndexSets index_sets(const APSpec& spec);

/// s_ij = q(i-j)(2a+(i+j)q) / ((a+iq)^2 (1-(a+jq)^2)). Throws Error(Pole)
/// when a + i q = 0 or a + j q = +-1.
Rat s_coeff(const Rat& a, const Rat& q, long i, long j);
Rat r_coeff(const Rat& a, const Rat& q, long i, long j);
Rat t_coeff(const Rat& a, const Rat& q, long i, long j, long k);

/// (m-3) 2^(m-2) + 1 for m >= 3 and 0 for m = 2.
long genus(long m);

enum class ModuliType { AnyD, SingleD, Conic, Elliptic, GenusFive, HigherGenus };
const char* moduli_type_name(ModuliType t);

/// The object describing AP_m(a, q): "d!=1", "d_k", C_ij, E_ijk, D_ijkl.
struct ModuliObject {
  ModuliType type = ModuliType::AnyD;
  std::vector<long> indices;
  Rat a;  // the model base point
  Rat q;
  std::optional<long> genus;
  std::string label;
};

ModuliObject describe(const APSpec& spec);
/// Label for an explicit index set over the literal (a, q).
ModuliObject describe_indices(const Rat& a, const Rat& q, const std::vector<long>& indices);

/// One row of the table of progressions hitting both 1 and -1 before its
/// start: a - i q = 1 and a - j q = -1. Rows with i <= 1 and j - i <= 2 are listed as the
/// symmetric q = 1 (central) or q = 2 (non-central) families.
struct DoubleCoincidenceRow {
  long i, j;
  Rat a, q;  // as tabulated: a = (j+i)/(j-i), q = 2/(j-i)
  std::optional<ProgressionKind> symmetric_alias;
  Rat alias_a, alias_q;
  /// Labels for m = 1..6 (empty when the row is a symmetric alias).
  std::vector<std::string> labels;
};

std::vector<DoubleCoincidenceRow> double_coincidence_table(long max_index = 4);

}  // namespace apedwards
