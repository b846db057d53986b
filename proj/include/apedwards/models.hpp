#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apedwards/progression.hpp"
#include "apedwards/rational.hpp"
#include "apedwards/weierstrass.hpp"

namespace apedwards {

/// Diagonal quadrics sum_i c_i X_i^2 = 0 in P^n, one coefficient row per
/// quadric. Rows are primitive integer vectors with positive X_0 entry.
struct QuadricModel {
  std::size_t variables = 0;
  std::vector<std::vector<Int>> quadrics;
  /// Index set the model was built from, when it comes from C_S^{a,q}.
  std::vector<long> indices;
  Rat a, q;

  bool contains(std::span<const Int> point) const;
  bool contains(std::span<const Rat> point) const;
};

/// X_{j+1}^2 = a_j X_0^2 + (1 - a_j) X_1^2 for each coefficient a_j.
/// Throws Error(Degenerate) if some a_j is 0 or 1.
QuadricModel quadric_model_from_coefficients(const std::vector<Rat>& a_j);

/// C_S^{a,q} over the literal (a, q) with n_0 = indices[0]: a_j = s_{n_0 n_j}.
QuadricModel quadric_model(const Rat& a, const Rat& q, const std::vector<long>& indices);
/// Same, over the index convention of spec (model_a() for symmetric kinds).
QuadricModel quadric_model(const APSpec& spec, const std::vector<long>& S_star);

/// The search model D_1234 for a = 0 (central) or a = -q/2 (non-central).
QuadricModel d1234_model(ProgressionKind kind, const Rat& q);

/// [t^2 - 2t + a1 : -t^2 + a1 : t^2 - 2 a1 t + a1]; t absent means t = oo.
std::array<Rat, 3> conic_parametrize(const Rat& a1, const std::optional<Rat>& t);

/// Coefficients c0..c4 of t^4 - 4 aj t^3 + 2(-a1 + 2aj + 2 a1 aj) t^2
/// - 4 a1 aj t + a1^2.
std::array<Rat, 5> quartic_model(const Rat& a1, const Rat& aj);
Rat eval_poly(std::span<const Rat> coeffs, const Rat& t);

struct MarkedCurve {
  WeierstrassCurve curve;
  std::optional<WPoint> point;
};

/// y^2 = x(x + a1 - aj)(x + aj(a1 - 1)) with Q = (aj, a1 aj).
MarkedCurve weierstrass_model(const Rat& a1, const Rat& aj);
/// E_ijk(a, q): a1 = s_ij, aj = s_ik.
MarkedCurve elliptic_model(const Rat& a, const Rat& q, long i, long j, long k);

struct GenusFiveModel {
  std::array<long, 4> source{};
  int N = 0;     // b-table row, 1..16
  int slot = 0;  // which entry of the row plays b2; the others keep row order
  bool available = false;
  std::string unavailable_reason;
  Rat b2, b3, b4;
};

/// Row N of the 16-row b-table as (x, y, z) in table order. Throws Error(Pole).
std::array<Rat, 3> b_table_row(const Rat& a, const Rat& q, const std::array<long, 4>& ijkl, int N);

/// All 48 models: N = 1..16 in order, each with slot 0..2.
std::vector<GenusFiveModel> genus5_models(const Rat& a, const Rat& q, const std::array<long, 4>& ijkl);

/// X_k^2 = b_k X_0^2 + (1 - b_k) X_1^2 for k = 2, 3, 4.
QuadricModel genus5_quadrics(const Rat& b2, const Rat& b3, const Rat& b4);

/// E_(0)..E_(4), indexed by the removed variable.
std::array<MarkedCurve, 5> quotient_curves(const Rat& b2, const Rat& b3, const Rat& b4);

/// Birational map between X^2 = t^4 + c3 t^3 + c2 t^2 + c1 t + c0 and a
/// Weierstrass cubic, sending the point at t = oo with X ~ +t^2 to O.
class QuarticCubicMap {
 public:
  explicit QuarticCubicMap(const std::array<Rat, 5>& quartic);

  const WeierstrassCurve& cubic() const { return cubic_; }
  /// (t, X) for an affine cubic point; absent for O and where x = 0.
  std::optional<std::pair<Rat, Rat>> to_quartic(const WPoint& p) const;
  WPoint to_cubic(const Rat& t, const Rat& X) const;

 private:
  std::array<Rat, 5> quartic_;
  Rat alpha_, beta_, gamma_, delta_;
  WeierstrassCurve cubic_;
};

}  // namespace apedwards
