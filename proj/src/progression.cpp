#include "apedwards/progression.hpp"

#include <algorithm>

#include "apedwards/error.hpp"

namespace apedwards {

namespace {

std::string index_string(const std::vector<long>& idx) {
  bool small = std::all_of(idx.begin(), idx.end(), [](long k) { return k >= 0 && k < 10; });
  std::string out;
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (!small && n > 0) out += ",";
    out += std::to_string(idx[n]);
  }
  return small ? out : "{" + out + "}";
}

ModuliObject make_object(const Rat& a, const Rat& q, const std::vector<long>& idx) {
  ModuliObject o;
  o.a = a;
  o.q = q;
  o.indices = idx;
  std::string params = "(" + a.str() + "," + q.str() + ")";
  switch (idx.size()) {
    case 0:
      o.type = ModuliType::AnyD;
      o.label = "d!=1";
      break;
    case 1:
      o.type = ModuliType::SingleD;
      o.label = "d_" + std::to_string(idx[0]);
      break;
    case 2:
      o.type = ModuliType::Conic;
      o.label = "C_" + index_string(idx) + params;
      break;
    case 3:
      o.type = ModuliType::Elliptic;
      o.label = "E_" + index_string(idx) + params;
      break;
    case 4:
      o.type = ModuliType::GenusFive;
      o.label = "D_" + index_string(idx) + params;
      break;
    default:
      o.type = ModuliType::HigherGenus;
      o.label = "C_" + index_string(idx) + params;
  }
  if (idx.size() >= 2) o.genus = genus(static_cast<long>(idx.size()));
  return o;
}

}  // namespace

const char* kind_name(ProgressionKind k) {
  switch (k) {
    case ProgressionKind::NonSymmetric: return "non-symmetric";
    case ProgressionKind::CentralSymmetric: return "central-symmetric";
    case ProgressionKind::NonCentralSymmetric: return "non-central-symmetric";
  }
  return "unknown";
}

const char* moduli_type_name(ModuliType t) {
  switch (t) {
    case ModuliType::AnyD: return "any-d";
    case ModuliType::SingleD: return "single-d";
    case ModuliType::Conic: return "conic";
    case ModuliType::Elliptic: return "elliptic";
    case ModuliType::GenusFive: return "genus-five";
    case ModuliType::HigherGenus: return "higher-genus";
  }
  return "unknown";
}

Rat APSpec::model_a() const {
  switch (kind) {
    case ProgressionKind::CentralSymmetric: return Rat(0);
    case ProgressionKind::NonCentralSymmetric: return -q / Rat(2);
    case ProgressionKind::NonSymmetric: break;
  }
  return a;
}

APSpec classify(const Rat& a0, const Rat& q0, long m) {
  if (q0.is_zero()) throw Error(ErrorCode::InvalidArgument, "q must be nonzero");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  APSpec s;
  s.a = q0.sign() < 0 ? -a0 : a0;
  s.q = q0.abs();
  s.m = m;
  Rat first = -Rat(m - 1, 2) * s.q;
  if (m % 2 == 1 && (s.a == first || s.a.is_zero())) {
    s.kind = ProgressionKind::CentralSymmetric;
    s.a = first;
  } else if (m % 2 == 0 && (s.a == first || s.a == -s.q / Rat(2))) {
    s.kind = ProgressionKind::NonCentralSymmetric;
    s.a = first;
  }
  return s;
}

IndexSets index_sets(const APSpec& spec) {
  IndexSets out;
  if (spec.kind == ProgressionKind::NonSymmetric) {
    for (long k = 0; k < spec.m; ++k) out.S.push_back(k);
  } else {
    for (long k = 1; k <= spec.m / 2; ++k) out.S.push_back(k);
  }
  std::vector<Rat> seen;
  for (long k : out.S) {
    Rat x = spec.term(k);
    if (x == Rat(1) || x == Rat(-1)) {
      out.removed.push_back({k, x.sign()});
      continue;
    }
    out.S_star.push_back(k);
    Rat ax = x.abs();
    if (x.is_zero() || std::find(seen.begin(), seen.end(), ax) != seen.end()) continue;
    seen.push_back(ax);
    out.effective.push_back(k);
  }
  return out;
}

Rat s_coeff(const Rat& a, const Rat& q, long i, long j) {
  Rat xi = a + Rat(i) * q;
  Rat xj = a + Rat(j) * q;
  if (xi.is_zero()) {
    throw Error(ErrorCode::Pole, "s_" + std::to_string(i) + std::to_string(j) + " has a pole: a + " +
                                     std::to_string(i) + " q = 0");
  }
  Rat den = xi * xi * (Rat(1) - xj * xj);
  if (den.is_zero()) {
    throw Error(ErrorCode::Pole, "s_" + std::to_string(i) + std::to_string(j) + " has a pole: a + " +
                                     std::to_string(j) + " q = +-1");
  }
  return q * Rat(i - j) * (Rat(2) * a + Rat(i + j) * q) / den;
}

Rat r_coeff(const Rat& a, const Rat& q, long i, long j) {
  Rat s = s_coeff(a, q, i, j);
  if (s.is_zero()) throw Error(ErrorCode::Pole, "r_ij has a pole: s_ij = 0");
  return s.inverse();
}

Rat t_coeff(const Rat& a, const Rat& q, long i, long j, long k) {
  Rat sij = s_coeff(a, q, i, j);
  if (sij.is_zero()) throw Error(ErrorCode::Pole, "t_ijk has a pole: s_ij = 0");
  return s_coeff(a, q, i, k) / sij;
}

long genus(long m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "genus needs at least two indices");
  if (m == 2) return 0;
  return (m - 3) * (1L << (m - 2)) + 1;
}

ModuliObject describe(const APSpec& spec) {
  return make_object(spec.model_a(), spec.q, index_sets(spec).effective);
}

ModuliObject describe_indices(const Rat& a, const Rat& q, const std::vector<long>& indices) {
  return make_object(a, q, indices);
}

std::vector<DoubleCoincidenceRow> double_coincidence_table(long max_index) {
  std::vector<DoubleCoincidenceRow> rows;
  for (long i = 0; i <= max_index; ++i) {
    for (long j = i + 1; j <= max_index; ++j) {
      DoubleCoincidenceRow r;
      r.i = i;
      r.j = j;
      r.a = Rat(j + i, j - i);
      r.q = Rat(2, j - i);
      if (i <= 1 && j - i <= 2) {
        bool central = (j - i) % 2 == 0;
        r.symmetric_alias = central ? ProgressionKind::CentralSymmetric : ProgressionKind::NonCentralSymmetric;
        r.alias_a = central ? Rat(0) : Rat(-1);
        r.alias_q = central ? Rat(1) : Rat(2);
      } else {
        for (long m = 1; m <= 6; ++m) {
          std::vector<long> idx;
          for (long k = 0; k < m; ++k) {
            if (k != i && k != j) idx.push_back(k);
          }
          r.labels.push_back(make_object(r.a, r.q, idx).label);
        }
      }
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace apedwards
