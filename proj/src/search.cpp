#include "apedwards/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "apedwards/error.hpp"

namespace apedwards {

namespace {

using i128 = __int128;
using u64 = std::uint64_t;

// One quadric alpha X0^2 + beta X1^2 + gamma X_k^2 = 0.
struct Pencil {
  std::size_t k;
  Int alpha, beta, gamma;
};

std::vector<Pencil> pencils_of(const QuadricModel& model) {
  if (model.variables < 3 || model.quadrics.empty()) {
    throw Error(ErrorCode::Unsupported, "search needs at least one quadric in three or more variables");
  }
  std::vector<Pencil> out;
  std::vector<bool> used(model.variables, false);
  for (const auto& row : model.quadrics) {
    std::optional<std::size_t> k;
    for (std::size_t i = 2; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      if (k) throw Error(ErrorCode::Unsupported, "each quadric may involve only X0, X1 and one further variable");
      k = i;
    }
    if (!k || used[*k]) throw Error(ErrorCode::Unsupported, "every quadric must own a distinct variable X_k, k >= 2");
    used[*k] = true;
    out.push_back({*k, row[0], row[1], row[*k]});
  }
  for (std::size_t i = 2; i < model.variables; ++i) {
    if (!used[i]) throw Error(ErrorCode::Unsupported, "variable X" + std::to_string(i) + " is unconstrained");
  }
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long mod_small(const Int& v, long p) { return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p))); }

std::array<bool, 64> square_mod64() {
  std::array<bool, 64> t{};
  for (unsigned i = 0; i < 64; ++i) t[(i * i) % 64] = true;
  return t;
}

const std::array<bool, 64> kSquareMod64 = square_mod64();

bool isqrt_exact(u64 v, u64& r) {
  if (!kSquareMod64[v & 63]) return false;
  r = static_cast<u64>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

std::vector<Int> canonical(std::vector<Int> p) {
  for (const auto& c : p) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : p) x = -x;
    }
    break;
  }
  return p;
}

// All sign variants of a non-negative tuple, in canonical form.
void expand_signs(const std::vector<Int>& base, std::set<std::vector<Int>>& out) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] != 0) nz.push_back(i);
  }
  if (nz.empty()) return;
  // The first nonzero coordinate stays positive.
  std::size_t free_bits = nz.size() - 1;
  for (u64 mask = 0; mask < (u64{1} << free_bits); ++mask) {
    std::vector<Int> p = base;
    for (std::size_t b = 0; b < free_bits; ++b) {
      if ((mask >> b) & 1U) p[nz[b + 1]] = -p[nz[b + 1]];
    }
    out.insert(canonical(std::move(p)));
  }
}

bool fits_fast(const std::vector<Pencil>& ps, long bound) {
  if (bound >= (1L << 31)) return false;
  Int lim = Int(1) << 40;
  for (const auto& p : ps) {
    if (abs(p.alpha) >= lim || abs(p.beta) >= lim || abs(p.gamma) >= lim) return false;
  }
  return true;
}

std::string fingerprint(const QuadricModel& model, const SearchOptions& opts, unsigned shards) {
  std::string s = "v1;bound=" + std::to_string(opts.bound) + ";shards=" + std::to_string(shards) + ";";
  for (const auto& row : model.quadrics) {
    for (const auto& c : row) s += c.get_str() + ",";
    s += ";";
  }
  return s;
}

struct ShardOutput {
  std::vector<std::vector<Int>> raw;  // non-negative solutions
  u64 pairs = 0, rejected = 0, tests = 0;
};

class Enumerator {
 public:
  Enumerator(const QuadricModel& model, const SearchOptions& opts)
      : model_(model), opts_(opts), pencils_(pencils_of(model)), fast_(fits_fast(pencils_, opts.bound)) {
    Int gamma_prod = 1;
    for (const auto& p : pencils_) gamma_prod *= abs(p.gamma);
    gamma_prod_ = gamma_prod;
    for (long p : opts.sieve_primes) {
      bool divides = false;
      for (const auto& row : model.quadrics) {
        for (const auto& c : row) {
          if (c != 0 && mod_small(c, p) == 0) divides = true;
        }
      }
      if (!is_prime(p) || p == 2 || divides) continue;
      sieves_.push_back(mod_p_sieve(model, p));
      used_primes_.push_back(p);
    }
    for (const auto& p : pencils_) {
      fa_.push_back(static_cast<i128>(p.alpha.get_si()));
      fb_.push_back(static_cast<i128>(p.beta.get_si()));
      fg_.push_back(static_cast<i128>(p.gamma.get_si()));
    }
  }

  const std::vector<long>& used_primes() const { return used_primes_; }

  ShardOutput run(long x0_lo, long x0_hi) const {
    ShardOutput out;
    const long bound = opts_.bound;
    const std::size_t np = pencils_.size();
    std::vector<const std::uint8_t*> rows(sieves_.size());
    std::vector<long> col(sieves_.size());
    std::vector<i128> a0(np);
    std::vector<Int> a0_big(np);
    std::vector<u64> roots(np);
    std::vector<Int> roots_big(np);
    const u64 bound_sq = static_cast<u64>(bound) * static_cast<u64>(bound);
    for (long x0 = x0_lo; x0 < x0_hi; ++x0) {
      for (std::size_t s = 0; s < sieves_.size(); ++s) {
        rows[s] = sieves_[s].ok.data() + static_cast<std::size_t>((x0 % sieves_[s].p) * sieves_[s].p);
        col[s] = 0;
      }
      for (std::size_t i = 0; i < np; ++i) {
        if (fast_) {
          a0[i] = fa_[i] * static_cast<i128>(x0) * x0;
        } else {
          a0_big[i] = pencils_[i].alpha * Int(x0) * Int(x0);
        }
      }
      for (long x1 = 0; x1 <= bound; ++x1) {
        bool pass = true;
        for (std::size_t s = 0; s < sieves_.size(); ++s) {
          if (!rows[s][col[s]]) pass = false;
          if (++col[s] == sieves_[s].p) col[s] = 0;
        }
        if (x0 == 0 && x1 == 0) continue;
        ++out.pairs;
        if (!pass) {
          ++out.rejected;
          continue;
        }
        if (!coprime_admissible(x0, x1)) continue;
        ++out.tests;
        bool ok = true;
        if (fast_) {
          i128 x1sq = static_cast<i128>(x1) * x1;
          for (std::size_t i = 0; i < np && ok; ++i) {
            i128 num = -(a0[i] + fb_[i] * x1sq);
            if (num % fg_[i] != 0) {
              ok = false;
              break;
            }
            i128 v = num / fg_[i];
            if (v < 0 || v > static_cast<i128>(bound_sq)) {
              ok = false;
              break;
            }
            ok = isqrt_exact(static_cast<u64>(v), roots[i]);
          }
        } else {
          Int x1sq = Int(x1) * Int(x1);
          Int bsq = Int(bound) * Int(bound);
          for (std::size_t i = 0; i < np && ok; ++i) {
            Int num = -(a0_big[i] + pencils_[i].beta * x1sq);
            if (!mpz_divisible_p(num.get_mpz_t(), pencils_[i].gamma.get_mpz_t())) {
              ok = false;
              break;
            }
            Int v = num / pencils_[i].gamma;
            if (v < 0 || v > bsq) {
              ok = false;
              break;
            }
            auto r = int_sqrt_exact(v);
            if (!r) {
              ok = false;
              break;
            }
            roots_big[i] = *r;
          }
        }
        if (!ok) continue;
        std::vector<Int> p(model_.variables);
        p[0] = x0;
        p[1] = x1;
        for (std::size_t i = 0; i < np; ++i) {
          p[pencils_[i].k] = fast_ ? Int(static_cast<unsigned long>(roots[i])) : roots_big[i];
        }
        Int g = 0;
        for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) out.raw.push_back(std::move(p));
      }
    }
    return out;
  }

 private:
  // A common prime of X0 and X1 that does not divide every gamma forces it
  // into all coordinates, so such pairs give no primitive point.
  bool coprime_admissible(long x0, long x1) const {
    long g = std::gcd(x0, x1);
    if (g == 1) return true;
    Int rest = g;
    Int common;
    for (;;) {
      mpz_gcd(common.get_mpz_t(), rest.get_mpz_t(), gamma_prod_.get_mpz_t());
      if (common == 1) break;
      rest /= common;
    }
    return rest == 1;
  }

  const QuadricModel& model_;
  const SearchOptions& opts_;
  std::vector<Pencil> pencils_;
  bool fast_;
  Int gamma_prod_;
  std::vector<SieveTable> sieves_;
  std::vector<long> used_primes_;
  std::vector<i128> fa_, fb_, fg_;
};

void write_checkpoint(const std::string& path, const nlohmann::json& j) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw Error(ErrorCode::Io, "cannot write checkpoint " + tmp);
    f << j.dump();
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json point_json(const std::vector<Int>& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p) a.push_back(c.get_str());
  return a;
}

std::vector<Int> point_from_json(const nlohmann::json& a) {
  std::vector<Int> p;
  for (const auto& c : a) p.emplace_back(c.get<std::string>());
  return p;
}

}  // namespace

double SieveTable::density() const {
  if (ok.empty()) return 0;
  return static_cast<double>(std::count(ok.begin(), ok.end(), 1)) / static_cast<double>(ok.size());
}

SieveTable mod_p_sieve(const QuadricModel& model, long p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "sieve modulus must be an odd prime");
  auto ps = pencils_of(model);
  for (const auto& row : model.quadrics) {
    for (const auto& c : row) {
      if (c != 0 && mod_small(c, p) == 0) {
        throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " divides a model coefficient");
      }
    }
  }
  std::vector<std::uint8_t> is_sq(static_cast<std::size_t>(p), 0);
  for (long x = 0; x < p; ++x) is_sq[static_cast<std::size_t>((x * x) % p)] = 1;
  SieveTable t;
  t.p = p;
  t.ok.assign(static_cast<std::size_t>(p * p), 1);
  for (const auto& pen : ps) {
    long a = mod_small(pen.alpha, p), b = mod_small(pen.beta, p), g = mod_small(pen.gamma, p);
    long ginv = 1;
    for (long e = p - 2, base = g; e > 0; e >>= 1, base = base * base % p) {
      if (e & 1) ginv = ginv * base % p;
    }
    for (long x0 = 0; x0 < p; ++x0) {
      for (long x1 = 0; x1 < p; ++x1) {
        long v = (p - (a * x0 % p * x0 + b * x1 % p * x1) % p) % p * ginv % p;
        if (!is_sq[static_cast<std::size_t>(v)]) t.ok[static_cast<std::size_t>(x0 * p + x1)] = 0;
      }
    }
  }
  return t;
}

std::vector<std::vector<Int>> SearchResult::nontrivial() const {
  std::vector<std::vector<Int>> out;
  for (const auto& p : points) {
    if (!is_trivial_point(p)) out.push_back(p);
  }
  return out;
}

bool is_trivial_point(const std::vector<Int>& p) {
  return std::all_of(p.begin(), p.end(), [](const Int& c) { return abs(c) == 1; });
}

SearchResult enumerate(const QuadricModel& model, const SearchOptions& opts) {
  if (opts.bound < 1) throw Error(ErrorCode::InvalidArgument, "height bound must be at least 1");
  auto start = std::chrono::steady_clock::now();
  Enumerator en(model, opts);
  const long span = opts.bound + 1;  // X0 in [0, bound]
  unsigned workers = std::max(1U, opts.workers);
  unsigned shards = opts.shards;
  if (shards == 0) shards = static_cast<unsigned>(std::min<long>(span, std::max<long>(64, 8L * workers)));
  shards = static_cast<unsigned>(std::min<long>(shards, span));

  SearchResult result;
  result.shards_total = shards;
  std::vector<bool> done(shards, false);
  std::vector<std::vector<Int>> raw;
  const std::string fp = fingerprint(model, opts, shards);

  if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path)) {
    std::ifstream f(opts.checkpoint_path);
    nlohmann::json j;
    try {
      f >> j;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::Io, std::string("unreadable checkpoint: ") + e.what());
    }
    if (j.value("fingerprint", "") != fp) {
      throw Error(ErrorCode::InvalidArgument, "checkpoint " + opts.checkpoint_path + " belongs to a different search");
    }
    for (const auto& s : j["completed"]) {
      done[s.get<unsigned>()] = true;
      ++result.shards_resumed;
    }
    for (const auto& p : j["points"]) raw.push_back(point_from_json(p));
    result.stats.pairs = j["stats"]["pairs"].get<u64>();
    result.stats.sieve_rejected = j["stats"]["sieve_rejected"].get<u64>();
    result.stats.square_tests = j["stats"]["square_tests"].get<u64>();
  }

  std::vector<unsigned> todo;
  for (unsigned s = 0; s < shards; ++s) {
    if (!done[s]) todo.push_back(s);
  }
  if (opts.max_shards > 0 && todo.size() > opts.max_shards) todo.resize(opts.max_shards);

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto shard_range = [&](unsigned s) {
    long lo = static_cast<long>(static_cast<__int128>(span) * s / shards);
    long hi = static_cast<long>(static_cast<__int128>(span) * (s + 1) / shards);
    return std::pair<long, long>{lo, hi};
  };
  auto worker = [&]() {
    for (;;) {
      std::size_t n = next.fetch_add(1);
      if (n >= todo.size()) return;
      unsigned s = todo[n];
      auto [lo, hi] = shard_range(s);
      ShardOutput out = en.run(lo, hi);
      std::lock_guard<std::mutex> lock(mu);
      done[s] = true;
      for (auto& p : out.raw) raw.push_back(std::move(p));
      result.stats.pairs += out.pairs;
      result.stats.sieve_rejected += out.rejected;
      result.stats.square_tests += out.tests;
      if (!opts.checkpoint_path.empty()) {
        nlohmann::json j;
        j["fingerprint"] = fp;
        j["completed"] = nlohmann::json::array();
        for (unsigned t = 0; t < shards; ++t) {
          if (done[t]) j["completed"].push_back(t);
        }
        j["points"] = nlohmann::json::array();
        for (const auto& p : raw) j["points"].push_back(point_json(p));
        j["stats"] = {{"pairs", result.stats.pairs},
                      {"sieve_rejected", result.stats.sieve_rejected},
                      {"square_tests", result.stats.square_tests}};
        write_checkpoint(opts.checkpoint_path, j);
      }
    }
  };
  unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, todo.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::set<std::vector<Int>> pts;
  for (const auto& p : raw) expand_signs(p, pts);
  result.points.assign(pts.begin(), pts.end());
  result.trivial_count = static_cast<std::size_t>(std::count_if(result.points.begin(), result.points.end(),
                                                                [](const auto& p) { return is_trivial_point(p); }));
  result.shards_done = static_cast<unsigned>(std::count(done.begin(), done.end(), true));
  result.exhaustive = result.shards_done == shards;
  result.stats.sieve_primes_used = en.used_primes();
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::uint64_t count_positive_q(long h) {
  if (h < 1) return 0;
  // 2 * sum_{n<=h} phi(n) - 1 (the pair 1/1 is counted once).
  std::vector<long> phi(static_cast<std::size_t>(h + 1));
  std::iota(phi.begin(), phi.end(), 0);
  for (long p = 2; p <= h; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;
    for (long k = p; k <= h; k += p) phi[static_cast<std::size_t>(k)] -= phi[static_cast<std::size_t>(k)] / p;
  }
  std::uint64_t sum = 0;
  for (long n = 1; n <= h; ++n) sum += static_cast<std::uint64_t>(phi[static_cast<std::size_t>(n)]);
  return 2 * sum - 1;
}

std::vector<Rat> positive_q_of_height(long h) {
  std::vector<Rat> out;
  for (long n = 1; n <= h; ++n) {
    for (long d = 1; d <= h; ++d) {
      if (std::gcd(n, d) == 1) out.emplace_back(n, d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> excluded_q(ProgressionKind kind) {
  switch (kind) {
    case ProgressionKind::CentralSymmetric: return {Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 4)};
    case ProgressionKind::NonCentralSymmetric: return {Rat(2), Rat(2, 3), Rat(2, 5), Rat(2, 7)};
    case ProgressionKind::NonSymmetric: break;
  }
  throw Error(ErrorCode::InvalidArgument, "q exclusions are defined for symmetric progressions");
}

ScanReport batch_q_scan(ProgressionKind kind, long q_height, const SearchOptions& opts, bool scan,
                        const std::function<void(const Rat&, const SearchResult&)>& progress) {
  if (q_height < 1) throw Error(ErrorCode::InvalidArgument, "q height bound must be at least 1");
  ScanReport rep;
  rep.kind = kind;
  rep.q_height = q_height;
  rep.point_bound = opts.bound;
  auto excluded = excluded_q(kind);
  auto qs = positive_q_of_height(q_height);
  rep.q_total = qs.size();
  std::vector<Rat> admissible;
  for (const auto& q : qs) {
    if (std::find(excluded.begin(), excluded.end(), q) == excluded.end()) admissible.push_back(q);
  }
  rep.q_admissible = admissible.size();
  if (!scan) return rep;

  std::set<std::string> completed;
  nlohmann::json state;
  if (!opts.checkpoint_path.empty() && std::filesystem::exists(opts.checkpoint_path)) {
    std::ifstream f(opts.checkpoint_path);
    try {
      f >> state;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::Io, std::string("unreadable checkpoint: ") + e.what());
    }
    if (state.value("kind", "") != kind_name(kind) || state.value("bound", 0L) != opts.bound ||
        state.value("q_height", 0L) != q_height) {
      throw Error(ErrorCode::InvalidArgument, "checkpoint " + opts.checkpoint_path + " belongs to a different scan");
    }
    for (const auto& q : state["completed"]) completed.insert(q.get<std::string>());
    for (const auto& h : state["hits"]) {
      ScanHit hit{Rat::parse(h["q"].get<std::string>()), {}};
      for (const auto& p : h["points"]) hit.points.push_back(point_from_json(p));
      rep.hits.push_back(std::move(hit));
    }
  } else {
    state = {{"kind", kind_name(kind)}, {"bound", opts.bound}, {"q_height", q_height},
             {"completed", nlohmann::json::array()}, {"hits", nlohmann::json::array()}};
  }
  SearchOptions inner = opts;
  inner.checkpoint_path.clear();
  inner.max_shards = 0;
  unsigned budget = opts.max_shards;  // here: max number of q values
  for (const auto& q : admissible) {
    if (completed.count(q.str())) {
      ++rep.q_scanned;
      continue;
    }
    if (budget > 0 && rep.q_scanned >= budget + completed.size()) break;
    SearchResult r = enumerate(d1234_model(kind, q), inner);
    ++rep.q_scanned;
    rep.stats.pairs += r.stats.pairs;
    rep.stats.sieve_rejected += r.stats.sieve_rejected;
    rep.stats.square_tests += r.stats.square_tests;
    rep.stats.seconds += r.stats.seconds;
    auto extra = r.nontrivial();
    if (!extra.empty()) {
      nlohmann::json h{{"q", q.str()}, {"points", nlohmann::json::array()}};
      for (const auto& p : extra) h["points"].push_back(point_json(p));
      state["hits"].push_back(h);
      rep.hits.push_back({q, extra});
    }
    if (progress) progress(q, r);
    if (!opts.checkpoint_path.empty()) {
      state["completed"].push_back(q.str());
      write_checkpoint(opts.checkpoint_path, state);
    }
  }
  return rep;
}

QuadricModel planted_model(const std::vector<Int>& point, std::uint64_t seed) {
  if (point.size() < 3) throw Error(ErrorCode::InvalidArgument, "planted point needs at least three coordinates");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-9, 9);
  QuadricModel m;
  m.variables = point.size();
  const Int x0 = point[0] * point[0], x1 = point[1] * point[1];
  for (std::size_t k = 2; k < point.size(); ++k) {
    const Int xk = point[k] * point[k];
    for (;;) {
      Int c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
      Int alpha = x1 * c1 + xk * c2;
      Int beta = -x0 * c1 + xk * c3;
      Int gamma = -x0 * c2 - x1 * c3;
      if (alpha == 0 || beta == 0 || gamma == 0) continue;
      std::vector<Rat> row(point.size(), Rat(0));
      row[0] = Rat(alpha);
      row[1] = Rat(beta);
      row[k] = Rat(gamma);
      std::vector<Int> prim = primitive_integer_vector(row);
      if (prim[0] < 0) {
        for (auto& c : prim) c = -c;
      }
      m.quadrics.push_back(std::move(prim));
      break;
    }
  }
  return m;
}

}  // namespace apedwards
