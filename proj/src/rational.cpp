#include "apedwards/rational.hpp"

#include <algorithm>
#include <cctype>

#include "apedwards/error.hpp"

namespace apedwards {

namespace {

constexpr unsigned long kTrialBound = 1UL << 20;

bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(s, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "undefined rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::from_mpq(const mpq_class& q) {
  Rat r;
  r.q_ = q;
  r.q_.canonicalize();
  return r;
}

Rat Rat::parse(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  Int num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(t, num)) throw Error(ErrorCode::Parse, "cannot parse rational '" + std::string(text) + "'");
  } else {
    std::string_view d = t.substr(slash + 1);
    if (!parse_integer(t.substr(0, slash), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
        !parse_integer(d, den)) {
      throw Error(ErrorCode::Parse, "cannot parse rational '" + std::string(text) + "'");
    }
  }
  return Rat(num, den);
}

Rat Rat::abs() const {
  Rat r;
  r.q_ = ::abs(q_);
  return r;
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rat(den(), num());
}

Rat Rat::pow(unsigned e) const {
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat rat_reduce(const Int& num, const Int& den) { return Rat(num, den); }

std::optional<Int> int_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> is_square(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = int_sqrt_exact(r.num());
  if (!n) return std::nullopt;
  auto d = int_sqrt_exact(r.den());
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

Int height(const Rat& r) {
  Int n = ::abs(r.num());
  Int d = r.den();
  return n > d ? n : d;
}

std::vector<Int> primitive_integer_vector(std::span<const Rat> coords) {
  Int l = 1;
  for (const auto& c : coords) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  std::vector<Int> out;
  out.reserve(coords.size());
  Int g = 0;
  for (const auto& c : coords) {
    Int v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "projective point with all coordinates zero");
  for (auto& v : out) v /= g;
  return out;
}

Int projective_height(std::span<const Rat> coords) {
  Int h = 0;
  for (const auto& v : primitive_integer_vector(coords)) {
    Int a = ::abs(v);
    if (a > h) h = a;
  }
  return h;
}

std::vector<std::pair<Int, unsigned>> factor_small(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  n = ::abs(n);
  if (n <= 1) return out;
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(Int(p), e);
  };
  take(2);
  for (unsigned long p = 3; p < kTrialBound; p += 2) {
    if (Int(p) * p > n) break;
    take(p);
  }
  if (n > 1) {
    // Remaining cofactor has no factor below the trial bound.
    if (auto r = int_sqrt_exact(n)) {
      out.emplace_back(*r, 2);
    } else {
      out.emplace_back(n, 1);
    }
  }
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "squarefree part of zero");
  Int out = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_small(n)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace apedwards
