#include "apedwards/quadext.hpp"

#include "apedwards/error.hpp"

namespace apedwards {

std::variant<Rat, QuadExtElem> QuadExtElem::make(const Rat& base, const Rat& coef, const Rat& d) {
  if (d.is_zero() || coef.is_zero()) return base;
  // sqrt(n/m) = sqrt(n*m)/m, then n*m = f^2 * core.
  Int nm = d.num() * d.den();
  Int core = squarefree_part(nm);
  auto f = int_sqrt_exact(nm / core);
  if (!f) throw Error(ErrorCode::Internal, "squarefree decomposition failed");
  Rat scaled = coef * Rat(*f, d.den());
  if (core == 1) return base + scaled;
  return QuadExtElem(base, scaled, core);
}

QuadExtElem::QuadExtElem(Rat base, Rat coef, Int disc)
    : base_(std::move(base)), coef_(std::move(coef)), disc_(std::move(disc)) {
  if (disc_ == 0 || disc_ == 1 || squarefree_part(disc_) != disc_) {
    throw Error(ErrorCode::InvalidArgument, "quadratic field discriminant must be squarefree and not 0 or 1");
  }
}

QuadExtElem QuadExtElem::parse(std::string_view text) {
  const std::string_view marker = "*sqrt(";
  auto pos = text.find(marker);
  if (pos == std::string_view::npos || text.back() != ')') {
    throw Error(ErrorCode::Parse, "expected a+b*sqrt(D): '" + std::string(text) + "'");
  }
  std::string_view lhs = text.substr(0, pos);
  std::string_view disc = text.substr(pos + marker.size(), text.size() - pos - marker.size() - 1);
  std::size_t split = lhs.find_first_of("+-", 1);
  if (split == std::string_view::npos) {
    throw Error(ErrorCode::Parse, "expected a+b*sqrt(D): '" + std::string(text) + "'");
  }
  Rat base = Rat::parse(lhs.substr(0, split));
  Rat coef = Rat::parse(lhs.substr(split + 1));
  if (lhs[split] == '-') coef = -coef;
  Rat d = Rat::parse(disc);
  if (!d.is_integer()) throw Error(ErrorCode::Parse, "discriminant must be an integer");
  return QuadExtElem(base, coef, d.num());
}

void QuadExtElem::check_field(const QuadExtElem& o) const {
  if (disc_ != o.disc_) {
    throw Error(ErrorCode::FieldMismatch,
                "elements of Q(sqrt(" + to_string(disc_) + ")) and Q(sqrt(" + to_string(o.disc_) + ")) do not mix");
  }
}

Rat QuadExtElem::norm() const { return base_ * base_ - Rat(disc_) * coef_ * coef_; }

QuadExtElem QuadExtElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in quadratic field");
  Rat n = norm();
  return {base_ / n, -coef_ / n, disc_};
}

std::optional<QuadExtElem> QuadExtElem::sqrt() const {
  if (coef_.is_zero()) {
    if (auto r = is_square(base_)) return QuadExtElem(*r, Rat(0), disc_);
    if (auto r = is_square(base_ / Rat(disc_))) return QuadExtElem(Rat(0), *r, disc_);
    return std::nullopt;
  }
  auto n = is_square(norm());
  if (!n) return std::nullopt;
  for (const Rat& cand : {(base_ + *n) / Rat(2), (base_ - *n) / Rat(2)}) {
    if (cand.is_zero()) continue;
    if (auto p = is_square(cand)) {
      return QuadExtElem(*p, coef_ / (Rat(2) * *p), disc_);
    }
  }
  return std::nullopt;
}

std::string QuadExtElem::str() const {
  std::string out = base_.str();
  out += coef_.sign() < 0 ? "-" : "+";
  out += coef_.abs().str();
  out += "*sqrt(" + to_string(disc_) + ")";
  return out;
}

QuadExtElem& QuadExtElem::operator+=(const QuadExtElem& o) {
  check_field(o);
  base_ += o.base_;
  coef_ += o.coef_;
  return *this;
}

QuadExtElem& QuadExtElem::operator-=(const QuadExtElem& o) {
  check_field(o);
  base_ -= o.base_;
  coef_ -= o.coef_;
  return *this;
}

QuadExtElem& QuadExtElem::operator*=(const QuadExtElem& o) {
  check_field(o);
  Rat b = base_ * o.base_ + Rat(disc_) * coef_ * o.coef_;
  Rat c = base_ * o.coef_ + coef_ * o.base_;
  base_ = std::move(b);
  coef_ = std::move(c);
  return *this;
}

QuadExtElem& QuadExtElem::operator/=(const QuadExtElem& o) {
  check_field(o);
  return *this *= o.inverse();
}

// ---------------------------------------------------------------------------

namespace {

// Lifts both operands into a common representation: either both rational,
// or both QuadExtElem over the same field.
template <class Op>
FieldElem combine(const FieldElem& a, const FieldElem& b, Op op) {
  const auto* qa = std::get_if<QuadExtElem>(&a.value());
  const auto* qb = std::get_if<QuadExtElem>(&b.value());
  if (!qa && !qb) return FieldElem(op(std::get<Rat>(a.value()), std::get<Rat>(b.value())));
  const Int& disc = qa ? qa->disc() : qb->disc();
  auto lift = [&](const FieldElem& x) {
    if (const auto* q = std::get_if<QuadExtElem>(&x.value())) return *q;
    return QuadExtElem(std::get<Rat>(x.value()), Rat(0), disc);
  };
  return FieldElem(op(lift(a), lift(b)));
}

}  // namespace

bool FieldElem::is_rational() const { return as_rational().has_value(); }

std::optional<Rat> FieldElem::as_rational() const {
  if (const auto* r = std::get_if<Rat>(&v_)) return *r;
  const auto& q = std::get<QuadExtElem>(v_);
  if (q.is_rational()) return q.base();
  return std::nullopt;
}

std::optional<Int> FieldElem::disc() const {
  if (const auto* q = std::get_if<QuadExtElem>(&v_)) return q->disc();
  return std::nullopt;
}

bool FieldElem::is_zero() const {
  if (const auto* r = std::get_if<Rat>(&v_)) return r->is_zero();
  return std::get<QuadExtElem>(v_).is_zero();
}

std::optional<FieldElem> FieldElem::sqrt(const std::optional<Int>& field_disc) const {
  std::optional<Int> d = disc();
  if (d && field_disc && *d != *field_disc) {
    throw Error(ErrorCode::FieldMismatch, "element does not lie in the requested field");
  }
  if (!d) d = field_disc;
  if (!d) {
    if (auto r = is_square(std::get<Rat>(v_))) return FieldElem(*r);
    return std::nullopt;
  }
  QuadExtElem q = std::holds_alternative<QuadExtElem>(v_) ? std::get<QuadExtElem>(v_)
                                                          : QuadExtElem(std::get<Rat>(v_), Rat(0), *d);
  if (auto r = q.sqrt()) return FieldElem(*r);
  return std::nullopt;
}

std::string FieldElem::str() const {
  if (const auto* r = std::get_if<Rat>(&v_)) return r->str();
  return std::get<QuadExtElem>(v_).str();
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  *this = combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
  return *this;
}
FieldElem& FieldElem::operator-=(const FieldElem& o) {
  *this = combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
  return *this;
}
FieldElem& FieldElem::operator*=(const FieldElem& o) {
  *this = combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
  return *this;
}
FieldElem& FieldElem::operator/=(const FieldElem& o) {
  *this = combine(*this, o, [](const auto& x, const auto& y) { return x / y; });
  return *this;
}

FieldElem FieldElem::operator-() const {
  return std::visit([](const auto& x) { return FieldElem(-x); }, v_);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  auto ra = a.as_rational();
  auto rb = b.as_rational();
  if (ra && rb) return *ra == *rb;
  if (ra || rb) return false;
  return std::get<QuadExtElem>(a.value()) == std::get<QuadExtElem>(b.value());
}

FieldElem parse_field_elem(std::string_view text) {
  if (text.find("sqrt(") != std::string_view::npos) return QuadExtElem::parse(text);
  return Rat::parse(text);
}

}  // namespace apedwards
