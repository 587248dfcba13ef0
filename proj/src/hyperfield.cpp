#include "hfm/hyperfield.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hfm/error.hpp"

namespace hfm {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double initial_tolerance() {
  if (const char* env = std::getenv("HFM_EPS")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> eps{initial_tolerance()};
  return eps;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

void require_same(const Element& a, const Element& b) {
  if (!(a.field() == b.field()))
    throw InputError("hyperfield mismatch: " + a.field().name() + " vs " + b.field().name());
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

double tolerance() { return tolerance_slot().load(std::memory_order_relaxed); }

void set_tolerance(double eps) {
  if (!(eps > 0)) throw InputError("tolerance must be positive");
  tolerance_slot().store(eps, std::memory_order_relaxed);
}

// ---------------------------------------------------------------- Hyperfield

Hyperfield Hyperfield::phase(Involution inv) {
  Hyperfield f(HyperfieldKind::Phase);
  f.involution_ = inv;
  return f;
}

Hyperfield Hyperfield::finite_field(std::int64_t p) {
  if (!is_prime(p)) throw InputError("GF(p) requires a prime, got " + std::to_string(p));
  Hyperfield f(HyperfieldKind::FiniteField);
  f.p_ = p;
  return f;
}

Hyperfield Hyperfield::parse(std::string_view name) {
  if (name == "krasner") return krasner();
  if (name == "sign") return sign();
  if (name == "tropical") return tropical();
  if (name == "triangle") return triangle();
  if (name == "phase") return phase();
  if (name == "phase:identity") return phase(Involution::Identity);
  if (name == "phase:conjugation") return phase(Involution::Conjugation);
  if (name == "rational") return rational();
  if (name.starts_with("gf:")) {
    std::int64_t p = 0;
    auto digits = name.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InputError("bad finite field id: " + std::string(name));
    return finite_field(p);
  }
  throw InputError("unknown hyperfield: " + std::string(name));
}

bool Hyperfield::is_finite() const {
  return kind_ == HyperfieldKind::Krasner || kind_ == HyperfieldKind::Sign ||
         kind_ == HyperfieldKind::FiniteField;
}

bool Hyperfield::is_doubly_distributive() const {
  return kind_ != HyperfieldKind::Triangle && kind_ != HyperfieldKind::Phase;
}

bool Hyperfield::uses_tolerance() const {
  return kind_ == HyperfieldKind::Triangle || kind_ == HyperfieldKind::Phase;
}

std::string Hyperfield::name() const {
  switch (kind_) {
    case HyperfieldKind::Krasner: return "krasner";
    case HyperfieldKind::Sign: return "sign";
    case HyperfieldKind::Tropical: return "tropical";
    case HyperfieldKind::Triangle: return "triangle";
    case HyperfieldKind::Phase:
      return involution_ == Involution::Conjugation ? "phase" : "phase:identity";
    case HyperfieldKind::Rational: return "rational";
    case HyperfieldKind::FiniteField: return "gf:" + std::to_string(p_);
  }
  return "?";
}

Element Hyperfield::zero() const {
  switch (kind_) {
    case HyperfieldKind::Tropical:
    case HyperfieldKind::Rational: return Element::in(*this, Rational(0));
    case HyperfieldKind::Triangle: return Element::triangle(0);
    default: return Element::in(*this, std::int64_t{0});
  }
}

Element Hyperfield::one() const {
  switch (kind_) {
    case HyperfieldKind::Tropical:
    case HyperfieldKind::Rational: return Element::in(*this, Rational(1));
    case HyperfieldKind::Triangle: return Element::triangle(1);
    case HyperfieldKind::Phase: return Element::phase_angle(0, involution_);
    default: return Element::in(*this, std::int64_t{1});
  }
}

std::vector<Element> Hyperfield::elements() const {
  std::vector<Element> out;
  switch (kind_) {
    case HyperfieldKind::Krasner:
      out = {Element::krasner(0), Element::krasner(1)};
      break;
    case HyperfieldKind::Sign:
      out = {Element::sign(0), Element::sign(1), Element::sign(-1)};
      break;
    case HyperfieldKind::FiniteField:
      for (std::int64_t v = 0; v < p_; ++v) out.push_back(Element::residue(v, p_));
      break;
    default:
      throw InputError("elements() requires a finite hyperfield, got " + name());
  }
  return out;
}

std::vector<Element> Hyperfield::units() const {
  auto all = elements();
  std::erase_if(all, [](const Element& x) { return x.is_zero(); });
  return all;
}

// ---------------------------------------------------------------- Element

Element Element::krasner(int b) {
  if (b != 0 && b != 1) throw InputError("Krasner element must be 0 or 1");
  return Element(Hyperfield::krasner(), std::int64_t{b});
}

Element Element::sign(int s) {
  if (s < -1 || s > 1) throw InputError("sign element must be -1, 0 or 1");
  return Element(Hyperfield::sign(), std::int64_t{s});
}

Element Element::tropical(Rational m) {
  m.canonicalize();
  if (sgn(m) < 0) throw InputError("tropical magnitude must be >= 0");
  return Element(Hyperfield::tropical(), std::move(m));
}

Element Element::triangle(double x) {
  if (!(x >= 0) || !std::isfinite(x)) throw InputError("triangle element must be a finite value >= 0");
  return Element(Hyperfield::triangle(), x);
}

Element Element::phase_angle(double radians, Involution inv) {
  if (!std::isfinite(radians)) throw InputError("phase angle must be finite");
  return Element(Hyperfield::phase(inv), normalize_angle(radians));
}

Element Element::phase_zero(Involution inv) { return Element(Hyperfield::phase(inv), std::int64_t{0}); }

Element Element::rational(Rational q) {
  q.canonicalize();
  return Element(Hyperfield::rational(), std::move(q));
}

Element Element::residue(std::int64_t v, std::int64_t p) {
  auto f = Hyperfield::finite_field(p);
  v %= p;
  if (v < 0) v += p;
  return Element(f, v);
}

Element Element::in(const Hyperfield& f, std::int64_t n) {
  switch (f.kind()) {
    case HyperfieldKind::Krasner: return krasner(static_cast<int>(std::clamp<std::int64_t>(n, -2, 2)));
    case HyperfieldKind::Sign: return sign(static_cast<int>(std::clamp<std::int64_t>(n, -2, 2)));
    case HyperfieldKind::FiniteField:
      if (n < 0 || n >= f.characteristic())
        throw InputError("residue out of range [0, " + std::to_string(f.characteristic()) + ")");
      return Element(f, n);
    case HyperfieldKind::Tropical: return tropical(Rational(static_cast<long>(n)));
    case HyperfieldKind::Rational: return rational(Rational(static_cast<long>(n)));
    case HyperfieldKind::Triangle: return triangle(static_cast<double>(n));
    case HyperfieldKind::Phase:
      if (n != 0) throw InputError("phase elements are 0 or {\"angle\": x}");
      return phase_zero(f.involution());
  }
  throw InputError("bad hyperfield");
}

Element Element::in(const Hyperfield& f, Rational q) {
  q.canonicalize();
  switch (f.kind()) {
    case HyperfieldKind::Tropical: return tropical(std::move(q));
    case HyperfieldKind::Rational: return rational(std::move(q));
    case HyperfieldKind::Triangle: return triangle(q.get_d());
    default:
      if (q.get_den() != 1) throw InputError("expected an integer element for " + f.name());
      return in(f, static_cast<std::int64_t>(q.get_num().get_si()));
  }
}

Element Element::in(const Hyperfield& f, double x) {
  switch (f.kind()) {
    case HyperfieldKind::Triangle: return triangle(x);
    case HyperfieldKind::Phase: return phase_angle(x, f.involution());
    case HyperfieldKind::Tropical:
    case HyperfieldKind::Rational:
      if (!std::isfinite(x)) throw InputError("non-finite value");
      return in(f, Rational(x));
    default:
      if (x != std::floor(x)) throw InputError("expected an integer element for " + f.name());
      return in(f, static_cast<std::int64_t>(x));
  }
}

bool Element::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) return v == 0;
        else if constexpr (std::is_same_v<T, Rational>) return sgn(v) == 0;
        else return false;
      },
      value_) ||
         (field_.kind() == HyperfieldKind::Triangle && real() <= tolerance());
}

std::string Element::to_string() const {
  switch (field_.kind()) {
    case HyperfieldKind::Tropical:
    case HyperfieldKind::Rational: return rational().get_str();
    case HyperfieldKind::Triangle: return format_double(real());
    case HyperfieldKind::Phase:
      if (is_zero()) return "0";
      return "e^{" + format_double(real()) + "i}";
    default: return std::to_string(integer());
  }
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.field_ == b.field_)) return false;
  switch (a.field_.kind()) {
    case HyperfieldKind::Triangle: return std::abs(a.real() - b.real()) <= tolerance();
    case HyperfieldKind::Phase: {
      if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
      double d = std::abs(a.real() - b.real());
      return std::min(d, kTwoPi - d) <= tolerance();
    }
    default: return a.value_ == b.value_;
  }
}

bool exact_less(const Element& a, const Element& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index();
  return a.value_ < b.value_;
}

// ---------------------------------------------------------------- arithmetic

Element mul(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& f = a.field();
  switch (f.kind()) {
    case HyperfieldKind::Krasner:
    case HyperfieldKind::Sign: return Element::in(f, a.integer() * b.integer());
    case HyperfieldKind::FiniteField:
      return Element::residue(a.integer() * b.integer() % f.characteristic(), f.characteristic());
    case HyperfieldKind::Tropical:
    case HyperfieldKind::Rational: return Element::in(f, Rational(a.rational() * b.rational()));
    case HyperfieldKind::Triangle: return Element::triangle(a.real() * b.real());
    case HyperfieldKind::Phase:
      if (a.is_zero() || b.is_zero()) return Element::phase_zero(f.involution());
      return Element::phase_angle(a.real() + b.real(), f.involution());
  }
  throw InputError("bad hyperfield");
}

Element neg(const Element& a) {
  const auto& f = a.field();
  switch (f.kind()) {
    case HyperfieldKind::Sign: return Element::sign(static_cast<int>(-a.integer()));
    case HyperfieldKind::FiniteField:
      return Element::residue(f.characteristic() - a.integer(), f.characteristic());
    case HyperfieldKind::Rational: return Element::rational(-a.rational());
    case HyperfieldKind::Phase:
      if (a.is_zero()) return a;
      return Element::phase_angle(a.real() + std::numbers::pi, f.involution());
    default: return a;  // Krasner, tropical and triangle are their own hyperinverses
  }
}

Element inv(const Element& a) {
  if (a.is_zero()) throw DomainError("inverse of 0 in " + a.field().name());
  const auto& f = a.field();
  switch (f.kind()) {
    case HyperfieldKind::Krasner:
    case HyperfieldKind::Sign: return a;
    case HyperfieldKind::FiniteField:
      return Element::residue(mod_inverse(a.integer(), f.characteristic()), f.characteristic());
    case HyperfieldKind::Tropical:
    case HyperfieldKind::Rational: return Element::in(f, Rational(1 / a.rational()));
    case HyperfieldKind::Triangle: return Element::triangle(1 / a.real());
    case HyperfieldKind::Phase: return Element::phase_angle(-a.real(), f.involution());
  }
  throw InputError("bad hyperfield");
}

Element invol(const Element& a) {
  const auto& f = a.field();
  if (f.kind() == HyperfieldKind::Phase && f.involution() == Involution::Conjugation && !a.is_zero())
    return Element::phase_angle(-a.real(), f.involution());
  return a;
}

Element div(const Element& a, const Element& b) { return mul(a, inv(b)); }

Element signed_power(const Element& a, int k) { return (k & 1) ? neg(a) : a; }

// ---------------------------------------------------------------- zero predicates

namespace {

void require_nonempty_shared(std::span<const Element> terms) {
  if (terms.empty()) throw InputError("hypersum of an empty list");
  for (const auto& t : terms) require_same(terms.front(), t);
}

// Largest circular gap between the sorted nonzero angles; 2pi for a single angle.
double max_phase_gap(std::vector<double> angles) {
  std::sort(angles.begin(), angles.end());
  double gap = kTwoPi - (angles.back() - angles.front());
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap;
}

std::vector<double> nonzero_angles(std::span<const Element> terms) {
  std::vector<double> out;
  for (const auto& t : terms)
    if (!t.is_zero()) out.push_back(t.real());
  return out;
}

bool phase_zero_in_sum(std::span<const Element> terms) {
  auto angles = nonzero_angles(terms);
  if (angles.empty()) return true;
  if (angles.size() == 1) return false;
  const double eps = tolerance();
  double gap = max_phase_gap(angles);
  if (gap < std::numbers::pi - eps) return true;
  if (gap > std::numbers::pi + eps) return false;
  // Boundary: every angle must be on one line through the origin, with both directions present.
  double u = angles.front();
  bool plus = false, minus = false;
  for (double a : angles) {
    double d = std::abs(normalize_angle(a - u));
    d = std::min(d, kTwoPi - d);
    if (d <= eps) plus = true;
    else if (std::abs(d - std::numbers::pi) <= eps) minus = true;
    else return false;
  }
  return plus && minus;
}

}  // namespace

bool zero_in_sum(std::span<const Element> terms) {
  require_nonempty_shared(terms);
  const auto& f = terms.front().field();
  switch (f.kind()) {
    case HyperfieldKind::Krasner: {
      auto nonzero = std::count_if(terms.begin(), terms.end(), [](const Element& x) { return !x.is_zero(); });
      return nonzero != 1;
    }
    case HyperfieldKind::Sign: {
      bool pos = false, negv = false;
      for (const auto& t : terms) {
        pos |= t.integer() > 0;
        negv |= t.integer() < 0;
      }
      return pos == negv;
    }
    case HyperfieldKind::Tropical: {
      Rational best = 0;
      int count = 0;
      for (const auto& t : terms) {
        int c = cmp(t.rational(), best);
        if (c > 0) {
          best = t.rational();
          count = 1;
        } else if (c == 0) {
          ++count;
        }
      }
      return sgn(best) == 0 || count >= 2;
    }
    case HyperfieldKind::Triangle: {
      double total = 0, top = 0;
      for (const auto& t : terms) {
        total += t.real();
        top = std::max(top, t.real());
      }
      return top <= total - top + tolerance();
    }
    case HyperfieldKind::Phase: return phase_zero_in_sum(terms);
    case HyperfieldKind::Rational: {
      Rational s = 0;
      for (const auto& t : terms) s += t.rational();
      return sgn(s) == 0;
    }
    case HyperfieldKind::FiniteField: {
      std::int64_t s = 0;
      for (const auto& t : terms) s = (s + t.integer()) % f.characteristic();
      return s == 0;
    }
  }
  return false;
}

bool member_of_sum(const Element& z, std::span<const Element> terms) {
  require_nonempty_shared(terms);
  require_same(z, terms.front());
  std::vector<Element> extended(terms.begin(), terms.end());
  extended.push_back(neg(z));
  return zero_in_sum(extended);
}

double phase_zero_margin(std::span<const Element> terms) {
  require_nonempty_shared(terms);
  if (terms.front().field().kind() != HyperfieldKind::Phase)
    throw InputError("phase_zero_margin requires phase elements");
  auto angles = nonzero_angles(terms);
  if (angles.empty()) return std::numbers::pi;
  return std::numbers::pi - max_phase_gap(angles);
}

}  // namespace hfm
