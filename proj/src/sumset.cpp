#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hfm/error.hpp"
#include "hfm/hyperfield.hpp"

namespace hfm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

double norm_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double circ_dist(double a, double b) {
  double d = std::abs(norm_angle(a - b));
  return std::min(d, kTwoPi - d);
}

// Offset of x past the arc start, in [0, 2pi).
double rel(double x, double start) { return norm_angle(x - start); }

bool strictly_inside(double x, const SumSet::Arc& arc, double eps) {
  double r = rel(x, arc.start);
  return r > eps && r < arc.length - eps;
}

void dedupe_finite(std::vector<Element>& items) {
  std::sort(items.begin(), items.end(), exact_less);
  items.erase(std::unique(items.begin(), items.end(),
                          [](const Element& a, const Element& b) { return !exact_less(a, b) && !exact_less(b, a); }),
              items.end());
}

using Interval = std::pair<double, double>;

void merge_intervals(std::vector<Interval>& parts) {
  const double eps = tolerance();
  std::sort(parts.begin(), parts.end());
  std::vector<Interval> out;
  for (const auto& p : parts) {
    if (!out.empty() && p.first <= out.back().second + eps)
      out.back().second = std::max(out.back().second, p.second);
    else
      out.push_back(p);
  }
  parts = std::move(out);
}

Interval interval_plus(const Interval& iv, double b) {
  double lo = iv.first <= b && b <= iv.second ? 0.0 : (b < iv.first ? iv.first - b : b - iv.second);
  return {lo, iv.second + b};
}

// The binary phase sum of nonzero angles a and b, added to `out`.
void phase_binary(double a, double b, SumSet::Arcs& out) {
  const double eps = tolerance();
  double d = norm_angle(b - a);
  if (circ_dist(a, b) <= eps) {
    out.points.push_back(a);
  } else if (std::abs(d - kPi) <= eps) {
    out.zero = true;
    out.points.push_back(a);
    out.points.push_back(b);
  } else if (d < kPi) {
    out.arcs.push_back({a, d});
  } else {
    out.arcs.push_back({b, kTwoPi - d});
  }
}

// Union over theta in the open arc of theta + beta (beta nonzero).
void phase_arc_plus(const SumSet::Arc& arc, double beta, SumSet::Arcs& out) {
  double t = norm_angle(arc.start - beta);
  double lo = t, hi = t + arc.length;
  for (int k = 0; k < 4; ++k) {
    double wlo = std::max(lo, k * kPi), whi = std::min(hi, (k + 1) * kPi);
    if (whi - wlo <= tolerance()) continue;
    if (k % 2 == 0)
      out.arcs.push_back({beta, whi - k * kPi});
    else
      out.arcs.push_back({beta + wlo - (k - 1) * kPi, kTwoPi - (wlo - (k - 1) * kPi)});
  }
  for (int j = 1; j <= 3; ++j) {
    if (!(lo + tolerance() < j * kPi && j * kPi < hi - tolerance())) continue;
    out.points.push_back(beta);
    if (j % 2 == 1) {
      out.zero = true;
      out.points.push_back(beta + kPi);
    }
  }
}

void canonicalize_arcs(SumSet::Arcs& s) {
  const double eps = tolerance();
  for (auto& p : s.points) p = norm_angle(p);
  std::erase_if(s.arcs, [&](const SumSet::Arc& a) { return a.length <= 2 * eps; });
  for (auto& a : s.arcs) {
    a.start = norm_angle(a.start);
    a.length = std::min(a.length, kTwoPi);
  }
  auto has_point = [&](double x) {
    return std::any_of(s.points.begin(), s.points.end(), [&](double p) { return circ_dist(p, x) <= eps; });
  };

  if (!s.full && !s.arcs.empty()) {
    // Cut the circle at an arc start not strictly covered by another arc.
    std::optional<double> cut;
    for (const auto& a : s.arcs) {
      bool covered = std::any_of(s.arcs.begin(), s.arcs.end(),
                                 [&](const SumSet::Arc& b) { return strictly_inside(a.start, b, eps); });
      if (!covered) {
        cut = a.start;
        break;
      }
    }
    if (!cut) {
      s.full = true;
    } else {
      // Arcs in cut-relative coordinates, then a linear sweep.
      std::vector<std::pair<double, double>> iv;
      for (const auto& a : s.arcs) {
        double r = rel(a.start, *cut);
        if (r > kTwoPi - eps) r = 0;
        iv.push_back({r, r + a.length});
      }
      std::sort(iv.begin(), iv.end());
      std::vector<std::pair<double, double>> merged;
      for (const auto& p : iv) {
        if (!merged.empty()) {
          double end = merged.back().second;
          if (p.first < end - eps || (std::abs(p.first - end) <= eps && has_point(*cut + end))) {
            merged.back().second = std::max(end, p.second);
            continue;
          }
        }
        merged.push_back(p);
      }
      // Wrap around through the cut point.
      if (merged.back().second >= kTwoPi - eps && has_point(*cut)) {
        if (merged.size() == 1) {
          s.full = true;
        } else {
          auto last = merged.back();
          merged.pop_back();
          merged.front() = {last.first, kTwoPi + merged.front().second};
        }
      }
      if (!s.full) {
        s.arcs.clear();
        for (const auto& [a, b] : merged) s.arcs.push_back({norm_angle(*cut + a), std::min(b - a, kTwoPi)});
        if (s.arcs.size() == 1 && s.arcs.front().length >= kTwoPi - eps && has_point(s.arcs.front().start))
          s.full = true;
      }
    }
  }
  if (s.full) {
    s.arcs.clear();
    s.points.clear();
    return;
  }
  std::erase_if(s.points, [&](double p) {
    return std::any_of(s.arcs.begin(), s.arcs.end(), [&](const SumSet::Arc& a) { return strictly_inside(p, a, eps); });
  });
  std::sort(s.points.begin(), s.points.end());
  std::vector<double> pts;
  for (double p : s.points)
    if (std::none_of(pts.begin(), pts.end(), [&](double q) { return circ_dist(p, q) <= eps; })) pts.push_back(p);
  s.points = std::move(pts);
  std::sort(s.arcs.begin(), s.arcs.end(), [](const SumSet::Arc& a, const SumSet::Arc& b) { return a.start < b.start; });
}

template <class T, class Eq>
bool same_multiset(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size() && !found; ++i)
      if (!used[i] && eq(x, b[i])) used[i] = found = true;
    if (!found) return false;
  }
  return true;
}

Element make_phase(const Hyperfield& f, double a) { return Element::phase_angle(a, f.involution()); }

}  // namespace

SumSet SumSet::singleton(const Element& x) {
  const auto& f = x.field();
  switch (f.kind()) {
    case HyperfieldKind::Tropical: return SumSet(f, DownSet{x.rational(), false});
    case HyperfieldKind::Triangle: return SumSet(f, Intervals{{{x.real(), x.real()}}});
    case HyperfieldKind::Phase: {
      Arcs a;
      if (x.is_zero()) a.zero = true;
      else a.points.push_back(x.real());
      return SumSet(f, a);
    }
    default: return SumSet(f, Finite{{x}});
  }
}

void SumSet::canonicalize() {
  std::visit(
      [&](auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Finite>) dedupe_finite(r.items);
        else if constexpr (std::is_same_v<T, DownSet>) {
          if (sgn(r.bound) == 0) r.down = false;
        } else if constexpr (std::is_same_v<T, Intervals>) merge_intervals(r.parts);
        else canonicalize_arcs(r);
      },
      rep_);
}

bool SumSet::contains(const Element& z) const {
  if (!(z.field() == field_)) throw InputError("hyperfield mismatch in membership test");
  const double eps = tolerance();
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return std::any_of(r.items.begin(), r.items.end(), [&](const Element& x) { return x == z; });
        } else if constexpr (std::is_same_v<T, DownSet>) {
          int c = cmp(z.rational(), r.bound);
          return c == 0 || (r.down && c < 0);
        } else if constexpr (std::is_same_v<T, Intervals>) {
          return std::any_of(r.parts.begin(), r.parts.end(), [&](const Interval& iv) {
            return z.real() >= iv.first - eps && z.real() <= iv.second + eps;
          });
        } else {
          if (z.is_zero()) return r.zero;
          if (r.full) return true;
          double a = z.real();
          if (std::any_of(r.points.begin(), r.points.end(), [&](double p) { return circ_dist(p, a) <= eps; }))
            return true;
          return std::any_of(r.arcs.begin(), r.arcs.end(), [&](const Arc& arc) { return strictly_inside(a, arc, eps); });
        }
      },
      rep_);
}

std::optional<Element> SumSet::as_point() const {
  return std::visit(
      [&](const auto& r) -> std::optional<Element> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Finite>) {
          if (r.items.size() == 1) return r.items.front();
        } else if constexpr (std::is_same_v<T, DownSet>) {
          if (!r.down) return Element::tropical(r.bound);
        } else if constexpr (std::is_same_v<T, Intervals>) {
          if (r.parts.size() == 1 && r.parts[0].second - r.parts[0].first <= tolerance())
            return Element::triangle(r.parts[0].first);
        } else {
          if (r.full || !r.arcs.empty()) return std::nullopt;
          if (r.zero && r.points.empty()) return Element::phase_zero(field_.involution());
          if (!r.zero && r.points.size() == 1) return make_phase(field_, r.points[0]);
        }
        return std::nullopt;
      },
      rep_);
}

std::vector<Element> SumSet::sample_points() const {
  std::vector<Element> out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Finite>) {
          out = r.items;
        } else if constexpr (std::is_same_v<T, DownSet>) {
          out.push_back(Element::tropical(r.bound));
          if (r.down) {
            out.push_back(Element::tropical(r.bound / 2));
            out.push_back(Element::tropical(0));
          }
        } else if constexpr (std::is_same_v<T, Intervals>) {
          for (const auto& [lo, hi] : r.parts) {
            out.push_back(Element::triangle(lo));
            if (hi > lo) {
              out.push_back(Element::triangle((lo + hi) / 2));
              out.push_back(Element::triangle(hi));
            }
          }
        } else {
          if (r.zero) out.push_back(Element::phase_zero(field_.involution()));
          for (double p : r.points) out.push_back(make_phase(field_, p));
          if (r.full)
            for (int k = 0; k < 8; ++k) out.push_back(make_phase(field_, k * kPi / 4));
          for (const auto& arc : r.arcs)
            for (double frac : {0.25, 0.5, 0.75}) out.push_back(make_phase(field_, arc.start + frac * arc.length));
        }
      },
      rep_);
  return out;
}

std::string SumSet::to_string() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Finite>) {
          os << "{";
          for (std::size_t i = 0; i < r.items.size(); ++i) os << (i ? ", " : "") << r.items[i].to_string();
          os << "}";
        } else if constexpr (std::is_same_v<T, DownSet>) {
          if (r.down) os << "[0, " << r.bound.get_str() << "]";
          else os << "{" << r.bound.get_str() << "}";
        } else if constexpr (std::is_same_v<T, Intervals>) {
          for (std::size_t i = 0; i < r.parts.size(); ++i)
            os << (i ? " u " : "") << "[" << r.parts[i].first << ", " << r.parts[i].second << "]";
        } else {
          std::vector<std::string> parts;
          if (r.zero) parts.push_back("0");
          if (r.full) parts.push_back("S1");
          for (double p : r.points) parts.push_back("e^{" + std::to_string(p) + "i}");
          for (const auto& a : r.arcs)
            parts.push_back("arc(" + std::to_string(a.start) + ", " + std::to_string(a.start + a.length) + ")");
          os << "{";
          for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? ", " : "") << parts[i];
          os << "}";
        }
      },
      rep_);
  return os.str();
}

bool operator==(const SumSet& a, const SumSet& b) {
  if (!(a.field_ == b.field_) || a.rep_.index() != b.rep_.index()) return false;
  const double eps = tolerance();
  return std::visit(
      [&](const auto& ra) -> bool {
        using T = std::decay_t<decltype(ra)>;
        const auto& rb = std::get<T>(b.rep_);
        if constexpr (std::is_same_v<T, SumSet::Finite>) {
          return same_multiset(ra.items, rb.items, [](const Element& x, const Element& y) { return x == y; });
        } else if constexpr (std::is_same_v<T, SumSet::DownSet>) {
          return ra.down == rb.down && ra.bound == rb.bound;
        } else if constexpr (std::is_same_v<T, SumSet::Intervals>) {
          return same_multiset(ra.parts, rb.parts, [&](const Interval& x, const Interval& y) {
            return std::abs(x.first - y.first) <= eps && std::abs(x.second - y.second) <= eps;
          });
        } else {
          return ra.zero == rb.zero && ra.full == rb.full &&
                 same_multiset(ra.points, rb.points, [&](double x, double y) { return circ_dist(x, y) <= eps; }) &&
                 same_multiset(ra.arcs, rb.arcs, [&](const SumSet::Arc& x, const SumSet::Arc& y) {
                   return circ_dist(x.start, y.start) <= eps && std::abs(x.length - y.length) <= eps;
                 });
        }
      },
      a.rep_);
}

SumSet SumSet::plus(const Element& x) const {
  if (!(x.field() == field_)) throw InputError("hyperfield mismatch in hypersum");
  SumSet out = std::visit(
      [&](const auto& r) -> SumSet {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Finite>) {
          Finite acc;
          for (const auto& s : r.items) {
            auto part = sum_set(s, x);
            const auto& items = std::get<Finite>(part.rep_).items;
            acc.items.insert(acc.items.end(), items.begin(), items.end());
          }
          return SumSet(field_, acc);
        } else if constexpr (std::is_same_v<T, DownSet>) {
          if (!r.down) return sum_set(Element::tropical(r.bound), x);
          if (cmp(x.rational(), r.bound) > 0) return SumSet(field_, DownSet{x.rational(), false});
          return SumSet(field_, r);
        } else if constexpr (std::is_same_v<T, Intervals>) {
          Intervals acc;
          for (const auto& iv : r.parts) acc.parts.push_back(interval_plus(iv, x.real()));
          return SumSet(field_, acc);
        } else {
          if (x.is_zero()) return SumSet(field_, r);
          const double beta = x.real();
          Arcs acc;
          if (r.zero) acc.points.push_back(beta);
          if (r.full) {
            acc.full = true;
            acc.zero = true;
          }
          for (double p : r.points) phase_binary(p, beta, acc);
          for (const auto& arc : r.arcs) phase_arc_plus(arc, beta, acc);
          return SumSet(field_, acc);
        }
      },
      rep_);
  out.canonicalize();
  return out;
}

SumSet product(const SumSet& a, const SumSet& b) {
  if (!(a.field_ == b.field_)) throw InputError("hyperfield mismatch in set product");
  const auto& f = a.field_;
  SumSet out = std::visit(
      [&](const auto& ra) -> SumSet {
        using T = std::decay_t<decltype(ra)>;
        const auto& rb = std::get<T>(b.rep_);
        if constexpr (std::is_same_v<T, SumSet::Finite>) {
          SumSet::Finite acc;
          for (const auto& x : ra.items)
            for (const auto& y : rb.items) acc.items.push_back(mul(x, y));
          return SumSet(f, acc);
        } else if constexpr (std::is_same_v<T, SumSet::DownSet>) {
          return SumSet(f, SumSet::DownSet{ra.bound * rb.bound, ra.down || rb.down});
        } else if constexpr (std::is_same_v<T, SumSet::Intervals>) {
          SumSet::Intervals acc;
          for (const auto& x : ra.parts)
            for (const auto& y : rb.parts) acc.parts.push_back({x.first * y.first, x.second * y.second});
          return SumSet(f, acc);
        } else {
          SumSet::Arcs acc;
          bool a_nonzero = ra.full || !ra.points.empty() || !ra.arcs.empty();
          bool b_nonzero = rb.full || !rb.points.empty() || !rb.arcs.empty();
          acc.zero = ra.zero || rb.zero;
          if ((ra.full && b_nonzero) || (rb.full && a_nonzero)) {
            acc.full = true;
          } else {
            for (double p : ra.points) {
              for (double q : rb.points) acc.points.push_back(p + q);
              for (const auto& arc : rb.arcs) acc.arcs.push_back({arc.start + p, arc.length});
            }
            for (const auto& arc : ra.arcs) {
              for (double q : rb.points) acc.arcs.push_back({arc.start + q, arc.length});
              for (const auto& other : rb.arcs) {
                double len = arc.length + other.length;
                if (len >= kTwoPi) acc.full = true;
                else acc.arcs.push_back({arc.start + other.start, len});
              }
            }
          }
          return SumSet(f, acc);
        }
      },
      a.rep_);
  out.canonicalize();
  return out;
}

SumSet sum_set(const Element& a, const Element& b) {
  if (!(a.field() == b.field()))
    throw InputError("hyperfield mismatch: " + a.field().name() + " vs " + b.field().name());
  const auto& f = a.field();
  if (a.is_zero()) return SumSet::singleton(b);
  if (b.is_zero()) return SumSet::singleton(a);
  switch (f.kind()) {
    case HyperfieldKind::Krasner: return SumSet(f, SumSet::Finite{{Element::krasner(0), Element::krasner(1)}});
    case HyperfieldKind::Sign:
      if (a.integer() == b.integer()) return SumSet::singleton(a);
      return SumSet(f, SumSet::Finite{{Element::sign(-1), Element::sign(0), Element::sign(1)}});
    case HyperfieldKind::FiniteField:
      return SumSet::singleton(Element::residue((a.integer() + b.integer()) % f.characteristic(), f.characteristic()));
    case HyperfieldKind::Rational: return SumSet::singleton(Element::rational(a.rational() + b.rational()));
    case HyperfieldKind::Tropical: {
      int c = cmp(a.rational(), b.rational());
      if (c == 0) return SumSet(f, SumSet::DownSet{a.rational(), true});
      return SumSet::singleton(c > 0 ? a : b);
    }
    case HyperfieldKind::Triangle: {
      SumSet s(f, SumSet::Intervals{{{std::abs(a.real() - b.real()), a.real() + b.real()}}});
      return s;
    }
    case HyperfieldKind::Phase: {
      SumSet::Arcs acc;
      phase_binary(a.real(), b.real(), acc);
      SumSet s(f, acc);
      s.canonicalize();
      return s;
    }
  }
  throw InputError("bad hyperfield");
}

SumSet fold_sum(std::span<const Element> terms) {
  if (terms.empty()) throw InputError("hypersum of an empty list");
  SumSet acc = SumSet::singleton(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) acc = acc.plus(terms[i]);
  return acc;
}

}  // namespace hfm
