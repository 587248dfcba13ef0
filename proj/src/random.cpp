#include "hfm/random.hpp"

#include <numbers>

namespace hfm {

Element random_unit(const Hyperfield& f, Rng& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&] { return pick(0, 1) == 0; };
  switch (f.kind()) {
    case HyperfieldKind::Krasner: return Element::krasner(1);
    case HyperfieldKind::Sign: return Element::sign(coin() ? 1 : -1);
    case HyperfieldKind::FiniteField: return Element::residue(pick(1, static_cast<int>(f.characteristic()) - 1), f.characteristic());
    case HyperfieldKind::Tropical:
      if (coin()) return Element::tropical(Rational(1 << pick(0, 3), 1 << pick(0, 1)));
      return Element::tropical(Rational(pick(1, 6), pick(1, 3)));
    case HyperfieldKind::Rational: {
      int num = pick(1, 5) * (coin() ? 1 : -1);
      return Element::rational(Rational(num, pick(1, 3)));
    }
    case HyperfieldKind::Triangle:
      if (coin()) return Element::triangle(pick(1, 4));
      return Element::triangle(std::uniform_real_distribution<double>(0.05, 5.0)(rng));
    case HyperfieldKind::Phase:
      if (coin()) return Element::phase_angle(pick(0, 7) * std::numbers::pi / 4, f.involution());
      return Element::phase_angle(std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng),
                                  f.involution());
  }
  return f.one();
}

Element random_element(const Hyperfield& f, Rng& rng, double zero_probability) {
  if (std::bernoulli_distribution(zero_probability)(rng)) return f.zero();
  return random_unit(f, rng);
}

}  // namespace hfm
