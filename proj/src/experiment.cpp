#include "hfm/experiment.hpp"

#include <numbers>

#include "hfm/corpus.hpp"
#include "hfm/error.hpp"
#include "hfm/transforms.hpp"

namespace hfm {

ExperimentConfig experiment_config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("$: expected an experiment config object");
  ExperimentConfig cfg;
  auto int_field = [&](const char* key, int& slot, int lo, int hi) {
    if (!j.contains(key)) return;
    const auto& v = j[key];
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi)
      throw InputError(std::string("$.") + key + ": expected an integer in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    slot = v.get<int>();
  };
  if (j.contains("hyperfield")) {
    if (!j["hyperfield"].is_string()) throw InputError("$.hyperfield: expected a hyperfield name");
    cfg.field = Hyperfield::parse(j["hyperfield"].get<std::string>());
  }
  int_field("max_size", cfg.max_size, 2, 8);
  int_field("max_rank", cfg.max_rank, 1, cfg.max_size - 1);
  int_field("samples", cfg.samples, 0, 1000000);
  int_field("chain_steps", cfg.chain_steps, 0, 100000);
  int_field("rejection_attempts", cfg.rejection_attempts, 0, 100000);
  if (j.contains("seed")) {
    const auto& s = j["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw InputError("$.seed: expected a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("classify_circuits")) {
    if (!j["classify_circuits"].is_boolean()) throw InputError("$.classify_circuits: expected a boolean");
    cfg.classify_circuits = j["classify_circuits"].get<bool>();
  }
  return cfg;
}

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// The value distribution of the sampler.
Element draw_unit(const Hyperfield& f, Rng& rng) {
  switch (f.kind()) {
    case HyperfieldKind::Sign: return Element::sign(pick(rng, 0, 1) ? 1 : -1);
    case HyperfieldKind::Tropical: return Element::tropical(Rational(1 << pick(rng, 0, 3)));
    case HyperfieldKind::Phase:
      return Element::phase_angle(std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng), f.involution());
    default: return random_unit(f, rng);
  }
}

std::optional<GPFunction> realizable_start(const Hyperfield& f, int r, int m, Rng& rng) {
  RationalMatrix a(r, std::vector<Rational>(m));
  for (auto& row : a)
    for (auto& x : row) x = pick(rng, -3, 3);
  GroundSet g = GroundSet::range(m);
  GPFunction q = rational_matrix_gp(a, g);
  if (q.identically_zero()) return std::nullopt;
  std::optional<GPFunction> out;
  switch (f.kind()) {
    case HyperfieldKind::Krasner: out = pushforward_gp(HyperfieldHom::to_krasner(q.field()), q); break;
    case HyperfieldKind::Sign: out = pushforward_gp(HyperfieldHom::rational_sign(), q); break;
    case HyperfieldKind::Tropical:
      out = pushforward_gp(HyperfieldHom::rational_padic(pick(rng, 0, 1) ? 2 : 3), q);
      break;
    case HyperfieldKind::Rational: out = q; break;
    case HyperfieldKind::FiniteField: out = finite_field_matrix_gp(a, g, f.characteristic()); break;
    case HyperfieldKind::Phase:
    case HyperfieldKind::Triangle: {
      GPFunction p(f, g, r);
      for (Subset s : k_subsets(m, r)) {
        Rational v = q.value(s).rational();
        if (sgn(v) == 0) continue;
        if (f.kind() == HyperfieldKind::Phase) {
          p.set(s, Element::phase_angle(sgn(v) > 0 ? 0 : std::numbers::pi, f.involution()));
        } else {
          p.set(s, Element::triangle(Rational(abs(v)).get_d()));
        }
      }
      out = p;
      break;
    }
  }
  if (out->identically_zero()) return std::nullopt;
  return out;
}

}  // namespace

GPFunction random_gp_values(const Hyperfield& field, int r, int m, Rng& rng) {
  GPFunction phi(field, GroundSet::range(m), r);
  for (Subset s : k_subsets(m, r)) phi.set(s, draw_unit(field, rng));
  return phi;
}

GPFunction random_weak_gp(const Hyperfield& field, int r, int m, Rng& rng, const ExperimentConfig& cfg,
                          SamplerStats* stats) {
  SamplerStats local;
  SamplerStats& st = stats ? *stats : local;
  std::optional<GPFunction> phi;
  for (int i = 0; i < cfg.rejection_attempts && !phi; ++i) {
    ++st.rejection_draws;
    auto cand = random_gp_values(field, r, m, rng);
    if (!check_gp_weak(cand)) {
      ++st.rejection_hits;
      phi = std::move(cand);
    }
  }
  while (!phi) phi = realizable_start(field, r, m, rng);

  auto subsets = k_subsets(m, r);
  for (int step = 0; step < cfg.chain_steps; ++step) {
    ++st.chain_proposals;
    Subset s = subsets[pick(rng, 0, static_cast<int>(subsets.size()) - 1)];
    Element old = phi->value(s);
    bool to_zero = !old.is_zero() && std::bernoulli_distribution(0.15)(rng);
    phi->set(s, to_zero ? field.zero() : draw_unit(field, rng));
    if (check_gp_weak(*phi)) {
      phi->set(s, old);
    } else {
      ++st.chain_accepted;
    }
  }
  return *phi;
}

VectorSample sample_vectors(const Signature& circuits, const Signature& cocircuits, Rng& rng, int budget) {
  VectorSample out;
  const auto& f = circuits.field;
  const int m = circuits.size();
  if (f.is_finite()) {
    auto els = f.elements();
    double total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<double>(els.size());
    if (total <= 4096) {
      out.exhaustive = true;
      std::vector<std::size_t> digit(m, 0);
      while (true) {
        std::vector<Element> entries;
        for (int i = 0; i < m; ++i) entries.push_back(els[digit[i]]);
        FVector v(f, std::move(entries));
        if (is_vector_of(v, cocircuits)) out.vectors.push_back(v);
        if (is_covector_of(v, circuits)) out.covectors.push_back(v);
        int i = 0;
        while (i < m && ++digit[i] == els.size()) digit[i++] = 0;
        if (i == m) break;
      }
      return out;
    }
  }
  auto grow = [&](const Signature& from, const Signature& against, bool vectors, std::vector<FVector>& sink) {
    for (const auto& x : from.vectors) sink.push_back(x);
    if (from.vectors.empty()) return;
    auto any = [&]() -> const FVector& { return from.vectors[pick(rng, 0, static_cast<int>(from.vectors.size()) - 1)]; };
    for (int i = 0; i < budget; ++i) {
      const FVector& x = any();
      FVector y = scalar_mul(draw_unit(f, rng), any());
      std::vector<Element> entries;
      for (int e = 0; e < m; ++e) {
        auto points = sum_set(x[e], y[e]).sample_points();
        entries.push_back(points[pick(rng, 0, static_cast<int>(points.size()) - 1)]);
      }
      FVector z(f, std::move(entries));
      if (z.is_zero()) continue;
      bool ok = vectors ? is_vector_of(z, against) : is_covector_of(z, against);
      if (ok) sink.push_back(std::move(z));
    }
  };
  grow(circuits, cocircuits, true, out.vectors);
  grow(cocircuits, circuits, false, out.covectors);
  return out;
}

bool ExperimentReport::passed() const {
  if (!config.field.is_doubly_distributive()) return classify_mismatches == 0;
  return weak_only == 0 && vector_violations == 0 && classify_mismatches == 0;
}

ExperimentReport run_perfection_experiment(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  rep.config = cfg;
  rep.dp3_holds.assign(cfg.max_size + 1, 0);
  rep.dp3_applicable.assign(cfg.max_size + 1, 0);
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    int m = pick(rng, 2, cfg.max_size);
    int r = pick(rng, 1, std::min(cfg.max_rank, m - 1));
    GPFunction phi = random_weak_gp(cfg.field, r, m, rng, cfg, &rep.sampler);
    ++rep.samples;
    bool strong = !check_gp_strong(phi);
    if (strong) {
      ++rep.strong;
    } else {
      ++rep.weak_only;
      if (rep.weak_only_examples.size() < 3) rep.weak_only_examples.push_back(phi);
    }
    Signature c = circuits_from_gp(phi);
    Signature d = cocircuits_from_gp(phi);
    for (int k = 3; k <= m; ++k) {
      ++rep.dp3_applicable[k];
      if (!check_dual_pair(c, d, k)) ++rep.dp3_holds[k];
    }
    if (cfg.classify_circuits) {
      Verdict v = classify(c).verdict;
      if (v != (strong ? Verdict::Strong : Verdict::WeakOnly)) ++rep.classify_mismatches;
    }
    if (strong) {
      auto vs = sample_vectors(c, d, rng);
      for (const auto& v : vs.vectors)
        for (const auto& w : vs.covectors) {
          ++rep.vector_pairs;
          if (!orthogonal(v, w)) ++rep.vector_violations;
        }
    }
  }
  for (const auto& e : corpus())
    if (e.gp.field() == cfg.field && !check_gp_weak(e.gp) && check_gp_strong(e.gp)) rep.corpus_weak_only.push_back(e.name);
  return rep;
}

Json experiment_report_to_json(const ExperimentReport& r) {
  Json dp3 = Json::object();
  for (int k = 3; k < static_cast<int>(r.dp3_holds.size()); ++k)
    dp3[std::to_string(k)] = {{"holds", r.dp3_holds[k]}, {"applicable", r.dp3_applicable[k]}};
  Json examples = Json::array();
  for (const auto& g : r.weak_only_examples) examples.push_back(gp_to_json(g));
  return Json{{"hyperfield", r.config.field.name()},
              {"seed", r.config.seed},
              {"samples", r.samples},
              {"strong", r.strong},
              {"weak_only", r.weak_only},
              {"weak_only_examples", examples},
              {"sampler",
               {{"rejection_draws", r.sampler.rejection_draws},
                {"rejection_hits", r.sampler.rejection_hits},
                {"chain_proposals", r.sampler.chain_proposals},
                {"chain_accepted", r.sampler.chain_accepted}}},
              {"dp3_k_holds", dp3},
              {"classify_mismatches", r.classify_mismatches},
              {"vector_covector_pairs", r.vector_pairs},
              {"vector_covector_violations", r.vector_violations},
              {"corpus_weak_only", r.corpus_weak_only},
              {"passed", r.passed()}};
}

}  // namespace hfm
