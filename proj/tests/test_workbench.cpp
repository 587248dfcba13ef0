#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hfm/corpus.hpp"
#include "hfm/error.hpp"
#include "hfm/experiment.hpp"
#include "hfm/json_io.hpp"

using namespace hfm;

namespace {

struct CliResult {
  int code;
  std::string out;
};

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("hfm_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(HFM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("element encodings") {
  CHECK(element_to_json(Element::tropical(Rational(5, 2))) == Json("2.5"));
  CHECK(element_to_json(Element::tropical(Rational(1, 3))) == Json("1/3"));
  CHECK(element_to_json(Element::rational(Rational(-3, 4))) == Json("-3/4"));
  CHECK(element_to_json(Element::sign(-1)) == Json(-1));
  CHECK(element_to_json(Element::phase_zero()) == Json(0));
  CHECK(element_to_json(Element::triangle(0.5)) == Json("0.5"));

  auto tr = element_from_json(Hyperfield::tropical(), Json("0.125"), "$.x");
  CHECK(tr == Element::tropical(Rational(1, 8)));
  CHECK(element_from_json(Hyperfield::tropical(), Json("1/3"), "$.x") == Element::tropical(Rational(1, 3)));
  CHECK(element_from_json(Hyperfield::rational(), Json(4), "$.x") == Element::rational(4));
  CHECK(element_from_json(Hyperfield::phase(), Json{{"angle", 1.5}}, "$.x") == Element::phase_angle(1.5));
  CHECK_THROWS_AS(element_from_json(Hyperfield::sign(), Json(2), "$.x"), InputError);
  CHECK_THROWS_AS(element_from_json(Hyperfield::finite_field(3), Json(3), "$.x"), InputError);
  CHECK_THROWS_AS(element_from_json(Hyperfield::triangle(), Json(-1), "$.x"), InputError);
}

TEST_CASE("malformed elements report the field path") {
  Json j = gp_to_json(corpus_entry("sign-u24").gp);
  j["values"][2]["value"] = "positive";
  try {
    gp_from_json(j);
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("$.values[2].value") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_json_text("{\"hyperfield\": ", "stdin"), InputError);
  Json dup = gp_to_json(corpus_entry("sign-u24").gp);
  dup["values"].push_back(dup["values"][0]);
  CHECK_THROWS_AS(gp_from_json(dup), InputError);
}

TEST_CASE("corpus GP functions roundtrip byte-canonically") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    std::string text = gp_to_json(e.gp).dump();
    GPFunction back = gp_from_json(parse_json_text(text));
    CHECK(gp_to_json(back).dump() == text);
    for (Subset s : k_subsets(e.gp.size(), e.gp.rank())) CHECK(back.value(s) == e.gp.value(s));
  }
}

TEST_CASE("signatures roundtrip and collapse duplicate classes") {
  auto sig = circuits_from_gp(corpus_entry("sign-36").gp);
  std::string text = signature_to_json(sig).dump();
  auto back = signature_from_json(parse_json_text(text));
  CHECK(signatures_equal(back, sig));
  CHECK(signature_to_json(back).dump() == text);

  Json j = signature_to_json(sig);
  Json first = j["circuits"][0];
  Json negated = Json::object();
  negated["hyperfield"] = first["hyperfield"];
  negated["entries"] = Json::object();
  for (auto& [k, v] : first["entries"].items()) negated["entries"][k] = -v.get<int>();
  j["circuits"].push_back(negated);
  std::vector<std::string> warnings;
  auto collapsed = signature_from_json(j, &warnings);
  CHECK(collapsed.vectors.size() == sig.vectors.size());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("collapsed 1 duplicate") != std::string::npos);
}

TEST_CASE("matroid JSON") {
  auto M = underlying_matroid(corpus_entry("krasner-u36-minus").gp);
  GroundSet g;
  auto back = matroid_from_json(matroid_to_json(M, GroundSet::range(6)), &g);
  CHECK(back == M);
  CHECK(g == GroundSet::range(6));
}

TEST_CASE("corpus verdicts are recomputed") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto sig = circuits_from_gp(e.gp);
    CHECK(classify(sig).verdict == e.expected);
    if (e.expected == Verdict::Strong) {
      CHECK_FALSE(check_gp_weak(e.gp));
      CHECK_FALSE(check_gp_strong(e.gp));
    }
  }
  CHECK_THROWS_AS(corpus_entry("no-such-entry"), InputError);
}

TEST_CASE("experiment config validation") {
  auto cfg = experiment_config_from_json(Json{{"hyperfield", "tropical"}, {"samples", 5}, {"seed", 9}});
  CHECK(cfg.field == Hyperfield::tropical());
  CHECK(cfg.samples == 5);
  CHECK(cfg.seed == 9);
  CHECK_THROWS_AS(experiment_config_from_json(Json{{"max_size", 40}}), InputError);
  CHECK_THROWS_AS(experiment_config_from_json(Json{{"samples", "many"}}), InputError);
  CHECK_THROWS_AS(experiment_config_from_json(Json::array()), InputError);
}

TEST_CASE("experiments are deterministic and find no weak-only instance over perfect hyperfields") {
  for (auto f : {Hyperfield::sign(), Hyperfield::tropical(), Hyperfield::krasner(), Hyperfield::finite_field(3)}) {
    CAPTURE(f.name());
    ExperimentConfig cfg;
    cfg.field = f;
    cfg.samples = 40;
    cfg.seed = 5;
    cfg.classify_circuits = true;
    auto a = run_perfection_experiment(cfg);
    auto b = run_perfection_experiment(cfg);
    CHECK(experiment_report_to_json(a).dump() == experiment_report_to_json(b).dump());
    CHECK(a.weak_only == 0);
    CHECK(a.vector_violations == 0);
    CHECK(a.classify_mismatches == 0);
    CHECK(a.passed());
    for (int k = 3; k <= cfg.max_size; ++k) CHECK(a.dp3_holds[k] == a.dp3_applicable[k]);
  }
  ExperimentConfig tri;
  tri.field = Hyperfield::triangle();
  tri.samples = 10;
  auto t = run_perfection_experiment(tri);
  CHECK(t.corpus_weak_only == std::vector<std::string>{"triangle-weak-not-strong"});
}

TEST_CASE("sample_vectors over a small finite hyperfield is exhaustive") {
  const auto& phi = corpus_entry("sign-u24").gp;
  Rng rng(1);
  auto vs = sample_vectors(circuits_from_gp(phi), cocircuits_from_gp(phi), rng);
  CHECK(vs.exhaustive);
  CHECK_FALSE(vs.vectors.empty());
  CHECK_FALSE(vs.covectors.empty());
}

TEST_CASE("CLI: demos") {
  auto tri = run_cli("demo triangle-weak-not-strong");
  CHECK(tri.code == 0);
  auto tj = Json::parse(tri.out);
  CHECK(tj["weak"]["ok"] == true);
  CHECK(tj["strong"]["ok"] == false);
  CHECK(tj["strong"]["witness"]["I"] == Json({1, 2, 3, 4}));
  CHECK(tj["strong"]["witness"]["J"] == Json({5, 6}));

  auto ph = run_cli("demo phase-weak-not-strong");
  CHECK(ph.code == 1);
  auto pj = Json::parse(ph.out);
  CHECK(pj["expected_strong_witness"]["holds"] == false);
  CHECK(pj["expectations_met"] == false);

  CHECK(run_cli("demo krasner-u24").code == 0);
  CHECK(run_cli("demo nonexistent").code == 2);
  CHECK(Json::parse(run_cli("demo --list").out).size() == corpus().size());
}

TEST_CASE("CLI: GP commands and exit codes") {
  std::string tri = write_scratch("tri.json", gp_to_json(corpus_entry("triangle-weak-not-strong").gp).dump());
  std::string sign = write_scratch("sign.json", gp_to_json(corpus_entry("sign-36").gp).dump());
  CHECK(run_cli("check-gp --weak " + tri).code == 0);
  CHECK(run_cli("check-gp --strong " + tri).code == 1);
  CHECK(run_cli("check-gp " + sign).code == 0);

  auto circ = run_cli("circuits " + sign);
  REQUIRE(circ.code == 0);
  auto sig = signature_from_json(Json::parse(circ.out));
  CHECK(signatures_equal(sig, circuits_from_gp(corpus_entry("sign-36").gp)));

  std::string circ_path = write_scratch("circ.json", circ.out);
  CHECK(run_cli("classify " + circ_path).code == 0);
  CHECK(run_cli("check-circuits " + circ_path).code == 0);
  CHECK(run_cli("dual " + circ_path).code == 0);

  auto cocirc = run_cli("circuits --cocircuits " + sign);
  Json pair = Json::parse(circ.out);
  pair["cocircuits"] = Json::parse(cocirc.out)["circuits"];
  auto rebuilt = run_cli("gp " + write_scratch("pair.json", pair.dump()));
  REQUIRE(rebuilt.code == 0);
  CHECK(projectively_equal(gp_from_json(Json::parse(rebuilt.out)), corpus_entry("sign-36").gp));

  auto minor = run_cli("minor --delete 1 --contract 2,3 " + sign);
  REQUIRE(minor.code == 0);
  CHECK(Json::parse(minor.out)["ground_set"] == Json({4, 5, 6}));

  std::string rat = write_scratch("rat.json", gp_to_json(corpus_entry("rational-36").gp).dump());
  auto pushed = run_cli("pushforward --hom sign " + rat);
  REQUIRE(pushed.code == 0);
  CHECK(gp_to_json(gp_from_json(Json::parse(pushed.out))) == gp_to_json(corpus_entry("sign-36").gp));
  CHECK(run_cli("pushforward --hom padic:6 " + rat).code == 2);

  std::string trop = write_scratch("trop.json", gp_to_json(corpus_entry("tropical-2adic-36").gp).dump());
  CHECK(run_cli("dressian " + trop).code == 0);
  CHECK(run_cli("dressian " + sign).code == 2);
}

TEST_CASE("CLI: input errors and determinism") {
  Json bad = gp_to_json(corpus_entry("sign-u24").gp);
  bad["values"][0]["value"] = 7;
  CHECK(run_cli("check-gp " + write_scratch("bad.json", bad.dump())).code == 2);
  CHECK(run_cli("check-gp " + write_scratch("broken.json", "{\"rank\": ")).code == 2);
  CHECK(run_cli("check-gp /nonexistent/file.json").code == 2);
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("axioms --hyperfield sign").code == 0);
  CHECK(run_cli("axioms --hyperfield triangle").code == 0);
  CHECK(run_cli("axioms --hyperfield gf:4").code == 2);

  std::string cfg = write_scratch("cfg.json", R"({"hyperfield": "sign", "samples": 10, "max_size": 5})");
  auto a = run_cli("experiment --config " + cfg + " --seed 3");
  auto b = run_cli("experiment --config " + cfg + " --seed 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["seed"] == 3);
}
