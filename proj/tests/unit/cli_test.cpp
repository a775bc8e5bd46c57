#include "coarse/cli.hpp"
#include "coarse/documents.hpp"
#include "coarse/errors.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

using namespace coarse;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COARSE_DATA_DIR) + "/" + name; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "coarse_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("documents") {
  TEST_CASE("criteria round trip") {
    testgen::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
      const auto cs = testgen::randomCriteriaSet(rng, testgen::uniform(rng, 1, 8), testgen::uniform(rng, 1, 4), 4);
      const auto doc = io::criteriaToJson(cs);
      const auto back = io::parseCriteria(doc);
      REQUIRE(back.size() == cs.size());
      for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(back[i].relation.pairs() == cs[i].relation.pairs());
        CHECK(back[i].name == cs[i].name);
      }
      CHECK(io::criteriaToJson(back) == doc);
    }
  }

  TEST_CASE("pair form converts to category form") {
    const auto cs = io::loadCriteria(data("condorcet.json"));
    CHECK(cs.size() == 3);
    const auto doc = io::criteriaToJson(cs);
    CHECK(doc["criteria"][0]["categories"].size() == 3);
    CHECK(io::parseCriteria(doc)[1].relation.pairs() == cs[1].relation.pairs());
  }

  TEST_CASE("validation errors carry locations") {
    using nlohmann::json;
    auto err = [](const json& doc) {
      try {
        io::parseCriteria(doc, "doc");
      } catch (const InputError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    const json base = {{"schema", "coarse-criteria/1"}, {"domain", {"a", "b", "c"}}};
    json sym = base;
    sym["criteria"] = json::array({{{"pairs", json::array({json::array({"a", "b"}), json::array({"b", "a"})})}}});
    CHECK(has(err(sym), "doc: /criteria/0/pairs: symmetric pair"));
    json unknown = base;
    unknown["criteria"] = json::array({{{"pairs", json::array({json::array({"a", "z"})})}}});
    CHECK(has(err(unknown), "/criteria/0/pairs/0/1: unknown label 'z'"));
    json uncovered = base;
    uncovered["criteria"] = {{{"categories", {{"a"}, {"b"}}}, {"order", {{0, 1}}}}};
    CHECK(has(err(uncovered), "'c' is in no category"));
    json merged = base;
    merged["criteria"] = {{{"categories", {{"a"}, {"b"}, {"c"}}}, {"order", json::array({json::array({0, 1}), json::array({0, 2})})}}};
    CHECK(has(err(merged), "categories 1 and 2 are not distinguished"));
    json cyclic = base;
    cyclic["criteria"] = {{{"categories", {{"a"}, {"b", "c"}}}, {"order", json::array({json::array({0, 1}), json::array({1, 0})})}}};
    CHECK(has(err(cyclic), "not asymmetric"));
    json schema = base;
    schema["schema"] = "other/1";
    schema["criteria"] = json::array();
    CHECK(has(err(schema), "/schema"));
    json both = base;
    both["criteria"] = {{{"pairs", json::array()}, {"categories", {{"a", "b", "c"}}}}};
    CHECK(has(err(both), "exactly one"));
  }

  TEST_CASE("choice documents") {
    const auto cs = bitCubeCriteria(3);
    const auto c = buildMaxChoice(cs);
    const auto back = io::parseChoice(io::choiceToJson(c));
    CHECK(back.coversAllSubsets());
    CHECK(back.entries() == c.entries());
    CHECK_THROWS_AS(io::choiceToJson(buildMaxChoice(bitCubeCriteria(4))), ResourceError);
  }

  TEST_CASE("cost specs") {
    CHECK(io::parseCostSpec("power:2")(3) == Cost(9LL));
    CHECK(io::parseCostSpec("linear:1/2")(3).str() == "3/2");
    CHECK(io::parseCostSpec("ceillog2:2")(5) == Cost(6LL));
    CHECK(io::parseCostSpec("expr:e^2")(4) == Cost(16LL));
    CHECK(io::parseCostSpec("table:" + data("cost_table.json"))(3).str() == "7/2");
    CHECK_THROWS_AS(io::parseCostSpec("cubic:2"), InputError);
    CHECK_THROWS_AS(io::parseCostSpec("power"), InputError);
    CHECK_THROWS_AS(io::parseCostSpec("table:" + write("no2.json", R"({"3": 4})")), InputError);
    CHECK_THROWS_AS(io::parseCostSpec("table:/nonexistent.json"), InputError);
  }

  TEST_CASE("weights") {
    CHECK(io::parseWeights("4,2,1").weights.size() == 3);
    CHECK(io::parseWeights("1/2,3").weights[0] == Rational(1, 2));
    CHECK_THROWS_AS(io::parseWeights("1,0"), InputError);
    CHECK_THROWS_AS(io::parseWeights("1,x"), InputError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("analyze") {
    const auto r = run({"analyze", data("bitcube.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "command: coarse analyze"));
    CHECK(has(r.out, "discrimination vector: (2,2,2)"));
    CHECK(has(r.out, "partition cells: 8"));
    CHECK(has(r.out, "maximally categorizes: true"));

    const auto sym = write("sym.json", R"({"schema": "coarse-criteria/1", "domain": ["a", "b"],
      "criteria": [{"pairs": [["a", "b"], ["b", "a"]]}]})");
    const auto bad = run({"analyze", sym});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "symmetric pair"));

    const auto single = write("single.json", R"({"schema": "coarse-criteria/1", "domain": ["a", "b", "c"],
      "criteria": [{"categories": [["a"], ["b"], ["c"]], "order": [[0, 1], [1, 2], [0, 2]]}]})");
    const auto one = run({"analyze", single});
    CHECK(one.code == 0);
    CHECK(has(one.out, "discrimination vector: (3)"));
    CHECK(has(one.out, "maximally categorizes: true"));
  }

  TEST_CASE("theorem") {
    const auto cube = run({"theorem", data("bitcube.json"), "--exhaustive-selectors"});
    CHECK(cube.code == 0);
    CHECK(has(cube.out, "(i) maximally categorizes: true"));
    CHECK(has(cube.out, "(ii) over all selectors: true"));
    CHECK(has(cube.out, "verdict theorem: PASS"));
    CHECK(has(cube.out, "101 -> (2,1,2)"));
    const auto np = run({"theorem", data("nonproduct.json"), "--union-selectors"});
    CHECK(np.code == 0);
    CHECK(has(np.out, "(iii) product representation: false"));
    CHECK_FALSE(has(np.out, "relabeling"));
  }

  TEST_CASE("frontier") {
    const auto r = run({"frontier", "--cost", "power:2", "--domain-size", "64", "--budget", "6"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "vector=(2,2,2,2,2,2) cost=24 n=64"));
    CHECK(has(r.out, "verdict binary-efficiency: PASS"));
    const auto one = run({"frontier", "--cost", "power:2", "--domain-size", "64", "--budget", "1"});
    CHECK(has(one.out, "frontier points: 1\n  vector=(2) cost=4 n=2"));
    CHECK(run({"frontier", "--cost", "power:2", "--domain-size", "64", "--budget", "30"}).code == 2);
    const auto no2 = write("no2.json", R"({"3": 4})");
    CHECK(run({"frontier", "--cost", "table:" + no2, "--domain-size", "8", "--budget", "2"}).code == 2);

    const auto csv = (scratch() / "frontier.csv").string();
    CHECK(run({"frontier", "--cost", "linear:1", "--domain-size", "50", "--budget", "8", "--csv", csv}).code == 0);
    const auto verify = run({"frontier", "--cost", "linear:1", "--domain-size", "50", "--budget", "8", "--verify-csv", csv});
    CHECK(verify.code == 0);
    CHECK(has(verify.out, "verdict csv: PASS"));
    std::ofstream(csv, std::ios::app) << "2,2;1;4\n";
    const auto tampered = run({"frontier", "--cost", "linear:1", "--domain-size", "50", "--budget", "8", "--verify-csv", csv});
    CHECK(tampered.code == 1);
    CHECK(has(tampered.out, "verdict csv: FAIL"));
  }

  TEST_CASE("radix") {
    const auto opt = run({"radix", "optimal", "--n", "729", "--cost", "linear:1", "--kmax", "10"});
    CHECK(opt.code == 0);
    CHECK(has(opt.out, "optimal bases: 3\ncost: 18"));
    const auto check = run({"radix", "check-binary", "--cost", "power:2", "--kmax", "12", "--nmax", "10000"});
    CHECK(check.code == 0);
    CHECK(has(check.out, "agree: true"));
    CHECK(has(check.out, "binary strictly optimal for n in 2..10000: true"));
    const auto cost = run({"radix", "cost", "--n", "1", "--k", "7"});
    CHECK(has(cost.out, "digits: 0\ncost: 0"));
    const auto enc = run({"radix", "encode", "--n", "729", "--k", "3", "--value", "729"});
    CHECK(has(enc.out, "digits: 2,2,2,2,2,2"));
    const auto dec = run({"radix", "decode", "--n", "729", "--k", "3", "--digits", "2,2,2,2,2,2"});
    CHECK(has(dec.out, "value: 729"));
    CHECK(run({"radix", "cost", "--n", "0", "--k", "7"}).code == 2);
    CHECK(run({"radix", "cost", "--n", "5", "--k", "1"}).code == 2);
    CHECK(run({"radix", "encode", "--n", "5", "--k", "2", "--value", "9"}).code == 2);
    CHECK(run({"radix"}).code == 2);

    const auto csv = (scratch() / "sweep.csv").string();
    CHECK(run({"radix", "sweep", "--cost", "linear:1", "--kmax", "8", "--nmax", "200", "--csv", csv}).code == 0);
    const auto verify = run({"radix", "sweep", "--cost", "linear:1", "--kmax", "8", "--nmax", "200", "--verify-csv", csv});
    CHECK(has(verify.out, "verdict csv: PASS"));
    const auto stdoutSweep = run({"radix", "sweep", "--cost", "linear:1", "--kmax", "6", "--nmax", "4"});
    CHECK(has(stdoutSweep.out, "n;k*;cost\n1;2,3,4,5,6;0\n2;2;2\n3;3;3\n4;2,4;4\n"));
  }

  TEST_CASE("choice build and check") {
    const auto out = (scratch() / "cube_choice.json").string();
    CHECK(run({"choice", "build", data("bitcube.json"), "--output", out}).code == 0);
    const auto check = run({"choice", "check", data("bitcube.json"), "--choice", out});
    CHECK(check.code == 0);
    CHECK(has(check.out, "uses: true"));
    CHECK(has(check.out, "maximally discriminates: true"));
    CHECK(has(check.out, "rationalizable: true"));
    CHECK(has(check.out, "condorcet consistent: true"));
    CHECK(has(check.out, "verdict choice: PASS"));

    // Search for a choice function whose interchangeability is not transitive.
    testgen::Rng rng(72);
    auto d = makeDomain({"a", "b", "c", "d"});
    std::optional<ChoiceFunction> intransitive;
    for (int trial = 0; trial < 20000 && !intransitive; ++trial) {
      const bool lazy = trial % 2 == 1;
      auto c = ChoiceFunction::fromRule(d, [&](Subset a) {
        if (lazy && testgen::coin(rng, 0.8)) return a;
        Subset s = 0;
        while (s == 0) s = a & static_cast<Subset>(rng());
        return s;
      }, Exec::serial);
      if (!choiceClasses(c).wellDefined) intransitive = c;
    }
    REQUIRE(intransitive);
    const auto bad = write("bad_choice.json", io::choiceToJson(*intransitive).dump());
    const auto crit = write("abcd.json", R"({"schema": "coarse-criteria/1", "domain": ["a", "b", "c", "d"],
      "criteria": [{"categories": [["a", "b", "c", "d"]]}]})");
    const auto r = run({"choice", "check", crit, "--choice", bad});
    CHECK(r.code == 1);
    CHECK(has(r.out, "not well defined"));
    CHECK(has(r.out, "witness:"));

    const auto partial = write("partial.json", R"({"schema": "coarse-choice/1", "domain": ["a", "b", "c"],
      "choices": [{"menu": ["a", "b"], "chosen": ["a"]}]})");
    const auto abc = write("abc.json", R"({"schema": "coarse-criteria/1", "domain": ["a", "b", "c"],
      "criteria": [{"categories": [["a", "b", "c"]]}]})");
    CHECK(run({"choice", "check", abc, "--choice", partial}).code == 2);
  }

  TEST_CASE("vote") {
    const auto cyc = run({"vote", data("condorcet.json"), "--weights", "1,1,1"});
    CHECK(cyc.code == 1);
    CHECK(has(cyc.out, "condorcet cycle: a > b > c > a"));
    const auto ok = run({"vote", data("bitcube.json"), "--weights", "4,2,1"});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "rationalizing order: {111} > {110}"));
    CHECK(run({"vote", data("bitcube.json"), "--weights", "4,0,1"}).code == 2);
    CHECK(run({"vote", data("bitcube.json"), "--weights", "4,1"}).code == 2);
    const auto broken = run({"vote", data("condorcet.json"), "--weights", "3,1,1"});
    CHECK(broken.code == 0);
    CHECK(has(broken.out, "aggregation: pairwise majority"));
  }

  TEST_CASE("result one") {
    const auto r = run({"result1", "--v", "2,2,2", "--w", "4", "--cost", "power:2", "--domain-size", "100"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "relation: MORE"));
    CHECK(has(r.out, "verdict result1: PASS"));
    const auto na = run({"result1", "--v", "2,2", "--w", "4", "--cost", "power:2", "--domain-size", "100"});
    CHECK(has(na.out, "NOT_APPLICABLE"));
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"analyze", "/nonexistent.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("reports are deterministic") {
    for (const auto& f : {"bitcube.json", "cars.json", "nonproduct.json", "condorcet.json"}) {
      const auto a = run({"theorem", data(f)});
      const auto b = run({"theorem", data(f)});
      CHECK(a.out == b.out);
    }
  }
}
