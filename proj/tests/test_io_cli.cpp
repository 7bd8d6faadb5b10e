#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coalition_forge/cli.hpp"
#include "coalition_forge/io.hpp"
#include "coalition_forge/representation.hpp"
#include "coalition_forge/solution.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace coalition_forge;
using namespace coalition_forge::testing;

namespace {

std::string data(const std::string& name) { return std::string(COALITION_FORGE_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "coalition_forge");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_game") {
  const Game g = parse_game(slurp(data("spectrum.json")));
  CHECK(g.size() == 3);
  CHECK(g.players().size() == 5);
  CHECK(g == spectrum_game());
}

TEST_CASE("parse errors carry positions or the violated invariant") {
  try {
    parse_game("{\"players\": [\"a\"],\n  \"coalitions\": [,]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
  }
  CHECK_THROWS_WITH_AS(parse_game(slurp(data("zero_denominator.json"))),
                       "coalitions[0].value: malformed rational '1/0': zero denominator", InvalidInput);
  CHECK_THROWS_WITH_AS(parse_game(slurp(data("uncovered.json"))), doctest::Contains("player c uncovered"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_game(R"({"players":["a"],"coalitions":[{"members":["a"],"value":"1"},{"members":["a"],"value":"2"}]})"),
                       doctest::Contains("duplicate coalition {a}"), InvalidInput);
  // Bare JSON integers are exact and accepted; floats are not.
  CHECK(parse_game(R"({"players":["a"],"coalitions":[{"members":["a"],"value":-4}]})").values() == qs({-4}));
  CHECK_THROWS_WITH_AS(parse_game(R"({"players":["a"],"coalitions":[{"members":["a"],"value":0.5}]})"),
                       doctest::Contains("coalitions[0].value"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_game(R"({"players":["a"],"coalitions":[{"members":["b"],"value":"1"}]})"),
                       doctest::Contains("unknown player 'b'"), InvalidInput);
  CHECK_THROWS_AS(parse_game(R"({"players":["a"]})"), InvalidInput);
  CHECK_THROWS_AS(parse_game(R"([])"), InvalidInput);
}

TEST_CASE("serialize_allocation") {
  CHECK(serialize_allocation(chi(spectrum_game())) == R"({"a":"-3","b":"-7","c":"-4","d":"-6","e":"-2","total":"-22"})");
  CHECK(serialize_allocation(chi(triad_game())) == R"({"1":"-5/3","2":"-7/6","3":"-7/6","total":"-4"})");
  const auto ps = players({"p", "q"});
  CHECK(serialize_allocation(Allocation::from_payoffs(ps, qs({0, 0}))) == R"({"p":"0","q":"0","total":"0"})");
  CHECK_THROWS_AS(serialize_allocation(Allocation::from_payoffs(players({"total"}), qs({1}))), InvalidInput);
}

TEST_CASE("documents round-trip") {
  const std::string canonical_game =
      R"({"players":["1","2","3"],"coalitions":[{"members":["1"],"value":"-1"},{"members":["2","3"],"value":"-2"},{"members":["1","2","3"],"value":"-4"}]})";
  CHECK(serialize_game(parse_game(canonical_game)) == canonical_game);

  Rng rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_family(1 + static_cast<int>(rng() % 6), rng);
    const Game g = random_game(f, rng);
    const std::string text = serialize_game(g);
    CHECK(parse_game(text) == g);
    CHECK(serialize_game(parse_game(text)) == text);

    const Assignment a = trivial_expansion(Assignment(f.players(), {{"k", f[0], Rational(1, 3)}}), f, {rng(), 2, 3});
    const std::string atext = serialize_assignment(a);
    CHECK(parse_assignment(atext) == a);
    CHECK(serialize_assignment(parse_assignment(atext)) == atext);
  }
}

TEST_CASE("parse_scenario") {
  const auto s = parse_scenario(slurp(data("scenario.json")));
  CHECK(s.partitions().size() == 2);
  CHECK(partition_game(s).value(s.players().all()) == 3);
  CHECK_THROWS_AS(parse_scenario(R"({"players":["1","2"],"partitions":[[{"members":["1"],"value":"1"}]]})"), InvalidInput);
}

TEST_CASE("cli: solve and represent the spectrum game") {
  const auto solve = run({"solve", data("spectrum.json")});
  CHECK(solve.code == 0);
  CHECK(solve.out == "{\"a\":\"-3\",\"b\":\"-7\",\"c\":\"-4\",\"d\":\"-6\",\"e\":\"-2\",\"total\":\"-22\"}\n");

  const auto rep = run({"represent", data("spectrum.json")});
  CHECK(rep.code == 0);
  CHECK(parse_assignment(rep.out) == minimal_representation(spectrum_game()));
}

TEST_CASE("cli: check reports structure and exits 1 without full span") {
  const auto nospan = run({"check", data("nospan.json")});
  CHECK(nospan.code == 1);
  CHECK(nospan.err.find("full span: no; hierarchy: none") != std::string::npos);

  const auto ex3 = run({"check", data("triad.json")});
  CHECK(ex3.code == 0);
  CHECK(ex3.out.find("\"semi_algebra\":true") != std::string::npos);
}

TEST_CASE("cli: validate") {
  CHECK(run({"validate", data("spectrum.json"), data("spectrum_assignment.json")}).code == 0);
  const auto wrong = run({"validate", data("spectrum.json"), data("wrong_assignment.json")});
  CHECK(wrong.code == 1);
  CHECK(wrong.err.find("mismatch at {a+b}") != std::string::npos);
  CHECK(run({"validate", data("spectrum.json"), data("unmeasurable_assignment.json")}).code == 1);
}

TEST_CASE("cli: exit codes for bad input and usage") {
  CHECK(run({"check", data("malformed.json")}).code == 2);
  CHECK(run({"check", data("malformed.json")}).err.find("line 2") != std::string::npos);
  CHECK(run({"solve", data("zero_denominator.json")}).code == 2);
  CHECK(run({"solve", data("uncovered.json")}).code == 2);
  CHECK(run({"solve", data("does_not_exist.json")}).code == 2);
  CHECK(run({"solve", data("nospan.json")}).code == 1);
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage:") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"expand", data("spectrum_assignment.json")}).code == 2);  // --seed is required
}

TEST_CASE("cli: remaining subcommands") {
  const auto sh = run({"shapley", data("pair.json")});
  CHECK(sh.code == 0);
  CHECK(sh.out == "{\"1\":\"3/2\",\"2\":\"5/2\",\"total\":\"4\"}\n");
  CHECK(run({"shapley", data("triad.json")}).code == 1);

  const auto ext = run({"extend", data("spectrum.json")});
  CHECK(ext.code == 0);
  CHECK(parse_game(ext.out) == equivalent_game(spectrum_game()));

  const auto an = run({"analyze", data("triad.json")});
  CHECK(an.out == "{\"symmetric_pairs\":[[\"2\",\"3\"]],\"dummies\":[],\"superadditive\":false}\n");

  const auto gen = run({"gen-partition", data("scenario.json")});
  CHECK(gen.code == 0);
  CHECK(parse_game(gen.out).size() == 5);

  CHECK(run({"harsanyi", data("triad.json")}).out == "{\"1\":\"-4/3\",\"2\":\"-4/3\",\"3\":\"-4/3\",\"total\":\"-4\"}\n");
  CHECK(run({"dual", data("triad.json")}).code == 0);
  CHECK(run({"dual", data("spectrum.json")}).code == 1);
}

TEST_CASE("cli: expand is deterministic and preserves the game") {
  const auto a = run({"expand", data("spectrum_assignment.json"), "--seed", "9", "--zero-facilities", "2", "--max-replicas", "4"});
  const auto b = run({"expand", data("spectrum_assignment.json"), "--seed", "9", "--zero-facilities", "2", "--max-replicas", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Assignment expanded = parse_assignment(a.out);
  CHECK(validate_representation(expanded, spectrum_game()).ok());
  CHECK(reduce_to_minimal(expanded, spectrum_game().family()) == minimal_representation(spectrum_game()));
  const auto fam = run({"expand", data("spectrum_assignment.json"), "--seed", "9", "--family", data("spectrum.json")});
  CHECK(fam.code == 0);
}

TEST_CASE("cli output is byte-identical across runs") {
  for (const char* cmd : {"check", "represent", "solve", "extend", "analyze"}) {
    CHECK(run({cmd, data("spectrum.json")}).out == run({cmd, data("spectrum.json")}).out);
  }
}
