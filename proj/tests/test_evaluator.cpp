#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gp2/evaluator.hpp"
#include "gp2/hostgen.hpp"
#include "gp2/parser.hpp"
#include "test_util.hpp"

using namespace gp2;
using gp2::test::compile;
using gp2::test::host;

namespace {

std::vector<GraphState> run_all(const CheckedProgram& p, const HostGraph& g,
                                int max_apps = 10000) {
  return eval_command_all(p, p.main, GraphState::active(g, 0), max_apps);
}

const char* kLink =
    "link(a, b, x, y, z : list)\n"
    "[ (n1, x) (n2, y) (n3, z) | (e1, n1, n2, a) (e2, n2, n3, b) ]\n"
    "=>\n"
    "[ (n1, x) (n2, y) (n3, z) | (e1, n1, n2, a) (e2, n2, n3, b) (e3, n1, n3, empty) ]\n"
    "interface = {n1, n2, n3}\n"
    "where not edge(n1, n3)\n";

}  // namespace

TEST_CASE("failed and unfinished states pass through unchanged") {
  CheckedProgram p = compile("Main = skip\n");
  GraphState failed = GraphState::failed(3);
  auto out = eval_command_all(p, p.main, failed, 10);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == failed);
  auto out2 = eval_command_all(p, p.main, GraphState::unfinished(), 10);
  REQUIRE(out2.size() == 1);
  CHECK(out2[0].kind == GraphState::Kind::Unfinished);
}

TEST_CASE("skip and fail") {
  CheckedProgram p = compile("Main = fail\n");
  auto out = eval_command_all(p, p.main, GraphState::active(HostGraph{}, 3),
                              10);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == GraphState::failed(3));

  CheckedProgram q = compile("Main = skip\n");
  HostGraph g = host("[ (a, 1) | ]");
  auto out2 = eval_command_all(q, q.main, GraphState::active(g, 2), 10);
  REQUIRE(out2.size() == 1);
  CHECK(out2[0] == GraphState::active(g, 2));
}

TEST_CASE("a rule call at the bound yields Unfinished, below it applies") {
  CheckedProgram p = compile(std::string("Main = link\n") + kLink);
  HostGraph g = host(
      "[ (a, empty) (b, empty) (c, empty) | (e1, a, b, empty) (e2, b, c, empty) ]");
  auto at_bound = eval_command_all(p, p.main, GraphState::active(g, 5), 5);
  REQUIRE(at_bound.size() == 1);
  CHECK(at_bound[0].kind == GraphState::Kind::Unfinished);

  auto below = eval_command_all(p, p.main, GraphState::active(g, 4), 5);
  REQUIRE(below.size() == 1);
  CHECK(below[0].kind == GraphState::Kind::Active);
  CHECK(below[0].count == 5);
}

TEST_CASE("a rule call with no match fails at the current count") {
  CheckedProgram p = compile(std::string("Main = link\n") + kLink);
  HostGraph g = host("[ (a, empty) | ]");
  auto out = eval_command_all(p, p.main, GraphState::active(g, 7), 100);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == GraphState::failed(7));
}

TEST_CASE("looped link on linear-5 terminates with count 6") {
  CheckedProgram p = compile(std::string("Main = link!\n") + kLink);
  EvalOutput single =
      eval_program(p, linear_host_graph(5), 10000, Mode::SingleResult);
  REQUIRE(single.classes.size() == 1);
  CHECK(single.classes[0].count == 1);
  CHECK(single.active_counts == std::vector<int>{6});

  // the loop's exit means the failing component no longer matches
  const RuleSchema& link = p.rules.at("link");
  CHECK(apply_rule_all(single.classes[0].representative, link).empty());
}

TEST_CASE("loop rollback restores the iteration-entry graph and count") {
  // inside the loop, step succeeds once and blocked never matches, so the
  // single iteration's partial effects must be discarded
  CheckedProgram p = compile(
      "Main = (step; blocked)!\n"
      "step() [ (n, 0) | ] => [ (n, 1) | ] interface = {n}\n"
      "blocked() [ (n, 2) | ] => [ (n, 2) | ] interface = {n}\n");
  HostGraph g = host("[ (u, 0) | ]");
  auto out = run_all(p, g);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == GraphState::active(g, 0));  // the recorded entry pair
}

TEST_CASE("if runs both arms on the original graph with the pre-condition count") {
  // cond = pick; confirm: pick relabels u or v, confirm only accepts the
  // u-variant, so one condition branch succeeds and one fails
  const char* rules =
      "pick(x : list) [ (n, x) | ] => [ (n, x:9) | ] interface = {n}\n"
      "confirm() [ (n, 0:9) | ] => [ (n, 0:9) | ] interface = {n}\n"
      "then_t() [ (n, 0:9) | ] => [ (n, 7) | ] interface = {n}\n";
  HostGraph g = host("[ (u, 0) (v, 1) | ]");

  CheckedProgram p = compile(std::string("Main = if pick; confirm then then_t\n") + rules);
  auto out = run_all(p, g);
  REQUIRE(out.size() == 2);
  // success branch: then_t on the ORIGINAL graph has no 0:9 node -> Failed(0)
  CHECK(out[0] == GraphState::failed(0));
  // failure branch: implicit else = skip on the original state
  CHECK(out[1] == GraphState::active(g, 0));

  CheckedProgram q = compile(std::string("Main = try pick; confirm then then_t\n") + rules);
  auto out2 = run_all(q, g);
  REQUIRE(out2.size() == 2);
  // success branch: then_t continues from the condition's result and count
  REQUIRE(out2[0].kind == GraphState::Kind::Active);
  CHECK(out2[0].count == 3);
  CHECK(out2[0].graph.node(1).label ==
        HostLabel{{Atom{std::int64_t{7}}}, Mark::None});
  CHECK(out2[1] == GraphState::active(g, 0));
}

TEST_CASE("else branch runs from the original state") {
  CheckedProgram p = compile(
      "Main = if nomatch then skip else mark\n"
      "nomatch() [ (n, 5) | ] => [ (n, 5) | ] interface = {n}\n"
      "mark(x : list) [ (n, x) | ] => [ (n, x # blue) | ] interface = {n}\n");
  HostGraph g = host("[ (u, 0) | ]");
  auto out = run_all(p, g);
  REQUIRE(out.size() == 1);
  REQUIRE(out[0].kind == GraphState::Kind::Active);
  CHECK(out[0].count == 1);
  CHECK(out[0].graph.node(1).label.mark == Mark::Blue);
}

TEST_CASE("an unfinished condition makes the whole branch unfinished") {
  CheckedProgram p = compile(
      "Main = if mark then skip else skip\n"
      "mark(x : list) [ (n, x) | ] => [ (n, x:1) | ] interface = {n}\n");
  HostGraph g = host("[ (u, 0) | ]");
  auto out = eval_command_all(p, p.main, GraphState::active(g, 0), 0);
  REQUIRE(out.size() == 1);
  CHECK(out[0].kind == GraphState::Kind::Unfinished);
}

TEST_CASE("rule sets gather results across rules in written order") {
  CheckedProgram p = compile(
      "Main = {red_u, blue_v}\n"
      "red_u() [ (n, 0) | ] => [ (n, 0 # red) | ] interface = {n}\n"
      "blue_v() [ (n, 1) | ] => [ (n, 1 # blue) | ] interface = {n}\n");
  HostGraph g = host("[ (u, 0) (v, 1) | ]");
  auto out = run_all(p, g);
  REQUIRE(out.size() == 2);
  CHECK(out[0].graph.node(1).label.mark == Mark::Red);
  CHECK(out[1].graph.node(2).label.mark == Mark::Blue);
  for (const auto& s : out) CHECK(s.count == 1);

  // an empty rule set can never be applied
  CheckedProgram q = compile("Main = {}\n");
  auto out2 = run_all(q, g);
  REQUIRE(out2.size() == 1);
  CHECK(out2[0] == GraphState::failed(0));
}

TEST_CASE("branch conservation and bound safety") {
  CheckedProgram p = compile(
      "Main = paint!\n"
      "paint(x : list) [ (n, x) | ] => [ (n, x:1 # grey) | ] interface = {n}\n");
  HostGraph g = grid_host_graph(2, 2);
  for (int max_apps : {0, 1, 2, 3, 4, 100}) {
    CAPTURE(max_apps);
    int leaves = 0;
    eval_command(p, p.main, GraphState::active(g, 0), max_apps,
                 [&](const GraphState& s) {
                   ++leaves;
                   if (s.kind != GraphState::Kind::Unfinished)
                     CHECK(s.count <= max_apps);
                   return true;
                 });
    EvalOutput out = eval_program(p, g, max_apps, Mode::AllResults);
    int total = out.failures + out.unfinished;
    for (const auto& c : out.classes) total += c.count;
    CHECK(total == leaves);
  }
}

TEST_CASE("single-result equals the first branch of the all-results enumeration") {
  const char* programs[] = {
      "Main = paint!\n"
      "paint(x : list) [ (n, x) | ] => [ (n, x:1 # grey) | ] interface = {n}\n",
      "Main = if paint then fail else skip\n"
      "paint(x : list) [ (n, x) | ] => [ (n, x:1 # grey) | ] interface = {n}\n",
  };
  for (const char* text : programs) {
    CheckedProgram p = compile(text);
    HostGraph g = grid_host_graph(2, 2);
    auto all = run_all(p, g);
    REQUIRE(!all.empty());
    GraphState first = all[0];

    EvalOutput single = eval_program(p, g, 10000, Mode::SingleResult);
    if (first.kind == GraphState::Kind::Active) {
      REQUIRE(single.classes.size() == 1);
      CHECK(single.classes[0].representative == first.graph);
      CHECK(single.active_counts == std::vector<int>{first.count});
    } else {
      CHECK(single.classes.empty());
      CHECK(single.failures == 1);
      CHECK(single.failed_counts == std::vector<int>{first.count});
    }
  }
}

TEST_CASE("terminal copies are counted per class, not deduplicated") {
  // two init orders reach the same two-node colouring
  CheckedProgram p = compile(
      "Main = paint!\n"
      "paint(x : list) [ (n, x) | ] => [ (n, x:1 # grey) | ] interface = {n}\n");
  HostGraph g = host("[ (u, 0) (v, 0) | ]");
  EvalOutput out = eval_program(p, g, 10000, Mode::AllResults);
  REQUIRE(out.classes.size() == 1);
  CHECK(out.classes[0].count == 2);
  CHECK(out.active_counts == std::vector<int>(2, 2));
}

TEST_CASE("expression errors abort the run rather than fail the branch") {
  CheckedProgram p = compile(
      "Main = boom\n"
      "boom(i : int) [ (n, i) | ] => [ (n, i / 0) | ] interface = {n}\n");
  HostGraph g = host("[ (u, 4) | ]");
  CHECK_THROWS_AS(eval_program(p, g, 10, Mode::AllResults), EvalError);
}
