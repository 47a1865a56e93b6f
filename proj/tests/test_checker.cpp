#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gp2/checker.hpp"
#include "gp2/parser.hpp"
#include "test_util.hpp"

using namespace gp2;
using gp2::test::compile;

namespace {

CheckErrorKind kind_of(const std::string& text) {
  try {
    check(parse_program(text));
  } catch (const CheckError& e) {
    return e.kind();
  }
  FAIL("expected a check error");
  return CheckErrorKind::NoMain;
}

const char* kRule = "r() [ | ] => [ | ] interface = {}\n";

}  // namespace

TEST_CASE("a checked program carries one schema per rule") {
  CheckedProgram p = compile(
      "Main = link!\n"
      "link(a, b, x, y, z : list)\n"
      "[ (n1, x) (n2, y) (n3, z) | (e1, n1, n2, a) (e2, n2, n3, b) ]\n"
      "=>\n"
      "[ (n1, x) (n2, y) (n3, z) | (e1, n1, n2, a) (e2, n2, n3, b) (e3, n1, n3, empty) ]\n"
      "interface = {n1, n2, n3}\n"
      "where not edge(n1, n3)\n");
  REQUIRE(p.rules.size() == 1);
  const RuleSchema& s = p.rules.at("link");
  CHECK(s.var_types.size() == 5);
  for (const auto& [v, t] : s.var_types) CHECK(t == VarType::List);
  CHECK(s.deleted_nodes.empty());
  CHECK(s.created_nodes.empty());
  CHECK(s.preserved_edges == std::vector<std::string>{"e1", "e2"});
  CHECK(s.created_edges == std::vector<std::string>{"e3"});
  CHECK(s.deleted_edges.empty());
  // pattern order is id order
  CHECK(s.lhs.nodes[0].id == "n1");
  CHECK(s.lhs.nodes[2].id == "n3");
}

TEST_CASE("derived node sets split the sides") {
  CheckedProgram p = compile(
      "Main = r\n"
      "r(x : list)\n"
      "[ (a, x) (b, 1) | (e1, a, b, empty) ]\n"
      "=>\n"
      "[ (a, x) (c, 2) | (e2, a, c, empty) ]\n"
      "interface = {a}\n");
  const RuleSchema& s = p.rules.at("r");
  CHECK(s.deleted_nodes == std::vector<std::string>{"b"});
  CHECK(s.created_nodes == std::vector<std::string>{"c"});
  CHECK(s.deleted_edges == std::vector<std::string>{"e1"});
  CHECK(s.created_edges == std::vector<std::string>{"e2"});
}

TEST_CASE("named check errors") {
  CHECK(kind_of("Main = nosuch\n") == CheckErrorKind::UndeclaredRule);
  CHECK(kind_of(std::string("Main = {r, m}\nm = r\n") + kRule) ==
        CheckErrorKind::MacroInRuleSet);
  CHECK(kind_of("r() [ | ] => [ | ] interface = {}\n") ==
        CheckErrorKind::NoMain);
  CHECK(kind_of("Main = skip\nMain = skip\n") ==
        CheckErrorKind::DuplicateDeclaration);
  CHECK(kind_of(std::string("Main = r\n") + kRule + kRule) ==
        CheckErrorKind::DuplicateDeclaration);
  CHECK(kind_of("Main = m\nm = m\n") == CheckErrorKind::RecursiveMacro);

  // undeclared variable in a label
  CHECK(kind_of("Main = r\nr() [ (a, x) | ] => [ (a, x) | ] interface = {a}\n") ==
        CheckErrorKind::UndeclaredVariable);
  // RHS variable that the LHS never binds
  CHECK(kind_of("Main = r\nr(x : list) [ (a, empty) | ] => [ (a, x) | ] "
                "interface = {a}\n") == CheckErrorKind::VariableNotInLHS);
  // condition variable that the LHS never binds
  CHECK(kind_of("Main = r\nr(x : int) [ (a, empty) | ] => [ (a, empty) | ] "
                "interface = {a} where x > 0\n") ==
        CheckErrorKind::VariableNotInLHS);
  // two list variables in one LHS label
  CHECK(kind_of("Main = r\nr(x, y : list) [ (a, x:y) | ] => [ (a, x:y) | ] "
                "interface = {a}\n") ==
        CheckErrorKind::TwoListVariablesInLabel);
  // expressions are forbidden in LHS labels
  CHECK(kind_of("Main = r\nr(x : int) [ (a, x + 1) | ] => [ (a, x) | ] "
                "interface = {a}\n") == CheckErrorKind::LhsExpressionForbidden);
  CHECK(kind_of("Main = r\nr(x : int) [ (a, indeg(a)) | ] => [ (a, x) | ] "
                "interface = {a}\n") == CheckErrorKind::LhsExpressionForbidden);
  // marks on the wrong kind of entity
  CHECK(kind_of("Main = r\nr() [ (a, 1 # dashed) | ] => [ (a, 1 # dashed) | ] "
                "interface = {a}\n") == CheckErrorKind::MarkOnWrongEntity);
  CHECK(kind_of("Main = r\nr() [ (a, 1) | (e1, a, a, 2 # grey) ] => "
                "[ (a, 1) | ] interface = {a}\n") ==
        CheckErrorKind::MarkOnWrongEntity);
  // interface must name nodes on both sides
  CHECK(kind_of("Main = r\nr() [ (a, 1) | ] => [ (b, 1) | ] "
                "interface = {a}\n") == CheckErrorKind::InterfaceNotInBothSides);
  // a node on both sides must be in the interface
  CHECK(kind_of("Main = r\nr() [ (a, 1) | ] => [ (a, 1) | ] "
                "interface = {}\n") ==
        CheckErrorKind::SharedNodeOutsideInterface);
  // string variable inside arithmetic
  CHECK(kind_of("Main = r\nr(s : string) [ (a, s) | ] => [ (a, s + 1) | ] "
                "interface = {a}\n") == CheckErrorKind::TypeMismatch);
  // degree operator naming a non-LHS node
  CHECK(kind_of("Main = r\nr() [ (a, 1) | ] => [ (a, indeg(b)) | ] "
                "interface = {a}\n") == CheckErrorKind::UnknownNodeId);
  // edge predicate naming a non-LHS node
  CHECK(kind_of("Main = r\nr() [ (a, 1) | ] => [ (a, 1) | ] interface = {a} "
                "where edge(a, z)\n") == CheckErrorKind::UnknownNodeId);
  // two string variables in one concatenation
  CHECK(kind_of("Main = r\nr(s, t : string) [ (a, s . t) | ] => [ (a, 1) | ] "
                "interface = {a}\n") ==
        CheckErrorKind::TwoStringVariablesInConcat);
}

TEST_CASE("ordered comparisons accept int and atom, reject string") {
  CHECK_NOTHROW(compile(
      "Main = r\nr(x, y : int) [ (a, x:y) | ] => [ (a, x:y) | ] "
      "interface = {a} where x > y\n"));
  CHECK_NOTHROW(compile(
      "Main = r\nr(x : atom) [ (a, x) | ] => [ (a, x) | ] "
      "interface = {a} where x > 0\n"));
  CHECK(kind_of("Main = r\nr(s : string) [ (a, s) | ] => [ (a, s) | ] "
                "interface = {a} where s > 0\n") ==
        CheckErrorKind::TypeMismatch);
}

TEST_CASE("check is deterministic and pure") {
  std::ifstream in(test::programs_dir() + "/sierpinski.gp2");
  std::ostringstream buf;
  buf << in.rdbuf();
  Program p = parse_program(buf.str());
  CheckedProgram a = check(p);
  CheckedProgram b = check(p);
  CHECK(a.main == b.main);
  CHECK(a.rules.size() == b.rules.size());
  for (const auto& [name, s] : a.rules) {
    const RuleSchema& t = b.rules.at(name);
    CHECK(s.var_types == t.var_types);
    CHECK(s.interface == t.interface);
    CHECK(s.deleted_nodes == t.deleted_nodes);
    CHECK(s.created_nodes == t.created_nodes);
    CHECK(s.preserved_edges == t.preserved_edges);
  }
}

TEST_CASE("checking survives the printer") {
  std::ifstream in(test::programs_dir() + "/shortest_distances.gp2");
  std::ostringstream buf;
  buf << in.rdbuf();
  Program p = parse_program(buf.str());
  CheckedProgram a = check(p);
  CheckedProgram b = check(parse_program(print_program(p)));
  CHECK(a.main == b.main);
  for (const auto& [name, s] : a.rules) {
    const RuleSchema& t = b.rules.at(name);
    CHECK(s.condition == t.condition);
    CHECK(s.lhs.nodes == t.lhs.nodes);
    CHECK(s.lhs.edges == t.lhs.edges);
    CHECK(s.rhs.nodes == t.rhs.nodes);
    CHECK(s.rhs.edges == t.rhs.edges);
  }
}

TEST_CASE("the shipped programs check") {
  const char* names[] = {"transitive_closure.gp2", "vertex_colouring.gp2",
                         "shortest_distances.gp2", "acyclicity.gp2",
                         "sierpinski.gp2"};
  for (const char* name : names) {
    CAPTURE(name);
    std::ifstream in(test::programs_dir() + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK_NOTHROW(check(parse_program(buf.str())));
  }
}

TEST_CASE("variable contexts: degree-using and arithmetic rules type-check") {
  // int-declared variables may appear in arithmetic and comparisons
  CheckedProgram p = compile(
      "Main = inc\n"
      "inc(x, y : int)\n"
      "[ (a, x:y) | ] => [ (a, x:y + 1) | ]\n"
      "interface = {a}\n"
      "where x > y\n");
  CHECK(p.rules.at("inc").var_types.at("x") == VarType::Int);
  CHECK(p.rules.at("inc").var_types.at("y") == VarType::Int);
}
