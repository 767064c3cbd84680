#include "helpers.hpp"
#include "pifr/datasets.hpp"
#include "pifr/props.hpp"
#include "pifr/query.hpp"
#include "pifr/relation_io.hpp"

namespace pifr {
namespace {

using test::P;
using K = QueryExpr::Kind;

QueryExpr rel(const char* n) { return QueryExpr::relation(n); }

TEST(ParseQuery, Shapes) {
  EXPECT_EQ(parse_query("combine(split(R) join split(S))"),
            QueryExpr::combine(QueryExpr::binary(K::Join, QueryExpr::split(rel("R")), QueryExpr::split(rel("S")))));
  EXPECT_EQ(parse_query("project[X,Z](T1)"), QueryExpr::project({"X", "Z"}, rel("T1")));
  EXPECT_EQ(parse_query("select[not (X = Z)](T2)"),
            QueryExpr::select(Formula::negation(Formula::equals(Operand::attribute("X"), Operand::attribute("Z"))),
                              rel("T2")));
  EXPECT_EQ(parse_query("  R  "), rel("R"));
  EXPECT_EQ(parse_query("((R))"), rel("R"));
}

TEST(ParseQuery, Precedence) {
  // join binds tighter than the set operators
  EXPECT_EQ(parse_query("R union S join T"), QueryExpr::binary(K::Union, rel("R"), QueryExpr::binary(K::Join, rel("S"), rel("T"))));
  // set operators are left-associative at one level
  EXPECT_EQ(parse_query("R minus S union T"),
            QueryExpr::binary(K::Union, QueryExpr::binary(K::Minus, rel("R"), rel("S")), rel("T")));
  EXPECT_EQ(parse_query("R minus (S union T)"),
            QueryExpr::binary(K::Minus, rel("R"), QueryExpr::binary(K::Union, rel("S"), rel("T"))));
  EXPECT_EQ(parse_query("R join S join T"),
            QueryExpr::binary(K::Join, QueryExpr::binary(K::Join, rel("R"), rel("S")), rel("T")));
  // unary not binds tightest
  EXPECT_EQ(parse_query("not R join S"), QueryExpr::binary(K::Join, QueryExpr::complement(rel("R")), rel("S")));
}

TEST(ParseFormula, Shapes) {
  Formula f = parse_formula("X = 'a' and not Y = 'b'");
  EXPECT_EQ(f, Formula::conjunction(Formula::equals(Operand::attribute("X"), Operand::constant("a")),
                                    Formula::negation(Formula::equals(Operand::attribute("Y"), Operand::constant("b")))));
  EXPECT_EQ(parse_formula("not (X = Z)"),
            Formula::negation(Formula::equals(Operand::attribute("X"), Operand::attribute("Z"))));
  // and binds tighter than or
  EXPECT_EQ(parse_formula("X = 'a' or X = 'b' and Y = 'c'").kind, Formula::Kind::Or);
  EXPECT_EQ(parse_formula("Object = 'T-72'"), Formula::equals(Operand::attribute("Object"), Operand::constant("T-72")));
}

TEST(ParseErrors, PositionAndExpected) {
  try {
    parse_formula("X =");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 4);
    EXPECT_EQ(e.found(), "end of input");
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "attribute name"), e.expected().end());
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
  try {
    parse_query("R union\n  join S");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_EQ(e.found(), "'join'");
  }
  EXPECT_PIFR_ERROR(parse_query("R S"), ParseError);
  EXPECT_PIFR_ERROR(parse_query("project[](R)"), ParseError);
  EXPECT_PIFR_ERROR(parse_query("select[X = 'a](R)"), ParseError);
  EXPECT_PIFR_ERROR(parse_query("union"), ParseError);
  EXPECT_PIFR_ERROR(parse_query("R $ S"), ParseError);
  EXPECT_PIFR_ERROR(parse_query(""), ParseError);
  EXPECT_PIFR_ERROR(parse_query("split R"), ParseError);
}

TEST(ParseQuery, KeywordsAreCaseSensitive) {
  EXPECT_EQ(parse_query("Union"), rel("Union"));
  EXPECT_PIFR_ERROR(parse_query("R UNION S"), ParseError);
}

TEST(Scripts, ParseAndRender) {
  Script s = parse_script("# comment\nA = R union S;\nB = not A;\nB");
  ASSERT_EQ(s.statements.size(), 3u);
  EXPECT_EQ(s.statements[0].target, "A");
  EXPECT_FALSE(s.statements[2].target.has_value());
  EXPECT_EQ(parse_script(render(s)), s);
  EXPECT_EQ(parse_script("R;").statements.size(), 1u);
  EXPECT_PIFR_ERROR(parse_script("A = ;"), ParseError);
  EXPECT_PIFR_ERROR(parse_script(";"), ParseError);
}

TEST(Render, MinimalParentheses) {
  EXPECT_EQ(render(parse_query("(R union S) join T")), "(R union S) join T");
  EXPECT_EQ(render(parse_query("R union (S join T)")), "R union S join T");
  EXPECT_EQ(render(parse_query("R minus (S minus T)")), "R minus (S minus T)");
  EXPECT_EQ(render(parse_query("not (R join S)")), "not (R join S)");
  EXPECT_EQ(render(parse_query("project[X, Z]( T1 )")), "project[X,Z](T1)");
}

TEST(Render, RoundTripsRandomTrees) {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    QueryExpr e = random_query(rng, 5);
    std::string text = render(e);
    ASSERT_EQ(parse_query(text), e) << text;
  }
}

class Eval : public ::testing::Test {
 protected:
  DomainMap m = test::abc({"X", "Y"});
  Environment env;
  void SetUp() override {
    env.add("R", make_relation(Scheme{"X"}, m, P("0", "0"), {{{"a"}, P("0.9", "0.8")}, {{"b"}, P("0.3", "0.1")}}));
    env.add("S", make_relation(Scheme{"X"}, m, P("0.5", "0"), {}));
    env.add("Q", make_relation(Scheme{"Y"}, m, P("0", "1"), {}));
  }
  PifRelation plain(const char* q, EvalOptions o = {}) { return std::get<PifRelation>(eval_query(parse_query(q), env, o)); }
};

TEST_F(Eval, IdentityAndOperators) {
  EXPECT_EQ(plain("R"), std::get<PifRelation>(env.at("R")));
  EXPECT_EQ(plain("R union S"), pif_union(std::get<PifRelation>(env.at("R")), std::get<PifRelation>(env.at("S"))));
  EXPECT_EQ(plain("not R").get({"a"}), P("0.8", "0.9"));
  EXPECT_EQ(plain("R join Q").scheme(), (Scheme{"X", "Y"}));
  EXPECT_EQ(plain("project[X](R join Q)").get({"a"}), P("0", "1"));
}

TEST_F(Eval, SplitCombineTyping) {
  RelationValue v = eval_query(parse_query("split(R)"), env);
  EXPECT_TRUE(std::holds_alternative<AnnotatedRelation>(v));
  EXPECT_TRUE(std::holds_alternative<AnnotatedRelation>(eval_query(parse_query("split(R) union S"), env)));
  EXPECT_PIFR_ERROR(eval_query(parse_query("split(split(R))"), env), TypeMismatch);
  EXPECT_PIFR_ERROR(eval_query(parse_query("combine(R)"), env), TypeMismatch);
  EXPECT_PIFR_ERROR(eval_query(parse_query("W"), env), UnboundIdentifier);
  EXPECT_PIFR_ERROR(eval_query(parse_query("R union Q"), env), SchemeMismatch);
}

TEST_F(Eval, AutoSplitMatchesExplicitPipeline) {
  EXPECT_EQ(plain("R union S", {.auto_split = true}), plain("combine(split(R) union split(S))"));
  // The split/combine pipeline agrees with the direct operator.
  EXPECT_EQ(plain("R minus S", {.auto_split = true}), plain("R minus S"));
}

TEST_F(Eval, EnvironmentGuards) {
  EXPECT_PIFR_ERROR(env.add("R", std::get<PifRelation>(env.at("S"))), DuplicateIdentifier);
  DomainMap small{{"X", Domain{"a", "b"}}};
  EXPECT_PIFR_ERROR(env.add("V", constant_relation(make_heading(Scheme{"X"}, small), P("0", "0"))), DomainConflict);
  EXPECT_PIFR_ERROR(env.add("not", std::get<PifRelation>(env.at("S"))), InvalidArgument);
}

TEST_F(Eval, ScriptsBindInOrder) {
  Script s = parse_script("A = R union S; B = not A; B");
  PifRelation b = std::get<PifRelation>(eval_script(s, env));
  EXPECT_EQ(b, pif_complement(plain("R union S")));
  EXPECT_FALSE(env.find("A"));  // the caller's environment is untouched
}

TEST(EvalExamples, Example1Script) {
  const ExampleData& d = example_data("example1");
  Environment env = example_env(d);
  Script s = parse_script(d.script);
  PifRelation t3 = std::get<PifRelation>(eval_script(s, env));
  EXPECT_EQ(t3, read_relation(d.expected.at("T3")));
}

TEST(EvalExamples, TankQuery) {
  const ExampleData& d = example_data("tanks");
  PifRelation out = std::get<PifRelation>(eval_script(parse_script(d.script), example_env(d)));
  EXPECT_EQ(out.entries().size(), 3u);
  EXPECT_EQ(out.get({"o1", "T-72"}), P("0.05", "0"));
  EXPECT_EQ(out.get({"o2", "T-80"}), P("0", "0.05"));
  EXPECT_EQ(out.get({"o3", "T-80"}), P("0.05", "0"));
  EXPECT_EQ(out.default_value(), P("0", "0"));
}

TEST(EvalExamples, ReplayPassesWithAndWithoutAutoSplit) {
  for (const auto& n : example_names()) {
    EXPECT_TRUE(replay_example(example_data(n)).pass) << n;
    EXPECT_TRUE(replay_example(example_data(n), {.auto_split = true}).pass) << n;
  }
}

}  // namespace
}  // namespace pifr
