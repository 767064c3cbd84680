#include <set>

#include "helpers.hpp"
#include "pifr/props.hpp"

namespace pifr {
namespace {

using test::P;

class Algebra : public ::testing::Test {
 protected:
  DomainMap m = test::abc({"X", "Y", "Z"});
  HeadingPtr x = make_heading(Scheme{"X"}, m);
  HeadingPtr y = make_heading(Scheme{"Y"}, m);

  PifRelation r_ex1 = make_relation(Scheme{"X", "Y"}, m, ConfidencePair::none(),
                                    {{{"a", "a"}, P("0", "1")},
                                     {{"a", "b"}, P("0", "1")},
                                     {{"a", "c"}, P("0", "1")},
                                     {{"b", "b"}, P("1", "0")},
                                     {{"b", "c"}, P("1", "0")},
                                     {{"c", "b"}, P("1", "1")}});
  PifRelation s_ex1 = make_relation(Scheme{"Y", "Z"}, m, ConfidencePair::none(),
                                    {{{"a", "c"}, P("1", "0")}, {{"b", "a"}, P("1", "1")}, {{"c", "b"}, P("0", "1")}});
};

TEST_F(Algebra, PointwiseExamples) {
  PifRelation r = make_relation(x, P("0", "0"), {{{"a"}, P("0.3", "0.6")}, {{"b"}, P("0.7", "0.2")}});
  PifRelation s = make_relation(x, P("0", "0"), {{{"a"}, P("0.5", "0.2")}, {{"b"}, P("0.6", "0.3")}});
  EXPECT_EQ(pif_union(r, s).get({"a"}), P("0.5", "0.2"));
  EXPECT_EQ(pif_intersection(r, s).get({"a"}), P("0.3", "0.6"));
  EXPECT_EQ(pif_difference(r, s).get({"b"}), P("0.3", "0.6"));
  EXPECT_EQ(pif_complement(r).get({"a"}), P("0.6", "0.3"));
  EXPECT_EQ(pif_complement(r).default_value(), P("0", "0"));
}

TEST_F(Algebra, DefaultsPropagatePointwise) {
  PifRelation r = constant_relation(x, P("0.2", "0.4"));
  PifRelation s = constant_relation(x, P("0.5", "0.1"));
  PifRelation u = pif_union(r, s);
  EXPECT_TRUE(u.entries().empty());
  EXPECT_EQ(u.default_value(), P("0.5", "0.1"));
  EXPECT_EQ(pif_difference(r, s).default_value(), P("0.1", "0.5"));
}

TEST_F(Algebra, JoinWithConstantTrueIsCylinder) {
  PifRelation r = make_relation(x, P("0.1", "0.2"), {{{"b"}, P("0.9", "0.05")}});
  PifRelation j = pif_join(r, constant_relation(y, P("1", "0")));
  EXPECT_EQ(j.scheme(), (Scheme{"X", "Y"}));
  for (const char* v : {"a", "b", "c"}) {
    EXPECT_EQ(j.get({"b", v}), P("0.9", "0.05"));
    EXPECT_EQ(j.get({"a", v}), P("0.1", "0.2"));
  }
}

TEST_F(Algebra, ProjectAndSelectIdentities) {
  EXPECT_EQ(pif_project(r_ex1, {"X", "Y"}), r_ex1);
  EXPECT_EQ(pif_select(r_ex1, Formula::tautology("X")), r_ex1);
  PifRelation none = pif_select(r_ex1, Formula::negation(Formula::tautology("X")));
  for (TupleOdometer it(r_ex1.heading()); !it.done(); it.next()) EXPECT_EQ(none.get(it.current()), P("0", "1"));
}

TEST_F(Algebra, ProjectIncludesDefaultOnlyWhenFiberNotStored) {
  DomainMap two{{"X", Domain{"a", "b"}}, {"Y", Domain{"a", "b"}}};
  HeadingPtr h = make_heading(Scheme{"X", "Y"}, two);
  // Fiber of a fully stored, fiber of b half stored.
  PifRelation r = make_relation(h, P("0.9", "0"),
                                {{{"a", "a"}, P("0.1", "0.5")}, {{"a", "b"}, P("0.2", "0.4")}, {{"b", "a"}, P("0", "1")}});
  PifRelation p = pif_project(r, {"X"});
  EXPECT_EQ(p.get({"a"}), P("0.2", "0.4"));
  EXPECT_EQ(p.get({"b"}), P("0.9", "0"));
}

TEST_F(Algebra, SplitExamples) {
  PifRelation r = make_relation(x, P("0.9", "0.8"), {{{"a"}, P("0.3", "0.3")}});
  AnnotatedRelation s = split(r);
  EXPECT_EQ(s.get({"b"}), (AnnotationSet{P("0.9", "0.1"), P("0.2", "0.8")}));
  EXPECT_EQ(s.get({"a"}), AnnotationSet(P("0.3", "0.3")));
  EXPECT_EQ(s.default_value(), (AnnotationSet{P("0.9", "0.1"), P("0.2", "0.8")}));
  EXPECT_EQ(combine(s), r);
  for (const auto& [t, set] : s.entries()) {
    for (const auto& p : set) EXPECT_TRUE(p.is_consistent());
  }
}

TEST_F(Algebra, Example1Chain) {
  PifRelation t1 = combine(lifted_join(split(r_ex1), split(s_ex1)));
  EXPECT_EQ(t1.scheme(), (Scheme{"X", "Y", "Z"}));
  EXPECT_EQ(t1.entries().size(), 15u);
  EXPECT_EQ(t1.get({"b", "b", "a"}), P("1", "1"));
  EXPECT_EQ(t1.get({"c", "b", "a"}), P("1", "1"));
  EXPECT_EQ(t1.get({"a", "c", "c"}), P("0", "1"));
  EXPECT_EQ(t1.get({"b", "a", "a"}), P("0", "0"));
  EXPECT_EQ(t1.default_value(), P("0", "0"));

  PifRelation t2 = combine(lifted_project(split(t1), {"X", "Z"}));
  EXPECT_EQ(t2.entries().size(), 5u);
  EXPECT_EQ(t2.get({"b", "a"}), P("1", "0"));
  EXPECT_EQ(t2.get({"c", "a"}), P("1", "0"));
  EXPECT_EQ(t2.get({"a", "b"}), P("0", "1"));
  EXPECT_EQ(t2.get({"b", "b"}), P("0", "0"));

  Formula x_ne_z = Formula::negation(Formula::equals(Operand::attribute("X"), Operand::attribute("Z")));
  PifRelation t3 = pif_select(t2, x_ne_z);
  EXPECT_EQ(t3.entries().size(), 7u);
  EXPECT_EQ(t3.get({"b", "b"}), P("0", "1"));
  EXPECT_EQ(t3.get({"c", "c"}), P("0", "1"));
  EXPECT_EQ(t3.get({"b", "a"}), P("1", "0"));
  EXPECT_EQ(t3.get({"b", "c"}), P("0", "0"));
}

TEST_F(Algebra, Errors) {
  PifRelation rx = constant_relation(x, P("0", "0"));
  PifRelation ry = constant_relation(y, P("0", "0"));
  EXPECT_PIFR_ERROR(pif_union(rx, ry), SchemeMismatch);
  EXPECT_PIFR_ERROR(pif_project(rx, {"Y"}), UnknownAttribute);
  EXPECT_PIFR_ERROR(pif_select(rx, Formula::equals(Operand::attribute("X"), Operand::constant("q"))),
                    ValueOutsideDomain);
  std::vector<PifRelation> one{rx};
  EXPECT_PIFR_ERROR(pifr::apply(OpSpec::make(OpKind::Union), one), InvalidArgument);
  DomainMap other{{"X", Domain{"a", "b"}}};
  EXPECT_PIFR_ERROR(pif_join(rx, constant_relation(make_heading(Scheme{"X"}, other), P("0", "0"))), DomainConflict);
}

TEST_F(Algebra, UnionAlignsPermutedSchemes) {
  PifRelation xy = make_relation(Scheme{"X", "Y"}, m, P("0", "0"), {{{"a", "b"}, P("1", "0")}});
  PifRelation yx = make_relation(Scheme{"Y", "X"}, m, P("0", "0"), {{{"a", "b"}, P("0.5", "0")}});
  PifRelation u = pif_union(xy, yx);
  EXPECT_EQ(u.scheme(), (Scheme{"X", "Y"}));
  EXPECT_EQ(u.get({"a", "b"}), P("1", "0"));
  EXPECT_EQ(u.get({"b", "a"}), P("0.5", "0"));
}

// Every operator agrees with a dense per-tuple evaluation of its definition.
TEST(AlgebraOracle, MatchesDenseEvaluation) {
  Rng rng(20240601);
  GenConfig gen;
  for (int c = 0; c < 300; ++c) {
    for (OpKind kind : all_op_kinds()) {
      OpCase oc = random_case(rng, kind, PairKind::Arbitrary, gen);
      PifRelation got = pifr::apply(oc.op, oc.args);
      PifRelation want = test::dense_oracle(oc.op, oc.args);
      ASSERT_EQ(got, want) << oc.op.name() << " case " << c;
    }
  }
}

// The lifted projection keeps two representatives per fiber; the full image
// over all choice functions must contain them and have the same envelope.
TEST(AlgebraOracle, LiftedProjectionMatchesChoiceEnumeration) {
  Rng rng(77);
  GenConfig gen;
  gen.max_domain = 2;
  for (int c = 0; c < 200; ++c) {
    HeadingPtr h = random_heading(rng, random_domains(rng, gen), gen);
    AnnotatedRelation a = split(random_relation(rng, h, PairKind::Arbitrary, 4));
    std::vector<std::string> attrs{h->attribute(0)};
    AnnotatedRelation closed = lifted_project(a, attrs);
    HeadingPtr ph = project_heading(*h, attrs);

    for (TupleOdometer out(*ph); !out.done(); out.next()) {
      std::vector<AnnotationSet> fiber;
      for (TupleOdometer it(*h); !it.done(); it.next()) {
        if (test::restrict(*ph, test::bind(*h, it.current())) == out.current()) fiber.push_back(a.get(it.current()));
      }
      std::set<ConfidencePair> full;
      std::vector<std::size_t> pick(fiber.size(), 0);
      while (true) {
        ConfidencePair acc = fiber[0].pairs()[pick[0]];
        for (std::size_t i = 1; i < fiber.size(); ++i) {
          const auto& p = fiber[i].pairs()[pick[i]];
          acc = {max(acc.belief, p.belief), min(acc.doubt, p.doubt)};
        }
        full.insert(acc);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == fiber[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
      const AnnotationSet& got = closed.get(out.current());
      for (const auto& p : got) EXPECT_TRUE(full.contains(p));
      AnnotationSet full_set{std::vector<ConfidencePair>(full.begin(), full.end())};
      EXPECT_EQ(got.envelope(), full_set.envelope());
    }
  }
}

TEST(AlgebraOracle, CombineSplitIsIdentity) {
  Rng rng(5);
  GenConfig gen;
  for (int c = 0; c < 300; ++c) {
    HeadingPtr h = random_heading(rng, random_domains(rng, gen), gen);
    PifRelation r = random_relation(rng, h, PairKind::Arbitrary, 4);
    EXPECT_EQ(combine(split(r)), r);
  }
}

}  // namespace
}  // namespace pifr
