#include "pifr/fuzzy.hpp"

#include "pifr/error.hpp"

namespace pifr {

namespace {

void guard(const Heading& h) {
  if (h.space_size() > kDenseLimit) {
    fail(ErrorKind::SpaceTooLarge, "fuzzy", "output space of " + h.scheme().to_string() + " is too large to evaluate densely");
  }
}

template <class F>
FuzzyRelation tabulate(const HeadingPtr& heading, ConfidenceValue default_grade, F&& grade_at) {
  guard(*heading);
  FuzzyRelation::Entries out;
  for (TupleOdometer it(*heading); !it.done(); it.next()) {
    out.emplace_hint(out.end(), it.current(), grade_at(it.current()));
  }
  return FuzzyRelation(heading, default_grade, std::move(out));
}

}  // namespace

FuzzyRelation f_set_op(SetOpKind kind, const FuzzyRelation& r, const std::optional<FuzzyRelation>& s) {
  if (kind == SetOpKind::Complement) {
    return tabulate(r.heading_ptr(), r.default_value().complement(),
                    [&](const Tuple& t) { return r.get(t).complement(); });
  }
  if (!s) fail(ErrorKind::InvalidArgument, "fuzzy", "binary set operation needs two arguments");
  FuzzyRelation other = align_to(*s, r.heading_ptr());
  auto apply = [kind](const ConfidenceValue& a, const ConfidenceValue& b) {
    switch (kind) {
      case SetOpKind::Union: return max(a, b);
      case SetOpKind::Intersection: return min(a, b);
      case SetOpKind::Difference: return min(a, b.complement());
      case SetOpKind::Complement: break;
    }
    return a;
  };
  return tabulate(r.heading_ptr(), apply(r.default_value(), other.default_value()),
                  [&](const Tuple& t) { return apply(r.get(t), other.get(t)); });
}

FuzzyRelation fuzzy_union(const FuzzyRelation& r, const FuzzyRelation& s) { return f_set_op(SetOpKind::Union, r, s); }
FuzzyRelation fuzzy_intersection(const FuzzyRelation& r, const FuzzyRelation& s) {
  return f_set_op(SetOpKind::Intersection, r, s);
}
FuzzyRelation fuzzy_difference(const FuzzyRelation& r, const FuzzyRelation& s) {
  return f_set_op(SetOpKind::Difference, r, s);
}
FuzzyRelation fuzzy_complement(const FuzzyRelation& r) { return f_set_op(SetOpKind::Complement, r); }

FuzzyRelation fuzzy_join(const FuzzyRelation& r, const FuzzyRelation& s) {
  HeadingPtr out = join_heading(r.heading(), s.heading());
  auto left_cols = column_map(*out, r.scheme());
  auto right_cols = column_map(*out, s.scheme());
  return tabulate(out, min(r.default_value(), s.default_value()), [&](const Tuple& t) {
    return min(r.get(permute(t, left_cols)), s.get(permute(t, right_cols)));
  });
}

FuzzyRelation fuzzy_project(const FuzzyRelation& r, const std::vector<std::string>& attributes) {
  HeadingPtr out = project_heading(r.heading(), attributes);
  return tabulate(out, r.default_value(), [&](const Tuple& t) {
    ConfidenceValue best = ConfidenceValue::zero();
    for (const auto& u : extensions(t, attributes, r.heading())) best = max(best, r.get(u));
    return best;
  });
}

FuzzyRelation fuzzy_select(const FuzzyRelation& r, const Formula& f) {
  FormulaEvaluator holds(f, r.heading());
  return tabulate(r.heading_ptr(), r.default_value(),
                  [&](const Tuple& t) { return holds(t) ? r.get(t) : ConfidenceValue::zero(); });
}

}  // namespace pifr
