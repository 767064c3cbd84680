#include "pifr/algebra.hpp"

#include "engine.hpp"
#include "pifr/error.hpp"

namespace pifr {

namespace {

const ConfidencePair kRejected{ConfidenceValue::zero(), ConfidenceValue::one()};

ConfidencePair union_pair(const ConfidencePair& a, const ConfidencePair& b) {
  return {max(a.belief, b.belief), min(a.doubt, b.doubt)};
}
ConfidencePair intersection_pair(const ConfidencePair& a, const ConfidencePair& b) {
  return {min(a.belief, b.belief), max(a.doubt, b.doubt)};
}
ConfidencePair difference_pair(const ConfidencePair& a, const ConfidencePair& b) {
  return {min(a.belief, b.doubt), max(a.doubt, b.belief)};
}

ConfidencePair fiber_reduce(std::span<const ConfidencePair> values) {
  ConfidencePair out = values.front();
  for (const auto& p : values) {
    out.belief = max(out.belief, p.belief);
    out.doubt = min(out.doubt, p.doubt);
  }
  return out;
}

template <class F>
auto lift_pairwise(F f) {
  return [f](const AnnotationSet& a, const AnnotationSet& b) {
    std::vector<ConfidencePair> out;
    out.reserve(a.size() * b.size());
    for (const auto& p : a) {
      for (const auto& q : b) out.push_back(f(p, q));
    }
    return AnnotationSet(std::move(out));
  };
}

AnnotationSet closed_form_fiber(std::span<const AnnotationSet> sets) {
  // Pairs are ordered by (belief, doubt), so back() has the largest belief.
  std::vector<ConfidencePair> belief_choice;
  std::vector<ConfidencePair> doubt_choice;
  for (const auto& s : sets) {
    belief_choice.push_back(s.pairs().back());
    ConfidencePair best = s.pairs().front();
    for (const auto& p : s) {
      if (best.doubt < p.doubt || (best.doubt == p.doubt && best.belief < p.belief)) best = p;
    }
    doubt_choice.push_back(best);
  }
  return AnnotationSet{fiber_reduce(belief_choice), fiber_reduce(doubt_choice)};
}

void check_arity(const OpSpec& op, std::size_t n) {
  if (n != op.arity()) {
    fail(ErrorKind::InvalidArgument, "algebra",
         op.name() + " takes " + std::to_string(op.arity()) + " argument(s), got " + std::to_string(n));
  }
}

}  // namespace

PifRelation pif_union(const PifRelation& r, const PifRelation& s) { return engine::pointwise(r, s, union_pair); }

PifRelation pif_complement(const PifRelation& r) {
  return map_values(r, [](const ConfidencePair& p) { return p.swapped(); });
}

PifRelation pif_intersection(const PifRelation& r, const PifRelation& s) {
  return engine::pointwise(r, s, intersection_pair);
}

PifRelation pif_difference(const PifRelation& r, const PifRelation& s) {
  return engine::pointwise(r, s, difference_pair);
}

PifRelation pif_join(const PifRelation& r, const PifRelation& s) { return engine::join(r, s, intersection_pair); }

PifRelation pif_project(const PifRelation& r, const std::vector<std::string>& attributes) {
  return engine::project(r, attributes, [](std::span<const ConfidencePair> v) { return fiber_reduce(v); });
}

PifRelation pif_select(const PifRelation& r, const Formula& f) { return engine::select(r, f, kRejected); }

AnnotatedRelation split(const PifRelation& r) {
  return map_values(r, [](const ConfidencePair& p) {
    if (p.is_consistent()) return AnnotationSet(p);
    return AnnotationSet{{p.belief, p.belief.complement()}, {p.doubt.complement(), p.doubt}};
  });
}

PifRelation combine(const AnnotatedRelation& a) { return envelope(a); }

AnnotatedRelation lifted_union(const AnnotatedRelation& a, const AnnotatedRelation& b) {
  return engine::pointwise(a, b, lift_pairwise(union_pair));
}

AnnotatedRelation lifted_complement(const AnnotatedRelation& a) {
  return map_values(a, [](const AnnotationSet& s) {
    std::vector<ConfidencePair> out;
    for (const auto& p : s) out.push_back(p.swapped());
    return AnnotationSet(std::move(out));
  });
}

AnnotatedRelation lifted_intersection(const AnnotatedRelation& a, const AnnotatedRelation& b) {
  return engine::pointwise(a, b, lift_pairwise(intersection_pair));
}

AnnotatedRelation lifted_difference(const AnnotatedRelation& a, const AnnotatedRelation& b) {
  return engine::pointwise(a, b, lift_pairwise(difference_pair));
}

AnnotatedRelation lifted_join(const AnnotatedRelation& a, const AnnotatedRelation& b) {
  return engine::join(a, b, lift_pairwise(intersection_pair));
}

AnnotatedRelation lifted_project(const AnnotatedRelation& a, const std::vector<std::string>& attributes) {
  return engine::project(a, attributes, [](std::span<const AnnotationSet> v) { return closed_form_fiber(v); });
}

AnnotatedRelation lifted_select(const AnnotatedRelation& a, const Formula& f) {
  return engine::select(a, f, AnnotationSet(kRejected));
}

PifRelation apply(const OpSpec& op, std::span<const PifRelation> args) {
  check_arity(op, args.size());
  switch (op.kind) {
    case OpKind::Union: return pif_union(args[0], args[1]);
    case OpKind::Complement: return pif_complement(args[0]);
    case OpKind::Intersection: return pif_intersection(args[0], args[1]);
    case OpKind::Difference: return pif_difference(args[0], args[1]);
    case OpKind::Join: return pif_join(args[0], args[1]);
    case OpKind::Project: return pif_project(args[0], op.attributes);
    case OpKind::Select: return pif_select(args[0], op.formula);
  }
  fail(ErrorKind::InvalidArgument, "algebra", "unknown operator");
}

AnnotatedRelation lift_op(const OpSpec& op, std::span<const AnnotatedRelation> args) {
  check_arity(op, args.size());
  switch (op.kind) {
    case OpKind::Union: return lifted_union(args[0], args[1]);
    case OpKind::Complement: return lifted_complement(args[0]);
    case OpKind::Intersection: return lifted_intersection(args[0], args[1]);
    case OpKind::Difference: return lifted_difference(args[0], args[1]);
    case OpKind::Join: return lifted_join(args[0], args[1]);
    case OpKind::Project: return lifted_project(args[0], op.attributes);
    case OpKind::Select: return lifted_select(args[0], op.formula);
  }
  fail(ErrorKind::InvalidArgument, "algebra", "unknown operator");
}

PifRelation apply_via_split(const OpSpec& op, std::span<const PifRelation> args) {
  std::vector<AnnotatedRelation> split_args;
  split_args.reserve(args.size());
  for (const auto& r : args) split_args.push_back(split(r));
  return combine(lift_op(op, split_args));
}

std::size_t OpSpec::arity() const {
  switch (kind) {
    case OpKind::Union:
    case OpKind::Intersection:
    case OpKind::Difference:
    case OpKind::Join: return 2;
    default: return 1;
  }
}

std::string to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Union: return "union";
    case OpKind::Complement: return "complement";
    case OpKind::Intersection: return "intersection";
    case OpKind::Difference: return "difference";
    case OpKind::Join: return "join";
    case OpKind::Project: return "project";
    case OpKind::Select: return "select";
  }
  return "?";
}

std::string OpSpec::name() const {
  switch (kind) {
    case OpKind::Project: {
      std::string out = "project[";
      for (std::size_t i = 0; i < attributes.size(); ++i) out += (i ? "," : "") + attributes[i];
      return out + "]";
    }
    case OpKind::Select: return "select[" + render(formula) + "]";
    default: return to_string(kind);
  }
}

}  // namespace pifr
