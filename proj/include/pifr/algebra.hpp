#pragma once

#include <span>
#include <string>
#include <vector>

#include "pifr/formula.hpp"
#include "pifr/operators.hpp"
#include "pifr/relation.hpp"

namespace pifr {

// Generalized algebra on PIF relations. All operators act on the total
// functions the relations denote (defaults included) and return canonical
// sparse relations.

/// <max beliefs, min doubts>
PifRelation pif_union(const PifRelation& r, const PifRelation& s);
/// <doubt, belief>
PifRelation pif_complement(const PifRelation& r);
/// <min beliefs, max doubts>
PifRelation pif_intersection(const PifRelation& r, const PifRelation& s);
/// <min{R+, S-}, max{R-, S+}>
PifRelation pif_difference(const PifRelation& r, const PifRelation& s);
/// On the union of both schemes: <min of projected beliefs, max of projected doubts>.
/// Throws DomainConflict when a shared attribute has different domains.
PifRelation pif_join(const PifRelation& r, const PifRelation& s);
/// <max beliefs, min doubts> over the extensions of each tuple.
PifRelation pif_project(const PifRelation& r, const std::vector<std::string>& attributes);
/// Tuples satisfying `f` keep their pair; all others become <0, 1>.
PifRelation pif_select(const PifRelation& r, const Formula& f);

/// Replaces every inconsistent pair <b, d> (b + d > 1) by the two consistent
/// pairs <b, 1-b> and <1-d, d>; every other pair becomes a singleton. The
/// default pair is treated like any other tuple.
AnnotatedRelation split(const PifRelation& r);
/// Per tuple <max belief, max doubt> over the annotation set.
PifRelation combine(const AnnotatedRelation& a);

// Lifted operators on annotated relations. For pointwise operators and join,
// the annotation set at t is the operator applied to every combination of one
// annotation per argument. For projection the full set of choice-function
// reductions is exponential in the fiber size; it is represented by the two
// members that carry its envelope (all per-tuple belief maxima chosen, and all
// per-tuple doubt maxima chosen), which is a subset with the same combine.

AnnotatedRelation lifted_union(const AnnotatedRelation& a, const AnnotatedRelation& b);
AnnotatedRelation lifted_complement(const AnnotatedRelation& a);
AnnotatedRelation lifted_intersection(const AnnotatedRelation& a, const AnnotatedRelation& b);
AnnotatedRelation lifted_difference(const AnnotatedRelation& a, const AnnotatedRelation& b);
AnnotatedRelation lifted_join(const AnnotatedRelation& a, const AnnotatedRelation& b);
AnnotatedRelation lifted_project(const AnnotatedRelation& a, const std::vector<std::string>& attributes);
AnnotatedRelation lifted_select(const AnnotatedRelation& a, const Formula& f);

/// Dispatch helpers. Throw InvalidArgument when args.size() != op.arity().
PifRelation apply(const OpSpec& op, std::span<const PifRelation> args);
AnnotatedRelation lift_op(const OpSpec& op, std::span<const AnnotatedRelation> args);

/// combine(lift_op(op, split(args...)))
PifRelation apply_via_split(const OpSpec& op, std::span<const PifRelation> args);

}  // namespace pifr
