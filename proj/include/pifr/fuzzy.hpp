#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pifr/confidence.hpp"
#include "pifr/formula.hpp"
#include "pifr/sparse_relation.hpp"

namespace pifr {

/// Ordinary fuzzy relation: a membership grade in [0,1] per tuple.
using FuzzyRelation = SparseRelation<ConfidenceValue>;

// Reference algebra on fuzzy relations. Every operator is evaluated densely:
// each tuple of the output space is computed straight from the defining
// min / max / 1-x formula by looking up the inputs. This is deliberately
// independent of the sparse evaluation strategy used by the generalized
// algebra, so it can serve as an oracle for it. Output spaces larger than
// `kDenseLimit` tuples raise SpaceTooLarge.

inline constexpr std::uint64_t kDenseLimit = 1'000'000;

enum class SetOpKind { Union, Intersection, Difference, Complement };

/// union: max, intersection: min, difference: min(R, 1-S), complement: 1-R.
/// Binary kinds require `s` over the same attributes and domains.
FuzzyRelation f_set_op(SetOpKind kind, const FuzzyRelation& r, const std::optional<FuzzyRelation>& s = std::nullopt);

FuzzyRelation fuzzy_union(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation fuzzy_intersection(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation fuzzy_difference(const FuzzyRelation& r, const FuzzyRelation& s);
FuzzyRelation fuzzy_complement(const FuzzyRelation& r);

/// Grade min{R(pi_left t), S(pi_right t)} on the union of the schemes.
FuzzyRelation fuzzy_join(const FuzzyRelation& r, const FuzzyRelation& s);
/// Grade max over the extensions of t.
FuzzyRelation fuzzy_project(const FuzzyRelation& r, const std::vector<std::string>& attributes);
/// Keeps the grade where `f` holds, 0 elsewhere.
FuzzyRelation fuzzy_select(const FuzzyRelation& r, const Formula& f);

}  // namespace pifr
