#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pifr/fuzzy.hpp"
#include "pifr/operators.hpp"
#include "pifr/relation.hpp"

namespace pifr {

/// lambda: a total PIF relation read as the fuzzy relation of its beliefs.
/// Throws NotTotal.
FuzzyRelation lambda_total(const PifRelation& r);

/// Closed membership interval [lo, hi], 0 <= lo <= hi <= 1.
struct Interval {
  ConfidenceValue lo;
  ConfidenceValue hi;

  bool contains(const ConfidenceValue& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }
  std::string to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + "]"; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalRelation = SparseRelation<Interval>;

/// Per tuple [belief, 1 - doubt]: the grades any completion may take.
/// Throws NotConsistent.
IntervalRelation reps_interval(const PifRelation& r);

/// Whether `q` is one of the completions of `r`. Throws NotConsistent, SchemeMismatch.
bool reps_contains(const PifRelation& r, const FuzzyRelation& q);

/// A finite set of fuzzy relations over one heading. Members are stored as
/// grade vectors over the product space in lexicographic tuple order.
class FuzzyFamily {
 public:
  FuzzyFamily() = default;
  explicit FuzzyFamily(HeadingPtr heading);

  /// Throws SchemeMismatch if `q` is over a different heading.
  void insert(const FuzzyRelation& q);
  bool contains(const FuzzyRelation& q) const;

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const HeadingPtr& heading_ptr() const noexcept { return heading_; }
  std::vector<FuzzyRelation> relations() const;

  /// Some member of `*this` missing from `other`, if any.
  std::optional<FuzzyRelation> first_missing_from(const FuzzyFamily& other) const;

  friend bool operator==(const FuzzyFamily& a, const FuzzyFamily& b);

 private:
  std::vector<ConfidenceValue> dense(const FuzzyRelation& q) const;
  FuzzyRelation relation(const std::vector<ConfidenceValue>& grades) const;

  HeadingPtr heading_;
  std::set<std::vector<ConfidenceValue>> members_;
};

inline constexpr std::uint64_t kDefaultGrid = 4;
inline constexpr std::uint64_t kFamilyLimit = 1'000'000;

/// Completions of `r` whose grades lie on {0, 1/k, ..., 1} or at an endpoint
/// of the tuple's interval. Throws NotConsistent, SpaceTooLarge (more than
/// `limit` members), InvalidArgument (k == 0).
FuzzyFamily reps_enumerate(const PifRelation& r, std::uint64_t k = kDefaultGrid, std::uint64_t limit = kFamilyLimit);

using FuzzyOperator = std::function<FuzzyRelation(std::span<const FuzzyRelation>)>;
using PifOperator = std::function<PifRelation(std::span<const PifRelation>)>;

FuzzyOperator fuzzy_operator(const OpSpec& op);
PifOperator pif_operator(const OpSpec& op);

/// S(theta): theta applied to every combination of one member per family.
/// Empty input family gives the empty family. Throws SpaceTooLarge when the
/// number of combinations exceeds `limit`.
FuzzyFamily s_theta(const FuzzyOperator& theta, std::span<const FuzzyFamily> families,
                    std::uint64_t limit = kFamilyLimit);

enum class GeneralizationMode { Weak, Strong };

struct Counterexample {
  std::vector<PifRelation> inputs;
  std::string where;     // tuple or offending member, rendered
  std::string expected;
  std::string actual;
};

struct GeneralizationReport {
  std::string operator_name;
  GeneralizationMode mode = GeneralizationMode::Weak;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::optional<std::uint64_t> grid;
  /// Strong verdicts are grid-limited: a failure is a genuine refutation, a
  /// pass only confirms the grid.
  std::string note;

  std::string to_string() const;
};

/// lambda(psi(args)) == theta(lambda(args)), psi(args) total. Throws NotTotal
/// when an argument is not total.
GeneralizationReport check_weak_generalization(const std::string& name, const PifOperator& psi,
                                               const FuzzyOperator& theta, std::span<const PifRelation> totals);

/// reps_enumerate(psi(args), k) == s_theta(theta, reps_enumerate(arg, k)...),
/// psi(args) consistent. Throws NotConsistent for inconsistent arguments.
GeneralizationReport check_strong_generalization(const std::string& name, const PifOperator& psi,
                                                 const FuzzyOperator& theta, std::span<const PifRelation> consistents,
                                                 std::uint64_t k = kDefaultGrid);

/// "{(a)=0.25, (b)=1}" over the full product space.
std::string render_dense(const FuzzyRelation& q);

}  // namespace pifr
