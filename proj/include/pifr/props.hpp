#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pifr/operators.hpp"
#include "pifr/query.hpp"
#include "pifr/relation.hpp"

namespace pifr {

/// Seeded generator with its own bounded draw, so a seed gives the same
/// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

enum class PairKind {
  Arbitrary,   // belief and doubt independent on the grid
  Consistent,  // belief + doubt <= 1
  Total,       // belief + doubt == 1
  Crisp,       // both in {0, 1}
};

struct GenConfig {
  std::uint64_t grid = 4;
  std::size_t max_arity = 2;
  std::size_t min_domain = 2;
  std::size_t max_domain = 3;
  std::vector<std::string> attributes{"X", "Y", "Z"};
};

ConfidencePair random_pair(Rng& rng, PairKind kind, std::uint64_t grid);

/// Domains for every attribute in the pool, sizes drawn from the config.
/// Values are "a", "b", "c", ...
DomainMap random_domains(Rng& rng, const GenConfig& config);

/// A heading over 1..max_arity distinct attributes of `domains`, in random order.
HeadingPtr random_heading(Rng& rng, const DomainMap& domains, const GenConfig& config);

/// Default drawn from `kind` (half the time <0, 0> when allowed); each tuple
/// stored with probability 1/2.
PifRelation random_relation(Rng& rng, HeadingPtr heading, PairKind kind, std::uint64_t grid);

/// Random selection formula over the heading's attributes and domain values.
Formula random_formula(Rng& rng, const Heading& heading, int depth = 2);

/// An operator instance with arguments that satisfy its scheme preconditions.
struct OpCase {
  OpSpec op;
  std::vector<PifRelation> args;
};

OpCase random_case(Rng& rng, OpKind kind, PairKind pairs, const GenConfig& config);

/// Random well-formed query tree over relation names R, S, T, U and
/// attributes X, Y, Z; not meant to evaluate, only to print and parse.
QueryExpr random_query(Rng& rng, int depth = 4);

// ---------------------------------------------------------------------------
// Property suites

enum class Suite { Laws, WeakGen, StrongGen, Pipeline, PrdmClosure, Singleton };

/// "laws", "weakgen", "stronggen", "pipeline", "prdm-closure", "singleton".
std::string to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& name);
const std::vector<Suite>& all_suites();

struct SuiteConfig {
  std::uint64_t cases = 100;
  std::uint64_t seed = 1;
  std::uint64_t grid = 4;
  /// Restrict operator-indexed suites to these kinds; empty means the suite's own list.
  std::vector<OpKind> operators;
};

struct SuiteReport {
  Suite suite = Suite::Laws;
  SuiteConfig config;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_counterexample;
  std::string note;

  bool pass() const { return failures == 0; }
  std::string to_string() const;
};

/// What each suite checks, per case:
///   laws         two De Morgan identities on a random pair of relations
///   weakgen      lambda(psi(args)) == theta(lambda(args)) on total inputs, each operator
///   stronggen    reps(psi(args)) == S(theta)(reps(args)) on consistent inputs over
///                1-attribute schemes with 2-value domains; union, complement, join,
///                project, select
///   pipeline     combine(lift(op)(split(args))) == op(args) on arbitrary inputs, each
///                operator, plus combine(split(R)) == R
///   prdm-closure every output pair of every operator on {0,1}-inputs stays in {0,1}
///   singleton    reps of a consistent relation is a singleton iff it is total
SuiteReport run_suite(Suite suite, const SuiteConfig& config);

}  // namespace pifr
