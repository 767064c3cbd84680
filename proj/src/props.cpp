#include "pifr/props.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "pifr/algebra.hpp"
#include "pifr/error.hpp"
#include "pifr/relation_io.hpp"
#include "pifr/reps.hpp"

namespace pifr {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "props", "empty range");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

namespace {

ConfidenceValue grid_value(std::uint64_t i, std::uint64_t k) {
  return ConfidenceValue(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k));
}

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::string describe(const OpSpec& op, std::span<const PifRelation> args) {
  std::string out = "operator " + op.name() + "\n";
  for (std::size_t i = 0; i < args.size(); ++i) {
    out += "argument " + std::to_string(i + 1) + " on " + args[i].scheme().to_string() + ":\n";
    out += format_table(args[i]);
  }
  return out;
}

bool crisp(const ConfidenceValue& v) { return v == ConfidenceValue::zero() || v == ConfidenceValue::one(); }
bool crisp(const ConfidencePair& p) { return crisp(p.belief) && crisp(p.doubt); }

class Tally {
 public:
  explicit Tally(SuiteReport& report) : report_(report) {}

  void check(bool ok, const std::function<std::string()>& explain) {
    ++report_.checks;
    if (ok) return;
    ++report_.failures;
    if (!report_.first_counterexample) report_.first_counterexample = explain();
  }

 private:
  SuiteReport& report_;
};

std::vector<OpKind> operators_or(const SuiteConfig& config, std::vector<OpKind> fallback) {
  return config.operators.empty() ? fallback : config.operators;
}

void run_laws(const SuiteConfig& config, Rng& rng, Tally& tally) {
  GenConfig gen;
  gen.grid = config.grid;
  for (std::uint64_t c = 0; c < config.cases; ++c) {
    DomainMap domains = random_domains(rng, gen);
    HeadingPtr h = random_heading(rng, domains, gen);
    PifRelation r = random_relation(rng, h, PairKind::Arbitrary, config.grid);
    PifRelation s = random_relation(rng, h, PairKind::Arbitrary, config.grid);
    std::vector<PifRelation> args{r, s};

    PifRelation meet = pif_intersection(r, s);
    PifRelation via_union = pif_complement(pif_union(pif_complement(r), pif_complement(s)));
    tally.check(meet == via_union, [&] {
      return "R intersect S != not(not R union not S)\n" + describe(OpSpec::make(OpKind::Intersection), args);
    });

    PifRelation diff = pif_difference(r, s);
    PifRelation via_complement = pif_complement(pif_union(pif_complement(r), s));
    tally.check(diff == via_complement, [&] {
      return "R minus S != not(not R union S)\n" + describe(OpSpec::make(OpKind::Difference), args);
    });
  }
}

void run_weakgen(const SuiteConfig& config, Rng& rng, Tally& tally) {
  GenConfig gen;
  gen.grid = config.grid;
  for (std::uint64_t c = 0; c < config.cases; ++c) {
    for (OpKind kind : operators_or(config, all_op_kinds())) {
      OpCase oc = random_case(rng, kind, PairKind::Total, gen);
      auto report = check_weak_generalization(oc.op.name(), pif_operator(oc.op), fuzzy_operator(oc.op), oc.args);
      tally.check(report.pass, [&] { return report.to_string(); });
    }
  }
}

void run_stronggen(const SuiteConfig& config, Rng& rng, Tally& tally) {
  GenConfig gen;
  gen.grid = config.grid;
  gen.max_arity = 1;
  gen.min_domain = gen.max_domain = 2;
  gen.attributes = {"X", "Y"};
  const std::vector<OpKind> fallback{OpKind::Union, OpKind::Complement, OpKind::Join, OpKind::Project, OpKind::Select};
  for (std::uint64_t c = 0; c < config.cases; ++c) {
    for (OpKind kind : operators_or(config, fallback)) {
      OpCase oc = random_case(rng, kind, PairKind::Consistent, gen);
      try {
        auto report = check_strong_generalization(oc.op.name(), pif_operator(oc.op), fuzzy_operator(oc.op), oc.args,
                                                  config.grid);
        tally.check(report.pass, [&] { return report.to_string(); });
      } catch (const Error& e) {
        tally.check(false, [&] { return std::string(e.what()) + "\n" + describe(oc.op, oc.args); });
      }
    }
  }
}

void run_pipeline(const SuiteConfig& config, Rng& rng, Tally& tally) {
  GenConfig gen;
  gen.grid = config.grid;
  for (std::uint64_t c = 0; c < config.cases; ++c) {
    for (OpKind kind : operators_or(config, all_op_kinds())) {
      OpCase oc = random_case(rng, kind, PairKind::Arbitrary, gen);
      PifRelation direct = pifr::apply(oc.op, oc.args);
      PifRelation piped = pifr::apply_via_split(oc.op, oc.args);
      tally.check(direct == piped, [&] {
        auto t = first_difference(direct, piped);
        std::string where = t ? direct.heading().render(*t) + ": direct " + direct.get(*t).to_string() + ", via split " +
                                    piped.get(*t).to_string()
                              : "";
        return "combine(lift(op)(split(args))) != op(args) at " + where + "\n" + describe(oc.op, oc.args);
      });
    }
    HeadingPtr h = random_heading(rng, random_domains(rng, gen), gen);
    PifRelation r = random_relation(rng, h, PairKind::Arbitrary, config.grid);
    tally.check(combine(split(r)) == r, [&] { return "combine(split(R)) != R for\n" + format_table(r); });
  }
}

void run_prdm(const SuiteConfig& config, Rng& rng, Tally& tally) {
  GenConfig gen;
  gen.grid = config.grid;
  for (std::uint64_t c = 0; c < config.cases; ++c) {
    for (OpKind kind : operators_or(config, all_op_kinds())) {
      OpCase oc = random_case(rng, kind, PairKind::Crisp, gen);
      PifRelation out = pifr::apply(oc.op, oc.args);
      bool ok = crisp(out.default_value());
      for (const auto& [t, p] : out.entries()) ok = ok && crisp(p);
      tally.check(ok, [&] { return "output leaves {0,1}^2:\n" + format_table(out) + describe(oc.op, oc.args); });
    }
  }
}

void run_singleton(const SuiteConfig& config, Rng& rng, Tally& tally) {
  GenConfig gen;
  gen.grid = config.grid;
  for (std::uint64_t c = 0; c < config.cases; ++c) {
    // Enumeration grows as (k+1)^|space|; at most 6 tuples keeps it well under the guard.
    HeadingPtr h;
    do {
      h = random_heading(rng, random_domains(rng, gen), gen);
    } while (h->space_size() > 6);
    PairKind kind = rng.below(3) == 0 ? PairKind::Total : PairKind::Consistent;
    PifRelation r = random_relation(rng, h, kind, config.grid);
    std::size_t members = reps_enumerate(r, config.grid).size();
    bool total = classify(r, 1).total;
    tally.check((members == 1) == total, [&] {
      return "reps has " + std::to_string(members) + " member(s) but total = " + (total ? "true" : "false") + " for\n" +
             format_table(r);
    });
  }
}

}  // namespace

ConfidencePair random_pair(Rng& rng, PairKind kind, std::uint64_t k) {
  switch (kind) {
    case PairKind::Arbitrary: return {grid_value(rng.below(k + 1), k), grid_value(rng.below(k + 1), k)};
    case PairKind::Consistent: {
      std::uint64_t i = rng.below(k + 1);
      return {grid_value(i, k), grid_value(rng.below(k - i + 1), k)};
    }
    case PairKind::Total: {
      std::uint64_t i = rng.below(k + 1);
      return {grid_value(i, k), grid_value(k - i, k)};
    }
    case PairKind::Crisp: return {grid_value(rng.below(2), 1), grid_value(rng.below(2), 1)};
  }
  return ConfidencePair::none();
}

DomainMap random_domains(Rng& rng, const GenConfig& config) {
  DomainMap out;
  for (const auto& a : config.attributes) {
    std::size_t n = config.min_domain + rng.below(config.max_domain - config.min_domain + 1);
    std::vector<std::string> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(std::string(1, static_cast<char>('a' + i)));
    out.emplace(a, Domain(std::move(values)));
  }
  return out;
}

HeadingPtr random_heading(Rng& rng, const DomainMap& domains, const GenConfig& config) {
  std::vector<std::string> pool;
  for (const auto& [a, d] : domains) pool.push_back(a);
  shuffle(rng, pool);
  std::size_t arity = 1 + rng.below(std::min(config.max_arity, pool.size()));
  pool.resize(arity);
  return make_heading(Scheme(pool), domains);
}

PifRelation random_relation(Rng& rng, HeadingPtr heading, PairKind kind, std::uint64_t grid) {
  ConfidencePair dflt =
      kind != PairKind::Total && rng.coin() ? ConfidencePair::none() : random_pair(rng, kind, grid);
  PifRelation::Entries entries;
  for (TupleOdometer it(*heading); !it.done(); it.next()) {
    if (rng.coin()) entries.emplace(it.current(), random_pair(rng, kind, grid));
  }
  return PifRelation(std::move(heading), dflt, std::move(entries));
}

Formula random_formula(Rng& rng, const Heading& heading, int depth) {
  if (depth <= 0 || rng.below(3) == 0) {
    std::size_t i = rng.below(heading.arity());
    Operand attr = Operand::attribute(heading.attribute(i));
    if (rng.coin()) return Formula::equals(attr, Operand::attribute(heading.attribute(rng.below(heading.arity()))));
    const Domain& d = heading.domain(i);
    Operand value = Operand::constant(d[static_cast<ValueIndex>(rng.below(d.size()))]);
    return rng.coin() ? Formula::equals(attr, value) : Formula::equals(value, attr);
  }
  switch (rng.below(3)) {
    case 0: return Formula::negation(random_formula(rng, heading, depth - 1));
    case 1: return Formula::conjunction(random_formula(rng, heading, depth - 1), random_formula(rng, heading, depth - 1));
    default: return Formula::disjunction(random_formula(rng, heading, depth - 1), random_formula(rng, heading, depth - 1));
  }
}

OpCase random_case(Rng& rng, OpKind kind, PairKind pairs, const GenConfig& config) {
  DomainMap domains = random_domains(rng, config);
  HeadingPtr h = random_heading(rng, domains, config);
  OpCase out{OpSpec::make(kind), {}};
  out.args.push_back(random_relation(rng, h, pairs, config.grid));
  switch (kind) {
    case OpKind::Union:
    case OpKind::Intersection:
    case OpKind::Difference: out.args.push_back(random_relation(rng, h, pairs, config.grid)); break;
    case OpKind::Join:
      out.args.push_back(random_relation(rng, random_heading(rng, domains, config), pairs, config.grid));
      break;
    case OpKind::Project: {
      std::vector<std::string> attrs = h->scheme().attributes();
      shuffle(rng, attrs);
      attrs.resize(1 + rng.below(attrs.size()));
      out.op = OpSpec::project(std::move(attrs));
      break;
    }
    case OpKind::Select: out.op = OpSpec::select(random_formula(rng, *h)); break;
    case OpKind::Complement: break;
  }
  return out;
}

namespace {

const std::vector<std::string> kQueryNames{"R", "S", "T", "U"};
const std::vector<std::string> kQueryAttributes{"X", "Y", "Z"};
const std::vector<std::string> kQueryConstants{"a", "b", "T-72", "o_1"};

Operand random_operand(Rng& rng) {
  return rng.coin() ? Operand::attribute(rng.pick(kQueryAttributes)) : Operand::constant(rng.pick(kQueryConstants));
}

Formula random_free_formula(Rng& rng, int depth) {
  if (depth <= 0 || rng.below(3) == 0) return Formula::equals(random_operand(rng), random_operand(rng));
  switch (rng.below(3)) {
    case 0: return Formula::negation(random_free_formula(rng, depth - 1));
    case 1: return Formula::conjunction(random_free_formula(rng, depth - 1), random_free_formula(rng, depth - 1));
    default: return Formula::disjunction(random_free_formula(rng, depth - 1), random_free_formula(rng, depth - 1));
  }
}

}  // namespace

QueryExpr random_query(Rng& rng, int depth) {
  using K = QueryExpr::Kind;
  if (depth <= 0 || rng.below(4) == 0) return QueryExpr::relation(rng.pick(kQueryNames));
  switch (rng.below(9)) {
    case 0: return QueryExpr::binary(K::Union, random_query(rng, depth - 1), random_query(rng, depth - 1));
    case 1: return QueryExpr::binary(K::Intersect, random_query(rng, depth - 1), random_query(rng, depth - 1));
    case 2: return QueryExpr::binary(K::Minus, random_query(rng, depth - 1), random_query(rng, depth - 1));
    case 3: return QueryExpr::binary(K::Join, random_query(rng, depth - 1), random_query(rng, depth - 1));
    case 4: return QueryExpr::complement(random_query(rng, depth - 1));
    case 5: {
      std::vector<std::string> attrs = kQueryAttributes;
      shuffle(rng, attrs);
      attrs.resize(1 + rng.below(attrs.size()));
      return QueryExpr::project(std::move(attrs), random_query(rng, depth - 1));
    }
    case 6: return QueryExpr::select(random_free_formula(rng, 3), random_query(rng, depth - 1));
    case 7: return QueryExpr::split(random_query(rng, depth - 1));
    default: return QueryExpr::combine(random_query(rng, depth - 1));
  }
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Laws: return "laws";
    case Suite::WeakGen: return "weakgen";
    case Suite::StrongGen: return "stronggen";
    case Suite::Pipeline: return "pipeline";
    case Suite::PrdmClosure: return "prdm-closure";
    case Suite::Singleton: return "singleton";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::Laws,     Suite::WeakGen,     Suite::StrongGen,
                                         Suite::Pipeline, Suite::PrdmClosure, Suite::Singleton};
  return suites;
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : all_suites()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string SuiteReport::to_string() const {
  std::string out = "suite: " + pifr::to_string(suite) + "\n";
  out += "seed: " + std::to_string(config.seed) + "\n";
  out += "grid: " + std::to_string(config.grid) + "\n";
  out += "cases: " + std::to_string(config.cases) + "\n";
  out += "checks: " + std::to_string(checks) + "\n";
  out += "failures: " + std::to_string(failures) + "\n";
  if (!note.empty()) out += "note: " + note + "\n";
  out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
  if (first_counterexample) out += "first counterexample:\n" + *first_counterexample;
  if (!out.empty() && out.back() != '\n') out += "\n";
  return out;
}

SuiteReport run_suite(Suite suite, const SuiteConfig& config) {
  if (config.grid == 0) fail(ErrorKind::InvalidArgument, "props", "grid must be positive");
  SuiteReport report;
  report.suite = suite;
  report.config = config;
  Rng rng(config.seed);
  Tally tally(report);
  switch (suite) {
    case Suite::Laws: run_laws(config, rng, tally); break;
    case Suite::WeakGen: run_weakgen(config, rng, tally); break;
    case Suite::StrongGen:
      report.note = "discretized check on grid 1/" + std::to_string(config.grid) +
                    ": a failure refutes, a pass only covers the grid";
      run_stronggen(config, rng, tally);
      break;
    case Suite::Pipeline: run_pipeline(config, rng, tally); break;
    case Suite::PrdmClosure: run_prdm(config, rng, tally); break;
    case Suite::Singleton: run_singleton(config, rng, tally); break;
  }
  return report;
}

}  // namespace pifr
