#include "pifr/reps.hpp"

#include <algorithm>

#include "pifr/algebra.hpp"
#include "pifr/error.hpp"

namespace pifr {

namespace {

void require_consistent(const PifRelation& r) {
  auto report = classify(r, 1);
  if (!report.consistent) {
    fail(ErrorKind::NotConsistent, "reps",
         "relation is inconsistent at " + r.heading().render(report.inconsistent.front()));
  }
}

std::vector<ConfidenceValue> grid_points(const Interval& iv, std::uint64_t k) {
  std::vector<ConfidenceValue> out{iv.lo, iv.hi};
  for (std::uint64_t j = 0; j <= k; ++j) {
    ConfidenceValue g(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k));
    if (iv.contains(g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string render_inputs(std::span<const PifRelation> rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += "; ";
    out += rs[i].scheme().to_string() + " default " + rs[i].default_value().to_string();
    for (const auto& [t, p] : rs[i].entries()) out += " " + rs[i].heading().render(t) + "=" + p.to_string();
  }
  return out;
}

}  // namespace

FuzzyRelation lambda_total(const PifRelation& r) {
  auto report = classify(r, 1);
  if (!report.total) {
    const Tuple& w = report.inconsistent.empty() ? report.incomplete.front() : report.inconsistent.front();
    fail(ErrorKind::NotTotal, "reps", "relation is not total at " + r.heading().render(w));
  }
  return map_values(r, [](const ConfidencePair& p) { return p.belief; });
}

IntervalRelation reps_interval(const PifRelation& r) {
  require_consistent(r);
  return map_values(r, [](const ConfidencePair& p) { return Interval{p.belief, p.doubt.complement()}; });
}

bool reps_contains(const PifRelation& r, const FuzzyRelation& q) {
  IntervalRelation bounds = reps_interval(r);
  FuzzyRelation aligned = align_to(q, r.heading_ptr());
  std::set<Tuple> keys;
  for (const auto& [t, v] : bounds.entries()) keys.insert(t);
  for (const auto& [t, v] : aligned.entries()) keys.insert(t);
  for (const auto& t : keys) {
    if (!bounds.get(t).contains(aligned.get(t))) return false;
  }
  // Tuples stored on neither side pair the two defaults.
  if (keys.size() < r.heading().space_size() && !bounds.default_value().contains(aligned.default_value())) return false;
  return true;
}

FuzzyFamily::FuzzyFamily(HeadingPtr heading) : heading_(std::move(heading)) {}

std::vector<ConfidenceValue> FuzzyFamily::dense(const FuzzyRelation& q) const {
  if (!heading_ || !(q.heading() == *heading_)) {
    fail(ErrorKind::SchemeMismatch, "reps", "fuzzy relation does not match the family's heading");
  }
  std::vector<ConfidenceValue> out;
  out.reserve(static_cast<std::size_t>(heading_->space_size()));
  for (TupleOdometer it(*heading_); !it.done(); it.next()) out.push_back(q.get(it.current()));
  return out;
}

FuzzyRelation FuzzyFamily::relation(const std::vector<ConfidenceValue>& grades) const {
  FuzzyRelation::Entries entries;
  std::size_t i = 0;
  for (TupleOdometer it(*heading_); !it.done(); it.next()) entries.emplace_hint(entries.end(), it.current(), grades[i++]);
  return FuzzyRelation(heading_, ConfidenceValue::zero(), std::move(entries));
}

void FuzzyFamily::insert(const FuzzyRelation& q) {
  if (!heading_) heading_ = q.heading_ptr();
  members_.insert(dense(q));
}

bool FuzzyFamily::contains(const FuzzyRelation& q) const {
  if (!heading_ || !(q.heading() == *heading_)) return false;
  return members_.contains(dense(q));
}

std::vector<FuzzyRelation> FuzzyFamily::relations() const {
  std::vector<FuzzyRelation> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(relation(m));
  return out;
}

std::optional<FuzzyRelation> FuzzyFamily::first_missing_from(const FuzzyFamily& other) const {
  for (const auto& m : members_) {
    if (!other.heading_ || !(*other.heading_ == *heading_) || !other.members_.contains(m)) return relation(m);
  }
  return std::nullopt;
}

bool operator==(const FuzzyFamily& a, const FuzzyFamily& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return *a.heading_ == *b.heading_ && a.members_ == b.members_;
}

FuzzyFamily reps_enumerate(const PifRelation& r, std::uint64_t k, std::uint64_t limit) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "reps", "grid must be positive");
  IntervalRelation bounds = reps_interval(r);
  const Heading& h = r.heading();
  if (h.space_size() > limit) fail(ErrorKind::SpaceTooLarge, "reps", "tuple space too large to enumerate");

  std::vector<std::vector<ConfidenceValue>> choices;
  std::uint64_t total = 1;
  for (TupleOdometer it(h); !it.done(); it.next()) {
    choices.push_back(grid_points(bounds.get(it.current()), k));
    total *= choices.back().size();
    if (total > limit) {
      fail(ErrorKind::SpaceTooLarge, "reps", "completion set exceeds " + std::to_string(limit) + " relations");
    }
  }

  FuzzyFamily family(r.heading_ptr());
  std::vector<std::size_t> digit(choices.size(), 0);
  HeadingPtr heading = r.heading_ptr();
  while (true) {
    FuzzyRelation::Entries entries;
    std::size_t i = 0;
    for (TupleOdometer it(h); !it.done(); it.next(), ++i) {
      entries.emplace_hint(entries.end(), it.current(), choices[i][digit[i]]);
    }
    family.insert(FuzzyRelation(heading, ConfidenceValue::zero(), std::move(entries)));

    std::size_t pos = digit.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < choices[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return family;
    }
  }
}

FuzzyOperator fuzzy_operator(const OpSpec& op) {
  return [op](std::span<const FuzzyRelation> args) -> FuzzyRelation {
    if (args.size() != op.arity()) fail(ErrorKind::InvalidArgument, "reps", "wrong number of arguments for " + op.name());
    switch (op.kind) {
      case OpKind::Union: return fuzzy_union(args[0], args[1]);
      case OpKind::Complement: return fuzzy_complement(args[0]);
      case OpKind::Intersection: return fuzzy_intersection(args[0], args[1]);
      case OpKind::Difference: return fuzzy_difference(args[0], args[1]);
      case OpKind::Join: return fuzzy_join(args[0], args[1]);
      case OpKind::Project: return fuzzy_project(args[0], op.attributes);
      case OpKind::Select: return fuzzy_select(args[0], op.formula);
    }
    fail(ErrorKind::InvalidArgument, "reps", "unknown operator");
  };
}

PifOperator pif_operator(const OpSpec& op) {
  return [op](std::span<const PifRelation> args) { return apply(op, args); };
}

FuzzyFamily s_theta(const FuzzyOperator& theta, std::span<const FuzzyFamily> families, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (const auto& f : families) {
    if (f.empty()) return FuzzyFamily();
    total *= f.size();
    if (total > limit) fail(ErrorKind::SpaceTooLarge, "reps", "too many combinations for S(theta)");
  }
  std::vector<std::vector<FuzzyRelation>> members;
  for (const auto& f : families) members.push_back(f.relations());

  FuzzyFamily out;
  std::vector<std::size_t> digit(members.size(), 0);
  std::vector<FuzzyRelation> args;
  while (true) {
    args.clear();
    for (std::size_t i = 0; i < members.size(); ++i) args.push_back(members[i][digit[i]]);
    out.insert(theta(args));

    std::size_t pos = digit.size();
    bool carried_out = true;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < members[pos].size()) {
        carried_out = false;
        break;
      }
      digit[pos] = 0;
    }
    if (carried_out) return out;
  }
}

std::string render_dense(const FuzzyRelation& q) {
  std::string out = "{";
  bool first = true;
  for (TupleOdometer it(q.heading()); !it.done(); it.next()) {
    if (!first) out += ", ";
    first = false;
    out += q.heading().render(it.current()) + "=" + q.get(it.current()).to_string();
  }
  return out + "}";
}

std::string GeneralizationReport::to_string() const {
  std::string out = operator_name + " (" + (mode == GeneralizationMode::Weak ? "weak" : "strong");
  if (grid) out += ", grid 1/" + std::to_string(*grid);
  out += "): ";
  out += pass ? "pass" : "FAIL";
  if (counterexample) {
    out += "\n  inputs: " + render_inputs(counterexample->inputs);
    out += "\n  at: " + counterexample->where;
    out += "\n  expected: " + counterexample->expected;
    out += "\n  actual: " + counterexample->actual;
  }
  if (!note.empty()) out += "\n  note: " + note;
  return out;
}

GeneralizationReport check_weak_generalization(const std::string& name, const PifOperator& psi,
                                               const FuzzyOperator& theta, std::span<const PifRelation> totals) {
  GeneralizationReport report;
  report.operator_name = name;
  report.mode = GeneralizationMode::Weak;

  std::vector<FuzzyRelation> lambdas;
  for (const auto& r : totals) lambdas.push_back(lambda_total(r));

  PifRelation out = psi(totals);
  auto cls = classify(out, 1);
  auto refute = [&](std::string where, std::string expected, std::string actual) {
    report.pass = false;
    report.counterexample =
        Counterexample{std::vector<PifRelation>(totals.begin(), totals.end()), std::move(where), std::move(expected),
                       std::move(actual)};
    return report;
  };
  if (!cls.total) {
    const Tuple& w = cls.inconsistent.empty() ? cls.incomplete.front() : cls.inconsistent.front();
    return refute(out.heading().render(w), "a total pair (operator must preserve totality)", out.get(w).to_string());
  }

  FuzzyRelation expected = theta(lambdas);
  FuzzyRelation actual = map_values(out, [](const ConfidencePair& p) { return p.belief; });
  if (!(expected.heading() == actual.heading())) {
    return refute("scheme", expected.scheme().to_string(), actual.scheme().to_string());
  }
  if (auto t = first_difference(expected, actual)) {
    return refute(actual.heading().render(*t), expected.get(*t).to_string(), actual.get(*t).to_string());
  }
  return report;
}

GeneralizationReport check_strong_generalization(const std::string& name, const PifOperator& psi,
                                                 const FuzzyOperator& theta, std::span<const PifRelation> consistents,
                                                 std::uint64_t k) {
  GeneralizationReport report;
  report.operator_name = name;
  report.mode = GeneralizationMode::Strong;
  report.grid = k;
  report.note = "discretized check: a failure refutes, a pass only covers the grid";

  std::vector<FuzzyFamily> families;
  for (const auto& r : consistents) families.push_back(reps_enumerate(r, k));

  auto refute = [&](std::string where, std::string expected, std::string actual) {
    report.pass = false;
    report.counterexample =
        Counterexample{std::vector<PifRelation>(consistents.begin(), consistents.end()), std::move(where),
                       std::move(expected), std::move(actual)};
    return report;
  };

  PifRelation out = psi(consistents);
  auto cls = classify(out, 1);
  if (!cls.consistent) {
    const Tuple& w = cls.inconsistent.front();
    return refute(out.heading().render(w), "a consistent pair (operator must preserve consistency)",
                  out.get(w).to_string());
  }

  FuzzyFamily lhs = reps_enumerate(out, k);
  FuzzyFamily rhs = s_theta(theta, families);
  if (lhs == rhs) return report;
  if (auto extra = lhs.first_missing_from(rhs)) {
    return refute("completion of the result " + render_dense(*extra), "member of S(theta) of the argument completions",
                  "not produced by any combination of argument completions");
  }
  if (auto extra = rhs.first_missing_from(lhs)) {
    return refute("S(theta) member " + render_dense(*extra), "completion of the result",
                  "outside the result's completions");
  }
  return report;
}

}  // namespace pifr
