#include "pifr/relation.hpp"

#include <algorithm>

#include "pifr/error.hpp"

namespace pifr {

AnnotationSet::AnnotationSet(std::initializer_list<ConfidencePair> pairs)
    : AnnotationSet(std::vector<ConfidencePair>(pairs)) {}

AnnotationSet::AnnotationSet(std::vector<ConfidencePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) fail(ErrorKind::InvalidArgument, "core", "annotation set must not be empty");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

ConfidencePair AnnotationSet::envelope() const {
  ConfidencePair out = pairs_.front();
  for (const auto& p : pairs_) {
    out.belief = max(out.belief, p.belief);
    out.doubt = max(out.doubt, p.doubt);
  }
  return out;
}

std::string AnnotationSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ", ";
    out += pairs_[i].to_string();
  }
  return out + "}";
}

PifRelation make_relation(const Scheme& scheme, const DomainMap& domains, ConfidencePair default_pair,
                          const std::vector<Row>& rows) {
  return make_relation(make_heading(scheme, domains), default_pair, rows);
}

PifRelation make_relation(HeadingPtr heading, ConfidencePair default_pair, const std::vector<Row>& rows) {
  PifRelation::Entries entries;
  for (const auto& row : rows) {
    Tuple t = heading->tuple(row.values);
    if (!entries.emplace(std::move(t), row.pair).second) {
      std::string shown = "(";
      for (std::size_t i = 0; i < row.values.size(); ++i) shown += (i ? "," : "") + row.values[i];
      fail(ErrorKind::DuplicateTuple, "core", "tuple " + shown + ") listed twice");
    }
  }
  return PifRelation(std::move(heading), default_pair, std::move(entries));
}

PifRelation constant_relation(HeadingPtr heading, ConfidencePair pair) {
  return PifRelation(std::move(heading), pair);
}

ConsistencyReport classify(const PifRelation& r, std::size_t max_witnesses) {
  ConsistencyReport report;
  auto visit = [&](const Tuple& t, const ConfidencePair& p) {
    if (!p.is_consistent()) {
      report.consistent = false;
      if (report.inconsistent.size() < max_witnesses) report.inconsistent.push_back(t);
    }
    if (!p.is_complete()) {
      report.complete = false;
      if (report.incomplete.size() < max_witnesses) report.incomplete.push_back(t);
    }
  };

  const ConfidencePair& d = r.default_value();
  bool default_violates = r.default_occurs() && (!d.is_consistent() || !d.is_complete());
  if (!default_violates) {
    for (const auto& [t, p] : r.entries()) visit(t, p);
  } else {
    // Walk the product space in order until both witness lists are full and
    // every stored entry has been seen.
    std::size_t seen_entries = 0;
    for (TupleOdometer it(r.heading()); !it.done(); it.next()) {
      auto found = r.entries().find(it.current());
      if (found != r.entries().end()) {
        ++seen_entries;
        visit(found->first, found->second);
      } else {
        visit(it.current(), d);
      }
      bool lists_full = (d.is_consistent() || report.inconsistent.size() >= max_witnesses) &&
                        (d.is_complete() || report.incomplete.size() >= max_witnesses);
      if (lists_full && seen_entries == r.entries().size()) break;
    }
  }
  report.total = report.consistent && report.complete;
  return report;
}

PifRelation envelope(const AnnotatedRelation& a) {
  return map_values(a, [](const AnnotationSet& s) { return s.envelope(); });
}

AnnotatedRelation annotate(const PifRelation& r) {
  return map_values(r, [](const ConfidencePair& p) { return AnnotationSet(p); });
}

}  // namespace pifr
