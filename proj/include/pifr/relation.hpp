#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pifr/confidence.hpp"
#include "pifr/schema.hpp"
#include "pifr/sparse_relation.hpp"

namespace pifr {

/// Paraconsistent intuitionistic fuzzy relation: every tuple of the product
/// space carries a <belief, doubt> pair.
using PifRelation = SparseRelation<ConfidencePair>;

/// Non-empty, duplicate-free set of pairs, kept sorted.
class AnnotationSet {
 public:
  AnnotationSet() : pairs_{ConfidencePair::none()} {}
  AnnotationSet(ConfidencePair p) : pairs_{p} {}  // NOLINT: a single pair is a singleton set
  AnnotationSet(std::initializer_list<ConfidencePair> pairs);
  /// Throws InvalidArgument when `pairs` is empty.
  explicit AnnotationSet(std::vector<ConfidencePair> pairs);

  const std::vector<ConfidencePair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// <max belief, max doubt> over the set.
  ConfidencePair envelope() const;

  std::string to_string() const;  // "{<1, 0>, <0, 1>}"

  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
  friend bool operator<(const AnnotationSet& a, const AnnotationSet& b) { return a.pairs_ < b.pairs_; }

 private:
  std::vector<ConfidencePair> pairs_;
};

/// Relation whose tuples may carry several annotations (the result of split).
using AnnotatedRelation = SparseRelation<AnnotationSet>;

struct Row {
  std::vector<std::string> values;
  ConfidencePair pair;
};

/// Builds a canonical relation. Throws UnknownAttribute, ValueOutsideDomain,
/// DuplicateTuple, SchemeMismatch.
PifRelation make_relation(const Scheme& scheme, const DomainMap& domains, ConfidencePair default_pair,
                          const std::vector<Row>& rows);
PifRelation make_relation(HeadingPtr heading, ConfidencePair default_pair, const std::vector<Row>& rows);

/// The relation that assigns `pair` to every tuple.
PifRelation constant_relation(HeadingPtr heading, ConfidencePair pair);

struct ConsistencyReport {
  bool consistent = true;
  bool complete = true;
  bool total = true;
  /// Tuples with belief + doubt > 1, lexicographic, at most the requested cap.
  std::vector<Tuple> inconsistent;
  /// Tuples with belief + doubt < 1, lexicographic, at most the requested cap.
  std::vector<Tuple> incomplete;
};

ConsistencyReport classify(const PifRelation& r, std::size_t max_witnesses = 16);

/// Per tuple <max belief, max doubt> of the annotation set.
PifRelation envelope(const AnnotatedRelation& a);

/// Each pair becomes a singleton annotation set.
AnnotatedRelation annotate(const PifRelation& r);

}  // namespace pifr
