#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "pifr/error.hpp"
#include "pifr/schema.hpp"

namespace pifr {

/// A total function tau(heading) -> V stored as a default value plus the
/// tuples that differ from it. The stored form is canonical: no entry equals
/// the default, so two relations with the same heading and default compare
/// equal exactly when they denote the same function.
template <class V>
class SparseRelation {
 public:
  using value_type = V;
  using Entries = std::map<Tuple, V>;

  SparseRelation(HeadingPtr heading, V default_value, Entries entries = {})
      : heading_(std::move(heading)), default_(std::move(default_value)) {
    if (!heading_) fail(ErrorKind::InvalidArgument, "core", "relation without heading");
    for (auto& [t, v] : entries) {
      if (!heading_->valid(t)) fail(ErrorKind::SchemeMismatch, "core", "tuple does not fit " + heading_->scheme().to_string());
      if (!(v == default_)) entries_.emplace_hint(entries_.end(), t, std::move(v));
    }
  }

  const Heading& heading() const noexcept { return *heading_; }
  const HeadingPtr& heading_ptr() const noexcept { return heading_; }
  const Scheme& scheme() const noexcept { return heading_->scheme(); }
  const V& default_value() const noexcept { return default_; }
  const Entries& entries() const noexcept { return entries_; }

  /// Value at t: the stored entry, or the default.
  const V& get(const Tuple& t) const {
    if (!heading_->valid(t)) fail(ErrorKind::SchemeMismatch, "core", "tuple does not fit " + heading_->scheme().to_string());
    auto it = entries_.find(t);
    return it == entries_.end() ? default_ : it->second;
  }
  const V& get(std::initializer_list<std::string> values) const { return get(heading_->tuple(values)); }

  /// True when some tuple of the product space takes the default value.
  bool default_occurs() const { return entries_.size() < heading_->space_size(); }

  /// Equality of the denoted total functions.
  friend bool operator==(const SparseRelation& a, const SparseRelation& b) {
    if (!(a.heading() == b.heading())) return false;
    if (a.default_ == b.default_) return a.entries_ == b.entries_;
    // Different defaults: every tuple must be stored explicitly on at least
    // one side and the values must agree everywhere.
    std::set<Tuple> keys;
    for (const auto& [t, v] : a.entries_) keys.insert(t);
    for (const auto& [t, v] : b.entries_) keys.insert(t);
    if (keys.size() < a.heading().space_size()) return false;
    for (const auto& t : keys) {
      if (!(a.get(t) == b.get(t))) return false;
    }
    return true;
  }

 private:
  HeadingPtr heading_;
  V default_;
  Entries entries_;
};

/// Applies `f` to every value, defaults included.
template <class V, class F>
auto map_values(const SparseRelation<V>& r, F&& f) {
  using W = std::decay_t<decltype(f(r.default_value()))>;
  typename SparseRelation<W>::Entries out;
  for (const auto& [t, v] : r.entries()) out.emplace_hint(out.end(), t, f(v));
  return SparseRelation<W>(r.heading_ptr(), f(r.default_value()), std::move(out));
}

/// The first tuple (lexicographically) where two relations over the same
/// heading differ, if any.
template <class V>
std::optional<Tuple> first_difference(const SparseRelation<V>& a, const SparseRelation<V>& b) {
  std::set<Tuple> keys;
  for (const auto& [t, v] : a.entries()) keys.insert(t);
  for (const auto& [t, v] : b.entries()) keys.insert(t);
  std::optional<Tuple> best;
  for (const auto& t : keys) {
    if (!(a.get(t) == b.get(t))) {
      best = t;
      break;
    }
  }
  if (!(a.default_value() == b.default_value())) {
    // The first tuple stored on neither side also differs.
    for (TupleOdometer it(a.heading()); !it.done(); it.next()) {
      if (best && !(it.current() < *best)) break;
      if (!keys.contains(it.current())) return it.current();
    }
  }
  return best;
}

/// `r` re-expressed on `target` (same attributes, possibly reordered).
/// Throws SchemeMismatch / DomainConflict when the headings are incompatible.
template <class V>
SparseRelation<V> align_to(const SparseRelation<V>& r, const HeadingPtr& target) {
  if (r.heading() == *target) return r;
  auto cols = alignment(r.heading(), *target);
  // cols[i] = position in target of r's attribute i; invert it.
  std::vector<std::size_t> inverse(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) inverse[cols[i]] = i;
  typename SparseRelation<V>::Entries out;
  for (const auto& [t, v] : r.entries()) out.emplace(permute(t, inverse), v);
  return SparseRelation<V>(target, r.default_value(), std::move(out));
}

}  // namespace pifr
