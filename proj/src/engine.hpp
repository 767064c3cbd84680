#pragma once

// Sparse evaluation strategies shared by the generalized operators on plain
// and annotated relations. Each works on the stored entries plus the default
// and never enumerates the full product space unless the operator's output
// genuinely varies over it (selection with a non-trivial default).

#include <vector>

#include "pifr/error.hpp"
#include "pifr/formula.hpp"
#include "pifr/sparse_relation.hpp"

namespace pifr::engine {

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

template <class V, class F>
SparseRelation<V> pointwise(const SparseRelation<V>& r, const SparseRelation<V>& s_in, F&& f) {
  SparseRelation<V> s = align_to(s_in, r.heading_ptr());
  typename SparseRelation<V>::Entries out;
  auto ri = r.entries().begin();
  auto si = s.entries().begin();
  while (ri != r.entries().end() || si != s.entries().end()) {
    if (si == s.entries().end() || (ri != r.entries().end() && ri->first < si->first)) {
      out.emplace_hint(out.end(), ri->first, f(ri->second, s.default_value()));
      ++ri;
    } else if (ri == r.entries().end() || si->first < ri->first) {
      out.emplace_hint(out.end(), si->first, f(r.default_value(), si->second));
      ++si;
    } else {
      out.emplace_hint(out.end(), ri->first, f(ri->second, si->second));
      ++ri;
      ++si;
    }
  }
  return SparseRelation<V>(r.heading_ptr(), f(r.default_value(), s.default_value()), std::move(out));
}

template <class V, class F>
SparseRelation<V> join(const SparseRelation<V>& r, const SparseRelation<V>& s, F&& f) {
  HeadingPtr out_heading = join_heading(r.heading(), s.heading());
  const auto left_cols = column_map(*out_heading, r.scheme());
  const auto right_cols = column_map(*out_heading, s.scheme());

  auto extra = [&](const std::vector<std::size_t>& cols) {
    std::vector<bool> varying(out_heading->arity(), true);
    std::uint64_t n = 1;
    for (auto c : cols) varying[c] = false;
    for (std::size_t i = 0; i < varying.size(); ++i) {
      if (varying[i]) n *= out_heading->domain(i).size();
    }
    return std::pair{varying, n};
  };
  auto [left_varying, left_fanout] = extra(left_cols);
  auto [right_varying, right_fanout] = extra(right_cols);
  if (r.entries().size() * left_fanout + s.entries().size() * right_fanout > kEnumerationLimit) {
    fail(ErrorKind::SpaceTooLarge, "algebra", "join touches too many tuples");
  }

  typename SparseRelation<V>::Entries out;
  auto value_at = [&](const Tuple& t) { return f(r.get(permute(t, left_cols)), s.get(permute(t, right_cols))); };
  auto spread = [&](const Tuple& key, const std::vector<std::size_t>& cols, const std::vector<bool>& varying) {
    Tuple start{std::vector<ValueIndex>(out_heading->arity(), 0)};
    for (std::size_t i = 0; i < cols.size(); ++i) start.values[cols[i]] = key[i];
    for (TupleOdometer it(*out_heading, std::move(start), varying); !it.done(); it.next()) {
      if (!out.contains(it.current())) out.emplace(it.current(), value_at(it.current()));
    }
  };
  for (const auto& [t, v] : r.entries()) spread(t, left_cols, left_varying);
  for (const auto& [t, v] : s.entries()) spread(t, right_cols, right_varying);
  return SparseRelation<V>(out_heading, f(r.default_value(), s.default_value()), std::move(out));
}

/// `reduce` receives the values of one fiber t^Sigma: its stored entries and,
/// when the fiber is not fully stored, the default once.
template <class V, class Reduce>
SparseRelation<V> project(const SparseRelation<V>& r, const std::vector<std::string>& attributes, Reduce&& reduce) {
  HeadingPtr out_heading = project_heading(r.heading(), attributes);
  const auto cols = column_map(r.heading(), out_heading->scheme());
  const std::uint64_t fiber_size = r.heading().space_size() / out_heading->space_size();

  std::map<Tuple, std::vector<V>> fibers;
  for (const auto& [t, v] : r.entries()) fibers[permute(t, cols)].push_back(v);

  typename SparseRelation<V>::Entries out;
  for (auto& [key, values] : fibers) {
    if (values.size() < fiber_size) values.push_back(r.default_value());
    out.emplace_hint(out.end(), key, reduce(values));
  }
  std::vector<V> only_default{r.default_value()};
  return SparseRelation<V>(out_heading, reduce(only_default), std::move(out));
}

template <class V>
SparseRelation<V> select(const SparseRelation<V>& r, const Formula& f, const V& rejected) {
  FormulaEvaluator holds(f, r.heading());
  typename SparseRelation<V>::Entries out;
  if (r.default_value() == rejected) {
    for (const auto& [t, v] : r.entries()) {
      if (holds(t)) out.emplace_hint(out.end(), t, v);
    }
  } else {
    if (r.heading().space_size() > kEnumerationLimit) {
      fail(ErrorKind::SpaceTooLarge, "algebra", "selection over too large a tuple space");
    }
    for (TupleOdometer it(r.heading()); !it.done(); it.next()) {
      out.emplace_hint(out.end(), it.current(), holds(it.current()) ? r.get(it.current()) : rejected);
    }
  }
  return SparseRelation<V>(r.heading_ptr(), r.default_value(), std::move(out));
}

}  // namespace pifr::engine
