#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pifr/algebra.hpp"
#include "pifr/error.hpp"
#include "pifr/formula.hpp"
#include "pifr/fuzzy.hpp"
#include "pifr/relation.hpp"

namespace pifr::test {

inline ConfidencePair P(const char* b, const char* d) { return make_pair(b, d); }
inline ConfidenceValue V(const char* v) { return ConfidenceValue::parse(v); }

inline DomainMap abc(std::initializer_list<std::string> attrs) {
  DomainMap m;
  for (const auto& a : attrs) m.emplace(a, Domain{"a", "b", "c"});
  return m;
}

// Runs f and reports the ErrorKind it threw, or nothing.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

#define EXPECT_PIFR_ERROR(expr, kind_) EXPECT_EQ(::pifr::test::error_kind([&] { (void)(expr); }), ::pifr::ErrorKind::kind_)

// Brute-force evaluation of the generalized operators straight from their
// per-tuple definitions, over named tuples. Shares no code with the engine
// beyond tuple lookup.
inline std::map<std::string, std::string> bind(const Heading& h, const Tuple& t) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < h.arity(); ++i) m[h.attribute(i)] = h.domain(i)[t[i]];
  return m;
}

inline Tuple restrict(const Heading& target, const std::map<std::string, std::string>& values) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < target.arity(); ++i) names.push_back(values.at(target.attribute(i)));
  return target.tuple(names);
}

inline PifRelation dense_oracle(const OpSpec& op, const std::vector<PifRelation>& args) {
  const PifRelation& r = args[0];
  HeadingPtr out_h;
  switch (op.kind) {
    case OpKind::Join: {
      std::vector<std::string> attrs = r.scheme().attributes();
      for (const auto& a : args[1].scheme().attributes()) {
        if (!r.scheme().contains(a)) attrs.push_back(a);
      }
      DomainMap d = r.heading().domain_map();
      for (const auto& [k, v] : args[1].heading().domain_map()) d.emplace(k, v);
      out_h = make_heading(Scheme(attrs), d);
      break;
    }
    case OpKind::Project: out_h = make_heading(Scheme(op.attributes), r.heading().domain_map()); break;
    default: out_h = r.heading_ptr();
  }

  PifRelation::Entries out;
  if (op.kind == OpKind::Project) {
    std::map<Tuple, ConfidencePair> acc;
    for (TupleOdometer it(r.heading()); !it.done(); it.next()) {
      ConfidencePair p = r.get(it.current());
      Tuple t = restrict(*out_h, bind(r.heading(), it.current()));
      auto [pos, fresh] = acc.emplace(t, p);
      if (!fresh) pos->second = {max(pos->second.belief, p.belief), min(pos->second.doubt, p.doubt)};
    }
    out = std::move(acc);
  } else {
    for (TupleOdometer it(*out_h); !it.done(); it.next()) {
      auto named = bind(*out_h, it.current());
      ConfidencePair a = r.get(restrict(r.heading(), named));
      ConfidencePair res;
      switch (op.kind) {
        case OpKind::Union: {
          ConfidencePair b = args[1].get(restrict(args[1].heading(), named));
          res = {max(a.belief, b.belief), min(a.doubt, b.doubt)};
          break;
        }
        case OpKind::Intersection:
        case OpKind::Join: {
          ConfidencePair b = args[1].get(restrict(args[1].heading(), named));
          res = {min(a.belief, b.belief), max(a.doubt, b.doubt)};
          break;
        }
        case OpKind::Difference: {
          ConfidencePair b = args[1].get(restrict(args[1].heading(), named));
          res = {min(a.belief, b.doubt), max(a.doubt, b.belief)};
          break;
        }
        case OpKind::Complement: res = {a.doubt, a.belief}; break;
        case OpKind::Select:
          res = eval_formula(op.formula, *out_h, it.current()) ? a
                                                               : ConfidencePair{ConfidenceValue::zero(), ConfidenceValue::one()};
          break;
        case OpKind::Project: break;
      }
      out.emplace(it.current(), res);
    }
  }
  // Every tuple is stored, so the default is irrelevant to the denotation.
  return PifRelation(out_h, ConfidencePair::none(), std::move(out));
}

}  // namespace pifr::test
