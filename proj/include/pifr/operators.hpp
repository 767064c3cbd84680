#pragma once

#include <string>
#include <vector>

#include "pifr/formula.hpp"

namespace pifr {

enum class OpKind { Union, Complement, Intersection, Difference, Join, Project, Select };

/// Names one of the seven algebra operators plus its parameters, so the
/// generalized, lifted and fuzzy versions can be dispatched uniformly.
struct OpSpec {
  OpKind kind = OpKind::Union;
  std::vector<std::string> attributes;  // Project
  Formula formula;                      // Select

  static OpSpec make(OpKind kind) { return {kind, {}, {}}; }
  static OpSpec project(std::vector<std::string> attrs) { return {OpKind::Project, std::move(attrs), {}}; }
  static OpSpec select(Formula f) { return {OpKind::Select, {}, std::move(f)}; }

  std::size_t arity() const;
  std::string name() const;
};

inline const std::vector<OpKind>& all_op_kinds() {
  static const std::vector<OpKind> kinds{OpKind::Union,      OpKind::Complement, OpKind::Intersection,
                                         OpKind::Difference, OpKind::Join,       OpKind::Project,
                                         OpKind::Select};
  return kinds;
}

std::string to_string(OpKind kind);

}  // namespace pifr
