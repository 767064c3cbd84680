#pragma once

#include <set>
#include <string>
#include <vector>

#include "pifr/schema.hpp"

namespace pifr {

struct Operand {
  enum class Kind { Attribute, Constant };
  Kind kind = Kind::Attribute;
  std::string text;

  static Operand attribute(std::string name) { return {Kind::Attribute, std::move(name)}; }
  static Operand constant(std::string value) { return {Kind::Constant, std::move(value)}; }

  friend bool operator==(const Operand&, const Operand&) = default;
};

/// Crisp selection condition: equality atoms under not / and / or.
struct Formula {
  enum class Kind { Equals, Not, And, Or };
  Kind kind = Kind::Equals;
  Operand left;
  Operand right;
  std::vector<Formula> children;  // Not: one child; And / Or: two

  static Formula equals(Operand l, Operand r);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula tautology(const std::string& attribute);  // A = A

  std::set<std::string> attributes() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// A formula resolved against one heading. Construction throws
/// UnknownAttribute for a missing attribute and ValueOutsideDomain for a
/// constant compared with an attribute whose domain lacks it.
class FormulaEvaluator {
 public:
  FormulaEvaluator(const Formula& f, const Heading& heading);

  bool operator()(const Tuple& t) const;

 private:
  struct Side {
    bool is_attribute = false;
    std::size_t position = 0;
    std::string constant;
  };
  struct Node {
    Formula::Kind kind;
    Side left, right;
    std::vector<Node> children;
  };
  Node compile(const Formula& f) const;
  bool eval(const Node& n, const Tuple& t) const;
  const std::string& value(const Side& s, const Tuple& t) const;

  const Heading* heading_;
  Node root_;
};

/// Two-valued truth of `f` at `t`.
bool eval_formula(const Formula& f, const Heading& heading, const Tuple& t);

/// Canonical text accepted by parse_formula.
std::string render(const Formula& f);

}  // namespace pifr
