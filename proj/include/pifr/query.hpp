#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pifr/formula.hpp"
#include "pifr/operators.hpp"
#include "pifr/relation.hpp"

namespace pifr {

/// Abstract syntax of a relational-algebra query. Parentheses only group and
/// leave no node behind.
struct QueryExpr {
  enum class Kind { Relation, Union, Intersect, Minus, Join, Complement, Project, Select, Split, Combine };
  Kind kind = Kind::Relation;
  std::string name;                     // Relation
  std::vector<std::string> attributes;  // Project
  Formula formula;                      // Select
  std::vector<QueryExpr> children;

  static QueryExpr relation(std::string name);
  static QueryExpr binary(Kind kind, QueryExpr left, QueryExpr right);
  static QueryExpr complement(QueryExpr e);
  static QueryExpr project(std::vector<std::string> attributes, QueryExpr e);
  static QueryExpr select(Formula f, QueryExpr e);
  static QueryExpr split(QueryExpr e);
  static QueryExpr combine(QueryExpr e);

  friend bool operator==(const QueryExpr&, const QueryExpr&) = default;
};

/// `target = expr;` or a bare `expr`. The value of a script is the value of
/// its last statement.
struct Statement {
  std::optional<std::string> target;
  QueryExpr expr;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Script {
  std::vector<Statement> statements;

  friend bool operator==(const Script&, const Script&) = default;
};

/// Grammar:
///   expr    := term (("union" | "intersect" | "minus") term)*
///   term    := factor ("join" factor)*
///   factor  := "not" factor | "project" "[" attr ("," attr)* "]" "(" expr ")"
///            | "select" "[" formula "]" "(" expr ")" | "split" "(" expr ")"
///            | "combine" "(" expr ")" | IDENT | "(" expr ")"
///   formula := fterm ("or" fterm)* ; fterm := fatom ("and" fatom)*
///   fatom   := "not" fatom | "(" formula ")" | operand "=" operand
///   operand := ATTR | "'" CONST "'"
/// Keywords are lowercase and reserved. '#' starts a comment to end of line.
/// Throws ParseError with a 1-based line:column and the expected tokens.
QueryExpr parse_query(std::string_view text);
Formula parse_formula(std::string_view text);
/// script := statement (";" statement)* [";"] ; statement := [IDENT "="] expr
Script parse_script(std::string_view text);

/// Minimal-parenthesis text that parses back to an equal tree.
std::string render(const QueryExpr& e);
std::string render(const Script& s);

/// The operator a non-leaf, non-split/combine node applies.
OpSpec op_spec(const QueryExpr& e);

using RelationValue = std::variant<PifRelation, AnnotatedRelation>;

/// Named relations plus the domains shared by all of them.
class Environment {
 public:
  /// Throws DuplicateIdentifier for a name already bound, DomainConflict when
  /// an attribute's domain differs from the one already recorded.
  void add(const std::string& name, RelationValue value);
  /// Like add, but replaces an existing binding.
  void assign(const std::string& name, RelationValue value);

  const RelationValue* find(const std::string& name) const;
  /// Throws UnboundIdentifier.
  const RelationValue& at(const std::string& name) const;

  const std::map<std::string, RelationValue>& relations() const noexcept { return relations_; }
  const DomainMap& domains() const noexcept { return domains_; }
  bool empty() const noexcept { return relations_.empty(); }

 private:
  void merge_domains(const Heading& h);

  std::map<std::string, RelationValue> relations_;
  DomainMap domains_;
};

struct EvalOptions {
  /// Evaluate every operator on plain inputs as combine(op(split(args))).
  bool auto_split = false;
};

/// Bottom-up evaluation. Plain and annotated operands may mix; a plain
/// operand next to an annotated one is treated as singleton-annotated.
/// Throws UnboundIdentifier, TypeMismatch (split of an annotated relation,
/// combine of a plain one) and any operator error.
RelationValue eval_query(const QueryExpr& e, const Environment& env, const EvalOptions& options = {});
RelationValue eval_script(const Script& s, const Environment& env, const EvalOptions& options = {});

const HeadingPtr& heading_of(const RelationValue& v);

}  // namespace pifr
