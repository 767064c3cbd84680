#include "pifr/formula.hpp"

#include "pifr/error.hpp"

namespace pifr {

Formula Formula::equals(Operand l, Operand r) {
  Formula f;
  f.kind = Kind::Equals;
  f.left = std::move(l);
  f.right = std::move(r);
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(inner));
  return f;
}

Formula Formula::conjunction(Formula l, Formula r) {
  Formula f;
  f.kind = Kind::And;
  f.children.push_back(std::move(l));
  f.children.push_back(std::move(r));
  return f;
}

Formula Formula::disjunction(Formula l, Formula r) {
  Formula f;
  f.kind = Kind::Or;
  f.children.push_back(std::move(l));
  f.children.push_back(std::move(r));
  return f;
}

Formula Formula::tautology(const std::string& attribute) {
  return equals(Operand::attribute(attribute), Operand::attribute(attribute));
}

std::set<std::string> Formula::attributes() const {
  std::set<std::string> out;
  if (kind == Kind::Equals) {
    if (left.kind == Operand::Kind::Attribute) out.insert(left.text);
    if (right.kind == Operand::Kind::Attribute) out.insert(right.text);
  }
  for (const auto& c : children) {
    auto sub = c.attributes();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

FormulaEvaluator::FormulaEvaluator(const Formula& f, const Heading& heading)
    : heading_(&heading), root_(compile(f)) {}

FormulaEvaluator::Node FormulaEvaluator::compile(const Formula& f) const {
  Node n{f.kind, {}, {}, {}};
  if (f.kind != Formula::Kind::Equals) {
    for (const auto& c : f.children) n.children.push_back(compile(c));
    return n;
  }
  auto resolve = [&](const Operand& o) {
    Side s;
    if (o.kind == Operand::Kind::Attribute) {
      auto pos = heading_->position(o.text);
      if (!pos) {
        fail(ErrorKind::UnknownAttribute, "query",
             "attribute '" + o.text + "' not in scheme " + heading_->scheme().to_string());
      }
      s.is_attribute = true;
      s.position = *pos;
    } else {
      s.constant = o.text;
    }
    return s;
  };
  n.left = resolve(f.left);
  n.right = resolve(f.right);
  auto check = [&](const Side& attr, const Side& constant) {
    if (attr.is_attribute && !constant.is_attribute &&
        !heading_->domain(attr.position).index_of(constant.constant)) {
      fail(ErrorKind::ValueOutsideDomain, "query",
           "constant '" + constant.constant + "' is not in dom(" + heading_->attribute(attr.position) + ")");
    }
  };
  check(n.left, n.right);
  check(n.right, n.left);
  return n;
}

const std::string& FormulaEvaluator::value(const Side& s, const Tuple& t) const {
  return s.is_attribute ? heading_->domain(s.position)[t[s.position]] : s.constant;
}

bool FormulaEvaluator::eval(const Node& n, const Tuple& t) const {
  switch (n.kind) {
    case Formula::Kind::Equals: return value(n.left, t) == value(n.right, t);
    case Formula::Kind::Not: return !eval(n.children[0], t);
    case Formula::Kind::And: return eval(n.children[0], t) && eval(n.children[1], t);
    case Formula::Kind::Or: return eval(n.children[0], t) || eval(n.children[1], t);
  }
  return false;
}

bool FormulaEvaluator::operator()(const Tuple& t) const {
  if (!heading_->valid(t)) fail(ErrorKind::SchemeMismatch, "query", "tuple does not fit the formula's scheme");
  return eval(root_, t);
}

bool eval_formula(const Formula& f, const Heading& heading, const Tuple& t) {
  return FormulaEvaluator(f, heading)(t);
}

namespace {

std::string render_operand(const Operand& o) {
  return o.kind == Operand::Kind::Attribute ? o.text : "'" + o.text + "'";
}

// 1 = or, 2 = and, 3 = not / atom
int level(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

std::string render_at(const Formula& f, int min_level) {
  std::string body;
  switch (f.kind) {
    case Formula::Kind::Equals:
      body = render_operand(f.left) + " = " + render_operand(f.right);
      break;
    case Formula::Kind::Not:
      body = "not " + render_at(f.children[0], 3);
      break;
    case Formula::Kind::And:
      body = render_at(f.children[0], 2) + " and " + render_at(f.children[1], 3);
      break;
    case Formula::Kind::Or:
      body = render_at(f.children[0], 1) + " or " + render_at(f.children[1], 2);
      break;
  }
  return level(f) < min_level ? "(" + body + ")" : body;
}

}  // namespace

std::string render(const Formula& f) { return render_at(f, 1); }

}  // namespace pifr
