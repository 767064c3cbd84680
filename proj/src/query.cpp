#include "pifr/query.hpp"

#include <cctype>
#include <set>

#include "pifr/algebra.hpp"
#include "pifr/error.hpp"

namespace pifr {

QueryExpr QueryExpr::relation(std::string name) {
  QueryExpr e;
  e.kind = Kind::Relation;
  e.name = std::move(name);
  return e;
}

QueryExpr QueryExpr::binary(Kind kind, QueryExpr left, QueryExpr right) {
  QueryExpr e;
  e.kind = kind;
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

QueryExpr QueryExpr::complement(QueryExpr inner) {
  QueryExpr e;
  e.kind = Kind::Complement;
  e.children.push_back(std::move(inner));
  return e;
}

QueryExpr QueryExpr::project(std::vector<std::string> attributes, QueryExpr inner) {
  QueryExpr e;
  e.kind = Kind::Project;
  e.attributes = std::move(attributes);
  e.children.push_back(std::move(inner));
  return e;
}

QueryExpr QueryExpr::select(Formula f, QueryExpr inner) {
  QueryExpr e;
  e.kind = Kind::Select;
  e.formula = std::move(f);
  e.children.push_back(std::move(inner));
  return e;
}

QueryExpr QueryExpr::split(QueryExpr inner) {
  QueryExpr e;
  e.kind = Kind::Split;
  e.children.push_back(std::move(inner));
  return e;
}

QueryExpr QueryExpr::combine(QueryExpr inner) {
  QueryExpr e;
  e.kind = Kind::Combine;
  e.children.push_back(std::move(inner));
  return e;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Keyword, Constant, LParen, RParen, LBracket, RBracket, Comma, Equals, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string, std::less<>> kKeywords{"union", "intersect", "minus", "join",  "not", "project",
                                                   "select", "split",   "combine", "and", "or"};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Keyword: return "'" + t.text + "'";
    case Tok::Constant: return "constant '" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int l = line;
    int col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = kKeywords.contains(word) ? Tok::Keyword : Tok::Ident;
      out.push_back({kind, word, l, col});
      advance(j - i);
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '\'' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '\'') throw ParseError(l, col, {"closing quote"}, "unterminated constant");
      std::string value(text.substr(i + 1, j - i - 1));
      if (value.empty()) throw ParseError(l, col, {"constant"}, "empty quotes");
      out.push_back({Tok::Constant, value, l, col});
      advance(j - i + 1);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '=': kind = Tok::Equals; break;
      case ';': kind = Tok::Semicolon; break;
      default: throw ParseError(l, col, {"a token"}, "character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  QueryExpr query() {
    QueryExpr e = expr();
    expect_end({"'union'", "'intersect'", "'minus'", "'join'"});
    return e;
  }

  Formula formula_only() {
    Formula f = formula();
    expect_end({"'and'", "'or'"});
    return f;
  }

  Script script() {
    Script s;
    while (true) {
      s.statements.push_back(statement());
      if (peek().kind == Tok::Semicolon) {
        next();
        if (peek().kind == Tok::End) break;
        continue;
      }
      expect_end({"';'", "'union'", "'intersect'", "'minus'", "'join'"});
      break;
    }
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected), describe(t));
  }

  bool is_keyword(const char* word) const { return peek().kind == Tok::Keyword && peek().text == word; }

  void expect(Tok kind, const char* shown) {
    if (peek().kind != kind) error({shown});
    next();
  }

  void expect_keyword(const char* word) {
    if (!is_keyword(word)) error({std::string("'") + word + "'"});
    next();
  }

  void expect_end(std::vector<std::string> continuations) {
    if (peek().kind == Tok::End) return;
    continuations.push_back("end of input");
    error(std::move(continuations));
  }

  Statement statement() {
    Statement st;
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Equals) {
      st.target = next().text;
      next();
    }
    st.expr = expr();
    return st;
  }

  QueryExpr expr() {
    QueryExpr left = term();
    while (true) {
      QueryExpr::Kind kind;
      if (is_keyword("union")) {
        kind = QueryExpr::Kind::Union;
      } else if (is_keyword("intersect")) {
        kind = QueryExpr::Kind::Intersect;
      } else if (is_keyword("minus")) {
        kind = QueryExpr::Kind::Minus;
      } else {
        return left;
      }
      next();
      left = QueryExpr::binary(kind, std::move(left), term());
    }
  }

  QueryExpr term() {
    QueryExpr left = factor();
    while (is_keyword("join")) {
      next();
      left = QueryExpr::binary(QueryExpr::Kind::Join, std::move(left), factor());
    }
    return left;
  }

  QueryExpr parenthesized() {
    expect(Tok::LParen, "'('");
    QueryExpr e = expr();
    expect(Tok::RParen, "')'");
    return e;
  }

  QueryExpr factor() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return QueryExpr::relation(next().text);
    if (t.kind == Tok::LParen) return parenthesized();
    if (t.kind == Tok::Keyword) {
      if (t.text == "not") {
        next();
        return QueryExpr::complement(factor());
      }
      if (t.text == "split") {
        next();
        return QueryExpr::split(parenthesized());
      }
      if (t.text == "combine") {
        next();
        return QueryExpr::combine(parenthesized());
      }
      if (t.text == "project") {
        next();
        expect(Tok::LBracket, "'['");
        std::vector<std::string> attrs;
        while (true) {
          if (peek().kind != Tok::Ident) error({"attribute name"});
          attrs.push_back(next().text);
          if (peek().kind == Tok::Comma) {
            next();
            continue;
          }
          if (peek().kind != Tok::RBracket) error({"','", "']'"});
          next();
          break;
        }
        return QueryExpr::project(std::move(attrs), parenthesized());
      }
      if (t.text == "select") {
        next();
        expect(Tok::LBracket, "'['");
        Formula f = formula();
        if (peek().kind != Tok::RBracket) error({"'and'", "'or'", "']'"});
        next();
        return QueryExpr::select(std::move(f), parenthesized());
      }
    }
    error({"identifier", "'('", "'not'", "'project'", "'select'", "'split'", "'combine'"});
  }

  Formula formula() {
    Formula left = fterm();
    while (is_keyword("or")) {
      next();
      left = Formula::disjunction(std::move(left), fterm());
    }
    return left;
  }

  Formula fterm() {
    Formula left = fatom();
    while (is_keyword("and")) {
      next();
      left = Formula::conjunction(std::move(left), fatom());
    }
    return left;
  }

  Formula fatom() {
    if (is_keyword("not")) {
      next();
      return Formula::negation(fatom());
    }
    if (peek().kind == Tok::LParen) {
      next();
      Formula f = formula();
      if (peek().kind != Tok::RParen) error({"'and'", "'or'", "')'"});
      next();
      return f;
    }
    Operand l = operand({"'not'", "'('", "attribute name", "quoted constant"});
    expect(Tok::Equals, "'='");
    Operand r = operand({"attribute name", "quoted constant"});
    return Formula::equals(std::move(l), std::move(r));
  }

  Operand operand(std::vector<std::string> expected) {
    if (peek().kind == Tok::Ident) return Operand::attribute(next().text);
    if (peek().kind == Tok::Constant) return Operand::constant(next().text);
    error(std::move(expected));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

int level(const QueryExpr& e) {
  switch (e.kind) {
    case QueryExpr::Kind::Union:
    case QueryExpr::Kind::Intersect:
    case QueryExpr::Kind::Minus: return 1;
    case QueryExpr::Kind::Join: return 2;
    default: return 3;
  }
}

std::string render_at(const QueryExpr& e, int min_level) {
  std::string body;
  switch (e.kind) {
    case QueryExpr::Kind::Relation: body = e.name; break;
    case QueryExpr::Kind::Union:
    case QueryExpr::Kind::Intersect:
    case QueryExpr::Kind::Minus: {
      const char* op = e.kind == QueryExpr::Kind::Union ? " union " : e.kind == QueryExpr::Kind::Intersect ? " intersect " : " minus ";
      body = render_at(e.children[0], 1) + op + render_at(e.children[1], 2);
      break;
    }
    case QueryExpr::Kind::Join: body = render_at(e.children[0], 2) + " join " + render_at(e.children[1], 3); break;
    case QueryExpr::Kind::Complement: body = "not " + render_at(e.children[0], 3); break;
    case QueryExpr::Kind::Project: {
      body = "project[";
      for (std::size_t i = 0; i < e.attributes.size(); ++i) body += (i ? "," : "") + e.attributes[i];
      body += "](" + render_at(e.children[0], 1) + ")";
      break;
    }
    case QueryExpr::Kind::Select:
      body = "select[" + render(e.formula) + "](" + render_at(e.children[0], 1) + ")";
      break;
    case QueryExpr::Kind::Split: body = "split(" + render_at(e.children[0], 1) + ")"; break;
    case QueryExpr::Kind::Combine: body = "combine(" + render_at(e.children[0], 1) + ")"; break;
  }
  return level(e) < min_level ? "(" + body + ")" : body;
}

// ---------------------------------------------------------------------------
// Evaluator

class Evaluator {
 public:
  Evaluator(const Environment& env, const EvalOptions& options) : env_(env), options_(options) {}

  RelationValue eval(const QueryExpr& e) {
    switch (e.kind) {
      case QueryExpr::Kind::Relation: return env_.at(e.name);
      case QueryExpr::Kind::Split: {
        RelationValue v = eval(e.children[0]);
        if (!std::holds_alternative<PifRelation>(v)) {
          fail(ErrorKind::TypeMismatch, "query", "split applies to plain relations, got an annotated one");
        }
        return split(std::get<PifRelation>(v));
      }
      case QueryExpr::Kind::Combine: {
        RelationValue v = eval(e.children[0]);
        if (!std::holds_alternative<AnnotatedRelation>(v)) {
          fail(ErrorKind::TypeMismatch, "query", "combine applies to annotated relations, got a plain one");
        }
        return combine(std::get<AnnotatedRelation>(v));
      }
      default: break;
    }

    OpSpec op = op_spec(e);
    std::vector<RelationValue> args;
    for (const auto& c : e.children) args.push_back(eval(c));

    bool all_plain = true;
    for (const auto& a : args) all_plain = all_plain && std::holds_alternative<PifRelation>(a);
    if (all_plain) {
      std::vector<PifRelation> plain;
      for (auto& a : args) plain.push_back(std::get<PifRelation>(std::move(a)));
      return options_.auto_split ? pifr::apply_via_split(op, plain) : pifr::apply(op, plain);
    }
    std::vector<AnnotatedRelation> annotated;
    for (auto& a : args) {
      if (auto* p = std::get_if<PifRelation>(&a)) {
        annotated.push_back(annotate(*p));
      } else {
        annotated.push_back(std::get<AnnotatedRelation>(std::move(a)));
      }
    }
    return lift_op(op, annotated);
  }

 private:
  const Environment& env_;
  const EvalOptions& options_;
};

}  // namespace

QueryExpr parse_query(std::string_view text) { return Parser(text).query(); }
Formula parse_formula(std::string_view text) { return Parser(text).formula_only(); }
Script parse_script(std::string_view text) { return Parser(text).script(); }

std::string render(const QueryExpr& e) { return render_at(e, 1); }

std::string render(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (st.target) out += *st.target + " = ";
    out += render(st.expr) + ";\n";
  }
  return out;
}

OpSpec op_spec(const QueryExpr& e) {
  switch (e.kind) {
    case QueryExpr::Kind::Union: return OpSpec::make(OpKind::Union);
    case QueryExpr::Kind::Intersect: return OpSpec::make(OpKind::Intersection);
    case QueryExpr::Kind::Minus: return OpSpec::make(OpKind::Difference);
    case QueryExpr::Kind::Join: return OpSpec::make(OpKind::Join);
    case QueryExpr::Kind::Complement: return OpSpec::make(OpKind::Complement);
    case QueryExpr::Kind::Project: return OpSpec::project(e.attributes);
    case QueryExpr::Kind::Select: return OpSpec::select(e.formula);
    default: fail(ErrorKind::InvalidArgument, "query", "node does not denote an algebra operator");
  }
}

const HeadingPtr& heading_of(const RelationValue& v) {
  return std::visit([](const auto& r) -> const HeadingPtr& { return r.heading_ptr(); }, v);
}

void Environment::merge_domains(const Heading& h) {
  for (std::size_t i = 0; i < h.arity(); ++i) {
    auto [it, inserted] = domains_.emplace(h.attribute(i), h.domain(i));
    if (!inserted && !(it->second == h.domain(i))) {
      fail(ErrorKind::DomainConflict, "query", "attribute '" + h.attribute(i) + "' is declared with different domains");
    }
  }
}

void Environment::add(const std::string& name, RelationValue value) {
  if (relations_.contains(name)) fail(ErrorKind::DuplicateIdentifier, "query", "relation '" + name + "' already bound");
  assign(name, std::move(value));
}

void Environment::assign(const std::string& name, RelationValue value) {
  if (!is_identifier(name) || kKeywords.contains(name)) {
    fail(ErrorKind::InvalidArgument, "query", "'" + name + "' is not a usable relation name");
  }
  merge_domains(*heading_of(value));
  relations_.insert_or_assign(name, std::move(value));
}

const RelationValue* Environment::find(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const RelationValue& Environment::at(const std::string& name) const {
  const RelationValue* v = find(name);
  if (!v) fail(ErrorKind::UnboundIdentifier, "query", "no relation named '" + name + "'");
  return *v;
}

RelationValue eval_query(const QueryExpr& e, const Environment& env, const EvalOptions& options) {
  return Evaluator(env, options).eval(e);
}

RelationValue eval_script(const Script& s, const Environment& env, const EvalOptions& options) {
  if (s.statements.empty()) fail(ErrorKind::InvalidArgument, "query", "empty script");
  Environment scope = env;
  std::optional<RelationValue> last;
  for (const auto& st : s.statements) {
    last = eval_query(st.expr, scope, options);
    if (st.target) scope.assign(*st.target, *last);
  }
  return *last;
}

}  // namespace pifr
