// Copyright 2026 The diffprim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diffprim/parse.hpp"

#include <cctype>
#include <set>

#include "diffprim/error.hpp"

namespace diffprim {
namespace {

constexpr unsigned kMaxExponent = 1000;

struct Token {
  enum class Type { Number, Ident, Op, End, Bad } type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& t) {
  switch (t.type) {
    case Token::Type::End: return "end of input";
    case Token::Type::Number: return "number '" + t.text + "'";
    case Token::Type::Ident: return "identifier '" + t.text + "'";
    case Token::Type::Op: return "'" + t.text + "'";
    case Token::Type::Bad: break;
  }
  return "unexpected character '" + t.text + "'";
}

class Lexer {
 public:
  Lexer(std::string_view in, int line, int column) : in_(in), line_(line), column_(column) {}

  Token next() {
    while (pos_ < in_.size() && (in_[pos_] == ' ' || in_[pos_] == '\t' || in_[pos_] == '\r' || in_[pos_] == '\n')) {
      if (in_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= in_.size()) return t;
    const unsigned char c = static_cast<unsigned char>(in_[pos_]);
    std::size_t start = pos_;
    if (std::isdigit(c)) {
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
      t.type = Token::Type::Number;
    } else if (c < 0x80 && std::isalpha(c)) {
      while (pos_ < in_.size() && (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_') &&
             static_cast<unsigned char>(in_[pos_]) < 0x80) {
        ++pos_;
      }
      t.type = Token::Type::Ident;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      ++pos_;
      t.type = Token::Type::Op;
    } else {
      ++pos_;
      t.type = Token::Type::Bad;
    }
    t.text = std::string(in_.substr(start, pos_ - start));
    column_ += static_cast<int>(pos_ - start);
    return t;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

std::shared_ptr<ExprNode> make(ExprNode::Kind kind, const Token& at) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->line = at.line;
  n->column = at.column;
  return n;
}

class Parser {
 public:
  Parser(std::string_view in, int line, int column) : lex_(in, line, column) { advance(); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (cur_.type != Token::Type::End) fail("unexpected " + describe(cur_));
    return e;
  }

 private:
  void advance() {
    cur_ = lex_.next();
    if (cur_.type == Token::Type::Bad) fail(describe(cur_));
  }
  bool is_op(const char* op) const { return cur_.type == Token::Type::Op && cur_.text == op; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorKind::SyntaxError, cur_.line, cur_.column,
                     std::to_string(cur_.line) + ":" + std::to_string(cur_.column) + ": " + msg);
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_op("+") || is_op("-")) {
      Token op = cur_;
      advance();
      auto n = make(op.text == "+" ? ExprNode::Kind::Add : ExprNode::Kind::Sub, op);
      n->lhs = lhs;
      n->rhs = term();
      lhs = n;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_op("*") || is_op("/")) {
      Token op = cur_;
      advance();
      ExprPtr rhs = unary();
      if (op.text == "/" && lhs->kind == ExprNode::Kind::Number && rhs->kind == ExprNode::Kind::Number &&
          rhs->value != 0 && integer_literal_.count(rhs.get())) {
        auto n = make(ExprNode::Kind::Number, Token{Token::Type::Number, "", lhs->line, lhs->column});
        n->value = lhs->value / rhs->value;
        lhs = n;
        continue;
      }
      auto n = make(op.text == "*" ? ExprNode::Kind::Mul : ExprNode::Kind::Div, op);
      n->lhs = lhs;
      n->rhs = rhs;
      lhs = n;
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_op("-")) {
      Token op = cur_;
      advance();
      ExprPtr inner = unary();
      if (inner->kind == ExprNode::Kind::Number && integer_literal_.count(inner.get())) {
        auto n = make(ExprNode::Kind::Number, op);
        n->value = -inner->value;
        return n;
      }
      auto n = make(ExprNode::Kind::Neg, op);
      n->lhs = inner;
      return n;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!is_op("^")) return base;
    Token op = cur_;
    advance();
    unsigned e = exponent();
    auto n = make(ExprNode::Kind::Pow, op);
    n->lhs = base;
    n->exponent = e;
    return n;
  }

  unsigned exponent() {
    if (cur_.type != Token::Type::Number) fail("expected a nonnegative integer exponent, found " + describe(cur_));
    Token lit = cur_;
    Integer v(lit.text);
    advance();
    if (is_op("^")) {
      advance();
      unsigned inner = exponent();
      if (v > 1 && inner >= 64) fail("exponent too large");
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), inner);
      v = r;
    }
    if (v > kMaxExponent) {
      throw ParseError(ErrorKind::SyntaxError, lit.line, lit.column,
                       std::to_string(lit.line) + ":" + std::to_string(lit.column) + ": exponent exceeds " +
                           std::to_string(kMaxExponent));
    }
    return static_cast<unsigned>(v.get_ui());
  }

  ExprPtr atom() {
    if (cur_.type == Token::Type::Number) {
      auto n = make(ExprNode::Kind::Number, cur_);
      n->value = Rational(Integer(cur_.text));
      integer_literal_.insert(n.get());
      advance();
      return n;
    }
    if (cur_.type == Token::Type::Ident) {
      auto n = make(ExprNode::Kind::Variable, cur_);
      n->name = cur_.text;
      advance();
      return n;
    }
    if (is_op("(")) {
      advance();
      ExprPtr inner = expr();
      if (!is_op(")")) fail("expected ')', found " + describe(cur_));
      advance();
      return inner;
    }
    fail("expected a number, identifier or '(', found " + describe(cur_));
  }

  Lexer lex_;
  Token cur_;
  // Literal integers as written (not parenthesized expressions or folds).
  std::set<const ExprNode*> integer_literal_;
};

void collect_variables(const ExprNode& e, std::vector<const ExprNode*>& out) {
  if (e.kind == ExprNode::Kind::Variable) out.push_back(&e);
  if (e.lhs) collect_variables(*e.lhs, out);
  if (e.rhs) collect_variables(*e.rhs, out);
}

}  // namespace

ExprPtr parse_expr(std::string_view input, int line, int column) { return Parser(input, line, column).parse(); }

std::string to_string(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::Number: return e.value.get_str();
    case ExprNode::Kind::Variable: return e.name;
    case ExprNode::Kind::Neg: return "neg(" + to_string(*e.lhs) + ")";
    case ExprNode::Kind::Add: return "add(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprNode::Kind::Sub: return "sub(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprNode::Kind::Mul: return "mul(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprNode::Kind::Div: return "div(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")";
    case ExprNode::Kind::Pow: return "pow(" + to_string(*e.lhs) + ", " + std::to_string(e.exponent) + ")";
  }
  return "?";
}

RatFunc to_ratfunc(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::Number: return RatFunc(e.value);
    case ExprNode::Kind::Variable: return RatFunc::variable(Symbol(e.name));
    case ExprNode::Kind::Neg: return -to_ratfunc(*e.lhs);
    case ExprNode::Kind::Add: return normalize(to_ratfunc(*e.lhs) + to_ratfunc(*e.rhs));
    case ExprNode::Kind::Sub: return normalize(to_ratfunc(*e.lhs) - to_ratfunc(*e.rhs));
    case ExprNode::Kind::Mul: return normalize(to_ratfunc(*e.lhs) * to_ratfunc(*e.rhs));
    case ExprNode::Kind::Div: {
      RatFunc d = to_ratfunc(*e.rhs);
      if (d.is_zero()) {
        throw ParseError(ErrorKind::DivisionByZero, e.line, e.column,
                         std::to_string(e.line) + ":" + std::to_string(e.column) + ": division by zero");
      }
      return normalize(to_ratfunc(*e.lhs) / d);
    }
    case ExprNode::Kind::Pow: return to_ratfunc(*e.lhs).pow(e.exponent);
  }
  return RatFunc();
}

// ------------------------------------------------------------- field files

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped
};

[[noreturn]] void fail_at(ErrorKind kind, int line, int column, const std::string& msg) {
  throw ParseError(kind, line, column, std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

std::vector<Line> split_lines(std::string_view input) {
  std::vector<Line> out;
  int number = 1;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string text(input.substr(start, end - start));
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    out.push_back({number, text});
    ++number;
    start = end + 1;
  }
  return out;
}

int first_non_space(const std::string& s, std::size_t from = 0) {
  std::size_t i = s.find_first_not_of(" \t", from);
  return i == std::string::npos ? -1 : static_cast<int>(i);
}

// Reads an identifier starting at pos; returns its end.
std::size_t read_word(const std::string& s, std::size_t pos) {
  while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_') &&
         static_cast<unsigned char>(s[pos]) < 0x80) {
    ++pos;
  }
  return pos;
}

}  // namespace

FieldFile parse_field_file(std::string_view input) {
  FieldFile file;
  std::map<std::string, int> generator_line;
  std::set<std::string> defined_derivation;
  std::set<std::string> element_names;

  struct Pending {
    bool derivation;
    std::string name;
    int line;
    int name_column;
    std::string rhs;
    int rhs_column;
  };
  std::vector<Pending> pending;

  for (const auto& [number, text] : split_lines(input)) {
    int start = first_non_space(text);
    if (start < 0) continue;
    std::size_t kw_end = read_word(text, static_cast<std::size_t>(start));
    std::string keyword = text.substr(static_cast<std::size_t>(start), kw_end - static_cast<std::size_t>(start));
    if (keyword != "generator" && keyword != "derivation" && keyword != "element") {
      fail_at(ErrorKind::SyntaxError, number, start + 1,
              "expected 'generator', 'derivation' or 'element', found '" + (keyword.empty() ? text.substr(static_cast<std::size_t>(start), 1) : keyword) + "'");
    }
    int name_start = first_non_space(text, kw_end);
    if (name_start < 0 || name_start == static_cast<int>(kw_end)) {
      fail_at(ErrorKind::SyntaxError, number, static_cast<int>(kw_end) + 1, "expected a name after '" + keyword + "'");
    }
    std::size_t name_end = read_word(text, static_cast<std::size_t>(name_start));
    std::string name = text.substr(static_cast<std::size_t>(name_start), name_end - static_cast<std::size_t>(name_start));
    if (!is_valid_var_name(name)) fail_at(ErrorKind::SyntaxError, number, name_start + 1, "invalid name");

    if (keyword == "generator") {
      if (first_non_space(text, name_end) >= 0) {
        fail_at(ErrorKind::SyntaxError, number, first_non_space(text, name_end) + 1, "unexpected text after generator name");
      }
      if (generator_line.count(name)) {
        fail_at(ErrorKind::DuplicateGenerator, number, name_start + 1,
                "generator '" + name + "' already declared on line " + std::to_string(generator_line[name]));
      }
      generator_line[name] = number;
      file.generators.push_back(name);
      continue;
    }
    int eq = first_non_space(text, name_end);
    if (eq < 0 || text[static_cast<std::size_t>(eq)] != '=') {
      fail_at(ErrorKind::SyntaxError, number, eq < 0 ? static_cast<int>(text.size()) + 1 : eq + 1, "expected '='");
    }
    pending.push_back({keyword == "derivation", name, number, name_start + 1,
                       text.substr(static_cast<std::size_t>(eq) + 1), eq + 2});
  }

  for (const auto& p : pending) {
    if (p.derivation) {
      if (!generator_line.count(p.name)) {
        fail_at(ErrorKind::UnknownVariable, p.line, p.name_column, "derivation for undeclared generator '" + p.name + "'");
      }
      if (!defined_derivation.insert(p.name).second) {
        fail_at(ErrorKind::DuplicateDefinition, p.line, p.name_column, "second derivation for '" + p.name + "'");
      }
    } else {
      if (generator_line.count(p.name) || !element_names.insert(p.name).second) {
        fail_at(ErrorKind::DuplicateDefinition, p.line, p.name_column, "name '" + p.name + "' is already defined");
      }
    }
    ExprPtr e = parse_expr(p.rhs, p.line, p.rhs_column);
    std::vector<const ExprNode*> vars;
    collect_variables(*e, vars);
    for (const ExprNode* v : vars) {
      if (!generator_line.count(v->name)) {
        fail_at(ErrorKind::UnknownVariable, v->line, v->column, "unknown variable '" + v->name + "'");
      }
    }
    (void)to_ratfunc(*e);
    (p.derivation ? file.derivations : file.named_elements).push_back({p.name, e, p.line});
  }

  for (const auto& g : file.generators) {
    if (!defined_derivation.count(g)) {
      fail_at(ErrorKind::MissingDerivation, generator_line[g], 1, "generator '" + g + "' has no derivation line");
    }
  }
  if (file.generators.empty()) fail_at(ErrorKind::SyntaxError, 1, 1, "no generator declared");
  return file;
}

DiffFieldPresentation FieldFile::presentation() const {
  std::map<std::string, RatFunc> derivation;
  for (const auto& d : derivations) derivation.emplace(d.name, to_ratfunc(*d.expr));
  return DiffFieldPresentation(generators, std::move(derivation));
}

std::vector<std::pair<std::string, FieldElement>> FieldFile::elements() const {
  std::vector<std::pair<std::string, FieldElement>> out;
  for (const auto& e : named_elements) out.emplace_back(e.name, FieldElement(to_ratfunc(*e.expr)));
  return out;
}

}  // namespace diffprim
