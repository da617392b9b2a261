#include "fincat/formula.hpp"

#include <algorithm>
#include <cctype>

#include "fincat/errors.hpp"

namespace fincat {

bool Formula::operator==(const Formula& other) const {
  if (kind != other.kind || name != other.name || applied != other.applied ||
      args != other.args || variable != other.variable ||
      children.size() != other.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!(*children[i] == *other.children[i])) return false;
  }
  return true;
}

namespace fml {

namespace {
FormulaPtr node(Formula::Kind k, std::vector<FormulaPtr> children) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->children = std::move(children);
  return f;
}
}  // namespace

FormulaPtr truth() { return node(Formula::Kind::True, {}); }
FormulaPtr falsity() { return node(Formula::Kind::False, {}); }

FormulaPtr prop(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->name = std::move(name);
  return f;
}

FormulaPtr pred(std::string name, std::vector<std::size_t> args) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->name = std::move(name);
  f->applied = true;
  f->args = std::move(args);
  return f;
}

FormulaPtr negate(FormulaPtr a) { return node(Formula::Kind::Not, {std::move(a)}); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::And, {std::move(a), std::move(b)});
}
FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::Or, {std::move(a), std::move(b)});
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Kind::Implies, {std::move(a), std::move(b)});
}
FormulaPtr box(FormulaPtr a) { return node(Formula::Kind::Box, {std::move(a)}); }
FormulaPtr dia(FormulaPtr a) { return node(Formula::Kind::Diamond, {std::move(a)}); }

FormulaPtr forall(std::size_t variable, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Forall;
  f->variable = variable;
  f->children = {std::move(body)};
  return f;
}

FormulaPtr exists(std::size_t variable, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Exists;
  f->variable = variable;
  f->children = {std::move(body)};
  return f;
}

}  // namespace fml

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FormulaPtr run() {
    FormulaPtr f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(const std::string& token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string peek_word() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool eat_keyword(const std::string& word) {
    if (peek_word() != word) return false;
    pos_ += word.size();
    return true;
  }

  std::size_t variable() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'v') fail("expected a variable vK");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits after 'v'");
    if (pos_ < text_.size() && ident_char(text_[pos_])) fail("malformed variable");
    const std::size_t k = std::stoul(text_.substr(start, pos_ - start));
    if (k == 0) fail("variables are numbered from v1");
    return k;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (eat("->")) return fml::implies(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (eat("|")) lhs = fml::disj(lhs, conjunction());
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (eat("&")) lhs = fml::conj(lhs, unary());
    return lhs;
  }

  FormulaPtr unary() {
    if (eat("!")) return fml::negate(unary());
    if (eat("(")) {
      FormulaPtr inner = implication();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    const std::string word = peek_word();
    if (word.empty()) {
      if (pos_ >= text_.size()) fail("unexpected end of formula");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    if (eat_keyword("box")) return fml::box(unary());
    if (eat_keyword("dia")) return fml::dia(unary());
    if (word == "forall" || word == "exists") {
      pos_ += word.size();
      const std::size_t k = variable();
      if (!eat(".")) fail("expected '.' after quantified variable");
      FormulaPtr body = implication();
      return word == "forall" ? fml::forall(k, body) : fml::exists(k, body);
    }
    if (eat_keyword("true")) return fml::truth();
    if (eat_keyword("false")) return fml::falsity();
    if (!std::isalpha(static_cast<unsigned char>(word[0]))) fail("atom names start with a letter");
    pos_ += word.size();
    if (eat("(")) {
      std::vector<std::size_t> args;
      if (!eat(")")) {
        do {
          args.push_back(variable());
        } while (eat(","));
        if (!eat(")")) fail("expected ')' closing the argument list");
      }
      return fml::pred(word, std::move(args));
    }
    return fml::prop(word);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void render(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto binary = [&](const char* op) {
    out += '(';
    render(*f.children[0], out);
    out += op;
    render(*f.children[1], out);
    out += ')';
  };
  switch (f.kind) {
    case K::True: out += "true"; break;
    case K::False: out += "false"; break;
    case K::Atom:
      out += f.name;
      if (f.applied) {
        out += '(';
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ',';
          out += 'v' + std::to_string(f.args[i]);
        }
        out += ')';
      }
      break;
    case K::Not:
      out += '!';
      render(*f.children[0], out);
      break;
    case K::Box:
    case K::Diamond:
      out += f.kind == K::Box ? "box " : "dia ";
      render(*f.children[0], out);
      break;
    case K::And: binary(" & "); break;
    case K::Or: binary(" | "); break;
    case K::Implies: binary(" -> "); break;
    case K::Forall:
    case K::Exists:
      out += f.kind == K::Forall ? "(forall v" : "(exists v";
      out += std::to_string(f.variable) + ". ";
      render(*f.children[0], out);
      out += ')';
      break;
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return Parser(text).run(); }

std::string to_string(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& c : f.children) d = std::max(d, depth(*c));
  return d + 1;
}

bool is_modal(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind == K::Forall || f.kind == K::Exists) return false;
  if (f.kind == K::Atom && f.applied) return false;
  return std::all_of(f.children.begin(), f.children.end(),
                     [](const FormulaPtr& c) { return is_modal(*c); });
}

bool is_first_order(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind == K::Box || f.kind == K::Diamond) return false;
  if (f.kind == K::Atom && !f.applied) return false;
  return std::all_of(f.children.begin(), f.children.end(),
                     [](const FormulaPtr& c) { return is_first_order(*c); });
}

}  // namespace fincat
