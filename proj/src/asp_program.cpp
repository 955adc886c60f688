#include <cctype>
#include <sstream>

#include "matchforge/asp.hpp"

namespace matchforge::asp {

std::string to_string(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out += '(';
    for (std::size_t k = 0; k < a.args.size(); ++k) {
      if (k) out += ',';
      out += a.args[k];
    }
    out += ')';
  }
  return out;
}

AtomId AtomTable::intern(const Atom& a) {
  if (auto it = index_.find(a); it != index_.end()) return it->second;
  const auto id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back(a);
  index_.emplace(a, id);
  return id;
}

std::optional<AtomId> AtomTable::find(const Atom& a) const {
  if (auto it = index_.find(a); it != index_.end()) return it->second;
  return std::nullopt;
}

void Program::add_rule(const std::vector<std::string>& head, const std::vector<std::string>& positive,
                       const std::vector<std::string>& negative) {
  Rule r;
  for (const auto& s : head) r.head.push_back(intern(s));
  for (const auto& s : positive) r.positive.push_back(intern(s));
  for (const auto& s : negative) r.negative.push_back(intern(s));
  add_rule(std::move(r));
}

bool Program::is_naf_free() const {
  for (const auto& r : rules_)
    if (!r.negative.empty()) return false;
  return true;
}

bool Program::is_normal() const {
  for (const auto& r : rules_)
    if (r.head.size() > 1) return false;
  return true;
}

ProgramKind Program::kind() const {
  if (is_naf_free()) return ProgramKind::SimpleDisjunctive;
  return is_normal() ? ProgramKind::Normal : ProgramKind::Disjunctive;
}

bool operator==(const Program& a, const Program& b) {
  if (a.rules_.size() != b.rules_.size()) return false;
  auto same = [&](const std::vector<AtomId>& x, const std::vector<AtomId>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (a.atom(x[k]) != b.atom(y[k])) return false;
    return true;
  };
  for (std::size_t k = 0; k < a.rules_.size(); ++k) {
    const Rule& ra = a.rules_[k];
    const Rule& rb = b.rules_[k];
    if (!same(ra.head, rb.head) || !same(ra.positive, rb.positive) || !same(ra.negative, rb.negative)) return false;
  }
  return true;
}

Interpretation Interpretation::of(const std::vector<std::string>& atoms) {
  Interpretation i;
  for (const auto& s : atoms) i.insert(parse_atom(s));
  return i;
}

std::string to_string(const Interpretation& i) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : i) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Text form

std::string format_rule(const Program& p, const Rule& r) {
  std::string out;
  for (std::size_t k = 0; k < r.head.size(); ++k) {
    if (k) out += " v ";
    out += to_string(p.atom(r.head[k]));
  }
  if (!r.is_fact() || r.head.empty()) {
    out += r.head.empty() ? ":- " : " :- ";
    bool first = true;
    for (AtomId a : r.positive) {
      if (!first) out += ", ";
      first = false;
      out += to_string(p.atom(a));
    }
    for (AtomId a : r.negative) {
      if (!first) out += ", ";
      first = false;
      out += "not " + to_string(p.atom(a));
    }
  }
  return out + ".";
}

std::string format_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) out += format_rule(p, r) + "\n";
  return out;
}

namespace {

struct Token {
  enum Kind { Ident, LParen, RParen, Comma, If, Dot, Bar, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip();
    const int l = line_, c = col_;
    if (pos_ >= text_.size()) return {Token::End, "", l, c};
    const char ch = text_[pos_];
    auto single = [&](Token::Kind k) {
      advance();
      return Token{k, std::string(1, ch), l, c};
    };
    switch (ch) {
      case '(': return single(Token::LParen);
      case ')': return single(Token::RParen);
      case ',': return single(Token::Comma);
      case '.': return single(Token::Dot);
      case '|': return single(Token::Bar);
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          advance();
          advance();
          return {Token::If, ":-", l, c};
        }
        break;
      default: break;
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word += text_[pos_];
        advance();
      }
      return {Token::Ident, word, l, c};
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  Atom atom() {
    if (tok_.kind != Token::Ident || !std::islower(static_cast<unsigned char>(tok_.text[0])))
      fail("expected an atom");
    Atom a{tok_.text, {}};
    shift();
    if (tok_.kind == Token::LParen) {
      shift();
      while (true) {
        if (tok_.kind != Token::Ident) fail("expected a constant");
        a.args.push_back(tok_.text);
        shift();
        if (tok_.kind == Token::Comma) {
          shift();
          continue;
        }
        if (tok_.kind == Token::RParen) {
          shift();
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return a;
  }

  Program program() {
    Program p;
    while (tok_.kind != Token::End) {
      Rule r;
      if (tok_.kind != Token::If) {
        r.head.push_back(p.intern(atom()));
        while ((tok_.kind == Token::Ident && tok_.text == "v") || tok_.kind == Token::Bar) {
          shift();
          r.head.push_back(p.intern(atom()));
        }
      }
      if (tok_.kind == Token::If) {
        shift();
        while (true) {
          if (tok_.kind == Token::Ident && tok_.text == "not") {
            shift();
            r.negative.push_back(p.intern(atom()));
          } else {
            r.positive.push_back(p.intern(atom()));
          }
          if (tok_.kind == Token::Comma) {
            shift();
            continue;
          }
          break;
        }
      } else if (r.head.empty()) {
        fail("expected a rule");
      }
      if (tok_.kind != Token::Dot) fail("expected '.'");
      shift();
      p.add_rule(std::move(r));
    }
    return p;
  }

  bool at_end() const { return tok_.kind == Token::End; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, tok_.line, tok_.column); }

 private:
  void shift() { tok_ = lex_.next(); }

  Lexer lex_;
  Token tok_;
};

}  // namespace

Atom parse_atom(std::string_view text) {
  Parser parser(text);
  Atom a = parser.atom();
  if (!parser.at_end()) parser.fail("trailing text after atom");
  return a;
}

Program parse_program(std::string_view text) { return Parser(text).program(); }

}  // namespace matchforge::asp
