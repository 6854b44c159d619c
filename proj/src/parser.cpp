#include "elgr/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "elgr/error.hpp"

namespace elgr {

namespace {

enum class Tok {
  Ident,
  Top,
  And,
  Some,
  SubClassOf,
  LParen,
  RParen,
  Comma,
  Dot,
  StaticSection,
  RefutableSection,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Top: return "'Top'";
    case Tok::And: return "'and'";
    case Tok::Some: return "'some'";
    case Tok::SubClassOf: return "'SubClassOf'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::StaticSection: return "'[static]'";
    case Tok::RefutableSection: return "'[refutable]'";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "Top") kind = Tok::Top;
      else if (word == "and") kind = Tok::And;
      else if (word == "some") kind = Tok::Some;
      else if (word == "SubClassOf") kind = Tok::SubClassOf;
      else if (word.rfind("__", 0) == 0)
        throw ParseError(l, cl, "identifiers starting with '__' are reserved: " + word);
      out.push_back({kind, std::move(word), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '[') {
      std::size_t j = s.find(']', i);
      std::string word(s.substr(i, j == std::string_view::npos ? s.size() - i : j + 1 - i));
      if (word == "[static]") out.push_back({Tok::StaticSection, word, l, cl});
      else if (word == "[refutable]") out.push_back({Tok::RefutableSection, word, l, cl});
      else throw ParseError(l, cl, "unknown section " + word + ", expected [static] or [refutable]");
      advance(word.size());
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct SingleArgUse {
  std::string name;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Concept concept_only() {
    Concept c = conjunction();
    expect_end();
    return c;
  }

  Axiom axiom_only() {
    Axiom a = axiom();
    expect_end();
    check_role_name_clash();
    return a;
  }

  Ontology ontology() {
    Ontology o;
    bool seen_static = false, seen_refutable = false;
    std::vector<Axiom>* target = nullptr;
    char prefix = 0;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::StaticSection || t.kind == Tok::RefutableSection) {
        bool is_static = t.kind == Tok::StaticSection;
        bool& seen = is_static ? seen_static : seen_refutable;
        if (seen) fail(t, "duplicate section " + t.text);
        if (is_static && seen_refutable) fail(t, "[static] must come before [refutable]");
        seen = true;
        target = is_static ? &o.static_part : &o.refutable_part;
        prefix = is_static ? 's' : 'r';
        next();
        continue;
      }
      if (target == nullptr)
        fail(t, "axiom outside of a section; start the file with [static] or [refutable]");
      Axiom a = axiom();
      std::string label = std::string(1, prefix) + std::to_string(target->size() + 1);
      target->push_back(a.relabeled(Label(std::move(label))));
      const Token& after = peek();
      if (after.kind != Tok::End && after.kind != Tok::StaticSection &&
          after.kind != Tok::RefutableSection && after.line == last_line_)
        fail(after, std::string("unexpected ") + describe(after.kind) +
                        " after axiom; put each axiom on its own line");
    }
    check_role_name_clash();
    return o;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    last_line_ = t.line;
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }
  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind)
      fail(t, std::string("expected ") + describe(kind) + ", found " +
                  (t.kind == Tok::End ? std::string(describe(t.kind))
                                      : "'" + t.text + "'"));
    return next();
  }
  void expect_end() {
    const Token& t = peek();
    if (t.kind != Tok::End)
      fail(t, "unexpected '" + t.text + "', expected end of input");
  }

  Concept atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Top:
        next();
        return Concept::top();
      case Tok::Ident:
        next();
        return Concept::name(t.text);
      case Tok::LParen: {
        next();
        Concept c = conjunction();
        expect(Tok::RParen);
        return c;
      }
      case Tok::Some: {
        next();
        const Token& role = expect(Tok::Ident);
        roles_.insert(role.text);
        expect(Tok::Dot);
        return Concept::exists(role.text, atom());
      }
      default:
        fail(t, std::string("expected a concept ('Top', a name, '(' or 'some'), found ") +
                    (t.kind == Tok::End ? std::string(describe(t.kind)) : "'" + t.text + "'"));
    }
  }

  Concept conjunction() {
    std::vector<Concept> parts;
    parts.push_back(atom());
    while (peek().kind == Tok::And) {
      next();
      parts.push_back(atom());
    }
    return Concept::conj(std::move(parts));
  }

  void reject_continuation(const char* what) {
    const Token& t = peek();
    if (t.kind == Tok::And || t.kind == Tok::SubClassOf)
      fail(t, std::string(what) + " used in a position requiring a concept");
  }

  Axiom axiom() {
    const Token& first = peek();
    if (first.kind == Tok::Ident && peek(1).kind == Tok::LParen &&
        peek(2).kind == Tok::Ident &&
        (peek(3).kind == Tok::Comma || peek(3).kind == Tok::RParen)) {
      const Token& name = next();
      next();
      const Token& subj = next();
      if (peek().kind == Tok::Comma) {
        next();
        const Token& obj = expect(Tok::Ident);
        expect(Tok::RParen);
        roles_.insert(name.text);
        reject_continuation("role assertion");
        return Axiom::role_assertion(name.text, subj.text, obj.text);
      }
      expect(Tok::RParen);
      single_arg_.push_back({name.text, name.line, name.column});
      reject_continuation("concept assertion");
      return Axiom::assertion(Concept::name(name.text), subj.text);
    }

    Concept lhs = atom();
    if (peek().kind == Tok::LParen) {
      next();
      const Token& ind = expect(Tok::Ident);
      if (peek().kind == Tok::Comma)
        fail(peek(), "role assertions take the form r(a, b) with a plain role name");
      expect(Tok::RParen);
      reject_continuation("concept assertion");
      return Axiom::assertion(lhs, ind.text);
    }
    std::vector<Concept> parts{lhs};
    while (peek().kind == Tok::And) {
      next();
      parts.push_back(atom());
    }
    if (peek().kind == Tok::LParen && parts.size() > 1)
      fail(peek(), "concept assertions need an atom; parenthesize complex concepts, e.g. (A and B)(a)");
    expect(Tok::SubClassOf);
    Concept rhs = conjunction();
    return Axiom::gci(Concept::conj(std::move(parts)), rhs);
  }

  void check_role_name_clash() const {
    for (const auto& use : single_arg_)
      if (roles_.count(use.name))
        throw ParseError(use.line, use.column,
                         "'" + use.name + "' is used as a role elsewhere; " +
                             use.name + "(...) needs two arguments");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
  std::set<std::string> roles_;
  std::vector<SingleArgUse> single_arg_;
};

}  // namespace

Concept parse_concept(std::string_view text) { return Parser(text).concept_only(); }

Axiom parse_axiom(std::string_view text) { return Parser(text).axiom_only(); }

Ontology parse_ontology(std::string_view text) { return Parser(text).ontology(); }

}  // namespace elgr
