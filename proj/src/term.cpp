#include "frameforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace frameforge {

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const auto& a : t.args) collect_vars(a, out);
}

enum class Tok {
  End, Ident, Zero, One, LParen, RParen,
  Minus, Amp, Pipe, Caret, Arrow, AndAnd, Implies, Eq, Leq,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Minus: return "'-'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Caret: return "'^'";
    case Tok::Arrow: return "'->'";
    case Tok::AndAnd: return "'&&'";
    case Tok::Implies: return "'=>'";
    case Tok::Eq: return "'='";
    case Tok::Leq: return "'<='";
  }
  return "?";
}

struct Lexer {
  explicit Lexer(const std::string& text) : src(text) { advance(); }

  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  Tok tok = Tok::End;
  std::string ident;
  int tok_line = 1, tok_col = 1;

  [[noreturn]] void fail(const std::string& msg,
                         std::vector<std::string> expected = {}) const {
    throw ParseError(tok_line, tok_col, msg, std::move(expected));
  }

  char peek() const { return pos < src.size() ? src[pos] : '\0'; }

  char take() {
    char c = src[pos++];
    if (c == '\n') { ++line; col = 1; } else { ++col; }
    return c;
  }

  void advance() {
    for (;;) {
      while (pos < src.size() &&
             std::isspace(static_cast<unsigned char>(peek())))
        take();
      if (peek() == '#') {
        while (pos < src.size() && peek() != '\n') take();
        continue;
      }
      break;
    }
    tok_line = line;
    tok_col = col;
    if (pos >= src.size()) { tok = Tok::End; return; }
    const char c = take();
    switch (c) {
      case '0': tok = Tok::Zero; return;
      case '1': tok = Tok::One; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '^': tok = Tok::Caret; return;
      case '|': tok = Tok::Pipe; return;
      case '&':
        if (peek() == '&') { take(); tok = Tok::AndAnd; } else tok = Tok::Amp;
        return;
      case '-':
        if (peek() == '>') { take(); tok = Tok::Arrow; } else tok = Tok::Minus;
        return;
      case '=':
        if (peek() == '>') { take(); tok = Tok::Implies; } else tok = Tok::Eq;
        return;
      case '<':
        if (peek() == '=') { take(); tok = Tok::Leq; return; }
        throw ParseError(tok_line, tok_col, "stray '<'", {"'<='"});
      default:
        if (std::isalpha(static_cast<unsigned char>(c))) {
          ident = c;
          while (std::isalnum(static_cast<unsigned char>(peek())) ||
                 peek() == '_')
            ident += take();
          tok = Tok::Ident;
          return;
        }
        throw ParseError(tok_line, tok_col,
                         std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& text) : lex(text) {}

  void expect(Tok t) {
    if (lex.tok != t)
      lex.fail(std::string("expected ") + tok_name(t) + ", found " +
                   tok_name(lex.tok),
               {tok_name(t)});
    lex.advance();
  }

  Term primary() {
    switch (lex.tok) {
      case Tok::Zero: lex.advance(); return Term::zero();
      case Tok::One: lex.advance(); return Term::one();
      case Tok::LParen: {
        lex.advance();
        Term t = term();
        expect(Tok::RParen);
        return t;
      }
      case Tok::Minus: lex.advance(); return Term::complement(primary());
      case Tok::Ident: {
        const std::string name = lex.ident;
        lex.advance();
        if (lex.tok == Tok::LParen) {
          if (name != "f" && name != "g")
            lex.fail("'" + name + "' is not a unary operation",
                     {"'f'", "'g'"});
          lex.advance();
          Term arg = term();
          expect(Tok::RParen);
          return Term::apply(name, std::move(arg));
        }
        if (name == "f" || name == "g")
          lex.fail("operation symbol '" + name + "' needs an argument list",
                   {"'('"});
        return Term::var(name);
      }
      default:
        lex.fail(std::string("expected a term, found ") + tok_name(lex.tok),
                 {"'0'", "'1'", "identifier", "'('", "'-'"});
    }
  }

  Term meet_level() {
    Term t = primary();
    while (lex.tok == Tok::Amp) {
      lex.advance();
      t = Term::meet(std::move(t), primary());
    }
    return t;
  }

  Term xor_level() {
    Term t = meet_level();
    while (lex.tok == Tok::Caret) {
      lex.advance();
      t = Term::symdiff(std::move(t), meet_level());
    }
    return t;
  }

  Term join_level() {
    Term t = xor_level();
    while (lex.tok == Tok::Pipe) {
      lex.advance();
      t = Term::join(std::move(t), xor_level());
    }
    return t;
  }

  Term term() {
    Term t = join_level();
    if (lex.tok == Tok::Arrow) {
      lex.advance();
      return Term::imp(std::move(t), term());
    }
    return t;
  }

  Atom atom() {
    Term lhs = term();
    Rel rel;
    if (lex.tok == Tok::Eq) rel = Rel::Eq;
    else if (lex.tok == Tok::Leq) rel = Rel::Leq;
    else
      lex.fail(std::string("expected '=' or '<=', found ") +
                   tok_name(lex.tok),
               {"'='", "'<='"});
    lex.advance();
    return Atom{std::move(lhs), rel, term()};
  }

  QuasiIdentity quasi() {
    std::vector<Atom> atoms;
    atoms.push_back(atom());
    while (lex.tok == Tok::AndAnd) {
      lex.advance();
      atoms.push_back(atom());
    }
    QuasiIdentity q;
    if (lex.tok == Tok::Implies) {
      lex.advance();
      q.premises = std::move(atoms);
      q.conclusion = atom();
    } else if (atoms.size() > 1) {
      lex.fail("premise list needs a conclusion", {"'=>'"});
    } else {
      q.conclusion = std::move(atoms.front());
    }
    if (lex.tok != Tok::End)
      lex.fail(std::string("trailing input: found ") + tok_name(lex.tok),
               {"end of input"});
    return q;
  }
};

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Imp: return 1;
    case Term::Kind::Join: return 2;
    case Term::Kind::SymDiff: return 3;
    case Term::Kind::Meet: return 4;
    default: return 5;
  }
}

void print_term(const Term& t, std::string& out) {
  const int prec = precedence(t.kind);
  auto child = [&](const Term& c, bool needs_parens) {
    if (needs_parens) {
      out += '(';
      print_term(c, out);
      out += ')';
    } else {
      print_term(c, out);
    }
  };
  switch (t.kind) {
    case Term::Kind::Var: out += t.name; return;
    case Term::Kind::Zero: out += '0'; return;
    case Term::Kind::One: out += '1'; return;
    case Term::Kind::Compl:
      out += '-';
      child(t.args[0], precedence(t.args[0].kind) < 5);
      return;
    case Term::Kind::Apply:
      out += t.name;
      out += '(';
      print_term(t.args[0], out);
      out += ')';
      return;
    case Term::Kind::Imp:
      // right associative
      child(t.args[0], precedence(t.args[0].kind) <= prec);
      out += " -> ";
      child(t.args[1], precedence(t.args[1].kind) < prec);
      return;
    default: {
      const char* op = t.kind == Term::Kind::Join  ? " | "
                       : t.kind == Term::Kind::SymDiff ? " ^ "
                                                       : " & ";
      child(t.args[0], precedence(t.args[0].kind) < prec);
      out += op;
      child(t.args[1], precedence(t.args[1].kind) <= prec);
      return;
    }
  }
}

}  // namespace

std::vector<std::string> QuasiIdentity::variables() const {
  std::set<std::string> names;
  for (const auto& p : premises) {
    collect_vars(p.lhs, names);
    collect_vars(p.rhs, names);
  }
  collect_vars(conclusion.lhs, names);
  collect_vars(conclusion.rhs, names);
  return {names.begin(), names.end()};
}

QuasiIdentity parse_quasi_identity(const std::string& text) {
  Parser p(text);
  return p.quasi();
}

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  if (p.lex.tok != Tok::End)
    p.lex.fail(std::string("trailing input: found ") + tok_name(p.lex.tok),
               {"end of input"});
  return t;
}

std::string to_string(const Term& term) {
  std::string out;
  print_term(term, out);
  return out;
}

std::string to_string(const Atom& atom) {
  return to_string(atom.lhs) + (atom.rel == Rel::Eq ? " = " : " <= ") +
         to_string(atom.rhs);
}

std::string to_string(const QuasiIdentity& q) {
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) out += " && ";
    out += to_string(q.premises[i]);
  }
  if (!q.premises.empty()) out += " => ";
  out += to_string(q.conclusion);
  return out;
}

}  // namespace frameforge
