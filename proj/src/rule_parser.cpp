#include <cctype>

#include "lines.hpp"
#include "twolevel/error.hpp"
#include "twolevel/rules.hpp"
#include "twolevel/text.hpp"

namespace twolevel {
namespace {

enum class Tok { Name, Atom, Underscore, Boundary, Any, LBracket, RBracket, LParen, RParen,
                 Bar, Star, Plus, Semicolon, Op, End };

struct Lexeme {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_delimiter(char c) {
  return c == '[' || c == ']' || c == '(' || c == ')' || c == '|' || c == '*' || c == '+' ||
         c == ';' || c == '"' || c == '!' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::vector<Lexeme> lex(std::string_view text, const std::string& source) {
  std::vector<Lexeme> out;
  auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view l = lines[ln];
    const int line = static_cast<int>(ln + 1);
    std::size_t i = 0;
    while (i < l.size()) {
      char c = l[i];
      int col = detail::utf8_column(l, i);
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c == '!') break;
      if (c == '"') {
        std::size_t end = l.find('"', i + 1);
        if (end == std::string_view::npos) throw SyntaxError(source, line, col, "unterminated rule name");
        out.push_back({Tok::Name, std::string(l.substr(i + 1, end - i - 1)), line, col});
        i = end + 1;
        continue;
      }
      auto single = [&](Tok k) {
        out.push_back({k, std::string(1, c), line, col});
        ++i;
      };
      switch (c) {
        case '[': single(Tok::LBracket); continue;
        case ']': single(Tok::RBracket); continue;
        case '(': single(Tok::LParen); continue;
        case ')': single(Tok::RParen); continue;
        case '|': single(Tok::Bar); continue;
        case '*': single(Tok::Star); continue;
        case '+': single(Tok::Plus); continue;
        case ';': single(Tok::Semicolon); continue;
        default: break;
      }
      std::size_t start = i;
      while (i < l.size() && !is_delimiter(l[i])) ++i;
      std::string run(l.substr(start, i - start));
      Tok kind = Tok::Atom;
      if (run == "_") kind = Tok::Underscore;
      else if (run == "#") kind = Tok::Boundary;
      else if (run == "?") kind = Tok::Any;
      else if (run == "<=>" || run == "=>" || run == "<=" || run == "/<=") kind = Tok::Op;
      out.push_back({kind, run, line, col});
    }
  }
  int last = static_cast<int>(lines.size());
  out.push_back({Tok::End, "", last, 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Lexeme> toks, const Alphabet& a, const std::string& source)
      : toks_(std::move(toks)), a_(a), source_(source) {}

  std::vector<TwoLevelRule> rules() {
    std::vector<TwoLevelRule> out;
    while (peek().kind != Tok::End) {
      const Lexeme& name = expect(Tok::Name, "expected a quoted rule name");
      TwoLevelRule r;
      r.name = name.text;
      r.line = name.line;
      const Lexeme& center = expect(Tok::Atom, "expected the center pair");
      r.center = center_pair(center);
      const Lexeme& op = expect(Tok::Op, "expected one of <=> => <= /<=");
      r.op = op.text == "<=>"  ? RuleOperator::Biconditional
             : op.text == "=>" ? RuleOperator::Restriction
             : op.text == "<=" ? RuleOperator::Coercion
                               : RuleOperator::Prohibition;
      do {
        r.contexts.push_back(context());
      } while (peek().kind != Tok::End && peek().kind != Tok::Name);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  const Lexeme& peek() const { return toks_[pos_]; }
  const Lexeme& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  const Lexeme& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what + (peek().text.empty() ? "" : ", got '" + peek().text + "'"));
    return take();
  }
  [[noreturn]] void fail(const Lexeme& at, const std::string& msg) const {
    throw SyntaxError(source_, at.line, at.column, msg);
  }
  [[noreturn]] void content(const Lexeme& at, const std::string& msg) const {
    throw ContentError((source_.empty() ? std::string("<rules>") : source_) + ":" +
                       std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + msg);
  }

  SymbolPair center_pair(const Lexeme& t) {
    std::size_t colon = t.text.find(':');
    auto side = [&](std::string_view s) {
      auto id = a_.find(s);
      if (!id) content(t, "unknown symbol '" + std::string(s) + "' in center");
      return *id;
    };
    if (colon == std::string::npos) {
      // A bare symbol is its identity pair (a marker's is marker:0).
      SymbolId id = side(t.text);
      if (id == kZero) fail(t, "center must be a pair, got '0'");
      SymbolPair p{id, a_.is_marker(id) ? kZero : id};
      if (!a_.feasible(p)) content(t, "center pair '" + t.text + "' is not feasible");
      return p;
    }
    if (colon == 0 || colon + 1 == t.text.size()) {
      fail(t, "center must be a concrete pair a:b, got '" + t.text + "'");
    }
    SymbolPair p{side(std::string_view(t.text).substr(0, colon)),
                 side(std::string_view(t.text).substr(colon + 1))};
    if (!a_.feasible(p)) content(t, "center pair '" + t.text + "' is not feasible");
    return p;
  }

  RuleContext context() {
    RuleContext c;
    c.line = peek().line;
    std::size_t first = pos_;
    c.left = sequence();
    expect(Tok::Underscore, "expected '_' in context");
    c.right = sequence();
    std::size_t last = pos_;
    expect(Tok::Semicolon, "expected ';' after context");
    for (std::size_t i = first; i < last; ++i) {
      if (!c.text.empty()) c.text += ' ';
      c.text += toks_[i].text;
    }
    return c;
  }

  ContextRegex alternation() {
    ContextRegex first = sequence();
    if (peek().kind != Tok::Bar) return first;
    ContextRegex u;
    u.kind = ContextRegex::Kind::Union;
    u.children.push_back(std::move(first));
    while (peek().kind == Tok::Bar) {
      take();
      u.children.push_back(sequence());
    }
    return u;
  }

  ContextRegex sequence() {
    ContextRegex seq;
    seq.kind = ContextRegex::Kind::Concat;
    while (true) {
      Tok k = peek().kind;
      if (k != Tok::Atom && k != Tok::Boundary && k != Tok::Any && k != Tok::LBracket &&
          k != Tok::LParen) {
        break;
      }
      ContextRegex item = primary();
      while (peek().kind == Tok::Star || peek().kind == Tok::Plus) {
        ContextRegex wrap;
        wrap.kind = take().kind == Tok::Star ? ContextRegex::Kind::Star : ContextRegex::Kind::Plus;
        wrap.children.push_back(std::move(item));
        item = std::move(wrap);
      }
      seq.children.push_back(std::move(item));
    }
    if (seq.children.size() == 1) return std::move(seq.children.front());
    return seq;
  }

  ContextRegex primary() {
    const Lexeme& t = take();
    switch (t.kind) {
      case Tok::Boundary: {
        ContextRegex b;
        b.kind = ContextRegex::Kind::Boundary;
        b.text = "#";
        return b;
      }
      case Tok::Any: {
        ContextRegex any;
        any.kind = ContextRegex::Kind::Atom;
        any.text = "?";
        for (PairId p = 0; p < a_.pairs().size(); ++p) any.pairs.push_back(p);
        return any;
      }
      case Tok::Atom: return atom(t);
      case Tok::LBracket: {
        ContextRegex inner = alternation();
        expect(Tok::RBracket, "expected ']'");
        return inner;
      }
      case Tok::LParen: {
        ContextRegex opt;
        opt.kind = ContextRegex::Kind::Optional;
        opt.children.push_back(alternation());
        expect(Tok::RParen, "expected ')'");
        return opt;
      }
      default: fail(t, "unexpected '" + t.text + "'");
    }
  }

  // One side of an atom: empty (any), a set, the zero symbol or a symbol.
  std::vector<bool> side(const Lexeme& t, std::string_view s) {
    std::vector<bool> ok(a_.symbol_count(), s.empty());
    if (s.empty()) return ok;
    bool looks_like_set = s.size() > 1 && s.front() != '^' && std::isupper(static_cast<unsigned char>(s.front()));
    if (looks_like_set) {
      if (!a_.has_set(s)) content(t, "unknown set '" + std::string(s) + "'");
      for (SymbolId id : a_.set(s)) ok[id] = true;
      return ok;
    }
    if (s == "0") {
      ok[kZero] = true;
      return ok;
    }
    auto id = a_.find(s);
    if (!id) content(t, "unknown symbol '" + std::string(s) + "'");
    ok[*id] = true;
    return ok;
  }

  ContextRegex atom(const Lexeme& t) {
    std::string_view s = t.text;
    std::size_t colon = s.find(':');
    if (colon != std::string_view::npos && s.find(':', colon + 1) != std::string_view::npos) {
      fail(t, "malformed atom '" + t.text + "'");
    }
    std::string_view lex = colon == std::string_view::npos ? s : s.substr(0, colon);
    std::string_view surf = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
    if (lex.empty() && surf.empty()) fail(t, "empty atom ':'");
    auto lex_ok = side(t, lex);
    auto surf_ok = side(t, surf);
    ContextRegex r;
    r.kind = ContextRegex::Kind::Atom;
    r.text = t.text;
    for (PairId p = 0; p < a_.pairs().size(); ++p) {
      const auto& pr = a_.pairs()[p];
      if (lex_ok[pr.lexical] && surf_ok[pr.surface]) r.pairs.push_back(p);
    }
    if (r.pairs.empty()) content(t, "'" + t.text + "' matches no feasible pair");
    return r;
  }

  std::vector<Lexeme> toks_;
  std::size_t pos_ = 0;
  const Alphabet& a_;
  const std::string& source_;
};

}  // namespace

std::string_view to_string(RuleOperator op) {
  switch (op) {
    case RuleOperator::Biconditional: return "<=>";
    case RuleOperator::Restriction: return "=>";
    case RuleOperator::Coercion: return "<=";
    case RuleOperator::Prohibition: return "/<=";
  }
  return "<=>";
}

std::vector<TwoLevelRule> parse_rules(std::string_view text, const Alphabet& alphabet,
                                      const std::string& source) {
  return Parser(lex(text, source), alphabet, source).rules();
}

}  // namespace twolevel
