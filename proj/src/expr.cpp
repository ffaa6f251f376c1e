#include "rdc/expr.hpp"

#include <cctype>
#include <map>

#include "rdc/cylinder.hpp"
#include "rdc/gray.hpp"
#include "rdc/horn.hpp"

namespace rdc {

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.value == b.value && a.sign == b.sign && a.args == b.args;
}

namespace {

// Argument kinds: e expression, i natural number, s sign, t text (quoted or
// bare word), I list of naturals, T list of texts.
const std::map<std::string, std::string, std::less<>>& signatures() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"point", ""},   {"arrow", ""},    {"globe", "i"},  {"paste", "eei"},   {"atom", "ee"},   {"gray", "ee"},
      {"dual", "Ie"},  {"op", "e"},      {"cyl", "eT"},   {"lcyl", "e"},      {"rcyl", "e"},    {"inv", "te"},
      {"unit", "e"},   {"merger", "e"},  {"boundary", "eis"}, {"horn", "et"}, {"lunitor", "eT"}, {"runitor", "eT"},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, column_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  Expr at_here(Expr::Kind kind) const {
    Expr e;
    e.kind = kind;
    e.line = line_;
    e.column = column_;
    return e;
  }

  std::string word() {
    std::string w;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      w += text_[pos_];
      advance();
    }
    return w;
  }

  Expr expression() {
    char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected an expression");
    Expr e = at_here(Expr::Kind::Call);
    e.name = word();
    auto sig = signatures().find(e.name);
    if (sig == signatures().end()) throw SyntaxError(e.line, e.column, "unknown constructor " + e.name);
    const std::string& kinds = sig->second;
    if (peek() == '(') {
      advance();
      if (peek() != ')') {
        while (true) {
          if (e.args.size() >= kinds.size()) break;
          e.args.push_back(argument(kinds[e.args.size()]));
          if (peek() != ',') break;
          advance();
        }
      }
      if (e.args.size() != kinds.size() || peek() != ')') arity(e, kinds.size());
      advance();
    } else if (!kinds.empty()) {
      arity(e, kinds.size());
    }
    return e;
  }

  [[noreturn]] void arity(const Expr& e, std::size_t n) const {
    throw SyntaxError(e.line, e.column,
                      e.name + " requires " + std::to_string(n) + (n == 1 ? " argument" : " arguments"));
  }

  Expr argument(char kind) {
    switch (kind) {
      case 'e':
        return expression();
      case 'i':
        return natural();
      case 's': {
        char c = peek();
        if (c != '+' && c != '-') fail("expected a sign '+' or '-'");
        Expr e = at_here(Expr::Kind::Sign);
        e.sign = c == '+' ? Sign::Plus : Sign::Minus;
        advance();
        return e;
      }
      case 't':
        return text();
      case 'I':
      case 'T': {
        expect('[');
        Expr e = at_here(Expr::Kind::List);
        if (peek() != ']') {
          while (true) {
            e.args.push_back(kind == 'I' ? natural() : text());
            if (peek() != ',') break;
            advance();
          }
        }
        expect(']');
        return e;
      }
    }
    fail("bad signature");
  }

  Expr natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
    Expr e = at_here(Expr::Kind::Int);
    std::string digits = word();
    for (char d : digits)
      if (!std::isdigit(static_cast<unsigned char>(d))) throw SyntaxError(e.line, e.column, "expected a natural number");
    if (digits.size() > 6) throw SyntaxError(e.line, e.column, "number too large");
    e.value = std::stol(digits);
    return e;
  }

  Expr text() {
    char c = peek();
    Expr e = at_here(Expr::Kind::Str);
    if (c == '"') {
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        e.name += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) throw SyntaxError(e.line, e.column, "unterminated string");
      advance();
      return e;
    }
    if (!std::isalnum(static_cast<unsigned char>(c))) fail("expected a quoted string or a word");
    e.name = word();
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

ElementSet id_set(const Molecule& m, const Expr& list) {
  ElementSet s = m.poset().none();
  for (const auto& item : list.args) s.insert(m.poset().at(item.name));
  return s;
}

std::string arg_path(const std::string& head, std::size_t i) { return head + ".arg" + std::to_string(i + 1); }

Molecule eval_call(const Expr& e) {
  std::vector<Molecule> sub;
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (e.args[i].kind != Expr::Kind::Call) continue;
    try {
      sub.push_back(eval(e.args[i]));
    } catch (const Error& err) {
      throw err.with_path(arg_path(e.name, i) + (err.path().empty() ? "" : "." + err.path()));
    }
  }
  // failures that belong to one literal argument are reported at it
  auto at_arg = [&](std::size_t i, auto&& f) -> Molecule {
    try {
      return f();
    } catch (const Error& err) {
      throw err.with_path(arg_path(e.name, i));
    }
  };
  const std::string& h = e.name;
  if (h == "point") return point();
  if (h == "arrow") return arrow();
  if (h == "globe") return globe(static_cast<int>(e.args[0].value));
  if (h == "paste") {
    try {
      return paste(sub[0], sub[1], static_cast<int>(e.args[2].value));
    } catch (const Error& err) {
      // a bad level is the third argument's fault, a bad gluing the second's
      throw err.with_path(arg_path(h, err.kind() == ErrorKind::LevelOutOfRange ? 2 : 1));
    }
  }
  if (h == "atom") {
    if (!sub[0].is_round()) throw Error(ErrorKind::NotRound, "atom input is not round").with_path(arg_path(h, 0));
    if (sub[1].dim() != sub[0].dim())
      throw Error(ErrorKind::DimMismatch, "atom output dimension differs from input").with_path(arg_path(h, 1));
    if (!sub[1].is_round()) throw Error(ErrorKind::NotRound, "atom output is not round").with_path(arg_path(h, 1));
    return at_arg(1, [&] { return atom(sub[0], sub[1]); });
  }
  if (h == "gray") return gray(sub[0], sub[1]);
  if (h == "dual") {
    std::vector<int> dims;
    for (const auto& d : e.args[0].args) dims.push_back(static_cast<int>(d.value));
    return dual(dims, sub[0]);
  }
  if (h == "op") return opposite(sub[0]);
  if (h == "cyl") return at_arg(1, [&] { return gray_cylinder(sub[0], id_set(sub[0], e.args[1])).shape; });
  if (h == "lcyl") return invertor_shape("L", sub[0]).shape;
  if (h == "rcyl") return invertor_shape("R", sub[0]).shape;
  if (h == "inv") return at_arg(0, [&] { return invertor_shape(e.args[0].name, sub[0]).shape; });
  if (h == "unit") return unit_shape(sub[0]).shape;
  if (h == "merger") return merger(sub[0]);
  if (h == "boundary") {
    return at_arg(1, [&] {
      const int n = static_cast<int>(e.args[1].value);
      if (n > sub[0].dim()) throw Error(ErrorKind::LevelOutOfRange, "boundary level exceeds the dimension");
      return boundary(sub[0], n, e.args[2].sign).source;
    });
  }
  if (h == "horn") {
    return at_arg(1, [&] {
      auto hn = atomic_horn(sub[0], e.args[1].name);
      return restrict_molecule(sub[0], hn.carrier,
                               theorem_certificate("horn", {sub[0].certificate()}, {{"x", e.args[1].name}}));
    });
  }
  if (h == "lunitor" || h == "runitor") {
    const Side side = h == "lunitor" ? Side::Left : Side::Right;
    return at_arg(1, [&] { return unitor_shape(sub[0], id_set(sub[0], e.args[1]), side).shape; });
  }
  throw Error(ErrorKind::BadInput, "unknown constructor " + h);
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int:
      return std::to_string(e.value);
    case Expr::Kind::Sign:
      return std::string(1, sign_char(e.sign));
    case Expr::Kind::Str:
      return quote(e.name);
    case Expr::Kind::List:
    case Expr::Kind::Call: {
      if (e.kind == Expr::Kind::Call && e.args.empty()) return e.name;
      std::string out = e.kind == Expr::Kind::List ? "[" : e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print(e.args[i]);
      return out + (e.kind == Expr::Kind::List ? "]" : ")");
    }
  }
  return {};
}

Molecule eval(const Expr& e) {
  if (e.kind != Expr::Kind::Call) throw Error(ErrorKind::BadInput, "only constructor calls evaluate to shapes");
  return eval_call(e);
}

Molecule eval(std::string_view text) { return eval(parse(text)); }

}  // namespace rdc
