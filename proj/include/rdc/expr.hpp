#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdc/molecule.hpp"

namespace rdc {

/// Expression syntax tree. A Call has a constructor name and arguments;
/// the other kinds are literal arguments.
struct Expr {
  enum class Kind { Call, Int, Sign, Str, List };

  Kind kind = Kind::Call;
  std::string name;  // constructor of a Call, contents of a Str
  long value = 0;
  rdc::Sign sign = rdc::Sign::Minus;
  std::vector<Expr> args;  // arguments of a Call, items of a List
  int line = 1;
  int column = 1;

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

/// Parses one expression. Arity and argument kinds are checked here, so a
/// well-parsed tree only fails evaluation on domain errors. Throws
/// SyntaxError with the 1-based line and column of the offending token.
Expr parse(std::string_view text);

/// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

/// Evaluates to a shape with its certificate. Domain errors are rethrown
/// with the expression path of the failing argument, e.g. "atom.arg2".
Molecule eval(const Expr& e);
Molecule eval(std::string_view text);

}  // namespace rdc
