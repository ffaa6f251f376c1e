#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdc {

enum class ErrorKind {
  DanglingFace,
  BadGrading,
  EmptySide,
  Overlap,
  DuplicateId,
  UnknownElement,
  BoundaryMismatch,
  NotRewritable,
  LevelOutOfRange,
  NotRound,
  ZeroDimensional,
  DimMismatch,
  KNotClosed,
  BadCollapseSet,
  NotEntire,
  NotAFacet,
  NotAnAtom,
  ClauseViolation,
  NotAContext,
  IdentityFailed,
  RecognitionFailed,
  UnknownLemma,
  BadInput,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }
  /// Expression path where the error arose, e.g. "atom.arg2". Empty outside the evaluator.
  const std::string& path() const { return path_; }

  Error with_path(std::string path) const;

 private:
  ErrorKind kind_;
  std::string detail_;
  std::string path_;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rdc
