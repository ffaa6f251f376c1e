#include "rdc/error.hpp"

namespace rdc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DanglingFace: return "DanglingFace";
    case ErrorKind::BadGrading: return "BadGrading";
    case ErrorKind::EmptySide: return "EmptySide";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::NotRewritable: return "NotRewritable";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::NotRound: return "NotRound";
    case ErrorKind::ZeroDimensional: return "ZeroDimensional";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::KNotClosed: return "KNotClosed";
    case ErrorKind::BadCollapseSet: return "BadCollapseSet";
    case ErrorKind::NotEntire: return "NotEntire";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::NotAnAtom: return "NotAnAtom";
    case ErrorKind::ClauseViolation: return "ClauseViolation";
    case ErrorKind::NotAContext: return "NotAContext";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::RecognitionFailed: return "RecognitionFailed";
    case ErrorKind::UnknownLemma: return "UnknownLemma";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(detail) {}

Error Error::with_path(std::string path) const {
  Error e = *this;
  e.path_ = std::move(path);
  return e;
}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace rdc
