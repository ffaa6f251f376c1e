#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rdc {

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

/// Construction witness of a molecule.
struct Certificate {
  enum class Kind { Point, Paste, Atom, Theorem };

  Kind kind = Kind::Point;
  /// Theorem rule tag: "gray", "dual", "cylinder", "boundary", ...
  std::string rule;
  std::map<std::string, std::string> params;
  std::vector<CertPtr> inputs;

  friend bool operator==(const Certificate& a, const Certificate& b);
};

CertPtr point_certificate();
CertPtr paste_certificate(int k, CertPtr left, CertPtr right);
CertPtr atom_certificate(CertPtr input, CertPtr output);
CertPtr theorem_certificate(std::string rule, std::vector<CertPtr> inputs,
                            std::map<std::string, std::string> params = {});

std::string to_string(Certificate::Kind kind);

}  // namespace rdc
