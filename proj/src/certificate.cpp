#include "rdc/certificate.hpp"

namespace rdc {

bool operator==(const Certificate& a, const Certificate& b) {
  if (a.kind != b.kind || a.rule != b.rule || a.params != b.params || a.inputs.size() != b.inputs.size()) return false;
  for (std::size_t i = 0; i < a.inputs.size(); ++i)
    if (!(*a.inputs[i] == *b.inputs[i])) return false;
  return true;
}

CertPtr point_certificate() {
  static const CertPtr point = std::make_shared<const Certificate>();
  return point;
}

CertPtr paste_certificate(int k, CertPtr left, CertPtr right) {
  auto c = std::make_shared<Certificate>();
  c->kind = Certificate::Kind::Paste;
  c->params["k"] = std::to_string(k);
  c->inputs = {std::move(left), std::move(right)};
  return c;
}

CertPtr atom_certificate(CertPtr input, CertPtr output) {
  auto c = std::make_shared<Certificate>();
  c->kind = Certificate::Kind::Atom;
  c->inputs = {std::move(input), std::move(output)};
  return c;
}

CertPtr theorem_certificate(std::string rule, std::vector<CertPtr> inputs, std::map<std::string, std::string> params) {
  auto c = std::make_shared<Certificate>();
  c->kind = Certificate::Kind::Theorem;
  c->rule = std::move(rule);
  c->params = std::move(params);
  c->inputs = std::move(inputs);
  return c;
}

std::string to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::Point: return "point";
    case Certificate::Kind::Paste: return "paste";
    case Certificate::Kind::Atom: return "atom";
    case Certificate::Kind::Theorem: return "theorem";
  }
  return "point";
}

}  // namespace rdc
