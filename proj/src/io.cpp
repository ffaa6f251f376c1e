#include "rdc/io.hpp"

#include <sstream>

namespace rdc {

namespace {

Error malformed(const std::string& what) { return Error(ErrorKind::BadInput, "malformed JSON: " + what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw malformed(where + " is not a list");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw malformed(where + " holds a non-string");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Certificate::Kind kind_of(const std::string& s) {
  for (auto k : {Certificate::Kind::Point, Certificate::Kind::Paste, Certificate::Kind::Atom, Certificate::Kind::Theorem})
    if (to_string(k) == s) return k;
  throw malformed("unknown certificate kind " + s);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Poset& p) {
  Json elements = Json::array();
  Json faces = Json::object();
  for (Index i = 0; i < p.size(); ++i) {
    elements.push_back({{"id", p.id(i)}, {"dim", p.dim(i)}});
    if (p.dim(i) == 0) continue;
    Json f = Json::object();
    for (Sign s : kSigns) {
      Json side = Json::array();
      for (Index x : p.faces(i, s)) side.push_back(p.id(x));
      f[std::string(1, sign_char(s))] = std::move(side);
    }
    faces[p.id(i)] = std::move(f);
  }
  return {{"elements", std::move(elements)}, {"faces", std::move(faces)}};
}

Json to_json(const Certificate& c) {
  Json j = {{"kind", to_string(c.kind)}};
  if (!c.rule.empty()) j["rule"] = c.rule;
  if (!c.params.empty()) j["params"] = c.params;
  if (!c.inputs.empty()) {
    Json in = Json::array();
    for (const auto& x : c.inputs) in.push_back(to_json(*x));
    j["inputs"] = std::move(in);
  }
  return j;
}

Json to_json(const Molecule& m) {
  Json j = to_json(m.poset());
  if (m.certificate()) j["certificate"] = to_json(*m.certificate());
  return j;
}

Json to_json(const MarkedRdc& m) {
  Json j = to_json(m.shape());
  j["marked"] = m.shape().ids_of(m.marked);
  return j;
}

Json to_json(const MarkedInclusion& i) {
  Json map = Json::object();
  for (Index k = 0; k < i.map.size(); ++k) map[i.source.shape().id(k)] = i.target.shape().id(i.map[k]);
  return {{"source", to_json(i.source)}, {"target", to_json(i.target)}, {"map", std::move(map)}, {"entire", i.entire()}};
}

Poset poset_from_json(const Json& j) {
  const Json& elements = member(j, "elements");
  if (!elements.is_array()) throw malformed("\"elements\" is not a list");
  const Json empty = Json::object();
  const Json& faces = j.contains("faces") ? j.at("faces") : empty;
  if (!faces.is_object()) throw malformed("\"faces\" is not an object");
  std::vector<ElementSpec> specs;
  for (const auto& e : elements) {
    const Json& id = member(e, "id");
    const Json& dim = member(e, "dim");
    if (!id.is_string() || !dim.is_number_integer() || dim.get<long>() < 0) throw malformed("element needs a string id and a natural dim");
    ElementSpec spec{id.get<std::string>(), dim.get<int>(), {}, {}};
    if (faces.contains(spec.id)) {
      const Json& f = faces.at(spec.id);
      if (f.contains("-")) spec.input = string_list(f.at("-"), "faces of " + spec.id);
      if (f.contains("+")) spec.output = string_list(f.at("+"), "faces of " + spec.id);
    }
    specs.push_back(std::move(spec));
  }
  for (const auto& [id, _] : faces.items()) {
    bool known = false;
    for (const auto& s : specs) known = known || s.id == id;
    if (!known) throw Error(ErrorKind::UnknownElement, "faces given for unknown element " + id);
  }
  return Poset::build(std::move(specs));
}

CertPtr certificate_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) throw malformed("certificate kind is not a string");
  auto c = std::make_shared<Certificate>();
  c->kind = kind_of(kind.get<std::string>());
  if (j.contains("rule")) {
    if (!j.at("rule").is_string()) throw malformed("certificate rule is not a string");
    c->rule = j.at("rule").get<std::string>();
  }
  if (j.contains("params")) {
    const Json& params = j.at("params");
    if (!params.is_object()) throw malformed("certificate params is not an object");
    for (const auto& [key, value] : params.items()) {
      if (!value.is_string()) throw malformed("certificate param " + key + " is not a string");
      c->params[key] = value.get<std::string>();
    }
  }
  if (j.contains("inputs")) {
    if (!j.at("inputs").is_array()) throw malformed("certificate inputs is not a list");
    for (const auto& x : j.at("inputs")) c->inputs.push_back(certificate_from_json(x));
  }
  if (c->kind == Certificate::Kind::Point && c->rule.empty() && c->params.empty() && c->inputs.empty())
    return point_certificate();
  return c;
}

Molecule molecule_from_json(const Json& j) {
  Poset p = poset_from_json(j);
  if (j.contains("certificate")) return Molecule(std::move(p), certificate_from_json(j.at("certificate")));
  Recogniser r(p);
  if (!r.is_molecule(p.all())) throw Error(ErrorKind::RecognitionFailed, "shape is not a molecule");
  CertPtr cert = r.certify(p.all());
  return Molecule(std::move(p), std::move(cert));
}

MarkedRdc marked_from_json(const Json& j) {
  auto p = std::make_shared<const Poset>(poset_from_json(j));
  ElementSet marked = p->none();
  if (j.contains("marked"))
    for (const auto& id : string_list(j.at("marked"), "\"marked\"")) marked.insert(p->at(id));
  return MarkedRdc(std::move(p), std::move(marked));
}

std::string to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph rdc {\n  rankdir=BT;\n";
  for (Index i = 0; i < p.size(); ++i)
    out << "  " << quoted(p.id(i)) << " [label=" << quoted(p.id(i) + ":" + std::to_string(p.dim(i))) << "];\n";
  for (Index i = 0; i < p.size(); ++i)
    for (Sign s : kSigns)
      for (Index f : p.faces(i, s))
        out << "  " << quoted(p.id(f)) << " -> " << quoted(p.id(i))
            << (s == Sign::Minus ? " [color=blue];\n" : " [color=red];\n");
  out << "}\n";
  return out.str();
}

std::string render(const Molecule& m, Format f) {
  if (f == Format::Dot) return to_dot(m.poset());
  return to_json(m).dump(2) + "\n";
}

}  // namespace rdc
