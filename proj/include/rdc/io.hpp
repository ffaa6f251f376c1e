#pragma once

#include <string>

#include "json.hpp"
#include "rdc/marked.hpp"
#include "rdc/molecule.hpp"

namespace rdc {

using Json = nlohmann::json;

/// {"elements":[{"id","dim"}...],"faces":{id:{"-":[...],"+":[...]}}}
Json to_json(const Poset& p);
Json to_json(const Certificate& c);
/// Poset JSON plus "certificate".
Json to_json(const Molecule& m);
/// Shape JSON plus "marked".
Json to_json(const MarkedRdc& m);
/// {"source","target","map":{src:dst},"entire"}
Json to_json(const MarkedInclusion& i);

/// Malformed documents throw BadInput; poset invariants throw as in build.
Poset poset_from_json(const Json& j);
CertPtr certificate_from_json(const Json& j);
/// Without a "certificate" member the shape is certified by recognition,
/// which throws RecognitionFailed when it is not a molecule.
Molecule molecule_from_json(const Json& j);
MarkedRdc marked_from_json(const Json& j);

enum class Format { Json, Dot };

/// Deterministic rendering; DOT has one node per element labelled id:dim and
/// one edge per face, blue for inputs and red for outputs.
std::string render(const Molecule& m, Format f);
std::string to_dot(const Poset& p);

}  // namespace rdc
