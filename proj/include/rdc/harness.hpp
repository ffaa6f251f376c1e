#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdc/io.hpp"
#include "rdc/molecule.hpp"

namespace rdc {

struct CatalogBounds {
  int depth = 2;
  int max_dim = 3;
  std::size_t max_elems = 20;
};

struct CatalogEntry {
  std::string expr;  // evaluates to a shape identical to molecule
  Molecule molecule;
};

/// Closure of {point, arrow} under the shape constructors up to the bounds,
/// one representative per isomorphism class, in generation order.
struct Catalog {
  CatalogBounds bounds;
  std::vector<CatalogEntry> entries;

  std::vector<const CatalogEntry*> atoms(int min_dim, int max_dim) const;
};

Catalog enumerate(const CatalogBounds& bounds);

/// Per-lemma size limits that keep the exhaustive checks at desk scale.
struct LemmaLimits {
  std::size_t product_elems = 400;     // Gray products in the pairwise checks
  std::size_t recognise_elems = 80;    // ambients handed to the molecule recogniser
  std::size_t horn_elems = 20;         // atoms whose horns are marked exhaustively
  std::size_t generator_elems = 9;     // atoms carrying M′ generators in MARKED_HORN_PP
  std::size_t brute_force_elems = 12;  // posets compared against brute-force isomorphism
};

struct Failure {
  Json inputs;
  Json expected;
  Json got;
};

struct LemmaReport {
  std::string lemma;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // the first few, in instance order
  std::vector<std::string> warnings;
  Json stats = Json::object();  // coverage counters, summed over instances

  bool passed() const { return failure_count == 0; }
};

struct SuiteConfig {
  CatalogBounds bounds;
  LemmaLimits limits;
  std::vector<std::string> lemmas;  // empty runs every lemma
  unsigned jobs = 1;
  std::uint64_t seed = 0;  // only picks the extra mutation targets
};

/// Known lemma ids in suite order.
const std::vector<std::string>& lemma_ids();

/// Runs one checker over the catalog. Instances are independent and are
/// spread over jobs threads; results are merged by instance index, so the
/// report does not depend on jobs. Throws UnknownLemma.
LemmaReport check(std::string_view lemma, const Catalog& catalog, const LemmaLimits& limits = {}, unsigned jobs = 1,
                  std::uint64_t seed = 0);

std::vector<LemmaReport> run_suite(const SuiteConfig& config);
std::vector<LemmaReport> run_suite(const SuiteConfig& config, const Catalog& catalog);

Json to_json(const LemmaReport& r);
Json suite_json(const SuiteConfig& config, const std::vector<LemmaReport>& reports);

/// The GRAY_BOUNDARY comparator on one pair: the union formula against the
/// boundary rule, for every n and sign. A product given here (say, a mutated
/// copy of U⊗V with the same ids) replaces U⊗V on the direct side. checks,
/// when given, is incremented once per (n, sign).
std::vector<Failure> gray_boundary_failures(const CatalogEntry& u, const CatalogEntry& v, const Poset* product = nullptr,
                                            std::size_t* checks = nullptr);

/// Reverses the orientation of one element; ids and indices are unchanged.
Poset flip_orientation(const Poset& p, Index x);

}  // namespace rdc
