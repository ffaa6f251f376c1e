#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rdc/expr.hpp"
#include "rdc/harness.hpp"
#include "rdc/horn.hpp"
#include "rdc/io.hpp"

using namespace rdc;

namespace {

constexpr int kDomainError = 1;
constexpr int kSyntaxError = 2;
constexpr int kVerificationFailed = 3;

/// An expression, or @file holding either JSON or expression text.
Molecule load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return eval(arg);
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorKind::BadInput, "cannot read " + arg.substr(1));
  std::stringstream text;
  text << in.rdbuf();
  const std::string s = text.str();
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '{') {
    Json j;
    try {
      j = Json::parse(s);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::BadInput, std::string("malformed JSON: ") + e.what());
    }
    return molecule_from_json(j);
  }
  return eval(s);
}

Sign parse_sign(const std::string& s) {
  if (s == "-" || s == "minus") return Sign::Minus;
  if (s == "+" || s == "plus") return Sign::Plus;
  throw SyntaxError(1, 1, "expected a sign, + or -");
}

Json ids(const Poset& p, const ElementSet& s) { return p.ids_of(s); }

GeneratorKind generator_kind(const std::string& s) {
  for (auto k : {GeneratorKind::BoundaryMinimal, GeneratorKind::MarkTop, GeneratorKind::BoundaryMarked})
    if (to_string(k) == s) return k;
  throw SyntaxError(1, 1, "unknown generator kind " + s + " (expected minbd, mark or markbd)");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_check(const std::string& arg) {
  Molecule m = load(arg);
  const Poset& p = m.poset();
  Recogniser r(p);
  const bool molecule = r.is_molecule(p.all());
  const std::size_t autos = all_isos(p, p, 2).size();
  print({{"size", m.size()},
         {"dim", m.dim()},
         {"molecule", molecule},
         {"round", m.is_round()},
         {"atom", m.is_atom()},
         {"rigid", autos == 1}});
  return molecule && autos == 1 ? 0 : kVerificationFailed;
}

int cmd_iso(const std::string& a, const std::string& b) {
  Molecule x = load(a);
  Molecule y = load(b);
  auto f = find_iso(x.poset(), y.poset());
  Json j{{"isomorphic", f.has_value()}};
  if (f) {
    Json map = Json::object();
    for (Index i = 0; i < f->size(); ++i) map[x.poset().id(i)] = y.poset().id((*f)[i]);
    j["map"] = std::move(map);
  }
  print(j);
  return f ? 0 : kVerificationFailed;
}

int cmd_horn(const std::string& arg, const std::string& facet, const std::vector<std::string>& marked, bool mark) {
  Molecule u = load(arg);
  const Poset& p = u.poset();
  AtomicHorn h = atomic_horn(u, facet);
  Json j{{"facet", p.id(h.facet)}, {"sign", std::string(1, sign_char(h.sign))}, {"carrier", ids(p, h.carrier)}};
  if (mark) {
    std::vector<std::string> given;
    for (const auto& id : marked)
      if (!id.empty()) given.push_back(id);
    MarkedHorn mh = marked_horn(h, p.set_of(given));
    j["marking"] = ids(p, mh.marking);
    j["enlarged"] = ids(p, mh.enlarged);
    Json steps = Json::array();
    for (const auto& st : mh.derivation)
      steps.push_back({{"piece", ids(p, st.piece)}, {"k", st.k}, {"side", st.side == Side::Left ? "left" : "right"}});
    j["derivation"] = std::move(steps);
  }
  print(j);
  return 0;
}

int cmd_pp(const std::string& k1, const std::string& e1, const std::string& k2, const std::string& e2) {
  const auto i = make_generator(generator_kind(k1), load(e1)).inclusion;
  const auto j = make_generator(generator_kind(k2), load(e2)).inclusion;
  const auto pp = pushout_product(i, j);
  Json out = to_json(pp);
  if (pp.entire()) out["residual"] = ids(pp.target.shape(), residual(pp));
  print(out);
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> lemmas;
  int depth = 2;
  int max_dim = 3;
  std::size_t max_elems = 20;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_verify(const VerifyOptions& o) {
  for (const auto& l : o.lemmas)
    if (std::find(lemma_ids().begin(), lemma_ids().end(), l) == lemma_ids().end())
      throw Error(ErrorKind::UnknownLemma, l);
  SuiteConfig cfg;
  cfg.bounds = {o.depth, o.max_dim, o.max_elems};
  cfg.lemmas = o.lemmas;
  cfg.jobs = o.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : o.jobs;
  cfg.seed = o.seed;
  const auto reports = run_suite(cfg);
  const Json j = suite_json(cfg, reports);
  if (o.output.empty()) {
    print(j);
  } else {
    std::ofstream out(o.output);
    out << j.dump(2) << "\n";
    if (!out) throw Error(ErrorKind::BadInput, "cannot write " + o.output);
  }
  bool ok = true;
  for (const auto& r : reports) {
    std::cerr << r.lemma << ": " << (r.passed() ? "pass" : "FAIL") << ", " << r.instances << " instances, "
              << r.failure_count << " failures\n";
    ok = ok && r.passed();
  }
  return ok ? 0 : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular directed complexes: build, inspect and verify shapes"};
  app.require_subcommand(1);
  int status = 0;

  std::string expr, expr2, kind1, kind2, facet, format = "json", sign_text;
  int level = 0;
  std::vector<std::string> marked;

  auto* build = app.add_subcommand("build", "Evaluate an expression and print its JSON");
  build->add_option("expr", expr, "expression, or @file")->required();
  build->callback([&] { std::cout << render(load(expr), Format::Json); });

  auto* bd = app.add_subcommand("boundary", "Print the n-boundary of a shape");
  bd->add_option("expr", expr)->required();
  bd->add_option("n", level)->required()->check(CLI::NonNegativeNumber);
  bd->add_option("sign", sign_text, "+ or -")->required();
  bd->callback([&] {
    const Sign s = parse_sign(sign_text);
    Molecule m = load(expr);
    if (level > m.dim()) throw Error(ErrorKind::LevelOutOfRange, "n exceeds the dimension");
    std::cout << render(boundary(m, level, s).source, Format::Json);
  });

  auto* chk = app.add_subcommand("check", "Validate a shape: molecule, round, atom, rigid");
  chk->add_option("expr", expr)->required();
  chk->callback([&] { status = cmd_check(expr); });

  auto* iso = app.add_subcommand("iso", "Search an isomorphism between two shapes");
  iso->add_option("expr1", expr)->required();
  iso->add_option("expr2", expr2)->required();
  iso->callback([&] { status = cmd_iso(expr, expr2); });

  auto* horn = app.add_subcommand("horn", "Atomic horn at a facet, optionally marked");
  horn->add_option("expr", expr)->required();
  horn->add_option("facet", facet)->required();
  auto* mark_opt = horn->add_option("--marked", marked, "marked ids of the horn, space separated")->expected(0, -1);
  horn->callback([&] { status = cmd_horn(expr, facet, marked, mark_opt->count() > 0); });

  auto* pp = app.add_subcommand("pp", "Pushout-product of two generators (minbd, mark, markbd)");
  pp->add_option("kind1", kind1)->required();
  pp->add_option("expr1", expr)->required();
  pp->add_option("kind2", kind2)->required();
  pp->add_option("expr2", expr2)->required();
  pp->callback([&] { status = cmd_pp(kind1, expr, kind2, expr2); });

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the lemma suite over the shape catalog");
  verify->add_option("--lemma", vo.lemmas, "lemma ids, all by default")->delimiter(',');
  verify->add_option("--depth", vo.depth)->check(CLI::PositiveNumber);
  verify->add_option("--max-dim", vo.max_dim)->check(CLI::PositiveNumber);
  verify->add_option("--max-elems", vo.max_elems)->check(CLI::PositiveNumber);
  verify->add_option("--jobs", vo.jobs, "threads, 0 for all cores");
  verify->add_option("--seed", vo.seed, "picks the extra mutation targets");
  verify->add_option("--output", vo.output, "write the report here instead of stdout");
  verify->callback([&] { status = cmd_verify(vo); });

  auto* rnd = app.add_subcommand("render", "Render a shape as JSON or DOT");
  rnd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  rnd->add_option("expr", expr)->required();
  rnd->callback([&] { std::cout << render(load(expr), format == "dot" ? Format::Dot : Format::Json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kSyntaxError;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSyntaxError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.path().empty()) std::cerr << " (at " << e.path() << ")";
    std::cerr << "\n";
    return kDomainError;
  }
  return status;
}
