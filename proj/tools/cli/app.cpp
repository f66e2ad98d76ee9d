#include "app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>
#include <thread>

#include "pblring/errors.hpp"
#include "render.hpp"
#include "spec_parser.hpp"

namespace pblring::cli {

namespace {

constexpr std::size_t kDefaultMaxOrder = 256;

struct Options {
  std::string spec;
  std::string format = "text";
  bool dot = false;
  std::size_t max_order = kDefaultMaxOrder;
  std::string corpus = "default";
  bool expand = false;
  std::vector<std::string> only;
  double budget = 10.0;
  unsigned jobs = 1;
  bool verbose = false;
  std::string property;
};

std::shared_ptr<const IdealLattice> lattice_for(const Options& o) {
  const auto spec = parse_spec(o.spec);
  auto ring = share(build(spec, o.max_order));
  return std::make_shared<const IdealLattice>(IdealLattice::compute(std::move(ring)));
}

// A corpus name, or a file with one spec per line ('#' starts a comment).
std::vector<CorpusEntry> load_corpus(const Options& o) {
  if (o.corpus == "default" || o.corpus == "small" || o.corpus == "none") return named_corpus(o.corpus);
  std::ifstream in(o.corpus);
  if (!in) throw ConstructionError("cannot read corpus file '" + o.corpus + "'");
  std::vector<RingSpec> specs;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    specs.push_back(parse_spec(line));
  }
  return expand_corpus(specs, o.expand);
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format,-f", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_spec(CLI::App* cmd, Options& o) {
  cmd->add_option("spec", o.spec, "ring spec, e.g. \"product(zmod(2),matrix(zmod(2),2))\"")->required();
  cmd->add_option("--max-order", o.max_order, "largest ring order accepted")
      ->check(CLI::Range(std::size_t{1}, kMaxRingOrder));
}

void add_corpus(CLI::App* cmd, Options& o) {
  cmd->add_option("--corpus", o.corpus, "default, small, none, or a file of specs");
  cmd->add_flag("--expand", o.expand, "add all quotients of the rings in a corpus file");
  cmd->add_option("--budget", o.budget, "seconds per ring before remaining properties are skipped")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"pblring: ideal lattices, residuated structure and ring classification for finite rings"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "classify a ring");
  add_spec(check, o);
  add_format(check, o, {"text", "json"});

  auto* ideals = app.add_subcommand("ideals", "list the ideal lattice");
  add_spec(ideals, o);
  add_format(ideals, o, {"text", "json", "dot"});
  ideals->add_flag("--dot", o.dot, "same as --format dot");

  auto* algebra = app.add_subcommand("algebra", "axiom reports for the ideal algebra A(R)");
  add_spec(algebra, o);
  add_format(algebra, o, {"text", "json"});

  auto* decompose = app.add_subcommand("decompose", "subdirect decomposition with factor checks");
  add_spec(decompose, o);
  add_format(decompose, o, {"text", "json"});

  auto* props = app.add_subcommand("props", "run the property catalog over a corpus");
  add_corpus(props, o);
  add_format(props, o, {"text", "json"});
  props->add_option("--only", o.only, "property ids to run")->delimiter(',');
  props->add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  props->add_flag("--verbose,-v", o.verbose, "list every non-passing cell");

  auto* search = app.add_subcommand("search", "find the first corpus ring where a property fails");
  search->add_option("property", o.property, "property or probe id")->required();
  add_corpus(search, o);
  add_format(search, o, {"text", "json"});

  auto* list = app.add_subcommand("list", "list property ids and probes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const bool json_out = o.format == "json";
    if (check->parsed()) {
      const auto L = lattice_for(o);
      const auto rep = classify(*L);
      out << (json_out ? dump(check_json(*L, rep)) : check_text(*L, rep));
    } else if (ideals->parsed()) {
      const auto L = lattice_for(o);
      if (o.dot || o.format == "dot") {
        out << ideals_dot(*L);
      } else {
        out << (json_out ? dump(ideals_json(*L)) : ideals_text(*L));
      }
    } else if (algebra->parsed()) {
      const auto L = lattice_for(o);
      out << (json_out ? dump(algebra_json(*L)) : algebra_text(*L));
    } else if (decompose->parsed()) {
      const auto L = lattice_for(o);
      const auto d = subdirect_decomposition(*L);
      out << (json_out ? dump(decompose_json(*L, d)) : decompose_text(*L, d));
    } else if (props->parsed()) {
      for (const auto& id : o.only) {
        if (!find_property(id)) {
          err << "error: unknown property id '" << id << "'\n";
          return kExitParse;
        }
      }
      const auto corpus = load_corpus(o);
      const auto m = run_catalog(corpus, {o.only, o.budget, o.jobs});
      out << (json_out ? dump(props_json(m)) : props_text(m, o.verbose));
      if (m.theorem_failures() > 0) {
        err << "error: " << m.theorem_failures() << " theorem-tagged property failures\n";
        return kExitInvariant;
      }
    } else if (search->parsed()) {
      if (!find_property(o.property)) {
        err << "error: unknown property id '" << o.property << "'\n";
        return kExitParse;
      }
      const auto corpus = load_corpus(o);
      const auto hit = find_counterexample(o.property, corpus, o.budget);
      out << (json_out ? dump(search_json(o.property, corpus.size(), hit))
                       : search_text(o.property, corpus.size(), hit));
    } else if (list->parsed()) {
      for (const auto* group : {&catalog_properties(), &probe_properties()}) {
        for (const auto& p : *group) {
          out << p.id << "\t" << to_string(p.tag) << "\t" << p.hypothesis << " => " << p.statement << "\n";
        }
      }
    }
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kExitParse;
  } catch (const BoundsError& e) {
    err << "bounds error: " << e.what() << "\n";
    return kExitBounds;
  } catch (const ConstructionError& e) {
    err << "construction error: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace pblring::cli
