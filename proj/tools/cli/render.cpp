#include "render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pblring/algebra.hpp"

namespace pblring::cli {

namespace {

json members_json(const Ideal& ideal) { return ideal.members().elements(); }

std::string set_text(const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

template <class T>
std::string list_text(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string ideal_text(const IdealLattice& L, Index i) { return "I" + std::to_string(i) + "=" + set_text(L[i].members().elements()); }

std::string pad(std::string s, std::size_t width) {
  // Pads by code points so labels with non-ASCII symbols still line up.
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  if (cps < width) s.append(width - cps, ' ');
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

json axiom_json(const std::vector<AxiomReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back({{"axiom", r.name}, {"holds", r.holds}, {"witness", r.witness}});
  return arr;
}

std::string axiom_text(const char* title, const std::vector<AxiomReport>& reports) {
  std::ostringstream out;
  out << title << ": " << (all_hold(reports) ? "holds" : "fails") << "\n";
  for (const auto& r : reports) {
    out << "  " << pad(r.name, 22) << (r.holds ? "ok" : "FAIL");
    if (!r.holds) out << "  witness " << list_text(r.witness);
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json check_json(const IdealLattice& L, const ClassificationReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"name", e.name},
                       {"verdict", e.verdict},
                       {"witness_ideals", e.witness_ideals},
                       {"witness_elements", e.witness_elements},
                       {"notes", e.notes}});
  }
  json ideals = json::array();
  for (const auto& ideal : L.ideals()) ideals.push_back(members_json(ideal));
  return {{"schema", "pblring.check/1"}, {"ring", rep.ring},          {"order", rep.order},
          {"ideal_count", rep.ideal_count}, {"commutative", rep.commutative}, {"entries", entries},
          {"ideals", ideals}};
}

std::string check_text(const IdealLattice& L, const ClassificationReport& rep) {
  std::ostringstream out;
  out << "ring " << rep.ring << "\n"
      << "order " << rep.order << ", " << rep.ideal_count << " ideals, "
      << (rep.commutative ? "commutative" : "noncommutative") << "\n";
  for (const auto& e : rep.entries) {
    out << "  " << pad(e.name + ":", 27) << yes_no(e.verdict);
    if (!e.notes.empty()) out << "  (" << e.notes << ")";
    out << "\n";
    for (auto i : e.witness_ideals) out << "      " << ideal_text(L, i) << "\n";
    if (!e.witness_elements.empty()) out << "      elements " << set_text(e.witness_elements) << "\n";
  }
  return out.str();
}

json ideals_json(const IdealLattice& L) {
  json rows = json::array();
  const auto primes = prime_ideals(L);
  for (Index i = 0; i < L.size(); ++i) {
    const auto dense = is_dense(L[i]);
    const auto ann = is_annihilator_ideal(L, i);
    rows.push_back({{"index", i},
                    {"size", L[i].size()},
                    {"members", members_json(L[i])},
                    {"generators", std::vector<Element>(L[i].generators().begin(), L[i].generators().end())},
                    {"ann_star", L.ann_star(i)},
                    {"ann_minus", L.ann_minus(i)},
                    {"star_dense", dense.star},
                    {"minus_dense", dense.minus},
                    {"annihilator", ann.holds},
                    {"star_annihilator", ann.star_source.has_value()},
                    {"minus_annihilator", ann.minus_source.has_value()},
                    {"prime", std::find(primes.begin(), primes.end(), i) != primes.end()},
                    {"maximal", i != L.top() && is_maximal(L, i)}});
  }
  json edges = json::array();
  for (auto [a, b] : hasse_edges(L)) edges.push_back({a, b});
  return {{"schema", "pblring.ideals/1"}, {"ring", L.ring().provenance()}, {"order", L.ring().order()},
          {"ideals", rows},                 {"hasse", edges}};
}

std::string ideals_text(const IdealLattice& L) {
  std::ostringstream out;
  out << "ring " << L.ring().provenance() << ": " << L.size() << " ideals\n";
  out << "  idx  size  ann*  ann-  dense*  dense-  annihilator  prime  maximal  generators  members\n";
  const auto primes = prime_ideals(L);
  for (Index i = 0; i < L.size(); ++i) {
    const auto dense = is_dense(L[i]);
    const bool prime = std::find(primes.begin(), primes.end(), i) != primes.end();
    std::vector<Element> gens(L[i].generators().begin(), L[i].generators().end());
    out << "  " << pad(std::to_string(i), 5) << pad(std::to_string(L[i].size()), 6)
        << pad(std::to_string(L.ann_star(i)), 6) << pad(std::to_string(L.ann_minus(i)), 6)
        << pad(yes_no(dense.star), 8) << pad(yes_no(dense.minus), 8)
        << pad(yes_no(is_annihilator_ideal(L, i).holds), 13) << pad(yes_no(prime), 7)
        << pad(yes_no(i != L.top() && is_maximal(L, i)), 9) << pad(set_text(gens), 12)
        << set_text(L[i].members().elements()) << "\n";
  }
  return out.str();
}

std::string ideals_dot(const IdealLattice& L) {
  std::ostringstream out;
  out << "digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Index i = 0; i < L.size(); ++i) {
    out << "  I" << i << " [label=\"" << set_text(L[i].members().elements()) << "\"];\n";
  }
  for (auto [a, b] : hasse_edges(L)) out << "  I" << a << " -> I" << b << ";\n";
  out << "}\n";
  return out.str();
}

json algebra_json(const IdealLattice& L) {
  const auto A = ideal_algebra(L);
  const auto bl = check_bl(A);
  const auto parts = annihilator_parts(L);
  json doc = {{"schema", "pblring.algebra/1"},
              {"ring", L.ring().provenance()},
              {"size", A.size},
              {"pseudo_bl", axiom_json(check_pseudo_bl(A))},
              {"bl", axiom_json(bl)},
              {"pseudo_mv", axiom_json(check_pseudo_mv(A))},
              {"double_negation_fixed", double_negation_fixed(A)},
              {"an_star", parts.an_star},
              {"an_minus", parts.an_minus},
              {"d_star", parts.d_star},
              {"d_minus", parts.d_minus}};
  doc["mv_center"] = all_hold(bl) ? json(mv_center(A)) : json(nullptr);
  return doc;
}

std::string algebra_text(const IdealLattice& L) {
  const auto A = ideal_algebra(L);
  const auto bl = check_bl(A);
  const auto parts = annihilator_parts(L);
  std::ostringstream out;
  out << "A(R) for " << L.ring().provenance() << ": " << A.size << " elements (ideal indices)\n";
  out << axiom_text("pseudo BL-algebra", check_pseudo_bl(A));
  out << axiom_text("BL-algebra", bl);
  out << axiom_text("pseudo MV-algebra", check_pseudo_mv(A));
  out << "double negation fixed: " << list_text(double_negation_fixed(A)) << "\n";
  if (all_hold(bl)) out << "MV-center: " << list_text(mv_center(A)) << "\n";
  out << "AN*: " << list_text(parts.an_star) << "\nAN-: " << list_text(parts.an_minus) << "\n"
      << "D*:  " << list_text(parts.d_star) << "\nD-:  " << list_text(parts.d_minus) << "\n";
  return out.str();
}

json decompose_json(const IdealLattice& L, const DecompositionResult& d) {
  json kernels = json::array();
  for (const auto& k : d.kernels) {
    kernels.push_back({{"x", k.x}, {"kernel", k.kernel}, {"maximal_excluders", k.maximal_excluders}});
  }
  json factors = json::array();
  for (const auto& f : d.factors) {
    json checks = json::array();
    for (const auto& c : f.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"witness", c.witness}});
    factors.push_back({{"kernel", f.kernel},
                       {"kernel_members", members_json(L[f.kernel])},
                       {"elements", f.elements},
                       {"order", f.quotient->ring.order()},
                       {"ideal_count", f.lattice->size()},
                       {"subdirectly_irreducible", f.subdirectly_irreducible},
                       {"pseudo_bl", f.pseudo_bl},
                       {"checks", checks},
                       {"all_pass", f.all_checks_pass()}});
  }
  return {{"schema", "pblring.decompose/1"},
          {"ring", L.ring().provenance()},
          {"input_pseudo_bl", d.input_pseudo_bl},
          {"kernels", kernels},
          {"factors", factors},
          {"kernels_meet_to_zero", d.kernels_meet_to_zero},
          {"embedding_injective", d.embedding_injective}};
}

std::string decompose_text(const IdealLattice& L, const DecompositionResult& d) {
  std::ostringstream out;
  out << "subdirect decomposition of " << L.ring().provenance()
      << (d.input_pseudo_bl ? "" : "  [input is not a pseudo BL-ring]") << "\n";
  out << "kernels meet to {0}: " << yes_no(d.kernels_meet_to_zero)
      << ", embedding injective: " << yes_no(d.embedding_injective) << "\n";
  for (const auto& f : d.factors) {
    out << "factor R/" << ideal_text(L, f.kernel) << "  order " << f.quotient->ring.order() << ", "
        << f.lattice->size() << " ideals, for x in " << set_text(f.elements) << "\n";
    out << "  subdirectly irreducible: " << yes_no(f.subdirectly_irreducible)
        << ", pseudo BL-ring: " << yes_no(f.pseudo_bl) << "\n";
    for (const auto& c : f.checks) {
      out << "  " << pad(c.name, 26) << (c.holds ? "ok" : "FAIL");
      if (!c.holds && !c.witness.empty()) out << "  witness " << list_text(c.witness);
      out << "\n";
    }
  }
  for (const auto& k : d.kernels) {
    if (k.maximal_excluders.size() > 1) {
      out << "x=" << k.x << ": maximal excluders " << list_text(k.maximal_excluders) << ", chose " << k.kernel
          << "\n";
    }
  }
  return out.str();
}

json props_json(const CatalogMatrix& m) {
  json rings = json::array();
  for (std::size_t i = 0; i < m.rings.size(); ++i) rings.push_back({{"label", m.rings[i]}, {"order", m.orders[i]}});
  json props = json::array();
  for (const auto& p : m.properties) {
    json cells = json::array();
    std::map<std::string, std::size_t> summary = {{"pass", 0}, {"fail", 0}, {"vacuous", 0}, {"skipped-too-large", 0}};
    for (const auto& c : p.cells) {
      ++summary[to_string(c.outcome)];
      json cell = {{"outcome", to_string(c.outcome)}};
      if (!c.witness.empty()) cell["witness"] = c.witness;
      if (!c.detail.empty()) cell["detail"] = c.detail;
      cells.push_back(std::move(cell));
    }
    props.push_back({{"id", p.info.id},
                     {"tag", to_string(p.info.tag)},
                     {"hypothesis", p.info.hypothesis},
                     {"statement", p.info.statement},
                     {"summary", summary},
                     {"cells", cells}});
  }
  return {{"schema", "pblring.props/1"}, {"rings", rings}, {"properties", props},
          {"theorem_failures", m.theorem_failures()}};
}

std::string props_text(const CatalogMatrix& m, bool verbose) {
  std::ostringstream out;
  out << m.rings.size() << " rings, " << m.properties.size() << " properties\n";
  out << "  id        tag            pass  fail  vacuous  skipped\n";
  for (const auto& p : m.properties) {
    std::size_t n[4] = {0, 0, 0, 0};
    for (const auto& c : p.cells) ++n[static_cast<int>(c.outcome)];
    out << "  " << pad(p.info.id, 10) << pad(to_string(p.info.tag), 15) << pad(std::to_string(n[0]), 6)
        << pad(std::to_string(n[1]), 6) << pad(std::to_string(n[2]), 9) << n[3] << "\n";
    for (std::size_t r = 0; r < p.cells.size(); ++r) {
      const auto& c = p.cells[r];
      if (c.outcome == Outcome::Fail || (verbose && c.outcome != Outcome::Pass)) {
        out << "      " << to_string(c.outcome) << " on " << m.rings[r];
        if (!c.witness.empty()) out << "  witness " << list_text(c.witness);
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
      }
    }
  }
  out << "theorem failures: " << m.theorem_failures() << "\n";
  return out.str();
}

json search_json(std::string_view id, std::size_t corpus_size, const std::optional<Counterexample>& hit) {
  json doc = {{"schema", "pblring.search/1"}, {"property", std::string(id)}, {"rings_searched", corpus_size}};
  if (hit) {
    json cell = {{"outcome", to_string(hit->cell.outcome)}, {"witness", hit->cell.witness}, {"detail", hit->cell.detail}};
    doc["counterexample"] = {{"ring", hit->ring}, {"order", hit->order}, {"cell", cell}};
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc;
}

std::string search_text(std::string_view id, std::size_t corpus_size, const std::optional<Counterexample>& hit) {
  std::ostringstream out;
  out << id << ": searched " << corpus_size << " rings\n";
  if (!hit) {
    out << "no counterexample\n";
  } else {
    out << "counterexample " << hit->ring << " (order " << hit->order << ")\n";
    if (!hit->cell.witness.empty()) out << "  witness " << list_text(hit->cell.witness) << "\n";
    if (!hit->cell.detail.empty()) out << "  " << hit->cell.detail << "\n";
  }
  return out.str();
}

}  // namespace pblring::cli
