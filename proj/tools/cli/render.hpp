#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>
#include "pblring/catalog.hpp"
#include "pblring/classify.hpp"
#include "pblring/decomposition.hpp"

namespace pblring::cli {

using nlohmann::json;

// Machine-readable reports. Every document carries a "schema" field; keys are
// sorted and no value depends on timing, so output is byte-stable.
json check_json(const IdealLattice& lattice, const ClassificationReport& report);
json ideals_json(const IdealLattice& lattice);
json algebra_json(const IdealLattice& lattice);
json decompose_json(const IdealLattice& lattice, const DecompositionResult& result);
json props_json(const CatalogMatrix& matrix);
json search_json(std::string_view id, std::size_t corpus_size, const std::optional<Counterexample>& hit);

std::string check_text(const IdealLattice& lattice, const ClassificationReport& report);
std::string ideals_text(const IdealLattice& lattice);
std::string algebra_text(const IdealLattice& lattice);
std::string decompose_text(const IdealLattice& lattice, const DecompositionResult& result);
std::string props_text(const CatalogMatrix& matrix, bool verbose);
std::string search_text(std::string_view id, std::size_t corpus_size, const std::optional<Counterexample>& hit);

/// Hasse diagram of inclusion; nodes are labelled with membership sets.
std::string ideals_dot(const IdealLattice& lattice);

/// Serialisation used by every JSON-emitting command.
std::string dump(const json& doc);

}  // namespace pblring::cli
