#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pblring/corpus.hpp"

namespace pblring {

enum class Outcome { Pass, Fail, Vacuous, SkippedTooLarge };
enum class Tag { Theorem, Informational, Probe };

const char* to_string(Outcome o);
const char* to_string(Tag t);

struct PropertyInfo {
  std::string id;
  Tag tag = Tag::Theorem;
  std::string hypothesis;  // rings outside it are vacuous
  std::string statement;
};

/// Theorem and informational properties, in statement order.
const std::vector<PropertyInfo>& catalog_properties();
/// Non-theorem implications searched by find_counterexample.
const std::vector<PropertyInfo>& probe_properties();
const PropertyInfo* find_property(std::string_view id);

struct Cell {
  Outcome outcome = Outcome::Vacuous;
  /// Ideal indices (canonical order of the ring's lattice) or elements; detail says which.
  std::vector<std::size_t> witness;
  std::string detail;
};

struct PropertyRecord {
  PropertyInfo info;
  std::vector<Cell> cells;  // one per corpus ring
};

struct CatalogOptions {
  std::vector<std::string> only;  // empty: every catalog property
  double budget_seconds = 10.0;   // per ring
  unsigned workers = 1;
};

struct CatalogMatrix {
  std::vector<std::string> rings;
  std::vector<std::size_t> orders;
  std::vector<PropertyRecord> properties;

  std::size_t count(Outcome o, std::optional<Tag> tag = std::nullopt) const;
  std::size_t theorem_failures() const { return count(Outcome::Fail, Tag::Theorem); }
};

/// Throws std::invalid_argument on an unknown id in options.only.
CatalogMatrix run_catalog(const std::vector<CorpusEntry>& corpus, const CatalogOptions& options = {});

struct Counterexample {
  std::string ring;
  std::size_t order = 0;
  Cell cell;
};

/// First corpus ring on which the property fails, scanning in corpus order.
std::optional<Counterexample> find_counterexample(std::string_view id,
                                                  const std::vector<CorpusEntry>& corpus,
                                                  double budget_seconds = 10.0);

}  // namespace pblring
