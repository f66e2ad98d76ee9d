#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pblring/ring_spec.hpp"

namespace pblring {

struct CorpusEntry {
  std::string label;  // to_string(spec)
  RingSpec spec;
  std::size_t order = 0;
};

/// Base rings of the default corpus, before quotient expansion.
std::vector<RingSpec> default_base_specs();

/// Base rings of the small corpus (orders ≤ 16), used by tests and benchmarks.
std::vector<RingSpec> small_base_specs();

/// Builds every spec, optionally adds the quotient by each nonzero ideal, drops
/// rings whose tables equal an earlier entry, and sorts by (order, label).
std::vector<CorpusEntry> expand_corpus(const std::vector<RingSpec>& bases, bool with_quotients = true,
                                       std::size_t max_order = kMaxRingOrder);

/// Named corpora: "default", "small", "none".
std::vector<CorpusEntry> named_corpus(std::string_view name);

}  // namespace pblring
