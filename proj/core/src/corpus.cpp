#include "pblring/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pblring/errors.hpp"
#include "pblring/ideal_lattice.hpp"

namespace pblring {

namespace {

std::uint64_t table_hash(const FiniteRing& r) {
  std::uint64_t h = 1469598103934665603ull ^ r.order();
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto v : r.add_table()) mix(v);
  for (auto v : r.mul_table()) mix(v + 0x10000);
  return h;
}

RingSpec pair(RingSpec a, RingSpec b) { return RingSpec::product({std::move(a), std::move(b)}); }

}  // namespace

std::vector<RingSpec> default_base_specs() {
  std::vector<RingSpec> out;
  for (std::size_t n = 1; n <= 24; ++n) out.push_back(RingSpec::zmod(n));
  for (auto name : {"z2x_x2", "z4x_x2m2x", "z2xy_m2", "t2z2", "2z8", "z2_null"}) {
    out.push_back(RingSpec::builtin(name));
  }
  const auto z = [](std::size_t n) { return RingSpec::zmod(n); };
  const auto m = [](std::size_t n) { return RingSpec::matrix(RingSpec::zmod(n), 2); };
  const auto b = [](const char* name) { return RingSpec::builtin(name); };
  out.push_back(m(2));
  out.push_back(m(3));
  out.push_back(m(4));
  out.push_back(m(5));
  out.push_back(m(6));
  out.push_back(RingSpec::matrix(b("z2x_x2"), 2));
  out.push_back(RingSpec::matrix(z(2), 3));
  out.push_back(pair(z(2), z(2)));
  out.push_back(pair(z(2), z(3)));
  out.push_back(pair(z(2), z(4)));
  out.push_back(pair(z(4), z(4)));
  out.push_back(pair(z(3), z(9)));
  out.push_back(pair(z(12), z(20)));
  out.push_back(pair(z(2), b("z2x_x2")));
  out.push_back(pair(b("z4x_x2m2x"), z(3)));
  out.push_back(pair(b("t2z2"), z(2)));
  out.push_back(pair(b("2z8"), z(2)));
  out.push_back(pair(z(3), m(2)));
  out.push_back(pair(m(2), z(4)));
  out.push_back(pair(m(2), m(2)));
  out.push_back(pair(m(3), z(2)));
  out.push_back(pair(m(4), z(2)));
  out.push_back(pair(m(4), z(4)));
  out.push_back(RingSpec::product({z(2), z(2), z(2)}));
  out.push_back(RingSpec::product({z(2), z(3), z(5)}));
  out.push_back(pair(z(5), z(5)));
  out.push_back(pair(z(8), z(2)));
  out.push_back(pair(z(16), z(16)));
  out.push_back(pair(z(32), z(32)));
  out.push_back(pair(z(4), b("z2x_x2")));
  out.push_back(pair(b("z2xy_m2"), z(2)));
  out.push_back(pair(m(2), m(3)));
  out.push_back(pair(m(2), z(2)));
  return out;
}

std::vector<RingSpec> small_base_specs() {
  std::vector<RingSpec> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(RingSpec::zmod(n));
  for (auto name : {"z2x_x2", "z4x_x2m2x", "z2xy_m2", "t2z2", "2z8", "z2_null"}) {
    out.push_back(RingSpec::builtin(name));
  }
  out.push_back(RingSpec::matrix(RingSpec::zmod(2), 2));
  out.push_back(pair(RingSpec::zmod(2), RingSpec::zmod(2)));
  out.push_back(pair(RingSpec::zmod(2), RingSpec::zmod(4)));
  return out;
}

std::vector<CorpusEntry> expand_corpus(const std::vector<RingSpec>& bases, bool with_quotients,
                                       std::size_t max_order) {
  std::vector<CorpusEntry> out;
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  std::vector<RingPtr> rings;

  auto admit = [&](const RingSpec& spec, FiniteRing ring) {
    const auto h = table_hash(ring);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (*rings[it->second] == ring) return false;
    }
    seen.emplace(h, rings.size());
    out.push_back({to_string(spec), spec, ring.order()});
    rings.push_back(share(std::move(ring)));
    return true;
  };

  for (const auto& spec : bases) {
    auto ring = build(spec, max_order);
    auto base = share(ring);
    admit(spec, std::move(ring));
    if (!with_quotients) continue;
    const auto lattice = IdealLattice::compute(base);
    for (const auto& ideal : lattice.ideals()) {
      if (ideal.is_zero()) continue;
      auto gens = ideal.generators();
      auto qspec = RingSpec::quotient(spec, std::vector<Element>(gens.begin(), gens.end()));
      admit(qspec, build(qspec, max_order));
    }
  }

  std::vector<std::size_t> idx(out.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (out[a].order != out[b].order) return out[a].order < out[b].order;
    return out[a].label < out[b].label;
  });
  std::vector<CorpusEntry> sorted;
  sorted.reserve(out.size());
  for (auto i : idx) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<CorpusEntry> named_corpus(std::string_view name) {
  if (name == "default") return expand_corpus(default_base_specs());
  if (name == "small") return expand_corpus(small_base_specs());
  if (name == "none") return {};
  throw std::invalid_argument("unknown corpus: " + std::string(name));
}

}  // namespace pblring
