#pragma once

#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "pblring/ideal_lattice.hpp"
#include "pblring/ring_spec.hpp"
#include "spec_parser.hpp"

namespace test {

inline pblring::RingPtr ring(std::string_view spec) {
  return pblring::share(pblring::build(pblring::cli::parse_spec(spec)));
}

inline pblring::IdealLattice lattice(std::string_view spec) { return pblring::IdealLattice::compute(ring(spec)); }

inline std::vector<oracle::Set> member_lists(const pblring::IdealLattice& L) {
  std::vector<oracle::Set> out;
  for (const auto& i : L.ideals()) out.push_back(i.members().elements());
  return out;
}

inline oracle::Set members(const pblring::IdealLattice& L, std::size_t i) { return L[i].members().elements(); }

// Index of the ideal with exactly these members.
inline std::size_t at(const pblring::IdealLattice& L, const oracle::Set& s) {
  pblring::ElementSet e(L.ring().order());
  for (auto x : s) e.insert(x);
  return L.index_of(pblring::Ideal(L.ring_ptr(), e));
}

}  // namespace test
