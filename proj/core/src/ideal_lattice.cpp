#include "pblring/ideal_lattice.hpp"

#include <algorithm>

#include "pblring/errors.hpp"

namespace pblring {

IdealLattice IdealLattice::compute(RingPtr ring) {
  IdealLattice lat;
  lat.ring_ = ring;

  std::vector<Ideal> found;
  std::unordered_map<ElementSet, Index, ElementSetHash> seen;
  auto remember = [&](Ideal ideal) {
    if (seen.emplace(ideal.members(), found.size()).second) found.push_back(std::move(ideal));
  };

  remember(Ideal::zero(ring));
  for (Element a = 0; a < ring->order(); ++a) {
    const Element seed[] = {a};
    remember(ideal_generated(ring, seed));
  }
  // Every ideal of a finite ring is a finite sum of principal ideals.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto s = sum(found[i], found[j]);
      if (!seen.contains(s.members())) remember(std::move(s));
    }
  }

  std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
    return canonical_less(a.members(), b.members());
  });
  lat.ideals_ = std::move(found);
  for (Index i = 0; i < lat.ideals_.size(); ++i) lat.index_.emplace(lat.ideals_[i].members(), i);
  lat.bottom_ = 0;
  lat.top_ = lat.ideals_.size() - 1;
  if (!lat.ideals_[lat.bottom_].is_zero() || !lat.ideals_[lat.top_].is_whole()) {
    throw InvariantViolation("ideal lattice is not bounded by {0} and R");
  }
  lat.build_tables();
  return lat;
}

std::optional<IdealLattice::Index> IdealLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IdealLattice::Index IdealLattice::index_of(const Ideal& ideal) const {
  if (auto i = find(ideal.members())) return *i;
  throw InvariantViolation("ideal missing from the lattice");
}

void IdealLattice::build_tables() {
  const auto n = size();
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  product_.assign(n * n, 0);
  rimp_.assign(n * n, 0);
  limp_.assign(n * n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto& I = ideals_[a];
      const auto& J = ideals_[b];
      if (b >= a) {
        meet_[a * n + b] = meet_[b * n + a] = index_of(intersect(I, J));
        join_[a * n + b] = join_[b * n + a] = index_of(sum(I, J));
      }
      product_[a * n + b] = index_of(pblring::product(I, J));
      rimp_[a * n + b] = index_of(residual_right(I, J));
      limp_[a * n + b] = index_of(residual_left(I, J));
    }
  }
}

AnnihilatorWitness is_annihilator_ideal(const IdealLattice& lat, IdealLattice::Index i) {
  AnnihilatorWitness w;
  for (IdealLattice::Index j = 0; j < lat.size(); ++j) {
    if (!w.star_source && lat.ann_star(j) == i) w.star_source = j;
    if (!w.minus_source && lat.ann_minus(j) == i) w.minus_source = j;
  }
  w.holds = w.star_source.has_value() && w.minus_source.has_value();
  return w;
}

bool is_prime(const IdealLattice& lat, IdealLattice::Index p) {
  if (p == lat.top()) return false;
  for (IdealLattice::Index a = 0; a < lat.size(); ++a) {
    if (lat.leq(a, p)) continue;
    for (IdealLattice::Index b = 0; b < lat.size(); ++b) {
      if (lat.leq(b, p)) continue;
      if (lat.leq(lat.product(a, b), p)) return false;
    }
  }
  return true;
}

bool is_maximal(const IdealLattice& lat, IdealLattice::Index p) {
  if (p == lat.top()) return false;
  for (IdealLattice::Index q = 0; q < lat.size(); ++q) {
    if (q != p && q != lat.top() && lat.leq(p, q)) return false;
  }
  return true;
}

std::vector<IdealLattice::Index> prime_ideals(const IdealLattice& lat) {
  std::vector<IdealLattice::Index> out;
  for (IdealLattice::Index p = 0; p < lat.size(); ++p) {
    if (is_prime(lat, p)) out.push_back(p);
  }
  return out;
}

std::vector<IdealLattice::Index> maximal_ideals(const IdealLattice& lat) {
  std::vector<IdealLattice::Index> out;
  for (IdealLattice::Index p = 0; p < lat.size(); ++p) {
    if (is_maximal(lat, p)) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<IdealLattice::Index, IdealLattice::Index>> hasse_edges(
    const IdealLattice& lat) {
  std::vector<std::pair<IdealLattice::Index, IdealLattice::Index>> edges;
  const auto n = lat.size();
  for (IdealLattice::Index a = 0; a < n; ++a) {
    for (IdealLattice::Index b = 0; b < n; ++b) {
      if (a == b || !lat.leq(a, b)) continue;
      bool covers = true;
      for (IdealLattice::Index c = 0; c < n && covers; ++c) {
        if (c != a && c != b && lat.leq(a, c) && lat.leq(c, b)) covers = false;
      }
      if (covers) edges.emplace_back(a, b);
    }
  }
  return edges;
}

}  // namespace pblring
