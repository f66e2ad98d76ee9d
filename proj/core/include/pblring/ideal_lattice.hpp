#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pblring/ideal.hpp"

namespace pblring {

/// Every two-sided ideal of a finite ring, in canonical order, together
/// with the operation tables of the residuated lattice they form.
///
/// Ideals are addressed by their position in the canonical order
/// (cardinality, then sorted membership lexicographic), so positions are
/// reproducible across runs.
class IdealLattice {
 public:
  using Index = std::size_t;

  /// Enumerates all ideals as the sum-closure of the principal ideals.
  static IdealLattice compute(RingPtr ring);

  const RingPtr& ring_ptr() const { return ring_; }
  const FiniteRing& ring() const { return *ring_; }

  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](Index i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const { return ideals_; }

  std::optional<Index> find(const ElementSet& members) const;
  /// Throws InvariantViolation if the ideal is not in the lattice.
  Index index_of(const Ideal& ideal) const;

  Index bottom() const { return bottom_; }
  Index top() const { return top_; }

  bool leq(Index a, Index b) const { return ideals_[a].is_subset_of(ideals_[b]); }

  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index product(Index a, Index b) const { return product_[a * size() + b]; }
  /// a -> b
  Index rimp(Index a, Index b) const { return rimp_[a * size() + b]; }
  /// a ~> b
  Index limp(Index a, Index b) const { return limp_[a * size() + b]; }
  Index ann_star(Index a) const { return rimp(a, bottom_); }
  Index ann_minus(Index a) const { return limp(a, bottom_); }

 private:
  IdealLattice() = default;
  void build_tables();

  RingPtr ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, Index, ElementSetHash> index_;
  Index bottom_ = 0;
  Index top_ = 0;
  std::vector<Index> meet_, join_, product_, rimp_, limp_;
};

struct AnnihilatorWitness {
  /// Conjunctive reading: I = J* for some J and I = K⁻ for some K.
  bool holds = false;
  std::optional<IdealLattice::Index> star_source;   // J with I = J*
  std::optional<IdealLattice::Index> minus_source;  // K with I = K⁻
};

AnnihilatorWitness is_annihilator_ideal(const IdealLattice& lattice, IdealLattice::Index i);

/// P ≠ R and IJ ⊆ P implies I ⊆ P or J ⊆ P, quantified over ideals.
bool is_prime(const IdealLattice& lattice, IdealLattice::Index p);
/// P ≠ R and no ideal strictly between P and R.
bool is_maximal(const IdealLattice& lattice, IdealLattice::Index p);

std::vector<IdealLattice::Index> prime_ideals(const IdealLattice& lattice);
std::vector<IdealLattice::Index> maximal_ideals(const IdealLattice& lattice);

/// Covering pairs (a, b): a ⊂ b with nothing strictly in between.
std::vector<std::pair<IdealLattice::Index, IdealLattice::Index>> hasse_edges(
    const IdealLattice& lattice);

}  // namespace pblring
