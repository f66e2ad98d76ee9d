#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pblring/ideal_lattice.hpp"

namespace pblring {

/// A finite structure (A, ∧, ∨, ⊙, →, ⇝, 0, 1) given by explicit tables.
struct FiniteAlgebra {
  using Table = std::vector<std::size_t>;

  std::size_t size = 0;
  Table meet, join, times, rimp, limp;
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t m(std::size_t x, std::size_t y) const { return meet[x * size + y]; }
  std::size_t j(std::size_t x, std::size_t y) const { return join[x * size + y]; }
  std::size_t t(std::size_t x, std::size_t y) const { return times[x * size + y]; }
  std::size_t ri(std::size_t x, std::size_t y) const { return rimp[x * size + y]; }
  std::size_t li(std::size_t x, std::size_t y) const { return limp[x * size + y]; }
  /// Order derived from the meet: x ≤ y iff x ∧ y = x.
  bool leq(std::size_t x, std::size_t y) const { return m(x, y) == x; }
  /// x* = x → 0
  std::size_t star(std::size_t x) const { return ri(x, bottom); }
  /// x⁻ = x ⇝ 0
  std::size_t minus(std::size_t x) const { return li(x, bottom); }

  /// Entries in range, tables square, bottom ≠ top unless size is 1.
  bool well_formed() const;

  /// Builds an algebra from operation callbacks.
  static FiniteAlgebra from_ops(
      std::size_t size, std::size_t bottom, std::size_t top,
      const std::function<std::size_t(std::size_t, std::size_t)>& meet,
      const std::function<std::size_t(std::size_t, std::size_t)>& join,
      const std::function<std::size_t(std::size_t, std::size_t)>& times,
      const std::function<std::size_t(std::size_t, std::size_t)>& rimp,
      const std::function<std::size_t(std::size_t, std::size_t)>& limp);
};

struct AxiomReport {
  std::string name;
  bool holds = true;
  std::vector<std::size_t> witness;  // up to three carrier elements
};

/// True iff every report holds.
bool all_hold(const std::vector<AxiomReport>& reports);

/// A(R): ideals with ∩, +, ·, →, ⇝, {0}, R.
FiniteAlgebra ideal_algebra(const IdealLattice& lattice);

/// Axiom groups: bounded-lattice, monoid, adjointness, divisibility, prelinearity.
std::vector<AxiomReport> check_pseudo_bl(const FiniteAlgebra& a);

/// check_pseudo_bl plus commutativity of ⊙ and coincidence of → and ⇝.
std::vector<AxiomReport> check_bl(const FiniteAlgebra& a);

/// The eight pseudo MV axioms, with x* = x → 0, x⁻ = x ⇝ 0 and
/// y ⊕ x := (x* ⊙ y*)⁻.
std::vector<AxiomReport> check_pseudo_mv(const FiniteAlgebra& a);

/// Re-evaluates a named axiom at a witness tuple. Returns true when the
/// axiom holds there. Unknown names return true.
bool axiom_holds_at(const FiniteAlgebra& a, const std::string& name,
                    const std::vector<std::size_t>& witness);

/// { x : (x*)* = x }
std::vector<std::size_t> double_negation_fixed(const FiniteAlgebra& a);
/// { x* : x ∈ A }; throws InvariantViolation if not inside double_negation_fixed.
std::vector<std::size_t> mv_center(const FiniteAlgebra& a);

struct AnnihilatorParts {
  std::vector<IdealLattice::Index> an_star;    // { I* }
  std::vector<IdealLattice::Index> an_minus;   // { I⁻ }
  std::vector<IdealLattice::Index> d_star;     // { I : I* = 0 }
  std::vector<IdealLattice::Index> d_minus;    // { I : I⁻ = 0 }
};

AnnihilatorParts annihilator_parts(const IdealLattice& lattice);

}  // namespace pblring
