#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pblring/ideal_lattice.hpp"

namespace pblring {

using Index = IdealLattice::Index;

/// A boolean answer with the ideals (or elements) that decide it.
struct Verdict {
  bool holds = false;
  std::vector<Index> ideals;
  std::vector<Element> elements;
  std::string note;
};

/// I ∩ J = I·(I ⇝ J) = (I → J)·I for all ideals. Witness: the first failing (I, J).
Verdict check_pblr1(const IdealLattice& lattice);
/// (I → J) + (J → I) = (I ⇝ J) + (J ⇝ I) = R.
Verdict check_pblr2(const IdealLattice& lattice);
/// I ∩ J = 0 implies I* + J* = R and I⁻ + J⁻ = R.
Verdict check_pblr3(const IdealLattice& lattice);

/// Every I ⊆ J factors as I = J·K = K'·J. Witness: the first (I, J) that does not.
Verdict is_multiplication_ring(const IdealLattice& lattice);

struct PseudoBlVerdict {
  bool holds = false;
  bool generated_by_idempotents = false;
  Verdict pblr1;
  Verdict pblr2;
  /// Commutative ring that is a pseudo BL-ring.
  bool bl_ring = false;
  /// A(R) satisfies the pseudo MV axioms.
  bool lukasiewicz_ring = false;
  /// The zero ring: every condition holds vacuously.
  bool degenerate = false;
};

PseudoBlVerdict is_pseudo_bl_ring(const IdealLattice& lattice);

/// Every prime quotient R/P is a division ring. Requires a two-sided unit;
/// throws HypothesisError otherwise.
Verdict is_von_neumann(const IdealLattice& lattice);

struct BaerResult {
  bool holds = false;
  /// Per ideal: idempotent e with I* = eR, and e' with I⁻ = Re'.
  std::vector<std::optional<Element>> star_idempotent;
  std::vector<std::optional<Element>> minus_idempotent;
  std::optional<Index> failing;
};

BaerResult is_baer(const IdealLattice& lattice);

struct SubdirectIrreducibility {
  bool holds = false;
  /// Intersection of all nonzero ideals (the heart) when nonzero.
  std::optional<Index> heart;
};

SubdirectIrreducibility is_subdirectly_irreducible(const IdealLattice& lattice);

struct SpecialPrimary {
  bool holds = false;
  std::optional<Index> maximal;
  /// M, M², ... up to stabilisation.
  std::vector<Index> powers;
  /// A proper ideal that is not a power of M.
  std::optional<Index> failing;
};

SpecialPrimary is_special_primary(const IdealLattice& lattice);

/// {0} is a prime ideal.
bool is_prime_ring(const IdealLattice& lattice);

/// N*(P) = { x : x s = 0 for some s ∉ P }. Throws HypothesisError if P is not prime.
ElementSet n_star(const IdealLattice& lattice, Index p);
/// N⁻(P) = { x : s x = 0 for some s ∉ P }.
ElementSet n_minus(const IdealLattice& lattice, Index p);

struct NStarMeetResult {
  bool holds = false;
  bool vacuous = false;        // no prime ideals
  bool hypothesis_ok = false;  // ring generated by idempotents
  ElementSet star_meet;        // ⋂ N*(P)
  ElementSet minus_meet;       // ⋂ N⁻(P)
  std::vector<Index> primes;
};

NStarMeetResult check_n_star_meet(const IdealLattice& lattice);

struct PrimeMaximal {
  bool applicable = false;  // ring is a pseudo BL-ring
  bool holds = false;
  std::optional<Index> witness;  // prime that is not maximal
};

PrimeMaximal check_prime_maximal(const IdealLattice& lattice);

/// One named predicate of the classification report.
struct ReportEntry {
  std::string name;
  bool verdict = false;
  std::vector<Index> witness_ideals;
  std::vector<Element> witness_elements;
  std::string notes;
};

struct ClassificationReport {
  std::string ring;
  std::size_t order = 0;
  std::size_t ideal_count = 0;
  bool commutative = false;
  std::vector<ReportEntry> entries;

  const ReportEntry& at(const std::string& name) const;
};

/// Evaluates every predicate. Throws InvariantViolation when the
/// multiplication-ring and PBLR-1 verdicts disagree.
ClassificationReport classify(const IdealLattice& lattice);

}  // namespace pblring
