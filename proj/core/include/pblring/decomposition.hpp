#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pblring/classify.hpp"
#include "pblring/constructors.hpp"

namespace pblring {

/// One named structural check on a subdirectly irreducible factor.
struct FactorCheck {
  std::string name;
  bool holds = true;
  std::vector<Index> witness;  // ideal indices in the factor's lattice
};

/// Checks a subdirectly irreducible factor R_x:
///   pseudo-bl-algebra        A(R_x) satisfies the pseudo BL axioms
///   unique-atom              exactly one minimal nonzero ideal
///   annihilator-or-dense     each ideal is an annihilator ideal or dense
///   an-star-chain            AN*(R_x) is linearly ordered
///   an-minus-chain           AN⁻(R_x) is linearly ordered
///   heart-annihilator        the minimal ideal is an annihilator ideal
///   annihilators-below-dense every proper member of AN* (AN⁻) lies below every member of D* (D⁻)
///   dense-residual-fix       J → I = J ⇝ I = I for annihilator I ≠ R, dense J ⊇ I
///   residual-density         I→J, I⇝J dense, or J→I, J⇝I dense
std::vector<FactorCheck> check_irreducible_factor(const IdealLattice& factor);

struct KernelChoice {
  Element x = 0;
  Index kernel = 0;
  /// All maximal ideals not containing x, canonical order; kernel is the first.
  std::vector<Index> maximal_excluders;
};

struct FactorReport {
  Index kernel = 0;
  std::vector<Element> elements;  // the x whose kernel this is
  std::shared_ptr<const Quotient> quotient;
  std::shared_ptr<const IdealLattice> lattice;
  bool subdirectly_irreducible = false;
  bool pseudo_bl = false;
  std::vector<FactorCheck> checks;

  bool all_checks_pass() const;
};

struct DecompositionResult {
  bool input_pseudo_bl = false;
  std::vector<KernelChoice> kernels;
  /// One factor per distinct kernel, in order of first appearance.
  std::vector<FactorReport> factors;
  bool kernels_meet_to_zero = false;
  /// x ↦ (x + K)_K is injective.
  bool embedding_injective = false;
};

DecompositionResult subdirect_decomposition(const IdealLattice& lattice);

}  // namespace pblring
