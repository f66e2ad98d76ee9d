#pragma once

#include <span>
#include <vector>

#include "pblring/element_set.hpp"
#include "pblring/finite_ring.hpp"

namespace pblring {

/// A two-sided ideal, stored as a membership set over its parent ring.
///
/// The additive generators are cached on construction; every residual and
/// product routine only has to look at them because the ideal is the
/// additive span of its generators.
class Ideal {
 public:
  /// Trusted constructor: `members` must already be a two-sided ideal.
  Ideal(RingPtr ring, ElementSet members);

  /// Checks the ideal axioms first and throws InvariantViolation otherwise.
  static Ideal checked(RingPtr ring, ElementSet members);

  static Ideal zero(RingPtr ring);
  static Ideal whole(RingPtr ring);

  const RingPtr& ring_ptr() const { return ring_; }
  const FiniteRing& ring() const { return *ring_; }
  const ElementSet& members() const { return members_; }
  std::span<const Element> generators() const { return generators_; }

  std::size_t size() const { return size_; }
  bool contains(Element x) const { return members_.contains(x); }
  bool is_zero() const { return size_ == 1; }
  bool is_whole() const { return size_ == ring_->order(); }
  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }

 private:
  RingPtr ring_;
  ElementSet members_;
  std::vector<Element> generators_;
  std::size_t size_ = 0;
};

/// True iff `s` contains zero, is an additive subgroup and absorbs
/// multiplication by ring elements on both sides.
bool is_ideal(const FiniteRing& ring, const ElementSet& s);

/// Least two-sided ideal containing `seeds`.
Ideal ideal_generated(const RingPtr& ring, std::span<const Element> seeds);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
/// Additive closure of all products a*b (finite sums of products).
Ideal product(const Ideal& a, const Ideal& b);

/// I -> J = { x : x I ⊆ J }.
Ideal residual_right(const Ideal& i, const Ideal& j);
/// I ~> J = { x : I x ⊆ J }.
Ideal residual_left(const Ideal& i, const Ideal& j);

/// I* = { x : x I = 0 }.
Ideal ann_star(const Ideal& i);
/// I⁻ = { x : I x = 0 }.
Ideal ann_minus(const Ideal& i);

struct Density {
  bool star = false;
  bool minus = false;
};

Density is_dense(const Ideal& i);

}  // namespace pblring
