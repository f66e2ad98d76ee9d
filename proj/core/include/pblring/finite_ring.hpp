#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pblring/element_set.hpp"

namespace pblring {

/// Largest ring any constructor will materialise. Tables are order^2 entries
/// each, so 4096 elements already means 2 x 32 MiB.
inline constexpr std::size_t kMaxRingOrder = 4096;

/// A finite (not necessarily unital) ring given by its addition and
/// multiplication tables. Immutable once built.
class FiniteRing {
 public:
  using Table = std::vector<std::uint16_t>;

  /// Builds a ring from tables that are known to satisfy the ring axioms
  /// (constructor output). Use validate_ring() for untrusted input.
  static FiniteRing trusted(std::size_t order, Table add, Table mul, Element zero,
                            std::string provenance = {});

  std::size_t order() const { return order_; }
  Element zero() const { return zero_; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  bool is_commutative() const { return commutative_; }

  /// A small additive generating set of the carrier, chosen greedily in
  /// increasing index order. Closure under multiplication by these
  /// elements implies closure under multiplication by the whole ring.
  std::span<const Element> additive_generators() const { return generators_; }

  std::span<const std::uint16_t> add_table() const { return add_; }
  std::span<const std::uint16_t> mul_table() const { return mul_; }

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  /// Table equality. Provenance is ignored.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order_ == b.order_ && a.zero_ == b.zero_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  FiniteRing() = default;
  void finish();

  std::size_t order_ = 0;
  Element zero_ = 0;
  Table add_;
  Table mul_;
  std::vector<Element> neg_;
  std::vector<Element> generators_;
  bool commutative_ = false;
  std::string provenance_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline RingPtr share(FiniteRing r) { return std::make_shared<const FiniteRing>(std::move(r)); }

struct RingValidationError {
  enum class Kind { TableShape, NotAbelianGroup, MulNotAssociative, NotDistributive };
  Kind kind;
  std::string law;  // sub-law that failed, e.g. "additive associativity"
  std::vector<Element> witness;
};

const char* to_string(RingValidationError::Kind kind);

/// Exhaustive check of every ring axiom. Returns the ring or the first
/// violated law together with the elements that violate it.
std::variant<FiniteRing, RingValidationError> validate_ring(std::size_t order,
                                                            std::span<const Element> add,
                                                            std::span<const Element> mul,
                                                            Element zero);

/// Re-evaluates the law named in `err` at its witness. True when the law
/// indeed fails there.
bool witness_violates(const RingValidationError& err, std::size_t order,
                      std::span<const Element> add, std::span<const Element> mul, Element zero);

// Element-level structure.

std::vector<Element> idempotents(const FiniteRing& r);

struct IdempotentCover {
  bool holds = false;
  /// For each x, an idempotent e with ex = xe = x (when one exists).
  std::vector<std::optional<Element>> witness;
  /// First element without a covering idempotent.
  std::optional<Element> uncovered;
};

IdempotentCover generated_by_idempotents(const FiniteRing& r);

struct Units {
  std::vector<Element> left;
  std::vector<Element> right;
  std::optional<Element> two_sided;
};

Units units(const FiniteRing& r);

struct ReducedResult {
  bool reduced = true;
  std::optional<Element> nilpotent;
};

ReducedResult is_reduced(const FiniteRing& r);

bool is_division_ring(const FiniteRing& r);

}  // namespace pblring
