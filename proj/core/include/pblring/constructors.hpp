#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pblring/finite_ring.hpp"
#include "pblring/ideal.hpp"

namespace pblring {

/// Integers mod n, 1 ≤ n ≤ 256. Element i is the residue i.
FiniteRing zmod(std::size_t n);

/// k×k matrices over `base`. Element indices are row-major mixed radix in
/// base.order(): entry (0,0) is the most significant digit, entry
/// (k-1,k-1) the least. For k = 1 the tables coincide with `base`.
FiniteRing matrix_ring(const FiniteRing& base, std::size_t k);

/// Entries of a k×k matrix (row-major) from its index.
std::vector<Element> matrix_entries(Element index, std::size_t base_order, std::size_t k);
Element matrix_index(std::span<const Element> entries, std::size_t base_order);

/// M_k(I): the matrices all of whose entries lie in I.
Ideal matrix_ideal(const Ideal& base_ideal, std::size_t k, const RingPtr& matrix);

struct Quotient {
  FiniteRing ring;
  /// Element of R ↦ its coset.
  std::vector<Element> projection;
  /// Coset ↦ least element index in it.
  std::vector<Element> representatives;
};

/// R/I. Cosets are numbered by increasing least representative.
Quotient quotient(const FiniteRing& ring, const Ideal& ideal);

/// J/I as an ideal of the quotient ring (the image of J under projection).
Ideal project_ideal(const Quotient& q, const RingPtr& quotient_ring, const Ideal& j);

struct Product {
  FiniteRing ring;
  std::vector<std::size_t> factor_orders;
  /// embeddings[i][x] = the tuple with x in slot i and zero elsewhere.
  std::vector<std::vector<Element>> embeddings;

  std::vector<Element> coordinates(Element x) const;
  Element encode(std::span<const Element> coords) const;
};

/// Componentwise product. Tuples are mixed radix with the first factor
/// most significant.
Product direct_product(std::span<const RingPtr> factors);

/// ∏ I_k as an ideal of the product ring.
Ideal product_ideal(const Product& p, const RingPtr& product_ring, std::span<const Ideal> parts);

struct Subring {
  FiniteRing ring;
  /// New index ↦ element of the parent ring (increasing).
  std::vector<Element> inclusion;
};

/// An ideal viewed as a ring with the inherited operations.
Subring ideal_as_ring(const Ideal& ideal);

/// Builds a ring from operation callbacks on 0..order-1 (no validation).
template <class Add, class Mul>
FiniteRing ring_from_ops(std::size_t order, Element zero, Add&& add, Mul&& mul,
                         std::string provenance = {}) {
  FiniteRing::Table a(order * order), m(order * order);
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      a[x * order + y] = static_cast<std::uint16_t>(add(x, y));
      m[x * order + y] = static_cast<std::uint16_t>(mul(x, y));
    }
  }
  return FiniteRing::trusted(order, std::move(a), std::move(m), zero, std::move(provenance));
}

}  // namespace pblring
