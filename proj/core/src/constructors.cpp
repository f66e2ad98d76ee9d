#include "pblring/constructors.hpp"

#include <string>

#include "pblring/errors.hpp"

namespace pblring {

FiniteRing zmod(std::size_t n) {
  if (n < 1 || n > 256) throw BoundsError("zmod modulus must be in 1..256, got " + std::to_string(n));
  return ring_from_ops(
      n, 0, [n](Element a, Element b) { return (a + b) % n; },
      [n](Element a, Element b) { return (a * b) % n; }, "zmod(" + std::to_string(n) + ")");
}

std::vector<Element> matrix_entries(Element index, std::size_t base_order, std::size_t k) {
  std::vector<Element> e(k * k);
  for (std::size_t p = k * k; p-- > 0;) {
    e[p] = static_cast<Element>(index % base_order);
    index = static_cast<Element>(index / base_order);
  }
  return e;
}

Element matrix_index(std::span<const Element> entries, std::size_t base_order) {
  Element idx = 0;
  for (Element v : entries) idx = static_cast<Element>(idx * base_order + v);
  return idx;
}

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k) {
  if (k < 1) throw ConstructionError("matrix size must be at least 1");
  const std::size_t n = base.order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < k * k; ++i) {
    order *= n;
    if (order > kMaxRingOrder) {
      throw BoundsError("matrix ring order exceeds " + std::to_string(kMaxRingOrder));
    }
  }
  std::vector<std::vector<Element>> entries(order);
  for (Element x = 0; x < order; ++x) entries[x] = matrix_entries(x, n, k);

  std::vector<Element> buf(k * k);
  auto add = [&](Element x, Element y) {
    for (std::size_t p = 0; p < k * k; ++p) buf[p] = base.add(entries[x][p], entries[y][p]);
    return matrix_index(buf, n);
  };
  auto mul = [&](Element x, Element y) {
    const auto& a = entries[x];
    const auto& b = entries[y];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Element acc = base.zero();
        for (std::size_t l = 0; l < k; ++l) acc = base.add(acc, base.mul(a[i * k + l], b[l * k + j]));
        buf[i * k + j] = acc;
      }
    }
    return matrix_index(buf, n);
  };
  std::vector<Element> zeros(k * k, base.zero());
  return ring_from_ops(order, matrix_index(zeros, n), add, mul,
                       "matrix(" + base.provenance() + "," + std::to_string(k) + ")");
}

Ideal matrix_ideal(const Ideal& base_ideal, std::size_t k, const RingPtr& matrix) {
  const std::size_t n = base_ideal.ring().order();
  ElementSet members(matrix->order());
  for (Element x = 0; x < matrix->order(); ++x) {
    const auto e = matrix_entries(x, n, k);
    bool inside = true;
    for (Element v : e) inside = inside && base_ideal.contains(v);
    if (inside) members.insert(x);
  }
  return Ideal::checked(matrix, std::move(members));
}

Quotient quotient(const FiniteRing& ring, const Ideal& ideal) {
  const auto n = ring.order();
  constexpr Element kUnassigned = ~Element{0};
  Quotient q{FiniteRing::trusted(1, {0}, {0}, 0), std::vector<Element>(n, kUnassigned), {}};
  const auto members = ideal.members().elements();
  for (Element x = 0; x < n; ++x) {
    if (q.projection[x] != kUnassigned) continue;
    const auto coset = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(x);
    for (Element i : members) q.projection[ring.add(x, i)] = coset;
  }
  const auto& rep = q.representatives;
  const auto& proj = q.projection;
  q.ring = ring_from_ops(
      rep.size(), proj[ring.zero()],
      [&](Element a, Element b) { return proj[ring.add(rep[a], rep[b])]; },
      [&](Element a, Element b) { return proj[ring.mul(rep[a], rep[b])]; });
  return q;
}

Ideal project_ideal(const Quotient& q, const RingPtr& quotient_ring, const Ideal& j) {
  ElementSet image(quotient_ring->order());
  j.members().for_each([&](Element x) { image.insert(q.projection[x]); });
  return Ideal::checked(quotient_ring, std::move(image));
}

std::vector<Element> Product::coordinates(Element x) const {
  std::vector<Element> c(factor_orders.size());
  for (std::size_t i = factor_orders.size(); i-- > 0;) {
    c[i] = static_cast<Element>(x % factor_orders[i]);
    x = static_cast<Element>(x / factor_orders[i]);
  }
  return c;
}

Element Product::encode(std::span<const Element> coords) const {
  Element x = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    x = static_cast<Element>(x * factor_orders[i] + coords[i]);
  }
  return x;
}

Product direct_product(std::span<const RingPtr> factors) {
  if (factors.empty()) throw ConstructionError("direct product needs at least one factor");
  Product p{FiniteRing::trusted(1, {0}, {0}, 0), {}, {}};
  std::size_t order = 1;
  std::string prov = "product(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    order *= factors[i]->order();
    if (order > kMaxRingOrder) {
      throw BoundsError("direct product order exceeds " + std::to_string(kMaxRingOrder));
    }
    p.factor_orders.push_back(factors[i]->order());
    prov += (i ? "," : "") + factors[i]->provenance();
  }
  prov += ")";
  std::vector<std::vector<Element>> coords(order);
  for (Element x = 0; x < order; ++x) coords[x] = p.coordinates(x);

  std::vector<Element> buf(factors.size());
  auto add = [&](Element x, Element y) {
    for (std::size_t i = 0; i < factors.size(); ++i) buf[i] = factors[i]->add(coords[x][i], coords[y][i]);
    return p.encode(buf);
  };
  auto mul = [&](Element x, Element y) {
    for (std::size_t i = 0; i < factors.size(); ++i) buf[i] = factors[i]->mul(coords[x][i], coords[y][i]);
    return p.encode(buf);
  };
  std::vector<Element> zeros(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) zeros[i] = factors[i]->zero();
  p.ring = ring_from_ops(order, p.encode(zeros), add, mul, prov);

  p.embeddings.resize(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (Element x = 0; x < factors[i]->order(); ++x) {
      auto c = zeros;
      c[i] = x;
      p.embeddings[i].push_back(p.encode(c));
    }
  }
  return p;
}

Ideal product_ideal(const Product& p, const RingPtr& product_ring, std::span<const Ideal> parts) {
  ElementSet members(product_ring->order());
  for (Element x = 0; x < product_ring->order(); ++x) {
    const auto c = p.coordinates(x);
    bool inside = true;
    for (std::size_t i = 0; i < parts.size() && inside; ++i) inside = parts[i].contains(c[i]);
    if (inside) members.insert(x);
  }
  return Ideal::checked(product_ring, std::move(members));
}

Subring ideal_as_ring(const Ideal& ideal) {
  const auto& r = ideal.ring();
  Subring s{FiniteRing::trusted(1, {0}, {0}, 0), ideal.members().elements()};
  std::vector<Element> local(r.order(), 0);
  for (Element i = 0; i < s.inclusion.size(); ++i) local[s.inclusion[i]] = i;
  const auto& inc = s.inclusion;
  s.ring = ring_from_ops(
      inc.size(), local[r.zero()],
      [&](Element a, Element b) { return local[r.add(inc[a], inc[b])]; },
      [&](Element a, Element b) { return local[r.mul(inc[a], inc[b])]; });
  return s;
}

}  // namespace pblring
