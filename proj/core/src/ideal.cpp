#include "pblring/ideal.hpp"

#include <deque>

#include "pblring/errors.hpp"

namespace pblring {

namespace {

class SpanBuilder {
 public:
  explicit SpanBuilder(const FiniteRing& r) : ring_(r), set_(r.order()) {
    set_.insert(r.zero());
    members_.push_back(r.zero());
  }

  bool contains(Element x) const { return set_.contains(x); }

  // Returns false when g was already in the span.
  bool adjoin(Element g) {
    if (set_.contains(g)) return false;
    const std::size_t base = members_.size();
    Element step = g;
    while (!set_.contains(step)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Element e = ring_.add(members_[i], step);
        set_.insert(e);
        members_.push_back(e);
      }
      step = ring_.add(step, g);
    }
    return true;
  }

  ElementSet take() && { return std::move(set_); }
  std::size_t size() const { return members_.size(); }

 private:
  const FiniteRing& ring_;
  ElementSet set_;
  std::vector<Element> members_;
};

std::vector<Element> span_generators(const FiniteRing& r, const ElementSet& s) {
  SpanBuilder span(r);
  std::vector<Element> gens;
  s.for_each([&](Element x) {
    if (span.adjoin(x)) gens.push_back(x);
  });
  return gens;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring_ptr() != b.ring_ptr() && !(a.ring() == b.ring())) throw RingMismatch();
}

// Closes the span of `seeds` under multiplication by the ring on both sides.
ElementSet close_ideal(const FiniteRing& r, std::span<const Element> seeds) {
  SpanBuilder span(r);
  std::deque<Element> queue;
  for (Element s : seeds) {
    if (span.adjoin(s)) queue.push_back(s);
  }
  const auto ring_gens = r.additive_generators();
  while (!queue.empty()) {
    const Element h = queue.front();
    queue.pop_front();
    for (Element g : ring_gens) {
      for (Element p : {r.mul(g, h), r.mul(h, g)}) {
        if (span.adjoin(p)) queue.push_back(p);
      }
    }
  }
  return std::move(span).take();
}

}  // namespace

Ideal::Ideal(RingPtr ring, ElementSet members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  generators_ = span_generators(*ring_, members_);
  size_ = members_.count();
}

Ideal Ideal::checked(RingPtr ring, ElementSet members) {
  if (members.universe() != ring->order() || !is_ideal(*ring, members)) {
    throw InvariantViolation("element set is not a two-sided ideal");
  }
  return Ideal(std::move(ring), std::move(members));
}

Ideal Ideal::zero(RingPtr ring) {
  ElementSet s(ring->order());
  s.insert(ring->zero());
  return Ideal(std::move(ring), std::move(s));
}

Ideal Ideal::whole(RingPtr ring) {
  auto s = ElementSet::full(ring->order());
  return Ideal(std::move(ring), std::move(s));
}

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.order() || !s.contains(r.zero())) return false;
  // Additive subgroup: the span of the members must not grow.
  SpanBuilder span(r);
  std::vector<Element> gens;
  bool subgroup = true;
  s.for_each([&](Element x) {
    if (span.adjoin(x)) gens.push_back(x);
  });
  subgroup = span.size() == s.count();
  if (!subgroup) return false;
  for (Element h : gens) {
    for (Element g : r.additive_generators()) {
      if (!s.contains(r.mul(g, h)) || !s.contains(r.mul(h, g))) return false;
    }
  }
  return true;
}

Ideal ideal_generated(const RingPtr& ring, std::span<const Element> seeds) {
  return Ideal(ring, close_ideal(*ring, seeds));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  SpanBuilder span(a.ring());
  for (Element g : a.generators()) span.adjoin(g);
  for (Element g : b.generators()) span.adjoin(g);
  return Ideal(a.ring_ptr(), std::move(span).take());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring_ptr(), a.members() & b.members());
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& r = a.ring();
  std::vector<Element> seeds;
  seeds.reserve(a.generators().size() * b.generators().size());
  for (Element x : a.generators()) {
    for (Element y : b.generators()) seeds.push_back(r.mul(x, y));
  }
  return Ideal(a.ring_ptr(), close_ideal(r, seeds));
}

namespace {

template <class Side>
Ideal residual(const Ideal& i, const Ideal& j, Side side) {
  require_same_ring(i, j);
  const auto& r = i.ring();
  ElementSet out(r.order());
  for (Element x = 0; x < r.order(); ++x) {
    bool inside = true;
    for (Element g : i.generators()) {
      if (!j.contains(side(r, x, g))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(x);
  }
  if (!is_ideal(r, out)) throw InvariantViolation("residual is not a two-sided ideal");
  return Ideal(i.ring_ptr(), std::move(out));
}

}  // namespace

Ideal residual_right(const Ideal& i, const Ideal& j) {
  return residual(i, j, [](const FiniteRing& r, Element x, Element a) { return r.mul(x, a); });
}

Ideal residual_left(const Ideal& i, const Ideal& j) {
  return residual(i, j, [](const FiniteRing& r, Element x, Element a) { return r.mul(a, x); });
}

Ideal ann_star(const Ideal& i) { return residual_right(i, Ideal::zero(i.ring_ptr())); }

Ideal ann_minus(const Ideal& i) { return residual_left(i, Ideal::zero(i.ring_ptr())); }

Density is_dense(const Ideal& i) {
  return {ann_star(i).is_zero(), ann_minus(i).is_zero()};
}

}  // namespace pblring
