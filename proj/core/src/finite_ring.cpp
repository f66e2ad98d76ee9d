#include "pblring/finite_ring.hpp"

#include <algorithm>

#include "pblring/errors.hpp"

namespace pblring {

namespace {

// Adjoins g to the additive subgroup {members}. New elements are members + k*g.
void adjoin(const FiniteRing& r, ElementSet& set, std::vector<Element>& members, Element g) {
  const std::size_t base = members.size();
  Element step = g;
  while (!set.contains(step)) {
    for (std::size_t i = 0; i < base; ++i) {
      const Element e = r.add(members[i], step);
      set.insert(e);
      members.push_back(e);
    }
    step = r.add(step, g);
  }
}

}  // namespace

FiniteRing FiniteRing::trusted(std::size_t order, Table add, Table mul, Element zero,
                               std::string provenance) {
  if (order == 0 || order > 65536) throw BoundsError("ring order must be in 1..65536");
  if (add.size() != order * order || mul.size() != order * order) {
    throw ConstructionError("table size does not match ring order");
  }
  FiniteRing r;
  r.order_ = order;
  r.zero_ = zero;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.provenance_ = std::move(provenance);
  r.finish();
  return r;
}

void FiniteRing::finish() {
  neg_.assign(order_, zero_);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
    }
  }
  commutative_ = true;
  for (Element a = 0; a < order_ && commutative_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) {
        commutative_ = false;
        break;
      }
    }
  }
  ElementSet span(order_);
  span.insert(zero_);
  std::vector<Element> members{zero_};
  generators_.clear();
  for (Element x = 0; x < order_; ++x) {
    if (span.contains(x)) continue;
    generators_.push_back(x);
    adjoin(*this, span, members, x);
  }
}

const char* to_string(RingValidationError::Kind kind) {
  switch (kind) {
    case RingValidationError::Kind::TableShape: return "table-shape";
    case RingValidationError::Kind::NotAbelianGroup: return "not-abelian-group";
    case RingValidationError::Kind::MulNotAssociative: return "mul-not-associative";
    case RingValidationError::Kind::NotDistributive: return "not-distributive";
  }
  return "unknown";
}

namespace {

struct TableView {
  std::size_t n;
  std::span<const Element> add;
  std::span<const Element> mul;
  Element zero;
  Element a(Element x, Element y) const { return add[x * n + y]; }
  Element m(Element x, Element y) const { return mul[x * n + y]; }
};

using Kind = RingValidationError::Kind;

// Each law evaluated at a witness; true means the law holds there.
bool law_holds(const TableView& t, const std::string& law, std::span<const Element> w) {
  if (law == "additive associativity") {
    return t.a(t.a(w[0], w[1]), w[2]) == t.a(w[0], t.a(w[1], w[2]));
  }
  if (law == "additive commutativity") return t.a(w[0], w[1]) == t.a(w[1], w[0]);
  if (law == "zero neutral") return t.a(t.zero, w[0]) == w[0] && t.a(w[0], t.zero) == w[0];
  if (law == "additive inverse") {
    for (Element y = 0; y < t.n; ++y) {
      if (t.a(w[0], y) == t.zero) return true;
    }
    return false;
  }
  if (law == "multiplicative associativity") {
    return t.m(t.m(w[0], w[1]), w[2]) == t.m(w[0], t.m(w[1], w[2]));
  }
  if (law == "left distributivity") {
    return t.m(w[0], t.a(w[1], w[2])) == t.a(t.m(w[0], w[1]), t.m(w[0], w[2]));
  }
  if (law == "right distributivity") {
    return t.m(t.a(w[1], w[2]), w[0]) == t.a(t.m(w[1], w[0]), t.m(w[2], w[0]));
  }
  return true;
}

std::optional<RingValidationError> first_violation(const TableView& t) {
  const auto n = static_cast<Element>(t.n);
  auto fail = [](Kind k, const char* law, std::vector<Element> w) {
    return RingValidationError{k, law, std::move(w)};
  };
  for (Element x = 0; x < n; ++x) {
    if (!law_holds(t, "zero neutral", std::vector<Element>{x})) {
      return fail(Kind::NotAbelianGroup, "zero neutral", {x});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (t.a(x, y) != t.a(y, x)) return fail(Kind::NotAbelianGroup, "additive commutativity", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!law_holds(t, "additive inverse", std::vector<Element>{x})) {
      return fail(Kind::NotAbelianGroup, "additive inverse", {x});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t.a(x, y);
      for (Element z = 0; z < n; ++z) {
        if (t.a(xy, z) != t.a(x, t.a(y, z))) {
          return fail(Kind::NotAbelianGroup, "additive associativity", {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t.m(x, y);
      for (Element z = 0; z < n; ++z) {
        if (t.m(xy, z) != t.m(x, t.m(y, z))) {
          return fail(Kind::MulNotAssociative, "multiplicative associativity", {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const Element yz = t.a(y, z);
        if (t.m(x, yz) != t.a(t.m(x, y), t.m(x, z))) {
          return fail(Kind::NotDistributive, "left distributivity", {x, y, z});
        }
        if (t.m(yz, x) != t.a(t.m(y, x), t.m(z, x))) {
          return fail(Kind::NotDistributive, "right distributivity", {x, y, z});
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::variant<FiniteRing, RingValidationError> validate_ring(std::size_t order,
                                                            std::span<const Element> add,
                                                            std::span<const Element> mul,
                                                            Element zero) {
  if (order == 0 || add.size() != order * order || mul.size() != order * order ||
      zero >= order) {
    return RingValidationError{Kind::TableShape, "table shape", {}};
  }
  for (std::size_t i = 0; i < add.size(); ++i) {
    if (add[i] >= order) {
      return RingValidationError{Kind::TableShape, "entry range",
                                 {static_cast<Element>(i / order), static_cast<Element>(i % order)}};
    }
    if (mul[i] >= order) {
      return RingValidationError{Kind::TableShape, "entry range",
                                 {static_cast<Element>(i / order), static_cast<Element>(i % order)}};
    }
  }
  if (order > 65536) return RingValidationError{Kind::TableShape, "order bound", {}};
  const TableView view{order, add, mul, zero};
  if (auto err = first_violation(view)) return *err;
  FiniteRing::Table a(add.begin(), add.end());
  FiniteRing::Table m(mul.begin(), mul.end());
  return FiniteRing::trusted(order, std::move(a), std::move(m), zero);
}

bool witness_violates(const RingValidationError& err, std::size_t order,
                      std::span<const Element> add, std::span<const Element> mul, Element zero) {
  if (err.kind == Kind::TableShape) return true;
  const TableView view{order, add, mul, zero};
  return !law_holds(view, err.law, err.witness);
}

std::vector<Element> idempotents(const FiniteRing& r) {
  std::vector<Element> out;
  for (Element e = 0; e < r.order(); ++e) {
    if (r.mul(e, e) == e) out.push_back(e);
  }
  return out;
}

IdempotentCover generated_by_idempotents(const FiniteRing& r) {
  IdempotentCover cover;
  cover.witness.assign(r.order(), std::nullopt);
  const auto idem = idempotents(r);
  cover.holds = true;
  for (Element x = 0; x < r.order(); ++x) {
    for (Element e : idem) {
      if (r.mul(e, x) == x && r.mul(x, e) == x) {
        cover.witness[x] = e;
        break;
      }
    }
    if (!cover.witness[x] && cover.holds) {
      cover.holds = false;
      cover.uncovered = x;
    }
  }
  return cover;
}

Units units(const FiniteRing& r) {
  Units u;
  const auto n = static_cast<Element>(r.order());
  for (Element e = 0; e < n; ++e) {
    bool left = true;
    bool right = true;
    for (Element x = 0; x < n && (left || right); ++x) {
      left = left && r.mul(e, x) == x;
      right = right && r.mul(x, e) == x;
    }
    if (left) u.left.push_back(e);
    if (right) u.right.push_back(e);
  }
  // A left unit l and a right unit r satisfy l = l*r = r, so both are unique.
  if (!u.left.empty() && !u.right.empty()) u.two_sided = u.left.front();
  return u;
}

ReducedResult is_reduced(const FiniteRing& r) {
  for (Element x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    Element p = x;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (p == r.zero()) return {false, x};
      p = r.mul(p, x);
    }
  }
  return {};
}

bool is_division_ring(const FiniteRing& r) {
  const auto u = units(r);
  if (!u.two_sided || *u.two_sided == r.zero()) return false;
  const Element one = *u.two_sided;
  for (Element x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    bool invertible = false;
    for (Element y = 0; y < r.order() && !invertible; ++y) {
      invertible = r.mul(x, y) == one && r.mul(y, x) == one;
    }
    if (!invertible) return false;
  }
  return true;
}

}  // namespace pblring
