#include "pblring/algebra.hpp"

#include <algorithm>
#include <set>

#include "pblring/errors.hpp"

namespace pblring {

namespace {

using W = std::vector<std::size_t>;
using Pred = bool (*)(const FiniteAlgebra&, const W&);

struct Axiom {
  const char* name;
  std::size_t arity;
  Pred holds;
};

// y ⊕ x := (x* ⊙ y*)⁻, i.e. oplus(a, b) = (b* ⊙ a*)⁻.
std::size_t oplus(const FiniteAlgebra& a, std::size_t lhs, std::size_t rhs) {
  return a.minus(a.t(a.star(rhs), a.star(lhs)));
}

bool bounded_lattice(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1], z = w[2];
  return a.m(x, y) == a.m(y, x) && a.j(x, y) == a.j(y, x) &&
         a.m(a.m(x, y), z) == a.m(x, a.m(y, z)) && a.j(a.j(x, y), z) == a.j(x, a.j(y, z)) &&
         a.m(x, a.j(x, y)) == x && a.j(x, a.m(x, y)) == x && a.m(x, x) == x &&
         a.j(x, x) == x && a.m(a.bottom, x) == a.bottom && a.j(x, a.top) == a.top &&
         ((a.m(x, y) == x) == (a.j(x, y) == y));
}

bool monoid(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1], z = w[2];
  return a.t(a.t(x, y), z) == a.t(x, a.t(y, z)) && a.t(x, a.top) == x && a.t(a.top, x) == x;
}

bool adjointness(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1], z = w[2];
  const bool lhs = a.leq(a.t(x, y), z);
  return lhs == a.leq(x, a.ri(y, z)) && lhs == a.leq(y, a.li(x, z));
}

bool divisibility(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1];
  const auto meet = a.m(x, y);
  return meet == a.t(a.ri(x, y), x) && meet == a.t(x, a.li(x, y));
}

bool prelinearity(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1];
  return a.j(a.ri(x, y), a.ri(y, x)) == a.top && a.j(a.li(x, y), a.li(y, x)) == a.top;
}

bool commutativity(const FiniteAlgebra& a, const W& w) { return a.t(w[0], w[1]) == a.t(w[1], w[0]); }

bool residuals_coincide(const FiniteAlgebra& a, const W& w) {
  return a.ri(w[0], w[1]) == a.li(w[0], w[1]);
}

bool pmv_associativity(const FiniteAlgebra& a, const W& w) {
  return a.t(w[0], a.t(w[1], w[2])) == a.t(a.t(w[0], w[1]), w[2]);
}

bool pmv_unit(const FiniteAlgebra& a, const W& w) {
  return a.t(w[0], a.top) == w[0] && a.t(a.top, w[0]) == w[0];
}

bool pmv_absorbing_bottom(const FiniteAlgebra& a, const W& w) {
  return a.t(w[0], a.bottom) == a.bottom && a.t(a.bottom, w[0]) == a.bottom;
}

bool pmv_bottom_complements(const FiniteAlgebra& a, const W&) {
  return a.star(a.bottom) == a.top && a.minus(a.bottom) == a.top;
}

bool pmv_complement_exchange(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1];
  return a.star(a.t(a.minus(x), a.minus(y))) == a.minus(a.t(a.star(x), a.star(y)));
}

bool pmv_meet_via_sum(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1];
  const auto v1 = a.t(x, oplus(a, a.minus(x), y));
  const auto v2 = a.t(y, oplus(a, a.minus(y), x));
  const auto v3 = a.t(oplus(a, x, a.star(y)), y);
  const auto v4 = a.t(oplus(a, y, a.star(x)), x);
  return v1 == v2 && v2 == v3 && v3 == v4;
}

bool pmv_join_exchange(const FiniteAlgebra& a, const W& w) {
  const auto x = w[0], y = w[1];
  return oplus(a, x, a.t(a.star(x), y)) == oplus(a, a.t(x, a.star(y)), y);
}

bool pmv_double_complement(const FiniteAlgebra& a, const W& w) {
  return a.minus(a.star(w[0])) == w[0];
}

constexpr Axiom kPseudoBl[] = {
    {"bounded-lattice", 3, bounded_lattice},
    {"monoid", 3, monoid},
    {"adjointness", 3, adjointness},
    {"divisibility", 2, divisibility},
    {"prelinearity", 2, prelinearity},
};

constexpr Axiom kBlExtra[] = {
    {"commutativity", 2, commutativity},
    {"residuals-coincide", 2, residuals_coincide},
};

constexpr Axiom kPseudoMv[] = {
    {"associativity", 3, pmv_associativity},
    {"unit", 1, pmv_unit},
    {"absorbing-bottom", 1, pmv_absorbing_bottom},
    {"bottom-complements", 0, pmv_bottom_complements},
    {"complement-exchange", 2, pmv_complement_exchange},
    {"meet-via-sum", 2, pmv_meet_via_sum},
    {"join-exchange", 2, pmv_join_exchange},
    {"double-complement", 1, pmv_double_complement},
};

AxiomReport run_axiom(const FiniteAlgebra& a, const Axiom& ax) {
  AxiomReport rep{ax.name, true, {}};
  W w(ax.arity, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < ax.arity; ++i) total *= a.size;
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (std::size_t i = ax.arity; i-- > 0;) {
      w[i] = rest % a.size;
      rest /= a.size;
    }
    if (!ax.holds(a, w)) {
      rep.holds = false;
      rep.witness = w;
      return rep;
    }
  }
  return rep;
}

template <std::size_t N>
void run_all(const FiniteAlgebra& a, const Axiom (&axioms)[N], std::vector<AxiomReport>& out) {
  for (const auto& ax : axioms) out.push_back(run_axiom(a, ax));
}

}  // namespace

bool FiniteAlgebra::well_formed() const {
  const auto cells = size * size;
  for (const Table* t : {&meet, &join, &times, &rimp, &limp}) {
    if (t->size() != cells) return false;
    if (std::any_of(t->begin(), t->end(), [&](std::size_t v) { return v >= size; })) return false;
  }
  if (size == 0 || bottom >= size || top >= size) return false;
  return size == 1 || bottom != top;
}

FiniteAlgebra FiniteAlgebra::from_ops(
    std::size_t size, std::size_t bottom, std::size_t top,
    const std::function<std::size_t(std::size_t, std::size_t)>& meet,
    const std::function<std::size_t(std::size_t, std::size_t)>& join,
    const std::function<std::size_t(std::size_t, std::size_t)>& times,
    const std::function<std::size_t(std::size_t, std::size_t)>& rimp,
    const std::function<std::size_t(std::size_t, std::size_t)>& limp) {
  FiniteAlgebra a;
  a.size = size;
  a.bottom = bottom;
  a.top = top;
  for (auto* t : {&a.meet, &a.join, &a.times, &a.rimp, &a.limp}) t->resize(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const auto c = x * size + y;
      a.meet[c] = meet(x, y);
      a.join[c] = join(x, y);
      a.times[c] = times(x, y);
      a.rimp[c] = rimp(x, y);
      a.limp[c] = limp(x, y);
    }
  }
  return a;
}

bool all_hold(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

FiniteAlgebra ideal_algebra(const IdealLattice& lat) {
  return FiniteAlgebra::from_ops(
      lat.size(), lat.bottom(), lat.top(),
      [&](auto x, auto y) { return lat.meet(x, y); },
      [&](auto x, auto y) { return lat.join(x, y); },
      [&](auto x, auto y) { return lat.product(x, y); },
      [&](auto x, auto y) { return lat.rimp(x, y); },
      [&](auto x, auto y) { return lat.limp(x, y); });
}

std::vector<AxiomReport> check_pseudo_bl(const FiniteAlgebra& a) {
  std::vector<AxiomReport> out;
  run_all(a, kPseudoBl, out);
  return out;
}

std::vector<AxiomReport> check_bl(const FiniteAlgebra& a) {
  auto out = check_pseudo_bl(a);
  run_all(a, kBlExtra, out);
  return out;
}

std::vector<AxiomReport> check_pseudo_mv(const FiniteAlgebra& a) {
  std::vector<AxiomReport> out;
  run_all(a, kPseudoMv, out);
  return out;
}

bool axiom_holds_at(const FiniteAlgebra& a, const std::string& name, const std::vector<std::size_t>& w) {
  auto lookup = [&](const auto& table) -> const Axiom* {
    for (const auto& ax : table) {
      if (name == ax.name) return &ax;
    }
    return nullptr;
  };
  const Axiom* ax = lookup(kPseudoBl);
  if (!ax) ax = lookup(kBlExtra);
  if (!ax) ax = lookup(kPseudoMv);
  if (!ax || w.size() != ax->arity) return true;
  return ax->holds(a, w);
}

std::vector<std::size_t> double_negation_fixed(const FiniteAlgebra& a) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.size; ++x) {
    if (a.star(a.star(x)) == x) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> mv_center(const FiniteAlgebra& a) {
  std::set<std::size_t> center;
  for (std::size_t x = 0; x < a.size; ++x) center.insert(a.star(x));
  std::vector<std::size_t> out(center.begin(), center.end());
  const auto fixed = double_negation_fixed(a);
  if (!std::includes(fixed.begin(), fixed.end(), out.begin(), out.end()) && all_hold(check_bl(a))) {
    throw InvariantViolation("MV-center of a BL-algebra is not double-negation closed");
  }
  return out;
}

AnnihilatorParts annihilator_parts(const IdealLattice& lat) {
  std::set<IdealLattice::Index> an_star, an_minus;
  AnnihilatorParts parts;
  for (IdealLattice::Index i = 0; i < lat.size(); ++i) {
    an_star.insert(lat.ann_star(i));
    an_minus.insert(lat.ann_minus(i));
    if (lat.ann_star(i) == lat.bottom()) parts.d_star.push_back(i);
    if (lat.ann_minus(i) == lat.bottom()) parts.d_minus.push_back(i);
  }
  parts.an_star.assign(an_star.begin(), an_star.end());
  parts.an_minus.assign(an_minus.begin(), an_minus.end());
  return parts;
}

}  // namespace pblring
