#include "pblring/classify.hpp"

#include <algorithm>
#include <set>

#include "pblring/algebra.hpp"
#include "pblring/constructors.hpp"
#include "pblring/errors.hpp"

namespace pblring {

Verdict check_pblr1(const IdealLattice& L) {
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      const auto meet = L.meet(i, j);
      if (L.product(i, L.limp(i, j)) != meet || L.product(L.rimp(i, j), i) != meet) {
        return {false, {i, j}, {}, "I∩J differs from I·(I⇝J) or (I→J)·I"};
      }
    }
  }
  return {true, {}, {}, {}};
}

Verdict check_pblr2(const IdealLattice& L) {
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      if (L.join(L.rimp(i, j), L.rimp(j, i)) != L.top() ||
          L.join(L.limp(i, j), L.limp(j, i)) != L.top()) {
        return {false, {i, j}, {}, "residual sum is a proper ideal"};
      }
    }
  }
  return {true, {}, {}, {}};
}

Verdict check_pblr3(const IdealLattice& L) {
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      if (L.meet(i, j) != L.bottom()) continue;
      if (L.join(L.ann_star(i), L.ann_star(j)) != L.top() ||
          L.join(L.ann_minus(i), L.ann_minus(j)) != L.top()) {
        return {false, {i, j}, {}, "I∩J = 0 but the annihilators do not sum to R"};
      }
    }
  }
  return {true, {}, {}, {}};
}

Verdict is_multiplication_ring(const IdealLattice& L) {
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      if (!L.leq(i, j)) continue;
      bool right = false;
      bool left = false;
      for (Index k = 0; k < L.size() && !(right && left); ++k) {
        right = right || L.product(j, k) == i;
        left = left || L.product(k, j) == i;
      }
      if (!right || !left) return {false, {i, j}, {}, "I ⊆ J without a factorisation I = J·K = K'·J"};
    }
  }
  return {true, {}, {}, {}};
}

PseudoBlVerdict is_pseudo_bl_ring(const IdealLattice& L) {
  PseudoBlVerdict v;
  v.generated_by_idempotents = generated_by_idempotents(L.ring()).holds;
  v.pblr1 = check_pblr1(L);
  v.pblr2 = check_pblr2(L);
  v.holds = v.generated_by_idempotents && v.pblr1.holds && v.pblr2.holds;
  v.bl_ring = v.holds && L.ring().is_commutative();
  v.lukasiewicz_ring = all_hold(check_pseudo_mv(ideal_algebra(L)));
  v.degenerate = L.ring().order() == 1;
  return v;
}

Verdict is_von_neumann(const IdealLattice& L) {
  const auto& r = L.ring();
  if (!units(r).two_sided) throw HypothesisError("Von Neumann test requires a ring with identity");
  for (Index p : prime_ideals(L)) {
    const auto q = quotient(r, L[p]);
    if (!is_division_ring(q.ring)) return {false, {p}, {}, "R/P is not a division ring"};
  }
  return {true, {}, {}, {}};
}

BaerResult is_baer(const IdealLattice& L) {
  const auto& r = L.ring();
  const auto idem = idempotents(r);
  std::vector<ElementSet> left_multiples;   // eR
  std::vector<ElementSet> right_multiples;  // Re
  for (Element e : idem) {
    ElementSet er(r.order()), re(r.order());
    for (Element x = 0; x < r.order(); ++x) {
      er.insert(r.mul(e, x));
      re.insert(r.mul(x, e));
    }
    left_multiples.push_back(std::move(er));
    right_multiples.push_back(std::move(re));
  }
  BaerResult res;
  res.holds = true;
  res.star_idempotent.assign(L.size(), std::nullopt);
  res.minus_idempotent.assign(L.size(), std::nullopt);
  for (Index i = 0; i < L.size(); ++i) {
    const auto& star = L[L.ann_star(i)].members();
    const auto& minus = L[L.ann_minus(i)].members();
    for (std::size_t k = 0; k < idem.size(); ++k) {
      if (!res.star_idempotent[i] && left_multiples[k] == star) res.star_idempotent[i] = idem[k];
      if (!res.minus_idempotent[i] && right_multiples[k] == minus) res.minus_idempotent[i] = idem[k];
    }
    if ((!res.star_idempotent[i] || !res.minus_idempotent[i]) && res.holds) {
      res.holds = false;
      res.failing = i;
    }
  }
  return res;
}

SubdirectIrreducibility is_subdirectly_irreducible(const IdealLattice& L) {
  Index meet = L.top();
  for (Index i = 0; i < L.size(); ++i) {
    if (i != L.bottom()) meet = L.meet(meet, i);
  }
  if (meet == L.bottom()) return {false, std::nullopt};
  return {true, meet};
}

SpecialPrimary is_special_primary(const IdealLattice& L) {
  SpecialPrimary sp;
  const auto maxes = maximal_ideals(L);
  if (maxes.size() != 1) return sp;
  const Index m = maxes.front();
  sp.maximal = m;
  Index power = m;
  std::set<Index> seen;
  while (seen.insert(power).second) {
    sp.powers.push_back(power);
    power = L.product(power, m);
  }
  sp.holds = true;
  for (Index i = 0; i < L.size(); ++i) {
    if (i != L.top() && !seen.contains(i)) {
      sp.holds = false;
      sp.failing = i;
      break;
    }
  }
  return sp;
}

bool is_prime_ring(const IdealLattice& L) { return is_prime(L, L.bottom()); }

namespace {

template <class Kill>
ElementSet n_set(const IdealLattice& L, Index p, Kill kills) {
  if (!is_prime(L, p)) throw HypothesisError("N*(P)/N⁻(P) requires a prime ideal P");
  const auto& r = L.ring();
  const auto& prime = L[p];
  ElementSet out(r.order());
  for (Element x = 0; x < r.order(); ++x) {
    for (Element s = 0; s < r.order(); ++s) {
      if (!prime.contains(s) && kills(r, x, s)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace

ElementSet n_star(const IdealLattice& L, Index p) {
  return n_set(L, p, [](const FiniteRing& r, Element x, Element s) { return r.mul(x, s) == r.zero(); });
}

ElementSet n_minus(const IdealLattice& L, Index p) {
  return n_set(L, p, [](const FiniteRing& r, Element x, Element s) { return r.mul(s, x) == r.zero(); });
}

NStarMeetResult check_n_star_meet(const IdealLattice& L) {
  NStarMeetResult res;
  const auto& r = L.ring();
  res.hypothesis_ok = generated_by_idempotents(r).holds;
  res.primes = prime_ideals(L);
  res.star_meet = ElementSet::full(r.order());
  res.minus_meet = ElementSet::full(r.order());
  if (res.primes.empty()) {
    res.vacuous = true;
    res.holds = true;
    return res;
  }
  for (Index p : res.primes) {
    res.star_meet &= n_star(L, p);
    res.minus_meet &= n_minus(L, p);
  }
  res.holds = res.star_meet.count() == 1 && res.minus_meet.count() == 1;
  return res;
}

PrimeMaximal check_prime_maximal(const IdealLattice& L) {
  PrimeMaximal pm;
  pm.applicable = is_pseudo_bl_ring(L).holds;
  pm.holds = true;
  for (Index p : prime_ideals(L)) {
    if (!is_maximal(L, p)) {
      pm.holds = false;
      pm.witness = p;
      break;
    }
  }
  return pm;
}

const ReportEntry& ClassificationReport::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no report entry named " + name);
}

ClassificationReport classify(const IdealLattice& L) {
  const auto& r = L.ring();
  ClassificationReport rep;
  rep.ring = r.provenance();
  rep.order = r.order();
  rep.ideal_count = L.size();
  rep.commutative = r.is_commutative();
  auto add = [&](std::string name, bool verdict, std::vector<Index> ideals = {},
                 std::vector<Element> elements = {}, std::string notes = {}) {
    rep.entries.push_back({std::move(name), verdict, std::move(ideals), std::move(elements), std::move(notes)});
  };
  auto from = [&](std::string name, const Verdict& v) { add(std::move(name), v.holds, v.ideals, v.elements, v.note); };

  const auto cover = generated_by_idempotents(r);
  add("generated-by-idempotents", cover.holds, {},
      cover.uncovered ? std::vector<Element>{*cover.uncovered} : std::vector<Element>{},
      cover.holds ? "" : "element without a two-sided idempotent unit");

  const auto pbl = is_pseudo_bl_ring(L);
  const auto mult = is_multiplication_ring(L);
  if (mult.holds != pbl.pblr1.holds) {
    throw InvariantViolation("multiplication-ring and PBLR-1 verdicts disagree on " + rep.ring);
  }
  from("multiplication-ring", mult);
  from("pblr1", pbl.pblr1);
  from("pblr2", pbl.pblr2);
  from("pblr3", check_pblr3(L));
  add("pseudo-bl-ring", pbl.holds, {}, {}, pbl.degenerate ? "zero ring: holds vacuously" : "");
  add("bl-ring", pbl.bl_ring, {}, {}, r.is_commutative() ? "" : "ring is not commutative");
  add("lukasiewicz-ring", pbl.lukasiewicz_ring, {}, {},
      pbl.lukasiewicz_ring ? "ideal algebra satisfies the pseudo MV axioms" : "");

  const auto red = is_reduced(r);
  add("reduced", red.reduced, {}, red.nilpotent ? std::vector<Element>{*red.nilpotent} : std::vector<Element>{},
      red.reduced ? "" : "nonzero nilpotent element");

  const auto baer = is_baer(L);
  add("baer", baer.holds, baer.failing ? std::vector<Index>{*baer.failing} : std::vector<Index>{}, {},
      baer.holds ? "" : "annihilator not generated by an idempotent");

  try {
    auto vn = is_von_neumann(L);
    vn.note = vn.note.empty() ? "every prime quotient is a division ring; not classical regularity" : vn.note;
    from("von-neumann", vn);
  } catch (const HypothesisError&) {
    add("von-neumann", false, {}, {}, "not applicable: ring has no identity");
  }

  const bool prime_ring = is_prime_ring(L);
  add("prime-ring", prime_ring, {}, {}, prime_ring ? "{0} is a prime ideal" : "");

  const auto si = is_subdirectly_irreducible(L);
  add("subdirectly-irreducible", si.holds, si.heart ? std::vector<Index>{*si.heart} : std::vector<Index>{}, {},
      si.holds ? "witness is the heart" : "");

  const auto sp = is_special_primary(L);
  std::vector<Index> sp_wit;
  if (sp.maximal) sp_wit.push_back(*sp.maximal);
  if (sp.failing) sp_wit.push_back(*sp.failing);
  add("special-primary", sp.holds, sp_wit, {},
      sp.maximal ? (sp.holds ? "witness is the maximal ideal" : "witness: maximal ideal, non-power ideal")
                 : "no unique maximal ideal");

  add("degenerate", pbl.degenerate, {}, {}, pbl.degenerate ? "zero ring" : "");
  return rep;
}

}  // namespace pblring
