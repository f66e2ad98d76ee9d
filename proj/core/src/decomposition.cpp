#include "pblring/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pblring/algebra.hpp"

namespace pblring {

namespace {

bool is_chain(const IdealLattice& L, const std::vector<Index>& items, std::vector<Index>& witness) {
  for (Index a : items) {
    for (Index b : items) {
      if (!L.leq(a, b) && !L.leq(b, a)) {
        witness = {a, b};
        return false;
      }
    }
  }
  return true;
}

bool dense_both(const IdealLattice& L, Index i) {
  return L.ann_star(i) == L.bottom() && L.ann_minus(i) == L.bottom();
}

}  // namespace

std::vector<FactorCheck> check_irreducible_factor(const IdealLattice& L) {
  std::vector<FactorCheck> out;

  {
    FactorCheck c{"pseudo-bl-algebra", true, {}};
    for (const auto& rep : check_pseudo_bl(ideal_algebra(L))) {
      if (!rep.holds) {
        c.holds = false;
        c.witness = rep.witness;
        break;
      }
    }
    out.push_back(c);
  }

  std::vector<Index> atoms;
  for (Index i = 0; i < L.size(); ++i) {
    if (i == L.bottom()) continue;
    bool minimal = true;
    for (Index j = 0; j < L.size() && minimal; ++j) {
      if (j != i && j != L.bottom() && L.leq(j, i)) minimal = false;
    }
    if (minimal) atoms.push_back(i);
  }
  out.push_back({"unique-atom", atoms.size() == 1, atoms});

  std::vector<bool> annihilator(L.size());
  {
    FactorCheck c{"annihilator-or-dense", true, {}};
    for (Index i = 0; i < L.size(); ++i) {
      annihilator[i] = is_annihilator_ideal(L, i).holds;
      if (!annihilator[i] && !dense_both(L, i) && c.holds) {
        c.holds = false;
        c.witness = {i};
      }
    }
    out.push_back(c);
  }

  const auto parts = annihilator_parts(L);
  {
    FactorCheck c{"an-star-chain", true, {}};
    c.holds = is_chain(L, parts.an_star, c.witness);
    out.push_back(c);
    FactorCheck d{"an-minus-chain", true, {}};
    d.holds = is_chain(L, parts.an_minus, d.witness);
    out.push_back(d);
  }

  {
    FactorCheck c{"heart-annihilator", false, {}};
    if (atoms.size() == 1) {
      c.holds = annihilator[atoms.front()];
      c.witness = atoms;
    }
    out.push_back(c);
  }

  {
    FactorCheck c{"annihilators-below-dense", true, {}};
    auto check_side = [&](const std::vector<Index>& an, const std::vector<Index>& dense) {
      for (Index a : an) {
        if (a == L.top()) continue;
        for (Index d : dense) {
          if (!L.leq(a, d) && c.holds) {
            c.holds = false;
            c.witness = {a, d};
          }
        }
      }
    };
    check_side(parts.an_star, parts.d_star);
    check_side(parts.an_minus, parts.d_minus);
    out.push_back(c);
  }

  {
    FactorCheck c{"dense-residual-fix", true, {}};
    for (Index i = 0; i < L.size() && c.holds; ++i) {
      if (!annihilator[i] || i == L.top()) continue;
      for (Index j = 0; j < L.size(); ++j) {
        if (!dense_both(L, j) || !L.leq(i, j)) continue;
        if (L.rimp(j, i) != i || L.limp(j, i) != i) {
          c.holds = false;
          c.witness = {i, j};
          break;
        }
      }
    }
    out.push_back(c);
  }

  {
    FactorCheck c{"residual-density", true, {}};
    for (Index i = 0; i < L.size() && c.holds; ++i) {
      for (Index j = 0; j < L.size(); ++j) {
        const bool forward = dense_both(L, L.rimp(i, j)) && dense_both(L, L.limp(i, j));
        const bool backward = dense_both(L, L.rimp(j, i)) && dense_both(L, L.limp(j, i));
        if (!forward && !backward) {
          c.holds = false;
          c.witness = {i, j};
          break;
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

bool FactorReport::all_checks_pass() const {
  return subdirectly_irreducible && pseudo_bl &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

DecompositionResult subdirect_decomposition(const IdealLattice& L) {
  DecompositionResult res;
  const auto& r = L.ring();
  res.input_pseudo_bl = is_pseudo_bl_ring(L).holds;

  std::map<Index, std::size_t> factor_of_kernel;
  for (Element x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    KernelChoice kc;
    kc.x = x;
    for (Index i = 0; i < L.size(); ++i) {
      if (L[i].contains(x)) continue;
      bool maximal = true;
      for (Index j = 0; j < L.size() && maximal; ++j) {
        if (j != i && !L[j].contains(x) && L.leq(i, j)) maximal = false;
      }
      if (maximal) kc.maximal_excluders.push_back(i);
    }
    kc.kernel = kc.maximal_excluders.front();
    auto [it, fresh] = factor_of_kernel.emplace(kc.kernel, res.factors.size());
    if (fresh) {
      FactorReport f;
      f.kernel = kc.kernel;
      auto q = std::make_shared<Quotient>(quotient(r, L[kc.kernel]));
      q->ring.set_provenance(r.provenance() + "/K" + std::to_string(kc.kernel));
      auto qring = std::make_shared<const FiniteRing>(q->ring);
      f.lattice = std::make_shared<const IdealLattice>(IdealLattice::compute(qring));
      f.quotient = std::move(q);
      f.subdirectly_irreducible = is_subdirectly_irreducible(*f.lattice).holds;
      f.pseudo_bl = is_pseudo_bl_ring(*f.lattice).holds;
      f.checks = check_irreducible_factor(*f.lattice);
      res.factors.push_back(std::move(f));
    }
    res.factors[it->second].elements.push_back(x);
    res.kernels.push_back(std::move(kc));
  }

  Index meet = L.top();
  for (const auto& f : res.factors) meet = L.meet(meet, f.kernel);
  res.kernels_meet_to_zero = meet == L.bottom();

  std::set<std::vector<Element>> images;
  for (Element x = 0; x < r.order(); ++x) {
    std::vector<Element> image;
    for (const auto& f : res.factors) image.push_back(f.quotient->projection[x]);
    images.insert(std::move(image));
  }
  res.embedding_injective = images.size() == r.order();
  return res;
}

}  // namespace pblring
