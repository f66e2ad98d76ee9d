#pragma once

// Brute-force reference implementations. They read only the raw operation
// tables and never call the library's ideal machinery.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "pblring/finite_ring.hpp"

namespace oracle {

using pblring::Element;
using Set = std::vector<Element>;  // sorted members

inline Set everything(const pblring::FiniteRing& r) {
  Set s(r.order());
  for (Element i = 0; i < r.order(); ++i) s[i] = i;
  return s;
}

inline bool contains(const Set& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool is_ideal(const pblring::FiniteRing& r, const Set& s) {
  if (!contains(s, r.zero())) return false;
  for (Element a : s) {
    if (!contains(s, r.neg(a))) return false;
    for (Element b : s) {
      if (!contains(s, r.add(a, b))) return false;
    }
    for (Element x = 0; x < r.order(); ++x) {
      if (!contains(s, r.mul(a, x)) || !contains(s, r.mul(x, a))) return false;
    }
  }
  return true;
}

/// Every ideal, by filtering all 2^n subsets. Sorted by (size, members).
inline std::vector<Set> all_ideals(const pblring::FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> r.zero() & 1)) continue;
    Set s;
    for (Element i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    if (is_ideal(r, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Additive closure of a set containing zero.
inline Set additive_closure(const pblring::FiniteRing& r, Set seed) {
  std::set<Element> s(seed.begin(), seed.end());
  s.insert(r.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur) {
      for (Element b : cur) grew |= s.insert(r.add(a, b)).second;
      grew |= s.insert(r.neg(a)).second;
    }
  }
  return Set(s.begin(), s.end());
}

inline Set ideal_generated(const pblring::FiniteRing& r, const Set& seed) {
  std::set<Element> s(seed.begin(), seed.end());
  s.insert(r.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur) {
      grew |= s.insert(r.neg(a)).second;
      for (Element b : cur) grew |= s.insert(r.add(a, b)).second;
      for (Element x = 0; x < r.order(); ++x) {
        grew |= s.insert(r.mul(a, x)).second;
        grew |= s.insert(r.mul(x, a)).second;
      }
    }
  }
  return Set(s.begin(), s.end());
}

/// Finite sums of products a·b with a ∈ I, b ∈ J.
inline Set product(const pblring::FiniteRing& r, const Set& i, const Set& j) {
  Set prods;
  for (Element a : i) {
    for (Element b : j) prods.push_back(r.mul(a, b));
  }
  std::sort(prods.begin(), prods.end());
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  return additive_closure(r, prods);
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Set sum(const pblring::FiniteRing& r, const Set& a, const Set& b) {
  std::set<Element> s;
  for (Element x : a) {
    for (Element y : b) s.insert(r.add(x, y));
  }
  return Set(s.begin(), s.end());
}

/// {x : xI ⊆ J}
inline Set rimp(const pblring::FiniteRing& r, const Set& i, const Set& j) {
  Set out;
  for (Element x = 0; x < r.order(); ++x) {
    if (std::all_of(i.begin(), i.end(), [&](Element a) { return contains(j, r.mul(x, a)); })) out.push_back(x);
  }
  return out;
}

/// {x : Ix ⊆ J}
inline Set limp(const pblring::FiniteRing& r, const Set& i, const Set& j) {
  Set out;
  for (Element x = 0; x < r.order(); ++x) {
    if (std::all_of(i.begin(), i.end(), [&](Element a) { return contains(j, r.mul(a, x)); })) out.push_back(x);
  }
  return out;
}

inline bool is_prime(const pblring::FiniteRing& r, const std::vector<Set>& ideals, const Set& p) {
  if (p.size() == r.order()) return false;
  for (const auto& i : ideals) {
    for (const auto& j : ideals) {
      if (subset(product(r, i, j), p) && !subset(i, p) && !subset(j, p)) return false;
    }
  }
  return true;
}

/// Definitional multiplication-ring test: I ⊆ J gives K, K' with I = J·K = K'·J.
inline bool is_multiplication_ring(const pblring::FiniteRing& r, const std::vector<Set>& ideals) {
  for (const auto& i : ideals) {
    for (const auto& j : ideals) {
      if (!subset(i, j)) continue;
      bool right = false, left = false;
      for (const auto& k : ideals) {
        right = right || product(r, j, k) == i;
        left = left || product(r, k, j) == i;
      }
      if (!right || !left) return false;
    }
  }
  return true;
}

/// Division ring test straight from the definition.
inline bool is_division_ring(const pblring::FiniteRing& r) {
  std::optional<Element> one;
  for (Element e = 0; e < r.order() && !one; ++e) {
    bool ok = true;
    for (Element x = 0; x < r.order() && ok; ++x) ok = r.mul(e, x) == x && r.mul(x, e) == x;
    if (ok) one = e;
  }
  if (!one || *one == r.zero()) return false;
  for (Element x = 0; x < r.order(); ++x) {
    if (x == r.zero()) continue;
    bool inv = false;
    for (Element y = 0; y < r.order() && !inv; ++y) inv = r.mul(x, y) == *one && r.mul(y, x) == *one;
    if (!inv) return false;
  }
  return true;
}

/// R/P as a ring on coset indices, built by brute force.
inline pblring::FiniteRing quotient(const pblring::FiniteRing& r, const Set& p) {
  std::vector<Element> coset(r.order(), 0);
  std::vector<Element> reps;
  std::vector<bool> seen(r.order(), false);
  for (Element x = 0; x < r.order(); ++x) {
    if (seen[x]) continue;
    for (Element a : p) {
      const Element y = r.add(x, a);
      seen[y] = true;
      coset[y] = static_cast<Element>(reps.size());
    }
    reps.push_back(x);
  }
  const std::size_t n = reps.size();
  pblring::FiniteRing::Table add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint16_t>(coset[r.add(reps[a], reps[b])]);
      mul[a * n + b] = static_cast<std::uint16_t>(coset[r.mul(reps[a], reps[b])]);
    }
  }
  return pblring::FiniteRing::trusted(n, std::move(add), std::move(mul), coset[r.zero()]);
}

/// The literal Von Neumann definition: every R/P with P prime is a division ring.
inline bool is_von_neumann(const pblring::FiniteRing& r, const std::vector<Set>& ideals) {
  for (const auto& p : ideals) {
    if (oracle::is_prime(r, ideals, p) && !oracle::is_division_ring(oracle::quotient(r, p))) return false;
  }
  return true;
}

/// N*(P) = {x : xs = 0 for some s ∉ P}
inline Set n_star(const pblring::FiniteRing& r, const Set& p) {
  Set out;
  for (Element x = 0; x < r.order(); ++x) {
    for (Element s = 0; s < r.order(); ++s) {
      if (!contains(p, s) && r.mul(x, s) == r.zero()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace oracle
