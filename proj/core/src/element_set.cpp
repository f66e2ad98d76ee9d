#include "pblring/element_set.hpp"

#include <algorithm>

namespace pblring {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> elems)
    : ElementSet(universe) {
  for (Element e : elems) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (Element e = 0; e < universe; ++e) s.insert(e);
  return s;
}

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::size_t ElementSet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ universe_);
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal cardinality: the set owning the lowest differing element sorts first.
  const auto aw = a.elements();
  const auto bw = b.elements();
  return std::lexicographical_compare(aw.begin(), aw.end(), bw.begin(), bw.end());
}

}  // namespace pblring
