#include "pblring/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>

#include "pblring/algebra.hpp"
#include "pblring/classify.hpp"
#include "pblring/constructors.hpp"
#include "pblring/decomposition.hpp"
#include "pblring/errors.hpp"

namespace pblring {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Vacuous: return "vacuous";
    case Outcome::SkippedTooLarge: return "skipped-too-large";
  }
  return "?";
}

const char* to_string(Tag t) {
  switch (t) {
    case Tag::Theorem: return "theorem";
    case Tag::Informational: return "informational";
    case Tag::Probe: return "probe";
  }
  return "?";
}

namespace {

// Matrix statements are instantiated with k = 2 on base rings up to this order.
// Without an identity M_2(R) has far more ideals, so the bound is lower.
constexpr std::size_t kMatrixBaseLimit = 8;
constexpr std::size_t kMatrixNonUnitalLimit = 4;
// Self direct sums R ⊕ R are built for rings up to this order.
constexpr std::size_t kSelfSumLimit = 32;

// Lazily computed facts about one ring; quotients are cached per ideal.
class RingContext {
 public:
  RingContext(RingPtr ring, const RingSpec* spec) : ring_(std::move(ring)), spec_(spec) {}

  const RingSpec* spec() const { return spec_; }
  const FiniteRing& ring() const { return *ring_; }

  const IdealLattice& L() {
    if (!lattice_) lattice_ = std::make_unique<IdealLattice>(IdealLattice::compute(ring_));
    return *lattice_;
  }
  const PseudoBlVerdict& pbl() {
    if (!pbl_) pbl_ = is_pseudo_bl_ring(L());
    return *pbl_;
  }
  const Verdict& mult() {
    if (!mult_) mult_ = is_multiplication_ring(L());
    return *mult_;
  }
  const Verdict& pblr3() {
    if (!pblr3_) pblr3_ = check_pblr3(L());
    return *pblr3_;
  }
  bool unital() {
    if (!unital_) unital_ = units(*ring_).two_sided.has_value();
    return *unital_;
  }
  const BaerResult& baer() {
    if (!baer_) baer_ = is_baer(L());
    return *baer_;
  }
  // Empty when the ring has no identity.
  std::optional<bool> von_neumann() {
    if (!unital()) return std::nullopt;
    if (!vn_) vn_ = is_von_neumann(L()).holds;
    return vn_;
  }
  bool algebra_pseudo_bl() {
    if (!algebra_pbl_) algebra_pbl_ = all_hold(check_pseudo_bl(ideal_algebra(L())));
    return *algebra_pbl_;
  }
  const DecompositionResult& decomposition() {
    if (!decomposition_) decomposition_ = std::make_unique<DecompositionResult>(subdirect_decomposition(L()));
    return *decomposition_;
  }

  const Quotient& quotient_map(Index i) {
    ensure_quotient(i);
    return *quotients_[i];
  }
  RingContext& quotient_ctx(Index i) {
    ensure_quotient(i);
    return *quotient_ctx_[i];
  }

  // M_2(R) and its context.
  RingContext& matrix_ctx() {
    if (!matrix_) {
      auto m = matrix_ring(*ring_, 2);
      m.set_provenance("matrix(" + ring_->provenance() + ",2)");
      matrix_ = std::make_unique<RingContext>(share(std::move(m)), nullptr);
    }
    return *matrix_;
  }

 private:
  void ensure_quotient(Index i) {
    if (quotients_.empty()) {
      quotients_.resize(L().size());
      quotient_ctx_.resize(L().size());
    }
    if (!quotients_[i]) {
      quotients_[i] = std::make_unique<Quotient>(quotient(*ring_, L()[i]));
      quotient_ctx_[i] = std::make_unique<RingContext>(share(quotients_[i]->ring), nullptr);
    }
  }

  RingPtr ring_;
  const RingSpec* spec_;
  std::unique_ptr<IdealLattice> lattice_;
  std::optional<PseudoBlVerdict> pbl_;
  std::optional<Verdict> mult_, pblr3_;
  std::optional<bool> unital_, vn_, algebra_pbl_;
  std::optional<BaerResult> baer_;
  std::unique_ptr<DecompositionResult> decomposition_;
  std::vector<std::unique_ptr<Quotient>> quotients_;
  std::vector<std::unique_ptr<RingContext>> quotient_ctx_;
  std::unique_ptr<RingContext> matrix_;
};

Cell pass(std::string detail = {}) { return {Outcome::Pass, {}, std::move(detail)}; }
Cell fail(std::vector<std::size_t> w, std::string detail) { return {Outcome::Fail, std::move(w), std::move(detail)}; }
Cell vacuous(std::string detail) { return {Outcome::Vacuous, {}, std::move(detail)}; }
Cell too_large(std::string detail) { return {Outcome::SkippedTooLarge, {}, std::move(detail)}; }

Cell implication(bool hypothesis, bool conclusion, const char* hyp_text, std::string fail_text,
                 std::vector<std::size_t> w = {}) {
  if (!hypothesis) return vacuous(std::string("not ") + hyp_text);
  return conclusion ? pass() : fail(std::move(w), std::move(fail_text));
}

Cell biconditional(bool a, bool b, std::string detail) {
  if (a == b) return pass();
  return fail({}, std::move(detail) + (a ? " (left true, right false)" : " (left false, right true)"));
}

// Index of the ideal of the quotient R/I that is the image of J.
Index image_index(RingContext& ctx, Index i, Index j) {
  const auto& q = ctx.quotient_map(i);
  auto& qc = ctx.quotient_ctx(i);
  ElementSet image(qc.ring().order());
  ctx.L()[j].members().for_each([&](Element x) { image.insert(q.projection[x]); });
  auto idx = qc.L().find(image);
  if (!idx) throw InvariantViolation("image of an ideal is not an ideal of the quotient");
  return *idx;
}

bool is_chain(const IdealLattice& L, const std::vector<Index>& xs, std::vector<std::size_t>& w) {
  for (auto a : xs) {
    for (auto b : xs) {
      if (!L.leq(a, b) && !L.leq(b, a)) {
        w = {a, b};
        return false;
      }
    }
  }
  return true;
}

// ---- properties ----

Cell lemma_3_2(RingContext& c) {
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      const Index m = L.meet(i, j), s = L.join(i, j);
      if (L.rimp(i, j) != L.rimp(i, m) || L.limp(i, j) != L.limp(i, m)) {
        return fail({i, j}, "I,J: residual into J differs from residual into I∩J");
      }
      if (L.rimp(s, j) != L.rimp(i, j) || L.rimp(s, i) != L.rimp(j, i) || L.limp(s, j) != L.limp(i, j) ||
          L.limp(s, i) != L.limp(j, i)) {
        return fail({i, j}, "I,J: residual from I+J differs");
      }
    }
  }
  return pass();
}

Cell lemma_3_3(RingContext& c) {
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      const Index m = L.meet(i, j);
      if (!L.leq(L.product(L.rimp(i, j), i), m) || !L.leq(L.product(i, L.limp(i, j)), m)) {
        return fail({i, j}, "I,J: residual product not inside I∩J");
      }
    }
  }
  return pass();
}

Cell prop_3_4_1(RingContext& c) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  const auto& L = c.L();
  bool incl = true;
  for (Index i = 0; i < L.size() && incl; ++i) {
    for (Index j = 0; j < L.size() && incl; ++j) {
      const Index m = L.meet(i, j);
      incl = L.leq(m, L.product(L.rimp(i, j), i)) && L.leq(m, L.product(i, L.limp(i, j)));
    }
  }
  return biconditional(c.pbl().pblr1.holds, incl, "PBLR-1 vs inclusions");
}

template <class Eq>
Cell prop_3_4_eq(RingContext& c, Eq eq, const char* what) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  const auto& L = c.L();
  bool right = true, left = true;
  std::vector<std::size_t> w;
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      for (Index k = 0; k < L.size(); ++k) {
        auto [r, l] = eq(L, i, j, k);
        if (!(r && l) && w.empty()) w = {i, j, k};
        right = right && r;
        left = left && l;
      }
    }
  }
  const bool p2 = c.pbl().pblr2.holds;
  if (p2 == right && p2 == left) return pass();
  return fail(w, std::string("PBLR-2 disagrees with ") + what);
}

Cell prop_3_4_2(RingContext& c) {
  return prop_3_4_eq(
      c,
      [](const IdealLattice& L, Index i, Index j, Index k) {
        return std::pair{L.rimp(L.meet(i, j), k) == L.join(L.rimp(i, k), L.rimp(j, k)),
                         L.limp(L.meet(i, j), k) == L.join(L.limp(i, k), L.limp(j, k))};
      },
      "(I∩J)→K = (I→K)+(J→K)");
}

Cell prop_3_4_3(RingContext& c) {
  return prop_3_4_eq(
      c,
      [](const IdealLattice& L, Index i, Index j, Index k) {
        return std::pair{L.rimp(i, L.join(j, k)) == L.join(L.rimp(i, j), L.rimp(i, k)),
                         L.limp(i, L.join(j, k)) == L.join(L.limp(i, j), L.limp(i, k))};
      },
      "I→(J+K) = (I→J)+(I→K)");
}

Cell prop_3_5(RingContext& c) {
  return biconditional(c.pbl().pblr1.holds, c.mult().holds, "PBLR-1 vs multiplication ring");
}

Cell prop_3_6(RingContext& c) {
  const bool alg = c.algebra_pseudo_bl();
  const auto& p = c.pbl();
  if ((p.pblr1.holds && p.pblr2.holds) != alg) {
    return fail({}, "PBLR-1 ∧ PBLR-2 disagrees with the pseudo BL axioms on A(R)");
  }
  return biconditional(p.holds, alg && p.generated_by_idempotents,
                       "pseudo BL-ring vs (A(R) pseudo BL ∧ generated by idempotents)");
}

bool matrix_hypothesis(RingContext& c, bool lukasiewicz_ok) {
  if (!c.unital()) return false;
  return c.mult().holds || (lukasiewicz_ok && c.pbl().lukasiewicz_ring);
}

Cell lemma_3_8(RingContext& c) {
  if (!matrix_hypothesis(c, false)) return vacuous("not a unital multiplication ring");
  if (c.ring().order() > kMatrixBaseLimit) return too_large("M_2(R) beyond the matrix instantiation bound");
  const auto& v = c.matrix_ctx().mult();
  return v.holds ? pass() : fail(v.ideals, "M_2(R): I ⊆ J without factorisation (ideals of M_2(R))");
}

Cell lemma_3_9(RingContext& c) {
  if (!matrix_hypothesis(c, false)) return vacuous("not a unital multiplication ring");
  if (c.ring().order() > kMatrixBaseLimit) return too_large("M_2(R) beyond the matrix instantiation bound");
  const auto& v = c.matrix_ctx().pbl().pblr1;
  return v.holds ? pass() : fail(v.ideals, "M_2(R) violates PBLR-1 (ideals of M_2(R))");
}

Cell lemma_3_10(RingContext& c) {
  if (c.ring().order() > (c.unital() ? kMatrixBaseLimit : kMatrixNonUnitalLimit)) {
    return too_large("M_2(R) beyond the matrix instantiation bound");
  }
  const auto& L = c.L();
  auto& mc = c.matrix_ctx();
  const auto& ML = mc.L();
  const auto mptr = ML.ring_ptr();
  std::vector<Ideal> lifted;
  for (Index i = 0; i < L.size(); ++i) lifted.push_back(matrix_ideal(L[i], 2, mptr));
  auto same = [](const Ideal& a, const Ideal& b) { return a.members() == b.members(); };
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      if (!same(lifted[L.join(i, j)], sum(lifted[i], lifted[j]))) return fail({i, j}, "M(I+J) ≠ M(I)+M(J)");
      if (!same(lifted[L.rimp(i, j)], residual_right(lifted[i], lifted[j]))) {
        return fail({i, j}, "M(I→J) ≠ M(I)→M(J)");
      }
      if (!same(lifted[L.limp(i, j)], residual_left(lifted[i], lifted[j]))) {
        return fail({i, j}, "M(I⇝J) ≠ M(I)⇝M(J)");
      }
    }
  }
  if (c.unital() && ML.size() != L.size()) {
    return fail({ML.size()}, "unital R but M_2(R) has a different number of ideals (witness: count)");
  }
  return pass();
}

Cell example_3_11(RingContext& c) {
  if (!matrix_hypothesis(c, true)) return vacuous("not a unital multiplication or Łukasiewicz ring");
  if (c.ring().order() > kMatrixBaseLimit) return too_large("M_2(R) beyond the matrix instantiation bound");
  return c.matrix_ctx().pbl().holds ? pass() : fail({}, "M_2(R) is not a pseudo BL-ring");
}

Cell lemma_3_12(RingContext& c) {
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    auto& qc = c.quotient_ctx(i);
    const auto& QL = qc.L();
    std::vector<Index> above;
    for (Index j = 0; j < L.size(); ++j) {
      if (L.leq(i, j)) above.push_back(j);
    }
    for (Index j : above) {
      const Index jq = image_index(c, i, j);
      if (QL.ann_star(jq) != image_index(c, i, L.rimp(j, i)) || QL.ann_minus(jq) != image_index(c, i, L.limp(j, i))) {
        return fail({i, j}, "I,J: annihilator of J/I is not the image of the residual into I");
      }
      for (Index k : above) {
        const Index kq = image_index(c, i, k);
        if (QL.rimp(jq, kq) != image_index(c, i, L.rimp(j, k)) ||
            QL.limp(jq, kq) != image_index(c, i, L.limp(j, k))) {
          return fail({i, j, k}, "I,J,K: quotient residual is not the image of the residual");
        }
      }
    }
  }
  return pass();
}

Cell prop_3_13(RingContext& c) {
  return implication(c.pbl().pblr2.holds, c.pblr3().holds, "PBLR-2", "PBLR-2 holds but PBLR-3 fails", c.pblr3().ideals);
}

Cell prop_3_14(RingContext& c) {
  const auto& L = c.L();
  bool all = true;
  std::vector<std::size_t> w;
  for (Index i = 0; i < L.size() && all; ++i) {
    if (!c.quotient_ctx(i).pblr3().holds) {
      all = false;
      w = {i};
    }
  }
  if (c.pbl().pblr2.holds == all) return pass();
  return fail(w, all ? "every quotient satisfies PBLR-3 but PBLR-2 fails"
                     : "PBLR-2 holds but R/I violates PBLR-3 (witness: I)");
}

Cell prop_3_15(RingContext& c) {
  if (!c.mult().holds) return vacuous("not a multiplication ring");
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    if (!c.quotient_ctx(i).mult().holds) return fail({i}, "R/I is not a multiplication ring (witness: I)");
  }
  return pass();
}

bool all_quotients_pblr3(RingContext& c) {
  for (Index i = 0; i < c.L().size(); ++i) {
    if (!c.quotient_ctx(i).pblr3().holds) return false;
  }
  return true;
}

Cell prop_3_16(RingContext& c) {
  const bool hyp = c.mult().holds && all_quotients_pblr3(c);
  return implication(hyp, c.pblr3().holds, "a multiplication ring with PBLR-3 quotients", "PBLR-3 fails",
                     c.pblr3().ideals);
}

Cell corollary_3_16a(RingContext& c) {
  if (!c.mult().holds) return vacuous("not a multiplication ring");
  return biconditional(c.pbl().pblr2.holds, c.pblr3().holds, "PBLR-2 vs PBLR-3");
}

Cell quotients_pseudo_bl(RingContext& c, bool include_top) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    if (i == L.top() && !include_top) continue;
    if (!c.quotient_ctx(i).pbl().holds) return fail({i}, "R/I is not a pseudo BL-ring (witness: I)");
  }
  return pass();
}

Cell corollary_3_17(RingContext& c) { return quotients_pseudo_bl(c, false); }

Cell prop_3_18(RingContext& c) {
  const auto pm = check_prime_maximal(c.L());
  if (!pm.applicable) return vacuous("not a pseudo BL-ring");
  if (pm.holds) return pass();
  return fail({*pm.witness}, "prime ideal that is not maximal");
}

Cell prop_3_19(RingContext& c) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    if (L.meet(i, L.ann_star(i)) != L.bottom() || L.meet(i, L.ann_minus(i)) != L.bottom()) continue;
    auto sub = ideal_as_ring(L[i]);
    const auto SL = IdealLattice::compute(share(std::move(sub.ring)));
    if (!is_pseudo_bl_ring(SL).holds) return fail({i}, "ideal I as a ring is not a pseudo BL-ring");
  }
  return pass();
}

Cell prop_3_20_1(RingContext& c) {
  const RingSpec* spec = c.spec();
  if (!spec || spec->kind != RingSpec::Kind::Product) return vacuous("not built as a direct product");
  for (const auto& child : spec->children) {
    const auto CL = IdealLattice::compute(share(build(child)));
    if (!is_pseudo_bl_ring(CL).holds) return vacuous("a factor is not a pseudo BL-ring");
  }
  return c.pbl().holds ? pass() : fail({}, "product of pseudo BL-rings is not a pseudo BL-ring");
}

Cell prop_3_20_2(RingContext& c) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  if (c.ring().order() > kSelfSumLimit) return too_large("R ⊕ R beyond the self-sum bound");
  auto r = share(c.ring());
  const std::vector<RingPtr> two = {r, r};
  const auto SL = IdealLattice::compute(share(direct_product(two).ring));
  return is_pseudo_bl_ring(SL).holds ? pass() : fail({}, "R ⊕ R is not a pseudo BL-ring");
}

Cell prop_3_20_3(RingContext& c) { return quotients_pseudo_bl(c, true); }

Cell lemma_3_22(RingContext& c) {
  const auto& L = c.L();
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      if (L.meet(i, j) != L.bottom()) continue;
      if (!L.leq(i, L.ann_star(j)) || !L.leq(i, L.ann_minus(j))) {
        return fail({i, j}, "I∩J = 0 but I is not inside both annihilators of J");
      }
    }
  }
  return pass();
}

Cell prop_3_23(RingContext& c) {
  if (!c.unital()) return vacuous("ring has no identity");
  if (!is_reduced(c.ring()).reduced) return vacuous("not reduced");
  return biconditional(c.pblr3().holds, c.baer().holds, "PBLR-3 vs Baer");
}

// a ≡ b mod I implies (a)* + I = (b)* + I and (a)⁻ + I = (b)⁻ + I, with (a) the principal ideal.
std::vector<bool> baer_ideals(RingContext& c) {
  const auto& L = c.L();
  const auto& r = c.ring();
  std::vector<Index> principal(r.order());
  for (Element a = 0; a < r.order(); ++a) {
    const Element seed[] = {a};
    principal[a] = L.index_of(ideal_generated(L.ring_ptr(), seed));
  }
  std::vector<bool> out(L.size(), true);
  for (Index i = 0; i < L.size(); ++i) {
    const auto members = L[i].members().elements();
    for (Element a = 0; a < r.order() && out[i]; ++a) {
      for (Element m : members) {
        const Element b = r.add(a, m);
        const Index pa = principal[a], pb = principal[b];
        if (L.join(L.ann_star(pa), i) != L.join(L.ann_star(pb), i) ||
            L.join(L.ann_minus(pa), i) != L.join(L.ann_minus(pb), i)) {
          out[i] = false;
          break;
        }
      }
    }
  }
  return out;
}

Cell prop_3_24(RingContext& c) {
  if (!c.baer().holds) return vacuous("not a Baer ring");
  const auto& L = c.L();
  const auto bi = baer_ideals(c);
  for (Index i = 0; i < L.size(); ++i) {
    for (Index j = 0; j < L.size(); ++j) {
      if (!bi[i] || !bi[j]) continue;
      if (L.join(L.rimp(i, j), L.rimp(j, i)) != L.top() || L.join(L.limp(i, j), L.limp(j, i)) != L.top()) {
        return fail({i, j}, "Baer-ideals I,J with a proper residual sum");
      }
    }
  }
  return pass();
}

Cell prop_3_25(RingContext& c) {
  if (!c.baer().holds) return vacuous("not a Baer ring");
  const auto& L = c.L();
  const auto bi = baer_ideals(c);
  for (Index i = 0; i < L.size(); ++i) {
    if (!bi[i]) continue;
    auto& q = c.quotient_ctx(i);
    if (!q.mult().holds || !q.baer().holds) return fail({i}, "R/I is not a multiplication Baer ring (witness: I)");
  }
  return pass();
}

Cell lemma_3_26(RingContext& c) {
  const auto vn = c.von_neumann();
  if (!vn) return vacuous("ring has no identity");
  return implication(*vn, c.mult().holds, "Von Neumann", "Von Neumann ring that is not a multiplication ring",
                     c.mult().ideals);
}

Cell prop_3_27(RingContext& c) {
  const auto vn = c.von_neumann();
  if (!vn) return vacuous("ring has no identity");
  if (!*vn) return vacuous("not Von Neumann");
  const auto& L = c.L();
  bool criterion = true;
  std::vector<std::size_t> w;
  for (Index p : prime_ideals(L)) {
    for (Index i = 0; i < L.size() && criterion; ++i) {
      if (!L.leq(i, p)) continue;
      for (Index j = 0; j < L.size(); ++j) {
        if (L.leq(j, p) && L.join(L.rimp(i, j), p) != L.top()) {
          criterion = false;
          w = {i, j, p};
          break;
        }
      }
    }
  }
  if (c.pbl().holds == criterion) return pass();
  return fail(w, criterion ? "criterion holds but not a pseudo BL-ring" : "pseudo BL-ring but criterion fails at I,J,P");
}

Cell lemma_4_4(RingContext& c) {
  const auto res = check_n_star_meet(c.L());
  if (!res.hypothesis_ok) return vacuous("not generated by idempotents");
  if (res.vacuous) return vacuous("no prime ideals");
  if (res.holds) return pass();
  const auto& r = c.ring();
  for (const auto* s : {&res.star_meet, &res.minus_meet}) {
    for (Element x : s->elements()) {
      if (x != r.zero()) {
        return fail({x}, std::string("nonzero element in the meet of ") + (s == &res.star_meet ? "N*(P)" : "N⁻(P)") +
                             " (witness: element)");
      }
    }
  }
  return fail({}, "meet of N*(P) is not {0}");
}

Cell prop_4_7_1(RingContext& c) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  const auto si = is_subdirectly_irreducible(c.L());
  if (!si.holds) return vacuous("not subdirectly irreducible");
  if (is_annihilator_ideal(c.L(), *si.heart).holds) return pass();
  return fail({*si.heart}, "the minimal ideal is not an annihilator ideal");
}

Cell prop_4_7_2(RingContext& c) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  if (!is_subdirectly_irreducible(c.L()).holds) return vacuous("not subdirectly irreducible");
  const auto& L = c.L();
  std::vector<Index> ann;
  for (Index i = 0; i < L.size(); ++i) {
    if (is_annihilator_ideal(L, i).holds) ann.push_back(i);
  }
  std::vector<std::size_t> w;
  return is_chain(L, ann, w) ? pass() : fail(w, "incomparable annihilator ideals");
}

Cell theorem_4_8(RingContext& c) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  const auto& d = c.decomposition();
  if (!d.kernels_meet_to_zero) return fail({}, "kernels do not meet to {0}");
  if (!d.embedding_injective) return fail({}, "x ↦ (x + K_x) is not injective");
  for (const auto& f : d.factors) {
    if (!f.subdirectly_irreducible) return fail({f.kernel}, "factor R/K not subdirectly irreducible (witness: K)");
    if (!f.pseudo_bl) return fail({f.kernel}, "factor R/K not a pseudo BL-ring (witness: K)");
  }
  return pass();
}

Cell factor_checks(RingContext& c, std::initializer_list<const char*> names) {
  if (!c.pbl().holds) return vacuous("not a pseudo BL-ring");
  for (const auto& f : c.decomposition().factors) {
    for (const auto& chk : f.checks) {
      if (std::find_if(names.begin(), names.end(), [&](const char* n) { return chk.name == n; }) == names.end()) {
        continue;
      }
      if (!chk.holds) {
        std::vector<std::size_t> w = {f.kernel};
        w.insert(w.end(), chk.witness.begin(), chk.witness.end());
        return fail(w, "factor R/K fails " + chk.name + " (witness: K, then ideals of R/K)");
      }
    }
  }
  return pass();
}

Cell theorem_4_8_2(RingContext& c) { return factor_checks(c, {"annihilator-or-dense"}); }
Cell theorem_4_8_4(RingContext& c) {
  return factor_checks(c, {"pseudo-bl-algebra", "unique-atom", "heart-annihilator"});
}
Cell theorem_4_8_ord(RingContext& c) {
  return factor_checks(c, {"an-star-chain", "an-minus-chain", "annihilators-below-dense"});
}
Cell corollary_4_9_1(RingContext& c) { return factor_checks(c, {"dense-residual-fix"}); }
Cell corollary_4_9_2(RingContext& c) { return factor_checks(c, {"residual-density"}); }

Cell probe_pblr1_pblr2(RingContext& c) {
  return implication(c.pbl().pblr1.holds, c.pbl().pblr2.holds, "PBLR-1", "PBLR-1 without PBLR-2",
                     c.pbl().pblr2.ideals);
}
Cell probe_baer_reduced(RingContext& c) {
  const auto red = is_reduced(c.ring());
  std::vector<std::size_t> w;
  if (red.nilpotent) w.push_back(*red.nilpotent);
  return implication(c.baer().holds, red.reduced, "Baer", "Baer ring with a nonzero nilpotent (witness: element)", w);
}
Cell probe_algebra_idempotents(RingContext& c) {
  return implication(c.algebra_pseudo_bl(), c.pbl().generated_by_idempotents, "A(R) pseudo BL",
                     "A(R) is pseudo BL but R is not generated by idempotents");
}

struct Entry {
  PropertyInfo info;
  std::function<Cell(RingContext&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    const auto T = Tag::Theorem;
    const auto I = Tag::Informational;
    const auto P = Tag::Probe;
    return std::vector<Entry>{
        {{"L3.2", T, "any ring", "I→J = I→(I∩J), (I+J)→J = I→J, and the ⇝ twins"}, lemma_3_2},
        {{"L3.3", T, "any ring", "(I→J)·I ⊆ I∩J and I·(I⇝J) ⊆ I∩J"}, lemma_3_3},
        {{"P3.4-1", T, "pseudo BL-ring", "PBLR-1 iff I∩J ⊆ (I→J)·I and I∩J ⊆ I·(I⇝J)"}, prop_3_4_1},
        {{"P3.4-2", T, "pseudo BL-ring", "PBLR-2 iff (I∩J)→K = (I→K)+(J→K) iff the ⇝ twin"}, prop_3_4_2},
        {{"P3.4-3", T, "pseudo BL-ring", "PBLR-2 iff I→(J+K) = (I→J)+(I→K) iff the ⇝ twin"}, prop_3_4_3},
        {{"P3.5", T, "any ring", "PBLR-1 iff multiplication ring"}, prop_3_5},
        {{"P3.6", T, "any ring", "pseudo BL-ring iff A(R) is a pseudo BL-algebra (with idempotent generation)"},
         prop_3_6},
        {{"L3.8", T, "unital multiplication ring, order ≤ 8", "M_2(R) is a multiplication ring"}, lemma_3_8},
        {{"L3.9", T, "unital multiplication ring, order ≤ 8", "M_2(R) satisfies PBLR-1"}, lemma_3_9},
        {{"L3.10", T, "order ≤ 8 (≤ 4 without identity)", "M_2(I+J) = M_2(I)+M_2(J), M_2(I→J) = M_2(I)→M_2(J), ⇝ twin"}, lemma_3_10},
        {{"Ex3.11", T, "unital multiplication or Łukasiewicz ring, order ≤ 8", "M_2(R) is a pseudo BL-ring"},
         example_3_11},
        {{"L3.12", T, "any ring", "(J/I)* = (J→I)/I and (J/I)→(K/I) = (J→K)/I, ⇝ twins"}, lemma_3_12},
        {{"P3.13", T, "PBLR-2", "PBLR-2 implies PBLR-3"}, prop_3_13},
        {{"P3.14", T, "any ring", "PBLR-2 iff every quotient satisfies PBLR-3"}, prop_3_14},
        {{"P3.15", T, "multiplication ring", "every quotient is a multiplication ring"}, prop_3_15},
        {{"P3.16", T, "multiplication ring whose quotients satisfy PBLR-3", "PBLR-3"}, prop_3_16},
        {{"C3.16a", I, "multiplication ring", "PBLR-2 iff PBLR-3 (checked per ring)"}, corollary_3_16a},
        {{"C3.17", T, "pseudo BL-ring", "quotients by proper ideals are pseudo BL-rings"}, corollary_3_17},
        {{"P3.18", T, "pseudo BL-ring", "prime ideals are maximal"}, prop_3_18},
        {{"P3.19", T, "pseudo BL-ring", "I with I∩I* = I∩I⁻ = 0 is a pseudo BL-ring"}, prop_3_19},
        {{"P3.20-1", T, "direct product of pseudo BL-rings", "the product is a pseudo BL-ring"}, prop_3_20_1},
        {{"P3.20-2", T, "pseudo BL-ring, order ≤ 32", "R ⊕ R is a pseudo BL-ring (finite index)"}, prop_3_20_2},
        {{"P3.20-3", T, "pseudo BL-ring", "every homomorphic image is a pseudo BL-ring"}, prop_3_20_3},
        {{"L3.22", T, "any ring", "I∩J = 0 implies I ⊆ J* and I ⊆ J⁻"}, lemma_3_22},
        {{"P3.23", T, "unital reduced ring", "PBLR-3 iff Baer"}, prop_3_23},
        {{"P3.24", I, "Baer ring", "Baer-ideals I,J satisfy (I→J)+(J→I) = (I⇝J)+(J⇝I) = R"}, prop_3_24},
        {{"P3.25", I, "Baer ring", "quotients by Baer-ideals are multiplication Baer rings"}, prop_3_25},
        {{"L3.26", T, "unital Von Neumann ring", "multiplication ring"}, lemma_3_26},
        {{"P3.27", I, "unital Von Neumann ring",
          "pseudo BL-ring iff I,J ⊆ P prime implies (I→J)+P = R"},
         prop_3_27},
        {{"L4.4", T, "generated by idempotents, at least one prime", "⋂ N*(P) = ⋂ N⁻(P) = {0}"}, lemma_4_4},
        {{"P4.7-1", T, "subdirectly irreducible pseudo BL-ring", "the minimal ideal is an annihilator ideal"},
         prop_4_7_1},
        {{"P4.7-2", T, "subdirectly irreducible pseudo BL-ring", "annihilator ideals form a finite chain"},
         prop_4_7_2},
        {{"T4.8", T, "pseudo BL-ring", "subdirect product of subdirectly irreducible pseudo BL-rings R/K_x"},
         theorem_4_8},
        {{"T4.8-2", T, "pseudo BL-ring", "every ideal of each factor is an annihilator ideal or dense"},
         theorem_4_8_2},
        {{"T4.8-4", T, "pseudo BL-ring", "A(R_x) is a pseudo BL-algebra with a unique atom"}, theorem_4_8_4},
        {{"T4.8-ord", T, "pseudo BL-ring",
          "AN*(R_x), AN⁻(R_x) are chains lying below the dense ideals of R_x"},
         theorem_4_8_ord},
        {{"C4.9-1", T, "pseudo BL-ring (factors)", "J→I = J⇝I = I for annihilator I ≠ R below dense J"},
         corollary_4_9_1},
        {{"C4.9-2", T, "pseudo BL-ring (factors)", "I→J, I⇝J dense or J→I, J⇝I dense"}, corollary_4_9_2},
        {{"pblr1-implies-pblr2", P, "PBLR-1", "PBLR-2"}, probe_pblr1_pblr2},
        {{"baer-implies-reduced", P, "Baer ring", "reduced"}, probe_baer_reduced},
        {{"pbl-algebra-implies-idempotent-generated", P, "A(R) pseudo BL", "generated by idempotents"},
         probe_algebra_idempotents},
    };
  }();
  return entries;
}

const Entry* find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return &e;
  }
  return nullptr;
}

using Clock = std::chrono::steady_clock;

std::vector<Cell> evaluate_ring(const CorpusEntry& entry, const std::vector<const Entry*>& props, double budget) {
  std::vector<Cell> cells;
  cells.reserve(props.size());
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget));
  std::unique_ptr<RingContext> ctx;
  try {
    ctx = std::make_unique<RingContext>(share(build(entry.spec)), &entry.spec);
  } catch (const Error& e) {
    for (std::size_t i = 0; i < props.size(); ++i) cells.push_back(too_large(std::string("construction: ") + e.what()));
    return cells;
  }
  for (const auto* p : props) {
    if (Clock::now() > deadline) {
      cells.push_back(too_large("time budget exhausted"));
      continue;
    }
    try {
      cells.push_back(p->run(*ctx));
    } catch (const BoundsError& e) {
      cells.push_back(too_large(e.what()));
    } catch (const InvariantViolation& e) {
      cells.push_back(fail({}, std::string("invariant violation: ") + e.what()));
    }
  }
  return cells;
}

}  // namespace

const std::vector<PropertyInfo>& catalog_properties() {
  static const std::vector<PropertyInfo> out = [] {
    std::vector<PropertyInfo> v;
    for (const auto& e : registry()) {
      if (e.info.tag != Tag::Probe) v.push_back(e.info);
    }
    return v;
  }();
  return out;
}

const std::vector<PropertyInfo>& probe_properties() {
  static const std::vector<PropertyInfo> out = [] {
    std::vector<PropertyInfo> v;
    for (const auto& e : registry()) {
      if (e.info.tag == Tag::Probe) v.push_back(e.info);
    }
    return v;
  }();
  return out;
}

const PropertyInfo* find_property(std::string_view id) {
  const auto* e = find_entry(id);
  return e ? &e->info : nullptr;
}

std::size_t CatalogMatrix::count(Outcome o, std::optional<Tag> tag) const {
  std::size_t n = 0;
  for (const auto& p : properties) {
    if (tag && p.info.tag != *tag) continue;
    for (const auto& c : p.cells) n += c.outcome == o;
  }
  return n;
}

CatalogMatrix run_catalog(const std::vector<CorpusEntry>& corpus, const CatalogOptions& options) {
  std::vector<const Entry*> props;
  if (options.only.empty()) {
    for (const auto& e : registry()) {
      if (e.info.tag != Tag::Probe) props.push_back(&e);
    }
  } else {
    for (const auto& e : registry()) {
      if (std::find(options.only.begin(), options.only.end(), e.info.id) != options.only.end()) props.push_back(&e);
    }
    for (const auto& id : options.only) {
      if (!find_entry(id)) throw std::invalid_argument("unknown property id: " + id);
    }
  }

  std::vector<std::vector<Cell>> rows(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      rows[i] = evaluate_ring(corpus[i], props, options.budget_seconds);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(corpus.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  CatalogMatrix m;
  for (const auto& e : corpus) {
    m.rings.push_back(e.label);
    m.orders.push_back(e.order);
  }
  for (std::size_t p = 0; p < props.size(); ++p) {
    PropertyRecord rec{props[p]->info, {}};
    for (auto& row : rows) rec.cells.push_back(std::move(row[p]));
    m.properties.push_back(std::move(rec));
  }
  return m;
}

std::optional<Counterexample> find_counterexample(std::string_view id, const std::vector<CorpusEntry>& corpus,
                                                  double budget_seconds) {
  const auto* e = find_entry(id);
  if (!e) throw std::invalid_argument("unknown property id: " + std::string(id));
  for (const auto& entry : corpus) {
    auto cells = evaluate_ring(entry, {e}, budget_seconds);
    if (cells.front().outcome == Outcome::Fail) return Counterexample{entry.label, entry.order, cells.front()};
  }
  return std::nullopt;
}

}  // namespace pblring
