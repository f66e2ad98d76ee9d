#include <gtest/gtest.h>

#include <optional>
#include <tuple>
#include <variant>

#include "pblring/constructors.hpp"
#include "support.hpp"

using namespace pblring;

namespace {

std::vector<Element> mod_table(std::size_t n, bool mul) {
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>(mul ? (a * b) % n : (a + b) % n);
  }
  return t;
}

}  // namespace

TEST(ValidateRing, AcceptsZ4) {
  const auto res = validate_ring(4, mod_table(4, false), mod_table(4, true), 0);
  ASSERT_TRUE(std::holds_alternative<FiniteRing>(res));
  EXPECT_EQ(std::get<FiniteRing>(res).order(), 4u);
}

TEST(ValidateRing, CorruptedAdditionIsNotAbelianGroup) {
  auto add = mod_table(4, false);
  const auto mul = mod_table(4, true);
  add[1 * 4 + 1] = 3;
  const auto res = validate_ring(4, add, mul, 0);
  ASSERT_TRUE(std::holds_alternative<RingValidationError>(res));
  const auto& err = std::get<RingValidationError>(res);
  // Brute force: the corrupted table keeps zero, symmetry and inverses but
  // loses associativity, e.g. (1+1)+2 = 1 while 1+(1+2) = 0.
  EXPECT_EQ(err.kind, RingValidationError::Kind::NotAbelianGroup);
  EXPECT_EQ(err.law, "additive associativity");
  ASSERT_EQ(err.witness.size(), 3u);
  EXPECT_TRUE(witness_violates(err, 4, add, mul, 0));
  const auto [x, y, z] = std::tuple{err.witness[0], err.witness[1], err.witness[2]};
  EXPECT_NE(add[add[x * 4 + y] * 4 + z], add[x * 4 + add[y * 4 + z]]);
}

TEST(ValidateRing, ReportsEachKind) {
  // table-shape
  auto bad = validate_ring(2, std::vector<Element>{0, 1, 1}, std::vector<Element>{0, 0, 0, 1}, 0);
  EXPECT_EQ(std::get<RingValidationError>(bad).kind, RingValidationError::Kind::TableShape);
  bad = validate_ring(2, std::vector<Element>{0, 1, 1, 2}, std::vector<Element>{0, 0, 0, 1}, 0);
  EXPECT_EQ(std::get<RingValidationError>(bad).kind, RingValidationError::Kind::TableShape);
  // Z_2 addition with x·y = 1 for all x, y: associative but not distributive.
  const std::vector<Element> add2 = {0, 1, 1, 0};
  bad = validate_ring(2, add2, std::vector<Element>{1, 1, 1, 1}, 0);
  const auto& e = std::get<RingValidationError>(bad);
  EXPECT_EQ(e.kind, RingValidationError::Kind::NotDistributive);
  EXPECT_TRUE(witness_violates(e, 2, add2, std::vector<Element>{1, 1, 1, 1}, 0));
  // A hand-made Z_3 multiplication that breaks associativity or distributivity.
  const auto add3 = mod_table(3, false);
  std::vector<Element> mul3(9, 0);
  mul3[1 * 3 + 1] = 1;
  mul3[1 * 3 + 2] = 2;
  mul3[2 * 3 + 1] = 1;  // breaks both laws; associativity is checked first
  bad = validate_ring(3, add3, mul3, 0);
  const auto& e3 = std::get<RingValidationError>(bad);
  EXPECT_TRUE(e3.kind == RingValidationError::Kind::MulNotAssociative ||
              e3.kind == RingValidationError::Kind::NotDistributive);
  EXPECT_TRUE(witness_violates(e3, 3, add3, mul3, 0));
}

TEST(ValidateRing, ZeroRing) {
  const auto res = validate_ring(1, std::vector<Element>{0}, std::vector<Element>{0}, 0);
  ASSERT_TRUE(std::holds_alternative<FiniteRing>(res));
}

TEST(Idempotents, Examples) {
  EXPECT_EQ(idempotents(*test::ring("zmod(4)")), (std::vector<Element>{0, 1}));
  EXPECT_EQ(idempotents(*test::ring("zmod(6)")), (std::vector<Element>{0, 1, 3, 4}));
  EXPECT_EQ(idempotents(*test::ring("zmod(1)")), (std::vector<Element>{0}));
}

TEST(GeneratedByIdempotents, Examples) {
  const auto z6 = generated_by_idempotents(*test::ring("zmod(6)"));
  EXPECT_TRUE(z6.holds);
  const auto r6 = test::ring("zmod(6)");
  for (Element x = 0; x < 6; ++x) {
    const auto e = z6.witness[x];
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(r6->mul(*e, *e), *e);
    EXPECT_EQ(r6->mul(*e, x), x);
    EXPECT_EQ(r6->mul(x, *e), x);
  }
  // 2Z_4 = {0,2}; its only idempotent is 0 and 0·2 ≠ 2.
  const auto two_z4 = generated_by_idempotents(*test::ring("tables(builtin:z2_null)"));
  EXPECT_FALSE(two_z4.holds);
  EXPECT_EQ(two_z4.uncovered, Element{1});
  const auto zero = generated_by_idempotents(*test::ring("zmod(1)"));
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.witness[0], std::optional<Element>{0});
}

TEST(Units, Examples) {
  EXPECT_EQ(units(*test::ring("zmod(6)")).two_sided, Element{1});
  EXPECT_EQ(units(*test::ring("zmod(1)")).two_sided, Element{0});
  const auto u = units(*test::ring("tables(builtin:z2_null)"));
  EXPECT_TRUE(u.left.empty());
  EXPECT_TRUE(u.right.empty());
  EXPECT_FALSE(u.two_sided);
  // Upper triangular matrices over Z_2 have a unit; a one-sided example:
  // the ring {[[a,b],[0,0]]} has every [[1,b],[0,0]] as a left unit.
  // x = (a,b) encoded 2a+b, product (a,b)(c,d) = (ac, ad)
  std::vector<Element> add(16), mul(16);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      const Element a = x >> 1, c = y >> 1, d = y & 1;
      add[x * 4 + y] = x ^ y;
      mul[x * 4 + y] = static_cast<Element>(((a & c) << 1) | (a & d));
    }
  }
  const auto lr = validate_ring(4, add, mul, 0);
  ASSERT_TRUE(std::holds_alternative<FiniteRing>(lr));
  const auto lu = units(std::get<FiniteRing>(lr));
  EXPECT_EQ(lu.left, (std::vector<Element>{2, 3}));
  EXPECT_TRUE(lu.right.empty());
  EXPECT_FALSE(lu.two_sided);
}

TEST(Reduced, Examples) {
  EXPECT_TRUE(is_reduced(*test::ring("zmod(6)")).reduced);
  const auto z4 = is_reduced(*test::ring("zmod(4)"));
  EXPECT_FALSE(z4.reduced);
  EXPECT_EQ(z4.nilpotent, Element{2});
  EXPECT_TRUE(is_reduced(*test::ring("zmod(1)")).reduced);
}

TEST(DivisionRing, Examples) {
  EXPECT_TRUE(is_division_ring(*test::ring("zmod(5)")));
  EXPECT_FALSE(is_division_ring(*test::ring("zmod(6)")));
  EXPECT_FALSE(is_division_ring(*test::ring("zmod(1)")));
  EXPECT_FALSE(is_division_ring(*test::ring("matrix(zmod(2),2)")));
  for (std::size_t n = 1; n <= 24; ++n) {
    const auto r = test::ring("zmod(" + std::to_string(n) + ")");
    EXPECT_EQ(is_division_ring(*r), oracle::is_division_ring(*r)) << n;
  }
}

TEST(RingProperties, DistributivityAndCaches) {
  for (auto spec : {"zmod(12)", "matrix(zmod(2),2)", "tables(builtin:t2z2)", "product(zmod(2),tables(builtin:z2x_x2))"}) {
    const auto r = test::ring(spec);
    bool comm = true;
    for (Element x = 0; x < r->order(); ++x) {
      for (Element y = 0; y < r->order(); ++y) {
        comm = comm && r->mul(x, y) == r->mul(y, x);
        for (Element z = 0; z < r->order(); ++z) {
          ASSERT_EQ(r->mul(x, r->add(y, z)), r->add(r->mul(x, y), r->mul(x, z)));
          ASSERT_EQ(r->mul(r->add(y, z), x), r->add(r->mul(y, x), r->mul(z, x)));
        }
      }
    }
    EXPECT_EQ(r->is_commutative(), comm) << spec;
    for (Element e : idempotents(*r)) EXPECT_EQ(r->mul(e, e), e);
    if (units(*r).two_sided) EXPECT_TRUE(generated_by_idempotents(*r).holds);
  }
}
