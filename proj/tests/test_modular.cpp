#include "bbq/errors.hpp"
#include "bbq/modular.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace bbq;

namespace {

ModVector vec(Scalar n, std::vector<Scalar> c) { return ModVector(Modulus(n), std::move(c)); }

std::set<std::vector<Scalar>> as_set(const std::vector<ModVector> &vs) {
  std::set<std::vector<Scalar>> out;
  for (const auto &v : vs) {
    out.emplace(v.coords().begin(), v.coords().end());
  }
  return out;
}

} // namespace

TEST(Modulus, RejectsTrivialRing) {
  EXPECT_THROW(Modulus(1), std::invalid_argument);
  EXPECT_THROW(Modulus(0), std::invalid_argument);
  EXPECT_THROW(Modulus(-4), std::invalid_argument);
}

TEST(Modulus, ReducesToCanonicalRange) {
  const Modulus n(5);
  EXPECT_EQ(n.reduce(-1), 4);
  EXPECT_EQ(n.reduce(-10), 0);
  EXPECT_EQ(n.reduce(13), 3);
  EXPECT_EQ(n.mul(-2, 3), 4);
  EXPECT_EQ(n.sub(1, 3), 3);
  EXPECT_EQ(n.neg(0), 0);
}

TEST(InvScalar, Examples) {
  EXPECT_EQ(inv_scalar(3, Modulus(4)), 3);
  EXPECT_EQ(inv_scalar(2, Modulus(5)), 3);
  EXPECT_THROW(inv_scalar(2, Modulus(4)), NotInvertible);
  EXPECT_THROW(inv_scalar(0, Modulus(7)), NotInvertible);
}

TEST(InvScalar, AgreesWithSearchOracle) {
  for (Scalar n = 2; n <= 30; ++n) {
    for (Scalar x = 0; x < n; ++x) {
      const Scalar expected = oracle::inverse(x, n);
      if (expected == 0) {
        EXPECT_THROW(inv_scalar(x, Modulus(n)), NotInvertible) << x << " mod " << n;
      } else {
        EXPECT_EQ(inv_scalar(x, Modulus(n)), expected) << x << " mod " << n;
      }
    }
  }
}

TEST(Units, Examples) {
  EXPECT_EQ(units(Modulus(4)), (std::vector<Scalar>{1, 3}));
  EXPECT_EQ(units(Modulus(5)), (std::vector<Scalar>{1, 2, 3, 4}));
  EXPECT_EQ(units(Modulus(2)), (std::vector<Scalar>{1}));
  EXPECT_EQ(units(Modulus(12)), (std::vector<Scalar>{1, 5, 7, 11}));
}

TEST(ModVector, ArithmeticStaysReduced) {
  const auto a = vec(4, {3, -1});
  EXPECT_EQ(a[1], 3);
  EXPECT_EQ((a + vec(4, {1, 1})).to_string(), "(0,0)");
  EXPECT_EQ((a - vec(4, {3, 3})).to_string(), "(0,0)");
  EXPECT_EQ((-a).to_string(), "(1,1)");
  EXPECT_EQ((6 * vec(4, {1, 3})).to_string(), "(2,2)");
  EXPECT_TRUE(ModVector::zero(Modulus(4), 3).is_zero());
}

TEST(ModVector, MixedShapesRejected) {
  EXPECT_THROW(vec(4, {1, 0}) + vec(4, {1, 0, 0}), DimensionMismatch);
  EXPECT_THROW(vec(4, {1, 0}) + vec(5, {1, 0}), DimensionMismatch);
}

TEST(FormMatrix, ShapeAndText) {
  EXPECT_THROW(FormMatrix(Modulus(4), 2, {0, 1, 2}), ShapeError);
  EXPECT_THROW(FormMatrix::from_rows(Modulus(4), {{0, 1}, {2}}), ShapeError);
  const auto A = FormMatrix::from_rows(Modulus(4), {{0, -1}, {5, 0}});
  EXPECT_EQ(A.to_string(), "[[0,3],[1,0]]");
  EXPECT_TRUE(A.is_antisymmetric());
  EXPECT_TRUE(A.has_zero_diagonal());
  EXPECT_EQ(A.transposed().to_string(), "[[0,1],[3,0]]");
  EXPECT_FALSE(FormMatrix::from_rows(Modulus(4), {{0, 1}, {1, 0}}).is_antisymmetric());
}

TEST(BilinearEval, Examples) {
  const Modulus n(4);
  const auto A = FormMatrix::from_rows(n, {{0, 2}, {2, 0}});
  EXPECT_EQ(bilinear_eval(A, vec(4, {1, 0}), vec(4, {0, 1})), 2);
  EXPECT_EQ(bilinear_eval(A, vec(4, {1, 0}), vec(4, {1, 0})), 0);
  const auto B = FormMatrix::from_rows(n, {{2, 1}, {1, 2}});
  EXPECT_EQ(bilinear_eval(B, vec(4, {1, 1}), vec(4, {1, 0})), 3);
}

TEST(BilinearEval, DimensionMismatch) {
  const auto A = FormMatrix::zero(Modulus(4), 2);
  EXPECT_THROW(bilinear_eval(A, vec(4, {1, 0, 0}), vec(4, {1, 0})), DimensionMismatch);
  EXPECT_THROW(bilinear_eval(A, vec(5, {1, 0}), vec(5, {1, 0})), DimensionMismatch);
}

TEST(EnumerateModule, LexicographicOrder) {
  const auto all = enumerate_module(Modulus(2), 2);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].to_string(), "(0,0)");
  EXPECT_EQ(all[1].to_string(), "(0,1)");
  EXPECT_EQ(all[2].to_string(), "(1,0)");
  EXPECT_EQ(all[3].to_string(), "(1,1)");
  EXPECT_EQ(enumerate_module(Modulus(4), 2).size(), 16u);
  EXPECT_EQ(enumerate_module(Modulus(3), 3).size(), 27u);
}

TEST(EnumerateModule, MatchesOracleAndIndex) {
  const auto all = enumerate_module(Modulus(3), 3);
  const auto expected = oracle::module_elements(3, 3);
  ASSERT_EQ(all.size(), expected.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(std::vector<Scalar>(all[i].coords().begin(), all[i].coords().end()), expected[i]);
    EXPECT_EQ(lex_index(all[i]), i);
  }
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(EnumerateModule, CapacityBound) {
  EXPECT_THROW(enumerate_module(Modulus(10), 5), CapacityExceeded);
  EXPECT_THROW(enumerate_module(Modulus(3), 3, 26), CapacityExceeded);
  EXPECT_EQ(enumerate_module(Modulus(3), 3, 27).size(), 27u);
  EXPECT_THROW(module_cardinality(Modulus(1'000'000), 40, 10'000), CapacityExceeded);
}

TEST(EnumerateModule, EnvironmentOverridesBound) {
  ASSERT_EQ(setenv("BBQ_CARRIER_BOUND", "20", 1), 0);
  EXPECT_EQ(default_carrier_bound(), 20u);
  EXPECT_THROW(enumerate_module(Modulus(5), 2), CapacityExceeded);
  ASSERT_EQ(unsetenv("BBQ_CARRIER_BOUND"), 0);
  EXPECT_EQ(default_carrier_bound(), 10'000u);
}

TEST(SubmoduleSpan, Examples) {
  const Modulus n(4);
  const auto empty = submodule_span({}, n, 2);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].is_zero());

  const std::vector<ModVector> cyclic{vec(4, {1, 0})};
  EXPECT_EQ(submodule_span(cyclic, n, 2).size(), 4u);

  const std::vector<ModVector> twos{vec(4, {2, 0}), vec(4, {0, 2})};
  const auto s = submodule_span(twos, n, 2);
  EXPECT_EQ(as_set(s), (std::set<std::vector<Scalar>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST(SubmoduleSpan, MatchesCombinationOracle) {
  const std::vector<std::pair<Scalar, std::size_t>> shapes{{4, 2}, {6, 2}, {3, 3}, {2, 4}};
  for (const auto &[n, m] : shapes) {
    const auto all = enumerate_module(Modulus(n), m);
    // Pairs of generators taken from a stride through the module.
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = i; j < all.size(); j += 5) {
        const std::vector<ModVector> gens{all[i], all[j]};
        const auto got = submodule_span(gens, Modulus(n), m);
        const auto expected = oracle::span(
            {std::vector<Scalar>(all[i].coords().begin(), all[i].coords().end()),
             std::vector<Scalar>(all[j].coords().begin(), all[j].coords().end())},
            n, m);
        EXPECT_EQ(as_set(got), expected);
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        EXPECT_EQ(all.size() % got.size(), 0u);
        EXPECT_EQ(submodule_span(got, Modulus(n), m), got);
      }
    }
  }
}
