#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace plumbook;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool is_diagonal_chain(const SnfResult& s) {
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D(i, j) != 0) return false;
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0) return false;
        if (d[i] == 0) {
            if (d[i + 1] != 0) return false;
        } else if (d[i + 1] % d[i] != 0) {
            return false;
        }
    }
    return d.empty() || d.back() >= 0;
}

}  // namespace

TEST(IntMatrix, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + rng() % 6;
        IntMatrix m = random_matrix(rng, n, n);
        EXPECT_EQ(determinant(m), oracle::cofactor_det(m));
    }
}

TEST(IntMatrix, UnimodularInverse) {
    IntMatrix e{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    IntMatrix inv = unimodular_inverse(e);
    EXPECT_EQ(e * inv, IntMatrix::identity(3));
    EXPECT_THROW((void)unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::exception);
}

TEST(Snf, KnownGroups) {
    EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 3}}).str(), "Z/6");
    EXPECT_EQ(cokernel(IntMatrix{{2, 4}, {4, 2}}).str(), "Z/2 + Z/6");
    EXPECT_EQ(cokernel(IntMatrix{{0, 0}, {0, 0}}).str(), "Z + Z");
    EXPECT_EQ(cokernel(IntMatrix{{1, 2}, {3, 4}}).str(), "Z/2");
    EXPECT_TRUE(cokernel(IntMatrix{{-2, 1}, {1, -1}}).trivial());
    // Non-square: Z^3 / <(2,0,0), (0,4,0)>
    EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 4}, {0, 0}}).str(), "Z + Z/2 + Z/4");
}

TEST(Snf, ReconstructionAndInvariantFactors) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, r, c);
        if (k % 5 == 0) m = random_matrix(rng, r, c, -1, 1);
        SnfResult s = smith_normal_form(m);
        ASSERT_EQ(s.U * m * s.V, s.D);
        EXPECT_TRUE(is_diagonal_chain(s));
        EXPECT_TRUE(determinant(s.U) == 1 || determinant(s.U) == -1);
        EXPECT_TRUE(determinant(s.V) == 1 || determinant(s.V) == -1);
        EXPECT_EQ(s.cokernel(), oracle::cokernel_by_minors(m)) << m;
    }
}

TEST(Snf, LargeEntriesStayExact) {
    IntMatrix m(2, 2);
    m(0, 0) = Integer("123456789012345678901234567890");
    m(0, 1) = 7;
    m(1, 0) = Integer("98765432109876543210");
    m(1, 1) = 3;
    SnfResult s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(s.cokernel(), oracle::cokernel_by_minors(m));
}

TEST(Snf, CokernelOrderIsDeterminant) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        std::size_t n = 1 + rng() % 6;
        IntMatrix m = random_matrix(rng, n, n);
        AbelianGroup g = cokernel(m);
        Integer order = oracle::cokernel_order(m);
        if (order == 0) {
            EXPECT_GT(g.free_rank, 0u);
        } else {
            Integer p = 1;
            for (const auto& t : g.torsion) p *= t;
            EXPECT_EQ(g.free_rank, 0u);
            EXPECT_EQ(p, order);
        }
    }
}
