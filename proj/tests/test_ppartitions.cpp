#include <mobilex/posets.hpp>
#include <mobilex/verify.hpp>

#include <gtest/gtest.h>

using namespace mobilex;

namespace {

int_poly full_series(int bound) {
    std::vector<Int> v(static_cast<std::size_t>(bound) + 1, Int(1));
    return int_poly{std::move(v)};
}

}  // namespace

TEST(PPartitions, SingleElement) {
    const labeled_poset one(poset(1, {}), {1});
    EXPECT_EQ(ppartition_series(one, 9), full_series(9));
    EXPECT_EQ(ppartition_series_restricted(one, 0, 9), full_series(9));
}

TEST(PPartitions, TwoChainNatural) {
    // natural labels: maps with f(bottom) >= f(top), counted by total
    const labeled_poset chain(poset(2, {{0, 1}}), {1, 2});
    EXPECT_EQ(ppartition_series(chain, 3), (int_poly{std::vector<Int>{1, 1, 2, 2}}));
}

TEST(PPartitions, CapRejected) {
    const labeled_poset one(poset(1, {}), {1});
    EXPECT_THROW(ppartition_series(one, 100, 64), std::invalid_argument);
    EXPECT_THROW(ppartition_series(one, -1), std::invalid_argument);
}

TEST(PPartitions, GeneratingFunctionIdentity) {
    // G_P(q) = e_q^maj(P) / prod (1 - q^i), truncated
    const int deg = 12;
    std::mt19937 rng(4242);
    for (int n = 2; n <= 7; ++n)
        for (int rep = 0; rep < 25; ++rep) {
            const labeled_poset lp(random_poset(n, rng), random_labeling(n, rng));
            const int_poly lhs = ppartition_series(lp, deg);
            const int_poly rhs =
                truncated_product(eq_stat(lp, stat_kind::maj), partition_series_truncated(n, deg), deg);
            ASSERT_EQ(lhs, rhs) << "n=" << n << " rep=" << rep;
        }
}

TEST(PPartitions, RestrictedIdentity) {
    const int deg = 12;
    std::mt19937 rng(777);
    for (int n = 2; n <= 6; ++n)
        for (int rep = 0; rep < 15; ++rep) {
            const labeled_poset lp(random_poset(n, rng), random_labeling(n, rng));
            for (int s = 0; s < n; ++s) {
                const int_poly lhs = ppartition_series_restricted(lp, s, deg);
                const int_poly rhs =
                    truncated_product(eq_stat_ending_at(lp, s), partition_series_truncated(n, deg), deg);
                ASSERT_EQ(lhs, rhs) << "n=" << n << " rep=" << rep << " s=" << s;
            }
        }
}

TEST(PPartitions, RestrictedAtChainMinimumVanishes) {
    const labeled_poset chain(poset(3, {{0, 1}, {1, 2}}), {1, 2, 3});
    EXPECT_TRUE(ppartition_series_restricted(chain, 0, 10).is_zero());
}

TEST(DisjointUnion, MajIdentity) {
    // V + 2-chain with an arbitrary labeling
    const poset v(3, {{0, 1}, {0, 2}});
    const poset chain(2, {{0, 1}});
    const poset u = disjoint_union(v, chain);
    const labeled_poset lu(u, {4, 1, 5, 3, 2});
    const labeled_poset lp = lu.without({3, 4});
    const labeled_poset lq = lu.without({0, 1, 2});
    EXPECT_EQ(eq_stat(lu, stat_kind::maj),
              q_binomial(5, 3) * eq_stat(lp, stat_kind::maj) * eq_stat(lq, stat_kind::maj));
}

TEST(DisjointUnion, InvIdentityUnderLabelCondition) {
    const poset v(3, {{0, 1}, {0, 2}});
    const poset chain(2, {{0, 1}});
    const poset u = disjoint_union(v, chain);
    // P-labels {1,2,3} all below Q-labels {4,5}
    const labeled_poset lu(u, {2, 1, 3, 5, 4});
    EXPECT_EQ(eq_stat(lu, stat_kind::inv),
              q_binomial(5, 3) * eq_stat(lu.without({3, 4}), stat_kind::inv) *
                  eq_stat(lu.without({0, 1, 2}), stat_kind::inv));
}

TEST(DisjointUnion, InvIdentityNegativeWitness) {
    // interleaved labels break the inversion identity
    const poset u = disjoint_union(poset(1, {}), poset(2, {{0, 1}}));
    const labeled_poset lu(u, {2, 1, 3});
    const int_poly lhs = eq_stat(lu, stat_kind::inv);
    const int_poly rhs = q_binomial(3, 1) * eq_stat(lu.without({1, 2}), stat_kind::inv) *
                         eq_stat(lu.without({0}), stat_kind::inv);
    EXPECT_EQ(lhs, (int_poly{std::vector<Int>{1, 2}}));
    EXPECT_NE(lhs, rhs);
}

TEST(DisjointUnion, RestrictedProductIdentity) {
    // s maximal in P with the top label: e_q(P+Q; s) factors through the
    // q-binomial of the remaining letters
    const poset v(3, {{0, 1}, {0, 2}});
    const poset chain(2, {{0, 1}});
    const poset u = disjoint_union(v, chain);
    const labeled_poset lu(u, {3, 5, 4, 1, 2});  // s = element 1, label 5
    const int s = 1;
    const int_poly lhs = eq_stat_ending_at(lu, s);
    const int_poly rhs = q_binomial(4, 2) * eq_stat_ending_at(lu.without({3, 4}), s) *
                         eq_stat(lu.without({0, 1, 2}), stat_kind::maj);
    EXPECT_EQ(lhs, rhs);
}
