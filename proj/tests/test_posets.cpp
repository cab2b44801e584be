#include <mobilex/posets.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace mobilex;

TEST(Permutations, Statistics) {
    EXPECT_EQ(maj({3, 1, 2}), 1);
    EXPECT_EQ(inv({3, 1, 2}), 2);
    EXPECT_EQ(descents({3, 1, 2}), std::vector<int>{1});
    EXPECT_EQ(maj({1, 2, 3, 4}), 0);
    EXPECT_EQ(inv({1, 2, 3, 4}), 0);
    EXPECT_TRUE(descents({1, 2, 3, 4}).empty());
    EXPECT_EQ(maj({2, 1}), 1);
    EXPECT_EQ(inv({2, 1}), 1);
}

TEST(Poset, Construction) {
    EXPECT_THROW(poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(poset(2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(poset(2, {{0, 0}}), std::invalid_argument);
    const poset p(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(p.less(0, 2));  // transitivity
    EXPECT_EQ(p.covers().size(), 2u);  // reduction drops (0, 2)
    EXPECT_EQ(p.maximal_elements(), std::vector<int>{2});
}

TEST(Poset, LabelingValidation) {
    const poset p(2, {});
    EXPECT_THROW(labeled_poset(p, {1, 1}), std::invalid_argument);
    EXPECT_THROW(labeled_poset(p, {0, 1}), std::invalid_argument);
    EXPECT_THROW(labeled_poset(p, {1}), std::invalid_argument);
    EXPECT_NO_THROW(labeled_poset(p, {2, 1}));
}

TEST(Oracle, ExtensionCounts) {
    const labeled_poset antichain(poset(2, {}), {1, 2});
    EXPECT_EQ(enumerate_extensions(antichain).size(), 2u);
    const labeled_poset chain(poset(4, {{0, 1}, {1, 2}, {2, 3}}), {1, 2, 3, 4});
    EXPECT_EQ(enumerate_extensions(chain).size(), 1u);
    EXPECT_EQ(extension_count(chain), 1);
}

TEST(Oracle, SizeCap) {
    const labeled_poset tiny(poset(3, {}), {1, 2, 3});
    EXPECT_THROW(eq_stat(tiny, stat_kind::maj, 2), std::invalid_argument);
    EXPECT_THROW(eq_stat(tiny, stat_kind::maj, 19), std::invalid_argument);
    EXPECT_THROW(eq_stat(tiny, stat_kind::maj, 0), std::invalid_argument);
    EXPECT_NO_THROW(eq_stat(tiny, stat_kind::maj, 3));
}

TEST(Oracle, EqStatVPoset) {
    // V-poset of the strip (2,2)/(1) under the reversed Schur labeling:
    // (2,2) minimal labeled 2, maximal cells (1,2) labeled 1 and (2,1)
    // labeled 3
    const labeled_poset v(poset(3, {{0, 1}, {0, 2}}), {2, 1, 3});
    const int_poly expected{std::vector<Int>{0, 1, 1}};
    EXPECT_EQ(eq_stat(v, stat_kind::maj), expected);

    // words are (2,3,1) and (2,1,3)
    const auto words = enumerate_extensions(v);
    std::set<std::vector<int>> set(words.begin(), words.end());
    EXPECT_EQ(set, (std::set<std::vector<int>>{{2, 3, 1}, {2, 1, 3}}));
}

TEST(Oracle, EqStatEndingAt) {
    const labeled_poset chain(poset(3, {{0, 1}, {1, 2}}), {1, 2, 3});
    EXPECT_EQ(eq_stat_ending_at(chain, 2), eq_stat(chain, stat_kind::maj));
    EXPECT_TRUE(eq_stat_ending_at(chain, 0).is_zero());  // non-maximal element

    const labeled_poset v(poset(3, {{0, 1}, {0, 2}}), {2, 1, 3});
    // ending with omega = 1 (element 1) forces the word (2,3,1): maj 2
    EXPECT_EQ(eq_stat_ending_at(v, 1), (int_poly{std::vector<Int>{0, 0, 1}}));
    // ending with omega = 3 (element 2) forces the word (2,1,3): maj 1
    EXPECT_EQ(eq_stat_ending_at(v, 2), (int_poly{std::vector<Int>{0, 1}}));
}

TEST(Oracle, InvStatistic) {
    const labeled_poset v(poset(3, {{0, 1}, {0, 2}}), {2, 1, 3});
    // words (2,3,1): inv 2, (2,1,3): inv 1
    EXPECT_EQ(eq_stat(v, stat_kind::inv), (int_poly{std::vector<Int>{0, 1, 1}}));
}

TEST(Foata, SmallCases) {
    EXPECT_EQ(foata({3, 1, 2}), (std::vector<int>{1, 3, 2}));
    EXPECT_EQ(foata({1, 2, 3}), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(foata({2, 1}), (std::vector<int>{2, 1}));
}

TEST(Foata, ExhaustiveS5) {
    std::vector<int> w{1, 2, 3, 4, 5};
    std::set<std::vector<int>> image;
    do {
        const auto f = foata(w);
        EXPECT_EQ(maj(w), inv(f));
        image.insert(f);
    } while (std::next_permutation(w.begin(), w.end()));
    EXPECT_EQ(image.size(), 120u);
}

TEST(Poset, InducedSubposetCollapsesLabels) {
    // chain 0 < 1 < 2 labeled (3, 1, 2); dropping element 1 keeps relation
    // 0 < 2 with collapsed labels (2, 1)
    const labeled_poset chain(poset(3, {{0, 1}, {1, 2}}), {3, 1, 2});
    const labeled_poset sub = chain.without({1});
    EXPECT_EQ(sub.size(), 2);
    EXPECT_TRUE(sub.p.less(0, 1));
    EXPECT_EQ(sub.omega, (std::vector<int>{2, 1}));
}

TEST(Poset, DisjointUnion) {
    const poset u = disjoint_union(poset(2, {{0, 1}}), poset(2, {{0, 1}}));
    EXPECT_EQ(u.size(), 4);
    EXPECT_TRUE(u.less(0, 1));
    EXPECT_TRUE(u.less(2, 3));
    EXPECT_FALSE(u.less(0, 2));
    EXPECT_EQ(extension_count(labeled_poset(u, {1, 2, 3, 4})), 6);
}
