#include <mobilex/shapes.hpp>
#include <mobilex/verify.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace mobilex;

TEST(Partition, Validation) {
    EXPECT_NO_THROW(partition({3, 2, 2}));
    EXPECT_THROW(partition({2, 3}), std::invalid_argument);
    EXPECT_THROW(partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(partition({-1}), std::invalid_argument);
    EXPECT_TRUE(partition{}.empty());
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(partition({2, 2, 2, 1}).conjugate(), partition({4, 3}));
    EXPECT_EQ(partition{}.conjugate(), partition{});
    EXPECT_EQ(partition({5}).conjugate(), partition({1, 1, 1, 1, 1}));
}

TEST(Partition, ConjugateInvolution) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 6), first(1, 6);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<int> parts;
        int cur = first(rng);
        const int rows = len(rng);
        for (int i = 0; i < rows && cur >= 1; ++i) {
            parts.push_back(cur);
            cur = std::uniform_int_distribution<int>(1, cur)(rng);
        }
        const partition lam(parts);
        if (lam.size() > 20) continue;
        EXPECT_EQ(lam.conjugate().conjugate(), lam);
    }
}

TEST(Hook, Values) {
    const partition lam({2, 2, 2, 1});
    EXPECT_EQ(hook(lam, {1, 1}), 5);
    EXPECT_EQ(hook(lam, {3, 2}), 1);
    EXPECT_EQ(hook(partition({1}), {1, 1}), 1);
    EXPECT_THROW(hook(lam, {4, 2}), std::invalid_argument);
}

TEST(Hook, MultisetMatchesConjugate) {
    for (const auto& lam : partitions_in_box(4, 4)) {
        if (lam.size() > 12 || lam.empty()) continue;
        std::multiset<int> a, b;
        for (cell u : lam.cells()) a.insert(hook(lam, u));
        const partition lc = lam.conjugate();
        for (cell u : lc.cells()) b.insert(hook(lc, u));
        EXPECT_EQ(a, b);
        EXPECT_EQ(static_cast<int>(a.size()), lam.size());
    }
}

TEST(BStat, Values) {
    EXPECT_EQ(b_stat(partition({2, 2})), 2);
    EXPECT_EQ(b_stat(partition({7})), 0);
    EXPECT_EQ(b_stat(partition({1, 1, 1})), 3);
}

TEST(SkewShape, Validation) {
    EXPECT_NO_THROW(skew_shape(partition({2, 2}), partition({1})));
    EXPECT_THROW(skew_shape(partition({2}), partition({1, 1})), std::invalid_argument);
    EXPECT_THROW(skew_shape(partition({2, 1}), partition({2, 2})), std::invalid_argument);
}

TEST(SkewShape, BorderStripRecognition) {
    EXPECT_TRUE(skew_shape(partition({2, 2, 2, 1}), partition({1, 1})).is_border_strip());
    EXPECT_FALSE(skew_shape(partition({2, 2}), partition{}).is_border_strip());  // 2x2 block
    EXPECT_FALSE(skew_shape(partition({3, 1}), partition({1})).is_border_strip());  // disconnected
    EXPECT_FALSE(skew_shape(partition({1}), partition({1})).is_border_strip());  // empty
}

TEST(SkewShape, InnerCorners) {
    const auto corners = [](const skew_shape& s) { return s.inner_corners(); };
    EXPECT_EQ(corners({partition({2, 2, 2, 1}), partition({1, 1})}), (std::vector<cell>{{1, 2}, {3, 1}}));
    EXPECT_EQ(corners({partition({2, 2}), partition({1})}), (std::vector<cell>{{1, 2}, {2, 1}}));
    EXPECT_EQ(corners({partition({1}), partition{}}), (std::vector<cell>{{1, 1}}));
}

TEST(SkewShape, ConStatistic) {
    EXPECT_EQ(skew_shape(partition({2, 2, 2, 1}), partition({1, 1})).con(), -5);
}

TEST(RemoveInnerCorner, VShape) {
    const skew_shape s(partition({2, 2}), partition({1}));

    const corner_split a = remove_inner_corner(s, {1, 2});
    EXPECT_EQ(a.nu, partition({2}));
    EXPECT_EQ(a.left.cells(), (std::vector<cell>{{2, 1}, {2, 2}}));
    EXPECT_EQ(a.right.size(), 0);

    const corner_split b = remove_inner_corner(s, {2, 1});
    EXPECT_EQ(b.nu, partition({1, 1}));
    EXPECT_EQ(b.left.size(), 0);
    EXPECT_EQ(b.right.cells(), (std::vector<cell>{{1, 2}, {2, 2}}));

    EXPECT_THROW(remove_inner_corner(s, {2, 2}), std::invalid_argument);
}

TEST(RemoveInnerCorner, SingleCell) {
    const corner_split c = remove_inner_corner(skew_shape(partition({1}), partition{}), {1, 1});
    EXPECT_EQ(c.nu, partition({1}));
    EXPECT_EQ(c.left.size(), 0);
    EXPECT_EQ(c.right.size(), 0);
}

TEST(RemoveInnerCorner, RejectsGeneralSkewShapes) {
    EXPECT_THROW(remove_inner_corner(skew_shape(partition({2, 2}), partition{}), {1, 1}),
                 std::invalid_argument);
}

TEST(RemoveInnerCorner, SplitInvariants) {
    for (const auto& s : border_strips_in_box(4, 4)) {
        for (cell u : s.inner_corners()) {
            const corner_split split = remove_inner_corner(s, u);
            EXPECT_EQ(split.left.size() + split.right.size() + 1, s.size());
            EXPECT_EQ(s.con() - split.left.con() - split.right.con(), u.content());
        }
    }
}

TEST(BorderStrip, FullSpanSize) {
    for (const auto& s : border_strips_in_box(4, 4)) {
        const partition& lam = s.outer();
        const bool full_span = s.contains({lam.length(), 1}) && s.contains({1, lam.part(1)});
        if (full_span) EXPECT_EQ(s.size(), lam.part(1) + lam.length() - 1);
    }
}
