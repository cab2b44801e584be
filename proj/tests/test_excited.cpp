#include <mobilex/excited.hpp>
#include <mobilex/formulas.hpp>
#include <mobilex/mobile.hpp>
#include <mobilex/verify.hpp>

#include <gtest/gtest.h>

using namespace mobilex;

namespace {

const skew_shape running_strip{partition{{2, 2, 2, 1}}, partition{{1, 1}}};

mobile_poset major_example() {
    std::map<cell, std::vector<hanging_poset>> hg;
    hg[{2, 2}].push_back(hanging_poset::shape(partition{{2, 2}}));
    hg[{4, 1}].push_back(hanging_poset::shape(partition{{2, 2}}));
    return mobile_poset(running_strip, hg);
}

mobile_poset inversion_example() {
    std::map<cell, std::vector<hanging_poset>> hg;
    hg[{2, 2}].push_back(hanging_poset::tree({-1, 0, 0}));
    hg[{4, 1}].push_back(hanging_poset::tree({-1, 0, 0}));
    return mobile_poset(running_strip, hg);
}

}  // namespace

TEST(ExcitedDiagram, InitialRunningExample) {
    const excited_diagram d = initial_diagram(running_strip);
    EXPECT_EQ(d.cells, (std::set<cell>{{1, 1}, {2, 1}}));
    EXPECT_EQ(d.broken, (std::set<cell>{{2, 2}, {3, 2}, {4, 1}}));
}

TEST(ExcitedDiagram, InitialEmptyInner) {
    // single-row outer: no broken diagonals at all
    const excited_diagram d = initial_diagram(skew_shape(partition({3}), partition{}));
    EXPECT_TRUE(d.cells.empty());
    EXPECT_TRUE(d.broken.empty());
    // taller shapes place the initial broken diagonals strictly below the
    // main diagonal, whose hooks sum to b(lambda)
    const partition sq({2, 2});
    const excited_diagram e = initial_diagram(skew_shape(sq, partition{}));
    EXPECT_TRUE(e.cells.empty());
    EXPECT_EQ(e.broken, (std::set<cell>{{2, 1}}));
    int hook_sum = 0;
    for (cell u : e.broken) hook_sum += hook(sq, u);
    EXPECT_EQ(hook_sum, b_stat(sq));
}

TEST(ExcitedDiagram, ActiveCells) {
    const partition lam({2, 2, 2, 1});
    EXPECT_EQ(active_cells(lam, initial_diagram(running_strip)), (std::vector<cell>{{2, 1}}));
    excited_diagram empty;
    EXPECT_TRUE(active_cells(lam, empty).empty());
    excited_diagram d;
    d.cells = {{1, 1}, {3, 2}};
    EXPECT_EQ(active_cells(lam, d), (std::vector<cell>{{1, 1}}));
}

TEST(ExcitedDiagram, MoveSequenceOfRunningExample) {
    const partition lam({2, 2, 2, 1});
    const excited_diagram d0 = initial_diagram(running_strip);
    const excited_diagram d1 = excited_move(lam, d0, {2, 1});
    EXPECT_EQ(d1.cells, (std::set<cell>{{1, 1}, {3, 2}}));
    EXPECT_EQ(d1.broken, (std::set<cell>{{2, 2}, {3, 1}, {4, 1}}));
    const excited_diagram d2 = excited_move(lam, d1, {1, 1});
    EXPECT_EQ(d2.cells, (std::set<cell>{{2, 2}, {3, 2}}));
    EXPECT_EQ(d2.broken, (std::set<cell>{{2, 1}, {3, 1}, {4, 1}}));
    EXPECT_THROW(excited_move(lam, d0, {1, 1}), std::invalid_argument);
}

TEST(ExcitedDiagram, EnumerateCounts) {
    EXPECT_EQ(enumerate_excited(running_strip).size(), 3u);
    EXPECT_EQ(enumerate_excited(skew_shape(partition({3, 2}), partition{})).size(), 1u);
    for (int k = 1; k <= 6; ++k)
        EXPECT_EQ(Int(enumerate_excited(zigzag_strip(k)).size()), catalan(k)) << "k=" << k;
}

TEST(ExcitedDiagram, ModifiedHookExponents) {
    const mobile_poset m = major_example();
    auto modified = [&](cell u) { return m.modified_hook(u); };
    std::multiset<long long> expos;
    for (const auto& d : enumerate_excited(running_strip)) expos.insert(w_stat(d, modified));
    EXPECT_EQ(expos, (std::multiset<long long>{12, 18, 24}));
}

TEST(ExcitedDiagram, InversionExponents) {
    const mobile_poset m = inversion_example();
    auto plain = [&](cell u) { return hook(m.strip().outer(), u); };
    std::multiset<long long> expos, pd;
    for (const auto& d : enumerate_excited(running_strip)) {
        pd.insert(p_d_stat(m, d));
        expos.insert(w_stat(d, plain) + p_d_stat(m, d));
    }
    EXPECT_EQ(pd, (std::multiset<long long>{0, 3, 6}));
    EXPECT_EQ(expos, (std::multiset<long long>{4, 9, 14}));
}

TEST(ExcitedDiagram, BrokenSizeConstant) {
    for (const auto& s : border_strips_in_box(3, 3)) {
        const auto all = enumerate_excited(s);
        for (const auto& d : all) EXPECT_EQ(d.broken.size(), all.front().broken.size());
    }
}

TEST(ExcitedDiagram, PathCountBijection) {
    for (const auto& s : border_strips_in_box(4, 4)) {
        auto cs = s.cells();
        const cell lo = *std::min_element(cs.begin(), cs.end(),
                                          [](cell a, cell b) { return a.content() < b.content(); });
        const cell hi = *std::max_element(cs.begin(), cs.end(),
                                          [](cell a, cell b) { return a.content() < b.content(); });
        EXPECT_EQ(lattice_path_count(s.outer(), lo, hi),
                  static_cast<long long>(enumerate_excited(s).size()));
    }
}

TEST(ExcitedDiagram, PhatInvariance) {
    for (const mobile_poset& m : {major_example(), inversion_example()}) {
        std::optional<long long> expected;
        for (const auto& d : enumerate_excited(m.strip())) {
            long long phat = 0;
            for (cell u : m.strip().outer().cells())
                if (!d.cells.count(u)) phat += m.hanging_size_col_ge(u.col);
            for (cell u : d.broken) phat -= m.hanging_size_se_of(u);
            if (!expected) expected = phat;
            EXPECT_EQ(*expected, phat);
        }
    }
}
