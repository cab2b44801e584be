#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "excited.hpp"
#include "formulas.hpp"
#include "int_poly.hpp"
#include "mobile.hpp"
#include "posets.hpp"
#include "shapes.hpp"

namespace mobilex {

// --- deterministic instance generators ----------------------------------------

inline std::vector<partition> partitions_in_box(int rows, int cols) {
    std::vector<partition> out;
    std::vector<int> cur;
    const std::function<void(int, int)> rec = [&](int row, int max_part) {
        out.emplace_back(std::vector<int>(cur));
        if (row >= rows) return;
        for (int p = std::min(max_part, cols); p >= 1; --p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<skew_shape> border_strips_in_box(int rows, int cols) {
    std::vector<skew_shape> strips;
    const auto parts = partitions_in_box(rows, cols);
    for (const auto& lam : parts)
        for (const auto& mu : parts) {
            if (!lam.contains(mu) || lam.size() == mu.size()) continue;
            skew_shape s(lam, mu);
            if (s.is_border_strip()) strips.push_back(std::move(s));
        }
    std::sort(strips.begin(), strips.end());
    return strips;
}

/// The hanging menu of the verification corpus.
inline std::vector<hanging_poset> hanging_menu() {
    return {hanging_poset::chain(2), hanging_poset::chain(3), hanging_poset::tree({-1, 0, 0}),
            hanging_poset::shape(partition{{2, 2}})};
}

struct corpus {
    std::vector<skew_shape> bare_strips;     // all border strips in the 4x4 box
    std::vector<mobile_poset> maj_instances; // hangings from the full menu
    std::vector<mobile_poset> inv_instances; // tree hangings only
};

/// Deterministic corpus: every bare strip, every single-hanging mobile, and a
/// seeded sample of two-hanging mobiles, all capped at max_n elements.
inline corpus build_small_corpus(unsigned seed, int max_n = 11, std::size_t two_cell_samples = 400) {
    corpus c;
    c.bare_strips = border_strips_in_box(4, 4);
    const auto menu = hanging_menu();

    for (const auto& s : c.bare_strips) {
        mobile_poset bare(s);
        if (bare.size() <= max_n) {
            c.maj_instances.push_back(bare);
            c.inv_instances.push_back(bare);
        }
        const auto cells = s.cells();
        for (cell at : cells)
            for (std::size_t t = 0; t < menu.size(); ++t) {
                std::map<cell, std::vector<hanging_poset>> a;
                a[at].push_back(menu[t]);
                mobile_poset m(s, a);
                if (m.size() > max_n) continue;
                c.maj_instances.push_back(m);
                if (m.all_tree_hangings()) c.inv_instances.push_back(m);
            }
    }

    // seeded selection of two-cell assignments
    std::vector<mobile_poset> doubles_maj, doubles_inv;
    std::mt19937 rng(seed);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>> choices;
    for (std::size_t si = 0; si < c.bare_strips.size(); ++si) {
        const auto cells = c.bare_strips[si].cells();
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j)
                for (std::size_t t1 = 0; t1 < menu.size(); ++t1)
                    for (std::size_t t2 = 0; t2 < menu.size(); ++t2) choices.emplace_back(si, i, j, t1, t2);
    }
    std::shuffle(choices.begin(), choices.end(), rng);
    for (const auto& [si, i, j, t1, t2] : choices) {
        if (doubles_maj.size() >= two_cell_samples) break;
        const auto& s = c.bare_strips[si];
        const auto cells = s.cells();
        std::map<cell, std::vector<hanging_poset>> a;
        a[cells[i]].push_back(menu[t1]);
        a[cells[j]].push_back(menu[t2]);
        mobile_poset m(s, a);
        if (m.size() > max_n) continue;
        doubles_maj.push_back(m);
        if (m.all_tree_hangings()) doubles_inv.push_back(m);
    }
    for (auto& m : doubles_maj) c.maj_instances.push_back(std::move(m));
    for (auto& m : doubles_inv) c.inv_instances.push_back(std::move(m));
    return c;
}

/// All increasing parent vectors on n nodes (node 0 the root); every rooted
/// tree shape appears.
inline std::vector<hanging_poset> all_increasing_trees(int n) {
    std::vector<hanging_poset> out;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    const std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(hanging_poset::tree(parent));
            return;
        }
        for (int p = 0; p < v; ++p) {
            parent[static_cast<std::size_t>(v)] = p;
            rec(v + 1);
        }
    };
    if (n >= 1) rec(1);
    return out;
}

/// Seeded random poset on n elements whose order relations point upward in
/// index; combined with random labelings this reaches arbitrary isomorphism
/// and labeling classes.
inline poset random_poset(int n, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.35);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) rel.emplace_back(a, b);
    return poset(n, rel);
}

inline std::vector<int> random_labeling(int n, std::mt19937& rng) {
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::iota(omega.begin(), omega.end(), 1);
    std::shuffle(omega.begin(), omega.end(), rng);
    return omega;
}

/// All posets on n labeled elements whose relations point upward in index,
/// i.e. one representative per linear-extension-sorted relation set. n <= 5
/// stays tiny.
inline std::vector<poset> all_upward_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<poset> out;
    std::set<std::vector<std::uint32_t>> closures;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> rel;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1ull << i)) rel.push_back(pairs[i]);
        poset p(n, rel);
        std::vector<std::uint32_t> key;
        for (int v = 0; v < n; ++v) key.push_back(p.below_mask(v));
        if (closures.insert(key).second) out.push_back(std::move(p));
    }
    return out;
}

// --- check plumbing -------------------------------------------------------------

struct check_result {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> details;  // first few failure descriptions

    bool passed() const { return failed == 0; }
};

/// Runs fn(i) for i in [0, count) across `jobs` threads; fn returns a failure
/// description or nullopt. Aggregation is by index, so the report does not
/// depend on scheduling.
inline check_result run_indexed_check(std::string name, std::size_t count,
                                      const std::function<std::optional<std::string>(std::size_t)>& fn,
                                      int jobs = 1) {
    check_result r;
    r.name = std::move(name);
    r.checked = count;
    std::vector<std::optional<std::string>> results(count);
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) results[i] = fn(i);
        };
        std::vector<std::thread> pool;
        const int k = std::min<int>(jobs, static_cast<int>(count));
        pool.reserve(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < count; ++i)
        if (results[i]) {
            ++r.failed;
            if (r.details.size() < 5) r.details.push_back(*results[i]);
        }
    return r;
}

inline std::string describe(const mobile_poset& m) {
    std::ostringstream os;
    os << "lambda=(";
    for (int p : m.strip().outer().parts()) os << p << " ";
    os << ") mu=(";
    for (int p : m.strip().inner().parts()) os << p << " ";
    os << ")";
    for (const auto& [at, hs] : m.hangings())
        os << " +" << hs.size() << "@(" << at.row << "," << at.col << ")";
    return os.str();
}

// --- the property suite -----------------------------------------------------------

struct verify_options {
    unsigned seed = 20240711;
    int jobs = 1;
    int oracle_cap = 16;
    int max_n = 11;
    std::size_t two_cell_samples = 400;
};

struct verify_summary {
    std::vector<check_result> checks;
    std::vector<std::string> notes;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

namespace detail {

inline std::optional<std::string> fail_msg(bool ok, const std::string& msg) {
    if (ok) return std::nullopt;
    return msg;
}

}  // namespace detail

/// The full deterministic property suite backing `verify --corpus small` and
/// the acceptance run. Every check compares a formula against the
/// brute-force oracle or an independently stated identity.
inline verify_summary verify_small_corpus(const verify_options& opt) {
    verify_summary sum;
    const corpus corp = build_small_corpus(opt.seed, opt.max_n, opt.two_cell_samples);
    const int jobs = opt.jobs;
    const int cap = opt.oracle_cap;

    // q-series algebra on seeded random polynomials
    sum.checks.push_back(run_indexed_check(
        "qseries-random-algebra", 200,
        [&](std::size_t i) -> std::optional<std::string> {
            std::mt19937 rng(opt.seed + static_cast<unsigned>(i));
            std::uniform_int_distribution<int> deg(0, 30), coef(-9, 9);
            auto rand_poly = [&] {
                std::vector<Int> cs(static_cast<std::size_t>(deg(rng)) + 1);
                for (auto& c : cs) c = coef(rng);
                return int_poly{std::move(cs)};
            };
            const int_poly a = rand_poly(), b = rand_poly(), c = rand_poly();
            if ((a + b) + c != a + (b + c)) return "associativity failed";
            if (a * (b + c) != a * b + a * c) return "distributivity failed";
            if (a * b != b * a) return "commutativity failed";
            if (a * int_poly::one() != a) return "unit failed";
            if (!b.is_zero() && exact_div(a * b, b) != a) return "exact_div roundtrip failed";
            return std::nullopt;
        },
        jobs));

    // q-binomial recurrence and q=1 specialization
    sum.checks.push_back(run_indexed_check(
        "qbinomial-recurrence", 12,
        [&](std::size_t idx) -> std::optional<std::string> {
            const int n = static_cast<int>(idx) + 1;
            Int binom = 1;
            for (int k = 1; k <= n; ++k) {
                if (k >= 1 && k <= n - 1) {
                    const int_poly lhs = q_binomial(n, k);
                    const int_poly rhs = q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).shifted(n - k);
                    if (lhs != rhs) return "recurrence failed at n=" + std::to_string(n);
                }
                binom = binom * (n - k + 1) / k;
                if (q_binomial(n, k).at_one() != binom) return "q=1 failed at n=" + std::to_string(n);
            }
            return std::nullopt;
        },
        jobs));

    // shape geometry sanity over the 4x4 strips
    sum.checks.push_back(run_indexed_check(
        "shapes-corner-splits", corp.bare_strips.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const skew_shape& s = corp.bare_strips[i];
            if (s.outer().conjugate().conjugate() != s.outer()) return "conjugate involution failed";
            for (cell u : s.inner_corners()) {
                const corner_split split = remove_inner_corner(s, u);
                if (split.left.size() + split.right.size() + 1 != s.size())
                    return "split sizes failed for " + describe(mobile_poset(s));
                if (s.con() - split.left.con() - split.right.con() != u.content())
                    return "content decomposition failed for " + describe(mobile_poset(s));
                for (cell v : split.left.cells())
                    if (v.content() >= u.content()) return "left piece content failed";
                for (cell v : split.right.cells())
                    if (v.content() <= u.content()) return "right piece content failed";
            }
            return std::nullopt;
        },
        jobs));

    // excited diagrams: path-count bijection over all strips in a 5x5 box
    {
        const auto strips5 = border_strips_in_box(5, 5);
        sum.checks.push_back(run_indexed_check(
            "excited-path-count", strips5.size(),
            [&](std::size_t i) -> std::optional<std::string> {
                const skew_shape& s = strips5[i];
                auto cs = s.cells();
                auto lo = *std::min_element(cs.begin(), cs.end(),
                                            [](cell a, cell b) { return a.content() < b.content(); });
                auto hi = *std::max_element(cs.begin(), cs.end(),
                                            [](cell a, cell b) { return a.content() < b.content(); });
                const long long paths = lattice_path_count(s.outer(), lo, hi);
                const long long count = static_cast<long long>(enumerate_excited(s).size());
                return detail::fail_msg(paths == count,
                                        "path count " + std::to_string(paths) + " vs |E| " + std::to_string(count));
            },
            jobs));
    }

    // excited diagrams: |Br| constant, closure under forward+inverse moves
    sum.checks.push_back(run_indexed_check(
        "excited-broken-and-closure", corp.bare_strips.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const skew_shape& s = corp.bare_strips[i];
            const auto all = enumerate_excited(s);
            const std::size_t nb = all.front().broken.size();
            for (const auto& d : all)
                if (d.broken.size() != nb) return "|Br| varies for " + describe(mobile_poset(s));
            // closure from the last diagram using inverse + forward moves
            std::set<std::set<cell>> seen;
            std::vector<excited_diagram> stack{all.back()};
            seen.insert(all.back().cells);
            while (!stack.empty()) {
                excited_diagram d = stack.back();
                stack.pop_back();
                for (cell u : active_cells(s.outer(), d)) {
                    excited_diagram e = excited_move(s.outer(), d, u);
                    if (seen.insert(e.cells).second) stack.push_back(e);
                }
                // inverse moves: slide (i+1,j+1) back to (i,j)
                for (cell v : d.cells) {
                    cell u{v.row - 1, v.col - 1};
                    if (u.row < 1 || u.col < 1) continue;
                    if (d.cells.count(u) || d.cells.count({u.row + 1, u.col}) || d.cells.count({u.row, u.col + 1}))
                        continue;
                    excited_diagram e = d;
                    e.cells.erase(v);
                    e.cells.insert(u);
                    e.broken.erase({v.row, v.col - 1});
                    e.broken.insert(v);
                    if (seen.insert(e.cells).second) stack.push_back(e);
                }
            }
            return detail::fail_msg(seen.size() == all.size(), "move closure mismatch for " + describe(mobile_poset(s)));
        },
        jobs));

    // p-hat invariance across excited diagrams, on the mobile corpus
    sum.checks.push_back(run_indexed_check(
        "excited-phat-invariance", corp.maj_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.maj_instances[i];
            std::optional<long long> expected;
            for (const auto& d : enumerate_excited(m.strip())) {
                long long phat = 0;
                for (cell u : m.strip().outer().cells())
                    if (!d.cells.count(u)) phat += m.hanging_size_col_ge(u.col);
                for (cell u : d.broken) phat -= m.hanging_size_se_of(u);
                if (!expected) expected = phat;
                if (*expected != phat) return "p-hat varies for " + describe(m);
            }
            return std::nullopt;
        },
        jobs));

    // zigzag strips have Catalan many excited diagrams
    sum.checks.push_back(run_indexed_check(
        "excited-catalan-zigzag", 6,
        [&](std::size_t idx) -> std::optional<std::string> {
            const int k = static_cast<int>(idx) + 1;
            const auto z = zigzag_strip(k);
            const Int count = static_cast<Int>(enumerate_excited(z).size());
            return detail::fail_msg(count == catalan(k),
                                    "zigzag k=" + std::to_string(k) + ": |E|=" + count.str());
        },
        jobs));

    // classical hook-length formula against the oracle, all |lambda| <= 8
    {
        std::vector<partition> shapes;
        for (const auto& lam : partitions_in_box(8, 8))
            if (lam.size() >= 1 && lam.size() <= 8) shapes.push_back(lam);
        sum.checks.push_back(run_indexed_check(
            "classical-hlf", shapes.size(),
            [&, shapes](std::size_t i) -> std::optional<std::string> {
                const partition& lam = shapes[i];
                const Int expect = extension_count(skew_labeled_poset(skew_shape(lam, {})), cap);
                return detail::fail_msg(hlf_count(lam) == expect, "hlf mismatch");
            },
            jobs));

        sum.checks.push_back(run_indexed_check(
            "stanley-q-hlf", shapes.size(),
            [&, shapes](std::size_t i) -> std::optional<std::string> {
                const partition& lam = shapes[i];
                const int_poly oracle = eq_stat(skew_labeled_poset(skew_shape(lam, {})), stat_kind::maj, cap);
                return detail::fail_msg(stanley_q_hlf(lam) == oracle, "stanley mismatch");
            },
            jobs));
    }

    // Naruse skew count against the oracle, all skews |lambda/mu| <= 7 in 4x4
    {
        std::vector<skew_shape> skews;
        const auto parts4 = partitions_in_box(4, 4);
        for (const auto& lam : parts4)
            for (const auto& mu : parts4) {
                if (!lam.contains(mu)) continue;
                const int sz = lam.size() - mu.size();
                if (sz >= 1 && sz <= 7) skews.emplace_back(lam, mu);
            }
        sum.checks.push_back(run_indexed_check(
            "classical-nhlf", skews.size(),
            [&, skews](std::size_t i) -> std::optional<std::string> {
                const skew_shape& s = skews[i];
                const Int expect = extension_count(skew_labeled_poset(s), cap);
                return detail::fail_msg(nhlf_count(s) == expect, "nhlf mismatch");
            },
            jobs));

        sum.checks.push_back(run_indexed_check(
            "mpp-q-nhlf", skews.size(),
            [&, skews](std::size_t i) -> std::optional<std::string> {
                const skew_shape& s = skews[i];
                const int_poly oracle = eq_stat(skew_labeled_poset(s), stat_kind::maj, cap);
                return detail::fail_msg(mpp_q_nhlf(s) == oracle, "mpp mismatch");
            },
            jobs));
    }

    // d-complete q-formulas on trees (all shapes up to 6 nodes, natural and
    // seeded labelings) and straight shapes (natural labeling)
    {
        std::vector<hanging_poset> trees;
        for (int n = 1; n <= 6; ++n)
            for (auto& t : all_increasing_trees(n)) trees.push_back(std::move(t));
        sum.checks.push_back(run_indexed_check(
            "peterson-proctor-maj-trees", trees.size(),
            [&, trees](std::size_t i) -> std::optional<std::string> {
                const hanging_poset& t = trees[i];
                const int n = t.size();
                std::vector<int> natural(static_cast<std::size_t>(n));
                std::iota(natural.begin(), natural.end(), 1);
                const poset p(n, t.local_covers());
                if (dcomplete_maj(t, natural) != eq_stat(labeled_poset(p, natural), stat_kind::maj, cap))
                    return "natural labeling mismatch";
                std::mt19937 rng(opt.seed + static_cast<unsigned>(i));
                for (int rep = 0; rep < 2; ++rep) {
                    const auto omega = random_labeling(n, rng);
                    if (dcomplete_maj(t, omega) != eq_stat(labeled_poset(p, omega), stat_kind::maj, cap))
                        return "arbitrary labeling mismatch";
                }
                return std::nullopt;
            },
            jobs));

        sum.checks.push_back(run_indexed_check(
            "bjorner-wachs-inv-trees", trees.size(),
            [&, trees](std::size_t i) -> std::optional<std::string> {
                const hanging_poset& t = trees[i];
                const int n = t.size();
                std::vector<int> natural(static_cast<std::size_t>(n));
                std::iota(natural.begin(), natural.end(), 1);
                const poset p(n, t.local_covers());
                if (bw_tree_inv(t, natural) != eq_stat(labeled_poset(p, natural), stat_kind::inv, cap))
                    return "natural labeling mismatch";
                std::mt19937 rng(opt.seed * 31 + static_cast<unsigned>(i));
                const auto omega = random_labeling(n, rng);
                if (bw_tree_inv(t, omega) != eq_stat(labeled_poset(p, omega), stat_kind::inv, cap))
                    return "arbitrary labeling mismatch";
                return std::nullopt;
            },
            jobs));

        std::vector<partition> small_shapes;
        for (const auto& lam : partitions_in_box(7, 7))
            if (lam.size() >= 1 && lam.size() <= 7) small_shapes.push_back(lam);
        sum.checks.push_back(run_indexed_check(
            "peterson-proctor-maj-shapes", small_shapes.size(),
            [&, small_shapes](std::size_t i) -> std::optional<std::string> {
                const hanging_poset h = hanging_poset::shape(small_shapes[i]);
                const int n = h.size();
                std::vector<int> natural(static_cast<std::size_t>(n));
                std::iota(natural.begin(), natural.end(), 1);
                const poset p(n, h.local_covers());
                return detail::fail_msg(
                    dcomplete_maj(h, natural) == eq_stat(labeled_poset(p, natural), stat_kind::maj, cap),
                    "shape mismatch");
            },
            jobs));
    }

    // Foata bijection on all of S_n, n <= 6
    sum.checks.push_back(run_indexed_check(
        "foata-bijection", 6,
        [&](std::size_t idx) -> std::optional<std::string> {
            const int n = static_cast<int>(idx) + 1;
            std::vector<int> w(static_cast<std::size_t>(n));
            std::iota(w.begin(), w.end(), 1);
            std::set<std::vector<int>> image;
            auto inverse_descents = [](const std::vector<int>& v) {
                std::vector<int> pos(v.size() + 1);
                for (std::size_t i = 0; i < v.size(); ++i) pos[static_cast<std::size_t>(v[i])] = static_cast<int>(i);
                std::vector<int> d;
                for (std::size_t l = 1; l < v.size(); ++l)
                    if (pos[l] > pos[l + 1]) d.push_back(static_cast<int>(l));
                return d;
            };
            do {
                const auto f = foata(w);
                if (maj(w) != inv(f)) return "maj/inv mismatch at n=" + std::to_string(n);
                if (inverse_descents(w) != inverse_descents(f)) return "inverse descent set not preserved";
                image.insert(f);
            } while (std::next_permutation(w.begin(), w.end()));
            Int fact = factorial(n);
            return detail::fail_msg(Int(image.size()) == fact, "foata not bijective at n=" + std::to_string(n));
        },
        jobs));

    // P-partition generating function identities
    {
        struct instance {
            labeled_poset lp;
            std::string what;
        };
        std::vector<instance> posets;
        for (int n = 1; n <= 5; ++n) {
            std::mt19937 rng(opt.seed ^ (0x9e37u + static_cast<unsigned>(n)));
            for (const auto& p : all_upward_posets(n)) {
                std::vector<int> natural(static_cast<std::size_t>(n));
                std::iota(natural.begin(), natural.end(), 1);
                posets.push_back({labeled_poset(p, natural), "n=" + std::to_string(n) + " natural"});
                posets.push_back({labeled_poset(p, random_labeling(n, rng)), "n=" + std::to_string(n) + " random"});
            }
        }
        for (int n = 6; n <= 7; ++n) {
            std::mt19937 rng(opt.seed * 7919u + static_cast<unsigned>(n));
            for (int rep = 0; rep < 120; ++rep)
                posets.push_back({labeled_poset(random_poset(n, rng), random_labeling(n, rng)),
                                  "n=" + std::to_string(n) + " random#" + std::to_string(rep)});
        }
        const int deg = 12;
        sum.checks.push_back(run_indexed_check(
            "ppartition-gp", posets.size(),
            [&, posets](std::size_t i) -> std::optional<std::string> {
                const auto& [lp, what] = posets[i];
                const int_poly lhs = ppartition_series(lp, deg);
                const int_poly rhs =
                    truncated_product(eq_stat(lp, stat_kind::maj, cap), partition_series_truncated(lp.size(), deg), deg);
                return detail::fail_msg(lhs == rhs, "G(P) identity failed: " + what);
            },
            jobs));

        sum.checks.push_back(run_indexed_check(
            "ppartition-gp-restricted", posets.size(),
            [&, posets](std::size_t i) -> std::optional<std::string> {
                const auto& [lp, what] = posets[i];
                // every maximal element plus one non-maximal, when present
                auto maxima = lp.p.maximal_elements();
                std::vector<int> ss = maxima;
                for (int v = 0; v < lp.size(); ++v)
                    if (std::find(maxima.begin(), maxima.end(), v) == maxima.end()) {
                        ss.push_back(v);
                        break;
                    }
                for (int s : ss) {
                    const int_poly lhs = ppartition_series_restricted(lp, s, deg);
                    const int_poly rhs = truncated_product(eq_stat_ending_at(lp, s, cap),
                                                           partition_series_truncated(lp.size(), deg), deg);
                    if (lhs != rhs) return "restricted G(P) failed: " + what;
                }
                return std::nullopt;
            },
            jobs));
    }

    // disjoint-union identities
    sum.checks.push_back(run_indexed_check(
        "disjoint-union-identities", 150,
        [&](std::size_t i) -> std::optional<std::string> {
            std::mt19937 rng(opt.seed + 1777u * static_cast<unsigned>(i));
            std::uniform_int_distribution<int> size_dist(1, 4);
            const int p_n = size_dist(rng), q_n = size_dist(rng);
            const poset P = random_poset(p_n, rng), Q = random_poset(q_n, rng);
            const poset U = disjoint_union(P, Q);
            const int n = p_n + q_n;

            // any labeling for maj
            labeled_poset lu(U, random_labeling(n, rng));
            std::vector<int> q_elems;
            for (int v = p_n; v < n; ++v) q_elems.push_back(v);
            std::vector<int> p_elems;
            for (int v = 0; v < p_n; ++v) p_elems.push_back(v);
            const labeled_poset lp_part = lu.without(q_elems);
            const labeled_poset lq_part = lu.without(p_elems);
            const int_poly lhs = eq_stat(lu, stat_kind::maj, cap);
            const int_poly rhs =
                q_binomial(n, p_n) * eq_stat(lp_part, stat_kind::maj, cap) * eq_stat(lq_part, stat_kind::maj, cap);
            if (lhs != rhs) return "disjoint maj identity failed";

            // inv requires P-labels below Q-labels
            std::vector<int> split_labels = random_labeling(p_n, rng);
            for (int l : random_labeling(q_n, rng)) split_labels.push_back(l + p_n);
            labeled_poset lu_inv(U, split_labels);
            const int_poly ilhs = eq_stat(lu_inv, stat_kind::inv, cap);
            const int_poly irhs = q_binomial(n, p_n) * eq_stat(lu_inv.without(q_elems), stat_kind::inv, cap) *
                                  eq_stat(lu_inv.without(p_elems), stat_kind::inv, cap);
            if (ilhs != irhs) return "disjoint inv identity failed";

            // restricted product identity: s maximal in P, labeled above all of Q
            const auto maxima = lp_part.p.maximal_elements();
            const int s = maxima.front();
            std::vector<int> omega(static_cast<std::size_t>(n));
            {
                // s gets the top label, everything else is arbitrary
                std::vector<int> pool = random_labeling(n - 1, rng);
                int next = 0;
                for (int v = 0; v < n; ++v)
                    omega[static_cast<std::size_t>(v)] = (v == s) ? n : pool[static_cast<std::size_t>(next++)];
            }
            labeled_poset lu_s(U, omega);
            const int_poly slhs = eq_stat_ending_at(lu_s, s, cap);
            const int_poly srhs = q_binomial(n - 1, p_n - 1) *
                                  eq_stat_ending_at(lu_s.without(q_elems), s, cap) *
                                  eq_stat(lu_s.without(p_elems), stat_kind::maj, cap);
            if (slhs != srhs) return "restricted product identity failed";
            return std::nullopt;
        },
        jobs));

    // the inv identity must fail without the label condition (fixed witness)
    sum.checks.push_back(run_indexed_check(
        "disjoint-inv-negative-witness", 1,
        [&](std::size_t) -> std::optional<std::string> {
            const poset P(1, {});
            const poset Q(2, {{0, 1}});
            const poset U = disjoint_union(P, Q);
            labeled_poset lu(U, {2, 1, 3});  // P-label interleaves Q-labels
            const int_poly lhs = eq_stat(lu, stat_kind::inv, cap);
            const int_poly rhs = q_binomial(3, 1) * eq_stat(lu.without({1, 2}), stat_kind::inv, cap) *
                                 eq_stat(lu.without({0}), stat_kind::inv, cap);
            return detail::fail_msg(lhs != rhs, "witness unexpectedly satisfied the identity");
        },
        jobs));

    // main theorem, major index
    sum.checks.push_back(run_indexed_check(
        "mobile-maj-vs-oracle", corp.maj_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.maj_instances[i];
            const int_poly oracle = eq_stat(reversed_schur_labeling(m).lp, stat_kind::maj, cap);
            return detail::fail_msg(mobile_maj_poly(m) == oracle, "maj formula mismatch: " + describe(m));
        },
        jobs));

    // main theorem, inversion index
    sum.checks.push_back(run_indexed_check(
        "mobile-inv-vs-oracle", corp.inv_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.inv_instances[i];
            const int_poly oracle = eq_stat(omega_inv_labeling(m).lp, stat_kind::inv, cap);
            return detail::fail_msg(mobile_inv_poly(m) == oracle, "inv formula mismatch: " + describe(m));
        },
        jobs));

    // border strips: the two q-analogues coincide, witnessed by Foata
    sum.checks.push_back(run_indexed_check(
        "inv-equals-maj-border-strips", corp.bare_strips.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset m(corp.bare_strips[i]);
            if (m.size() > opt.max_n) return std::nullopt;
            const int_poly a = mobile_maj_poly(m);
            const int_poly b = mobile_inv_poly(m);
            if (a != b) return "polynomials differ: " + describe(m);
            if (m.size() <= 9) {
                const auto ml = reversed_schur_labeling(m);
                std::set<std::vector<int>> words, conj;
                for_each_extension(ml.lp, [&](const std::vector<int>& w) {
                    words.insert(w);
                    conj.insert(foata(w));
                }, cap);
                if (words != conj) return "foata does not preserve the extension set: " + describe(m);
            }
            return std::nullopt;
        },
        jobs));

    // recurrences, both statistics, oracle-evaluated on both sides
    sum.checks.push_back(run_indexed_check(
        "recurrence-major", corp.maj_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.maj_instances[i];
            return detail::fail_msg(verify_maj_recurrence(m, cap).match, "maj recurrence failed: " + describe(m));
        },
        jobs));

    sum.checks.push_back(run_indexed_check(
        "recurrence-inversion", corp.inv_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.inv_instances[i];
            return detail::fail_msg(verify_inv_recurrence(m, cap).match, "inv recurrence failed: " + describe(m));
        },
        jobs));

    // Pieri-Chevalley polynomial identity
    sum.checks.push_back(run_indexed_check(
        "chevalley-major", corp.maj_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.maj_instances[i];
            return detail::fail_msg(verify_chevalley_maj(m).match, "chevalley identity failed: " + describe(m));
        },
        jobs));

    // q = 1 consistency and the hook-product sandwich
    sum.checks.push_back(run_indexed_check(
        "q1-and-bounds", corp.maj_instances.size(),
        [&](std::size_t i) -> std::optional<std::string> {
            const mobile_poset& m = corp.maj_instances[i];
            const Int count = mobile_count(m);
            if (mobile_maj_poly(m).at_one() != count) return "q=1 mismatch: " + describe(m);
            const Int oracle = extension_count(reversed_schur_labeling(m).lp, cap);
            if (count != oracle) return "count vs oracle mismatch: " + describe(m);
            const bounds_result b = mobile_bounds(m);
            if (!(b.lower <= count && count <= b.upper)) return "bounds sandwich violated: " + describe(m);
            return std::nullopt;
        },
        jobs));

    // zigzag bounds: sandwich is asserted, the printed closed forms are audited
    {
        std::vector<std::pair<int, int>> pk;
        for (int p = 0; p <= 2; ++p)
            for (int k = 1; k <= 3; ++k) pk.emplace_back(p, k);
        std::mutex note_mutex;
        std::vector<std::string> notes(pk.size() * 2);
        sum.checks.push_back(run_indexed_check(
            "zigzag-bounds-sandwich", pk.size() * 2,
            [&](std::size_t i) -> std::optional<std::string> {
                const auto [p, k] = pk[i / 2];
                const euler_kind kind = (i % 2 == 0) ? euler_kind::chains : euler_kind::antichains;
                const zigzag_audit a = audit_zigzag_bounds(kind, p, k, cap);
                std::string tag = std::string(kind == euler_kind::chains ? "C" : "A") + "_" + std::to_string(p) +
                                  "(" + std::to_string(k) + ")";
                if (!a.printed_matches_computed) {
                    std::lock_guard<std::mutex> lock(note_mutex);
                    notes[i] = "zigzag closed form for " + tag + " disagrees with hook products: printed " +
                               a.printed_lower.to_string() + ", computed " + a.computed.lower.to_string();
                }
                return detail::fail_msg(a.sandwich_holds, "sandwich failed for " + tag);
            },
            jobs));
        bool any_note = false;
        for (const auto& n : notes)
            if (!n.empty()) {
                sum.notes.push_back(n);
                any_note = true;
            }
        if (!any_note)
            sum.notes.push_back(
                "zigzag closed forms: printed denominators match the hook products at every audited (p, k)");
    }

    return sum;
}

}  // namespace mobilex
