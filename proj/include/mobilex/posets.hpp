#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "int_poly.hpp"

namespace mobilex {

/// Hard ceiling for the backtracking oracle. Counts per statistic value are
/// accumulated in 64-bit integers, which 18! still fits.
inline constexpr int oracle_max_elements = 18;

enum class stat_kind { maj, inv };

/// Finite poset on elements 0..n-1, built from any generating set of
/// relations (a, b) meaning a < b. Stores the full below-masks and the
/// cover relations of the transitive reduction.
class poset {
public:
    poset() = default;

    poset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n), below_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("poset: negative size");
        std::vector<std::uint32_t> direct(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : relations) {
            if (a < 0 || a >= n || b < 0 || b >= n || a == b)
                throw std::invalid_argument("poset: relation out of range");
            direct[static_cast<std::size_t>(b)] |= 1u << a;
        }
        // transitive closure, then cycle check
        bool changed = true;
        below_ = direct;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                std::uint32_t m = below_[static_cast<std::size_t>(v)];
                std::uint32_t acc = m;
                for (std::uint32_t rest = m; rest;) {
                    int a = std::countr_zero(rest);
                    rest &= rest - 1;
                    acc |= below_[static_cast<std::size_t>(a)];
                }
                if (acc != m) {
                    below_[static_cast<std::size_t>(v)] = acc;
                    changed = true;
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (below_[static_cast<std::size_t>(v)] & (1u << v))
                throw std::invalid_argument("poset: relations contain a cycle");
    }

    int size() const { return n_; }

    bool less(int a, int b) const { return below_[static_cast<std::size_t>(b)] & (1u << a); }

    std::uint32_t below_mask(int v) const { return below_[static_cast<std::size_t>(v)]; }

    /// Cover pairs (a, b) of the transitive reduction, a covered by b.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> cov;
        for (int b = 0; b < n_; ++b)
            for (std::uint32_t rest = below_[static_cast<std::size_t>(b)]; rest;) {
                int a = std::countr_zero(rest);
                rest &= rest - 1;
                bool is_cover = true;
                for (std::uint32_t mid = below_[static_cast<std::size_t>(b)]; mid && is_cover;) {
                    int c = std::countr_zero(mid);
                    mid &= mid - 1;
                    if (c != a && less(a, c)) is_cover = false;
                }
                if (is_cover) cov.emplace_back(a, b);
            }
        return cov;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> v;
        for (int x = 0; x < n_; ++x) {
            bool maximal = true;
            for (int y = 0; y < n_ && maximal; ++y)
                if (less(x, y)) maximal = false;
            if (maximal) v.push_back(x);
        }
        return v;
    }

    /// Induced subposet on the elements not in `removed` (kept in index
    /// order); returns the new poset and the old->new index map (-1 for
    /// dropped elements).
    std::pair<poset, std::vector<int>> without(const std::vector<int>& removed) const {
        std::vector<int> remap(static_cast<std::size_t>(n_));
        std::iota(remap.begin(), remap.end(), 0);
        for (int r : removed) remap[static_cast<std::size_t>(r)] = -1;
        int next = 0;
        for (int v = 0; v < n_; ++v)
            if (remap[static_cast<std::size_t>(v)] >= 0) remap[static_cast<std::size_t>(v)] = next++;
        std::vector<std::pair<int, int>> rel;
        for (int b = 0; b < n_; ++b)
            for (int a = 0; a < n_; ++a)
                if (less(a, b) && remap[static_cast<std::size_t>(a)] >= 0 && remap[static_cast<std::size_t>(b)] >= 0)
                    rel.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
        return {poset(next, rel), remap};
    }

private:
    int n_ = 0;
    std::vector<std::uint32_t> below_;
};

/// Poset together with a bijective labeling omega: elements -> 1..n.
struct labeled_poset {
    poset p;
    std::vector<int> omega;

    labeled_poset() = default;

    labeled_poset(poset pp, std::vector<int> om) : p(std::move(pp)), omega(std::move(om)) {
        const int n = p.size();
        if (static_cast<int>(omega.size()) != n)
            throw std::invalid_argument("labeled_poset: labeling size mismatch");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int l : omega) {
            if (l < 1 || l > n || seen[static_cast<std::size_t>(l)])
                throw std::invalid_argument("labeled_poset: labeling is not a bijection onto 1..n");
            seen[static_cast<std::size_t>(l)] = true;
        }
    }

    int size() const { return p.size(); }

    bool is_natural() const {
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (p.less(a, b) && omega[static_cast<std::size_t>(a)] > omega[static_cast<std::size_t>(b)])
                    return false;
        return true;
    }

    /// Induced labeled subposet; labels are collapsed to 1..m preserving
    /// relative order, which leaves maj and inv unchanged.
    labeled_poset without(const std::vector<int>& removed) const {
        auto [q, remap] = p.without(removed);
        std::vector<int> kept_labels;
        for (int v = 0; v < size(); ++v)
            if (remap[static_cast<std::size_t>(v)] >= 0) kept_labels.push_back(omega[static_cast<std::size_t>(v)]);
        std::vector<int> sorted = kept_labels;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> om(static_cast<std::size_t>(q.size()));
        int next = 0;
        for (int v = 0; v < size(); ++v)
            if (remap[static_cast<std::size_t>(v)] >= 0) {
                int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                             omega[static_cast<std::size_t>(v)]) -
                                            sorted.begin());
                om[static_cast<std::size_t>(next++)] = rank + 1;
            }
        return labeled_poset(std::move(q), std::move(om));
    }
};

// --- permutation statistics ------------------------------------------------

inline std::vector<int> descents(const std::vector<int>& word) {
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

inline long long maj(const std::vector<int>& word) {
    long long s = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) s += static_cast<long long>(i) + 1;
    return s;
}

inline long long inv(const std::vector<int>& word) {
    long long s = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++s;
    return s;
}

/// Foata's bijection: maj(w) = inv(foata(w)) and the inverse descent set is
/// preserved. Compartments are split after each letter greater (resp.
/// smaller) than the incoming letter and cyclically shifted right.
inline std::vector<int> foata(const std::vector<int>& word) {
    if (word.empty()) return {};
    std::vector<int> gamma{word[0]};
    for (std::size_t k = 1; k < word.size(); ++k) {
        const int a = word[k];
        const bool split_on_greater = gamma.back() > a;
        std::vector<int> next;
        std::size_t start = 0;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const bool boundary = split_on_greater ? gamma[i] > a : gamma[i] < a;
            if (!boundary) continue;
            // cyclic right shift of gamma[start..i]
            next.push_back(gamma[i]);
            for (std::size_t j = start; j < i; ++j) next.push_back(gamma[j]);
            start = i + 1;
        }
        // the final letter always closes a compartment, so nothing trails
        next.push_back(a);
        gamma = std::move(next);
    }
    return gamma;
}

// --- linear extension oracle -----------------------------------------------

namespace detail {

inline void check_oracle_cap(int n, int cap) {
    if (cap <= 0) throw std::invalid_argument("oracle: size cap must be positive");
    if (cap > oracle_max_elements) throw std::invalid_argument("oracle: size cap above supported maximum 18");
    if (n > cap) throw std::invalid_argument("oracle: poset larger than the configured size cap");
}

template <typename Fn>
void extensions_rec(const labeled_poset& lp, std::uint32_t placed, std::vector<int>& word, Fn&& fn) {
    const int n = lp.size();
    if (static_cast<int>(word.size()) == n) {
        fn(word);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (placed & (1u << v)) continue;
        if ((lp.p.below_mask(v) & ~placed) != 0) continue;
        word.push_back(lp.omega[static_cast<std::size_t>(v)]);
        extensions_rec(lp, placed | (1u << v), word, fn);
        word.pop_back();
    }
}

}  // namespace detail

/// Visits the word omega . f^{-1} of every linear extension f exactly once,
/// by backtracking over minimal elements.
template <typename Fn>
void for_each_extension(const labeled_poset& lp, Fn&& fn, int cap = 16) {
    detail::check_oracle_cap(lp.size(), cap);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(lp.size()));
    detail::extensions_rec(lp, 0, word, fn);
}

inline std::vector<std::vector<int>> enumerate_extensions(const labeled_poset& lp, int cap = 16) {
    std::vector<std::vector<int>> all;
    for_each_extension(lp, [&](const std::vector<int>& w) { all.push_back(w); }, cap);
    return all;
}

namespace detail {

// Specialized accumulation: never materializes words, tracks the statistic
// incrementally. labels_placed has bit (l-1) set when label l is placed, so
// the number of placed labels greater than l is popcount(mask >> l).
inline void eq_stat_rec(const labeled_poset& lp, std::uint32_t placed, std::uint32_t labels_placed, int pos,
                        int last_label, long long acc, stat_kind kind, int ending_at,
                        std::vector<unsigned long long>& counts) {
    const int n = lp.size();
    if (pos == n) {
        counts[static_cast<std::size_t>(acc)] += 1;
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (placed & (1u << v)) continue;
        if ((lp.p.below_mask(v) & ~placed) != 0) continue;
        if (pos == n - 1 && ending_at >= 0 && v != ending_at) continue;
        const int label = lp.omega[static_cast<std::size_t>(v)];
        long long next_acc = acc;
        if (kind == stat_kind::maj) {
            if (pos > 0 && last_label > label) next_acc += pos;
        } else {
            next_acc += std::popcount(labels_placed >> label);
        }
        eq_stat_rec(lp, placed | (1u << v), labels_placed | (1u << (label - 1)), pos + 1, label, next_acc, kind,
                    ending_at, counts);
    }
}

inline int_poly counts_to_poly(const std::vector<unsigned long long>& counts) {
    std::vector<Int> coeffs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = counts[i];
    return int_poly{std::move(coeffs)};
}

}  // namespace detail

/// e_q^stat(P, omega) = sum over linear extensions of q^stat(word).
inline int_poly eq_stat(const labeled_poset& lp, stat_kind kind, int cap = 16) {
    detail::check_oracle_cap(lp.size(), cap);
    const int n = lp.size();
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n * (n - 1) / 2) + 1, 0);
    detail::eq_stat_rec(lp, 0, 0, 0, 0, 0, kind, -1, counts);
    return detail::counts_to_poly(counts);
}

/// Major-index generating polynomial over extensions that end with omega(s);
/// zero when s cannot be last.
inline int_poly eq_stat_ending_at(const labeled_poset& lp, int s, int cap = 16) {
    detail::check_oracle_cap(lp.size(), cap);
    if (s < 0 || s >= lp.size()) throw std::invalid_argument("eq_stat_ending_at: element out of range");
    const int n = lp.size();
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n * (n - 1) / 2) + 1, 0);
    detail::eq_stat_rec(lp, 0, 0, 0, 0, 0, stat_kind::maj, s, counts);
    return detail::counts_to_poly(counts);
}

inline Int extension_count(const labeled_poset& lp, int cap = 16) { return eq_stat(lp, stat_kind::maj, cap).at_one(); }

// --- (P, omega)-partitions ---------------------------------------------------

namespace detail {

struct pp_context {
    const labeled_poset* lp;
    std::vector<std::vector<int>> lower_covers;  // by element
    std::vector<int> order;                      // a linear extension of P
    int bound;
    const int* fixed_s;  // restricted variant: the distinguished element, or null
    std::vector<long long> counts;
    std::vector<int> values;
};

inline void pp_rec(pp_context& ctx, std::size_t idx, int partial) {
    if (idx == ctx.order.size()) {
        if (ctx.fixed_s) {
            const int s = *ctx.fixed_s;
            const int fs = ctx.values[static_cast<std::size_t>(s)];
            for (int t = 0; t < ctx.lp->size(); ++t) {
                if (t == s) continue;
                const int ft = ctx.values[static_cast<std::size_t>(t)];
                if (fs > ft) return;
                if (fs == ft && ctx.lp->omega[static_cast<std::size_t>(s)] < ctx.lp->omega[static_cast<std::size_t>(t)])
                    return;
            }
        }
        ctx.counts[static_cast<std::size_t>(partial)] += 1;
        return;
    }
    const int t = ctx.order[idx];
    int ub = ctx.bound - partial;
    for (int s : ctx.lower_covers[static_cast<std::size_t>(t)]) {
        int b = ctx.values[static_cast<std::size_t>(s)];
        if (ctx.lp->omega[static_cast<std::size_t>(s)] > ctx.lp->omega[static_cast<std::size_t>(t)]) b -= 1;
        ub = std::min(ub, b);
    }
    for (int f = 0; f <= ub; ++f) {
        ctx.values[static_cast<std::size_t>(t)] = f;
        pp_rec(ctx, idx + 1, partial + f);
    }
}

inline int_poly pp_series(const labeled_poset& lp, int bound, const int* fixed_s, int cap) {
    if (bound < 0) throw std::invalid_argument("ppartition_series: negative truncation degree");
    if (bound > cap) throw std::invalid_argument("ppartition_series: truncation degree above the configured cap");
    pp_context ctx;
    ctx.lp = &lp;
    ctx.bound = bound;
    ctx.fixed_s = fixed_s;
    const int n = lp.size();
    ctx.lower_covers.assign(static_cast<std::size_t>(n), {});
    for (auto [a, b] : lp.p.covers()) ctx.lower_covers[static_cast<std::size_t>(b)].push_back(a);
    // any linear extension works as the assignment order
    std::uint32_t placed = 0;
    while (static_cast<int>(ctx.order.size()) < n)
        for (int v = 0; v < n; ++v)
            if (!(placed & (1u << v)) && (lp.p.below_mask(v) & ~placed) == 0) {
                ctx.order.push_back(v);
                placed |= 1u << v;
                break;
            }
    ctx.counts.assign(static_cast<std::size_t>(bound) + 1, 0);
    ctx.values.assign(static_cast<std::size_t>(n), 0);
    pp_rec(ctx, 0, 0);
    std::vector<Int> coeffs(ctx.counts.size());
    for (std::size_t i = 0; i < ctx.counts.size(); ++i) coeffs[i] = ctx.counts[i];
    return int_poly{std::move(coeffs)};
}

}  // namespace detail

/// Truncated generating function of (P, omega)-partitions: the coefficient of
/// q^m counts maps f: P -> N with f weakly decreasing along the order, strict
/// where the labeling descends, and sum m, for m <= bound.
inline int_poly ppartition_series(const labeled_poset& lp, int bound, int cap = 64) {
    return detail::pp_series(lp, bound, nullptr, cap);
}

/// Restricted variant: f(s) must be a minimum value of f, with ties allowed
/// only against smaller labels.
inline int_poly ppartition_series_restricted(const labeled_poset& lp, int s, int bound, int cap = 64) {
    if (s < 0 || s >= lp.size())
        throw std::invalid_argument("ppartition_series_restricted: element out of range");
    return detail::pp_series(lp, bound, &s, cap);
}

/// Truncation of a * b to degree `bound`.
inline int_poly truncated_product(const int_poly& a, const int_poly& b, int bound) {
    std::vector<Int> v(static_cast<std::size_t>(bound) + 1);
    for (int i = 0; i <= std::min(a.degree(), bound); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= std::min(b.degree(), bound - i); ++j) v[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return int_poly{std::move(v)};
}

/// Truncation of prod_{i=1..n} 1/(1-q^i) to degree `bound`.
inline int_poly partition_series_truncated(int n, int bound) {
    std::vector<Int> v(static_cast<std::size_t>(bound) + 1, Int(0));
    v[0] = 1;
    int_poly acc{std::move(v)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> g(static_cast<std::size_t>(bound) + 1, Int(0));
        for (int k = 0; k <= bound; k += i) g[static_cast<std::size_t>(k)] = 1;
        acc = truncated_product(acc, int_poly{std::move(g)}, bound);
    }
    return acc;
}

/// Disjoint union P + Q; the caller supplies the combined labeling.
inline poset disjoint_union(const poset& p, const poset& q) {
    std::vector<std::pair<int, int>> rel;
    for (int b = 0; b < p.size(); ++b)
        for (int a = 0; a < p.size(); ++a)
            if (p.less(a, b)) rel.emplace_back(a, b);
    for (int b = 0; b < q.size(); ++b)
        for (int a = 0; a < q.size(); ++a)
            if (q.less(a, b)) rel.emplace_back(a + p.size(), b + p.size());
    return poset(p.size() + q.size(), rel);
}

}  // namespace mobilex
