#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <vector>

namespace mobilex {

/// Matrix (English) convention throughout: row 1 at the top, column 1 at the
/// left, both coordinates 1-based.
struct cell {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }

    friend auto operator<=>(const cell&, const cell&) = default;
};

/// Integer partition: weakly decreasing sequence of positive parts. The empty
/// partition is allowed.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
    }

    int length() const { return static_cast<int>(parts_.size()); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool empty() const { return parts_.empty(); }

    /// i-th part, 1-based, 0 beyond the last row.
    int part(int i) const {
        if (i < 1 || i > length()) return 0;
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& parts() const { return parts_; }

    bool contains(cell u) const { return u.row >= 1 && u.col >= 1 && u.col <= part(u.row); }

    bool contains(const partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    partition conjugate() const {
        if (empty()) return {};
        std::vector<int> c(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j)
            c[static_cast<std::size_t>(j - 1)] =
                static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
        return partition{std::move(c)};
    }

    /// Cells in row-major order.
    std::vector<cell> cells() const {
        std::vector<cell> v;
        v.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i); ++j) v.push_back({i, j});
        return v;
    }

    friend auto operator<=>(const partition&, const partition&) = default;

private:
    std::vector<int> parts_;
};

/// Hook length of u in lambda: arm + leg + 1.
inline int hook(const partition& lambda, cell u) {
    if (!lambda.contains(u)) throw std::invalid_argument("hook: cell outside the partition");
    const partition lc = lambda.conjugate();
    return lambda.part(u.row) + lc.part(u.col) - u.row - u.col + 1;
}

/// b(lambda) = sum_i (i-1) lambda_i.
inline int b_stat(const partition& lambda) {
    int s = 0;
    for (int i = 1; i <= lambda.length(); ++i) s += (i - 1) * lambda.part(i);
    return s;
}

/// Skew diagram lambda/mu with mu contained in lambda.
class skew_shape {
public:
    skew_shape() = default;

    skew_shape(partition outer, partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("skew_shape: inner shape not contained in outer shape");
    }

    const partition& outer() const { return outer_; }
    const partition& inner() const { return inner_; }

    int size() const { return outer_.size() - inner_.size(); }

    bool contains(cell u) const { return outer_.contains(u) && !inner_.contains(u); }

    /// Skew cells in row-major order.
    std::vector<cell> cells() const {
        std::vector<cell> v;
        v.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= outer_.length(); ++i)
            for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) v.push_back({i, j});
        return v;
    }

    /// con(lambda/mu) = sum of contents over the skew cells.
    int con() const {
        int s = 0;
        for (cell u : cells()) s += u.content();
        return s;
    }

    /// Edge-connected and free of 2x2 blocks.
    bool is_border_strip() const {
        const auto cs = cells();
        if (cs.empty()) return false;
        std::set<cell> in(cs.begin(), cs.end());
        for (cell u : cs)
            if (in.count({u.row + 1, u.col}) && in.count({u.row, u.col + 1}) &&
                in.count({u.row + 1, u.col + 1}))
                return false;
        // flood fill over edge neighbours
        std::vector<cell> stack{cs.front()};
        std::set<cell> seen{cs.front()};
        while (!stack.empty()) {
            cell u = stack.back();
            stack.pop_back();
            for (cell v : {cell{u.row - 1, u.col}, cell{u.row + 1, u.col}, cell{u.row, u.col - 1},
                           cell{u.row, u.col + 1}})
                if (in.count(v) && seen.insert(v).second) stack.push_back(v);
        }
        return seen.size() == in.size();
    }

    /// Cells with no skew cell above or to the left; these are the maximal
    /// elements of the strip poset. Ordered by decreasing content.
    std::vector<cell> inner_corners() const {
        std::vector<cell> v;
        for (cell u : cells())
            if (!contains({u.row - 1, u.col}) && !contains({u.row, u.col - 1})) v.push_back(u);
        std::sort(v.begin(), v.end(), [](cell a, cell b) { return a.content() > b.content(); });
        return v;
    }

    friend auto operator<=>(const skew_shape&, const skew_shape&) = default;

private:
    partition outer_;
    partition inner_;
};

/// Result of adjoining an inner corner u to mu. The two remaining pieces of
/// lambda/nu are returned as skew shapes over the same outer lambda: `left`
/// holds the cells of content < c(u), `right` those of content > c(u). Either
/// may be empty.
struct corner_split {
    partition nu;
    skew_shape left;
    skew_shape right;
};

/// Removes an inner corner from a border strip. On a border strip the cells
/// below u's row all have content < c(u) and those above have content > c(u),
/// so both pieces are again skew shapes of lambda.
inline corner_split remove_inner_corner(const skew_shape& s, cell u) {
    if (!s.is_border_strip())
        throw std::invalid_argument("remove_inner_corner: shape is not a border strip");
    const auto corners = s.inner_corners();
    if (std::find(corners.begin(), corners.end(), u) == corners.end())
        throw std::invalid_argument("remove_inner_corner: cell is not an inner corner");

    const partition& lam = s.outer();
    const partition& mu = s.inner();
    const int len = lam.length();

    std::vector<int> nu_parts, left_inner, right_inner;
    for (int i = 1; i <= len; ++i) {
        nu_parts.push_back(i == u.row ? u.col : mu.part(i));
        left_inner.push_back(i <= u.row ? lam.part(i) : mu.part(i));
        right_inner.push_back(i < u.row ? mu.part(i) : (i == u.row ? u.col : lam.part(i)));
    }
    auto strip_zeros = [](std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    return corner_split{partition{strip_zeros(std::move(nu_parts))},
                        skew_shape{lam, partition{strip_zeros(std::move(left_inner))}},
                        skew_shape{lam, partition{strip_zeros(std::move(right_inner))}}};
}

}  // namespace mobilex
