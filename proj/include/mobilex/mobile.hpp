#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "excited.hpp"
#include "int_poly.hpp"
#include "posets.hpp"
#include "shapes.hpp"

namespace mobilex {

/// A poset hung below a strip cell: either a rooted tree (children below the
/// root, root maximal) or a straight-shape Young diagram poset with its
/// unique maximal element at cell (1,1). The strip cell covers the maximal
/// element.
class hanging_poset {
public:
    enum class kind_t { tree, shape };

    static hanging_poset tree(std::vector<int> parent) {
        hanging_poset h;
        h.kind_ = kind_t::tree;
        h.tree_parent_ = std::move(parent);
        const int n = static_cast<int>(h.tree_parent_.size());
        if (n == 0) throw std::invalid_argument("hanging_poset: tree must be nonempty");
        int roots = 0;
        for (int v = 0; v < n; ++v) {
            const int p = h.tree_parent_[static_cast<std::size_t>(v)];
            if (p == -1) {
                ++roots;
                continue;
            }
            if (p < 0 || p >= n || p == v) throw std::invalid_argument("hanging_poset: bad parent index");
        }
        if (roots != 1) throw std::invalid_argument("hanging_poset: tree must have exactly one root");
        // acyclicity: walking up from every node must reach the root
        for (int v = 0; v < n; ++v) {
            int x = v, steps = 0;
            while (h.tree_parent_[static_cast<std::size_t>(x)] != -1) {
                x = h.tree_parent_[static_cast<std::size_t>(x)];
                if (++steps > n) throw std::invalid_argument("hanging_poset: parent map has a cycle");
            }
        }
        return h;
    }

    static hanging_poset chain(int length) {
        std::vector<int> parent(static_cast<std::size_t>(length));
        for (int v = 0; v < length; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
        return tree(std::move(parent));
    }

    static hanging_poset shape(partition p) {
        if (p.empty()) throw std::invalid_argument("hanging_poset: shape must be nonempty");
        hanging_poset h;
        h.kind_ = kind_t::shape;
        h.shape_ = std::move(p);
        return h;
    }

    kind_t kind() const { return kind_; }
    bool is_tree() const { return kind_ == kind_t::tree; }
    const std::vector<int>& tree_parent() const { return tree_parent_; }
    const partition& shape_partition() const { return shape_; }

    int size() const {
        return kind_ == kind_t::tree ? static_cast<int>(tree_parent_.size()) : shape_.size();
    }

    /// Local element order: a fixed linear extension listing every element
    /// after all elements below it, maximal element last. Trees use
    /// post-order from the root, shapes (row, col) descending.
    /// Labeling elements 1..size in this order is the canonical natural
    /// labeling.
    int local_size() const { return size(); }

    /// Cover pairs (a, b) over local indices, a covered by b.
    std::vector<std::pair<int, int>> local_covers() const {
        std::vector<std::pair<int, int>> cov;
        if (kind_ == kind_t::tree) {
            const auto pos = tree_postorder();
            for (int v = 0; v < size(); ++v) {
                const int p = tree_parent_[static_cast<std::size_t>(v)];
                if (p >= 0) cov.emplace_back(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(p)]);
            }
        } else {
            const auto cs = shape_cells_descending();
            std::map<cell, int> pos;
            for (int i = 0; i < static_cast<int>(cs.size()); ++i) pos[cs[static_cast<std::size_t>(i)]] = i;
            for (cell u : cs) {
                if (pos.count({u.row - 1, u.col})) cov.emplace_back(pos[u], pos[{u.row - 1, u.col}]);
                if (pos.count({u.row, u.col - 1})) cov.emplace_back(pos[u], pos[{u.row, u.col - 1}]);
            }
        }
        return cov;
    }

    /// d-complete hook lengths by local index: subtree sizes for trees,
    /// classic cell hooks for shapes.
    std::vector<int> hook_lengths() const {
        std::vector<int> h(static_cast<std::size_t>(size()));
        if (kind_ == kind_t::tree) {
            const auto pos = tree_postorder();
            std::vector<int> sub(static_cast<std::size_t>(size()), 1);
            // children have larger parent-chain depth; accumulate bottom-up
            std::vector<int> order(static_cast<std::size_t>(size()));
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return depth(a) > depth(b); });
            for (int v : order) {
                const int p = tree_parent_[static_cast<std::size_t>(v)];
                if (p >= 0) sub[static_cast<std::size_t>(p)] += sub[static_cast<std::size_t>(v)];
            }
            for (int v = 0; v < size(); ++v) h[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = sub[static_cast<std::size_t>(v)];
        } else {
            const auto cs = shape_cells_descending();
            for (int i = 0; i < static_cast<int>(cs.size()); ++i)
                h[static_cast<std::size_t>(i)] = hook(shape_, cs[static_cast<std::size_t>(i)]);
        }
        return h;
    }

private:
    int depth(int v) const {
        int d = 0;
        while (tree_parent_[static_cast<std::size_t>(v)] != -1) {
            v = tree_parent_[static_cast<std::size_t>(v)];
            ++d;
        }
        return d;
    }

    /// pos[v] = position of tree node v in post-order (children before
    /// parents, root last).
    std::vector<int> tree_postorder() const {
        const int n = size();
        std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
        int root = 0;
        for (int v = 0; v < n; ++v) {
            const int p = tree_parent_[static_cast<std::size_t>(v)];
            if (p == -1)
                root = v;
            else
                children[static_cast<std::size_t>(p)].push_back(v);
        }
        std::vector<int> pos(static_cast<std::size_t>(n));
        int next = 0;
        const std::function<void(int)> visit = [&](int v) {
            for (int c : children[static_cast<std::size_t>(v)]) visit(c);
            pos[static_cast<std::size_t>(v)] = next++;
        };
        visit(root);
        return pos;
    }

    std::vector<cell> shape_cells_descending() const {
        auto cs = shape_.cells();
        std::sort(cs.begin(), cs.end(), [](cell a, cell b) {
            return a.row != b.row ? a.row > b.row : a.col > b.col;
        });
        return cs;
    }

    kind_t kind_ = kind_t::tree;
    std::vector<int> tree_parent_;
    partition shape_;
};

/// Border strip with d-complete posets (trees or straight shapes) hanging
/// below strip cells.
class mobile_poset {
public:
    mobile_poset(skew_shape strip, std::map<cell, std::vector<hanging_poset>> hangings = {})
        : strip_(std::move(strip)), hangings_(std::move(hangings)) {
        if (!strip_.is_border_strip())
            throw std::invalid_argument("mobile_poset: underlying shape must be a border strip");
        for (const auto& [at, hs] : hangings_) {
            if (!strip_.contains(at))
                throw std::invalid_argument("mobile_poset: hanging attached outside the strip");
            if (hs.empty()) throw std::invalid_argument("mobile_poset: empty hanging list");
        }
    }

    const skew_shape& strip() const { return strip_; }
    const std::map<cell, std::vector<hanging_poset>>& hangings() const { return hangings_; }

    int size() const { return strip_.size() + total_hanging_size(); }

    int total_hanging_size() const {
        int s = 0;
        for (const auto& [at, hs] : hangings_)
            for (const auto& h : hs) s += h.size();
        return s;
    }

    int hanging_size_at(cell u) const {
        auto it = hangings_.find(u);
        if (it == hangings_.end()) return 0;
        int s = 0;
        for (const auto& h : it->second) s += h.size();
        return s;
    }

    /// Total hanging size over attachment cells (a, b) with a >= i, b >= j.
    int hanging_size_se_of(cell u) const {
        int s = 0;
        for (const auto& [at, hs] : hangings_)
            if (at.row >= u.row && at.col >= u.col)
                for (const auto& h : hs) s += h.size();
        return s;
    }

    int hanging_size_in_column(int col) const {
        int s = 0;
        for (const auto& [at, hs] : hangings_)
            if (at.col == col)
                for (const auto& h : hs) s += h.size();
        return s;
    }

    int hanging_size_col_ge(int col) const {
        int s = 0;
        for (const auto& [at, hs] : hangings_)
            if (at.col >= col)
                for (const auto& h : hs) s += h.size();
        return s;
    }

    bool all_tree_hangings() const {
        for (const auto& [at, hs] : hangings_)
            for (const auto& h : hs)
                if (!h.is_tree()) return false;
        return true;
    }

    /// h'(u) = hook in lambda plus the hanging sizes weakly southeast of u.
    int modified_hook(cell u) const { return hook(strip_.outer(), u) + hanging_size_se_of(u); }

    /// Hook multiset of all hanging elements, sorted ascending.
    std::vector<int> hangings_hook_multiset() const {
        std::vector<int> v;
        for (const auto& [at, hs] : hangings_)
            for (const auto& h : hs)
                for (int x : h.hook_lengths()) v.push_back(x);
        std::sort(v.begin(), v.end());
        return v;
    }

    /// H(p): product of hooks over all hanging elements.
    Int hangings_hook_product() const {
        Int r = 1;
        for (int x : hangings_hook_multiset()) r *= x;
        return r;
    }

    /// Strip cells covering nothing: no strip cell directly below or to the
    /// right. These are the minimal elements of the strip poset.
    std::vector<cell> strip_minimal_cells() const {
        std::vector<cell> v;
        for (cell u : strip_.cells())
            if (!strip_.contains({u.row + 1, u.col}) && !strip_.contains({u.row, u.col + 1})) v.push_back(u);
        return v;
    }

private:
    skew_shape strip_;
    std::map<cell, std::vector<hanging_poset>> hangings_;
};

/// Where element i of the built poset came from.
struct mobile_element {
    bool on_strip = false;
    cell strip_cell{};          // valid when on_strip
    cell attached_at{};         // valid for hanging elements
    int hanging_index = -1;     // index in the hanging list at attached_at
    int hanging_node = -1;      // local index inside the hanging poset
};

/// Built poset plus the labeling and element provenance. Labels equal
/// element index + 1 by construction.
struct mobile_labeling {
    labeled_poset lp;
    std::vector<mobile_element> elements;
    std::map<cell, int> strip_element;
};

namespace detail {

/// Shared element layout for both labelings: columns are processed from the
/// rightmost strip column to the leftmost; inside a column the hanging posets
/// come first (each in its local natural order), then the strip cells from
/// top to bottom. On the strip this realizes the reversed Schur labeling
/// shifted by the hanging sizes in columns weakly to the right, which is the
/// defining property of the inversion labeling.
inline mobile_labeling build_mobile_labeling(const mobile_poset& m) {
    const skew_shape& s = m.strip();
    std::vector<mobile_element> elements;
    std::map<cell, int> strip_element;
    std::vector<std::pair<int, int>> covers;

    int max_col = 0, min_col = 1;
    for (cell u : s.cells()) max_col = std::max(max_col, u.col);

    std::map<int, std::vector<cell>> by_column;  // row-ascending per column
    for (cell u : s.cells()) by_column[u.col].push_back(u);

    for (int col = max_col; col >= min_col; --col) {
        auto it = by_column.find(col);
        if (it == by_column.end()) continue;
        const auto& cells_here = it->second;
        // hanging posets of this column
        for (cell at : cells_here) {
            auto ht = m.hangings().find(at);
            if (ht == m.hangings().end()) continue;
            for (int hi = 0; hi < static_cast<int>(ht->second.size()); ++hi) {
                const hanging_poset& h = ht->second[static_cast<std::size_t>(hi)];
                const int base = static_cast<int>(elements.size());
                for (int v = 0; v < h.size(); ++v)
                    elements.push_back({false, {}, at, hi, v});
                for (auto [a, b] : h.local_covers()) covers.emplace_back(base + a, base + b);
            }
        }
        // strip cells of this column, top to bottom
        for (cell u : cells_here) {
            strip_element[u] = static_cast<int>(elements.size());
            elements.push_back({true, u, {}, -1, -1});
        }
    }

    // strip covers: each cell is covered by the cell above and the cell to
    // its left, making the inner corners the maximal elements
    for (cell u : s.cells()) {
        if (s.contains({u.row - 1, u.col})) covers.emplace_back(strip_element[u], strip_element[{u.row - 1, u.col}]);
        if (s.contains({u.row, u.col - 1})) covers.emplace_back(strip_element[u], strip_element[{u.row, u.col - 1}]);
    }
    // each strip cell covers the maximal (last local) element of its hangings
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        const mobile_element& e = elements[static_cast<std::size_t>(i)];
        if (e.on_strip) continue;
        const hanging_poset& h = m.hangings().at(e.attached_at)[static_cast<std::size_t>(e.hanging_index)];
        if (e.hanging_node == h.size() - 1) covers.emplace_back(i, strip_element.at(e.attached_at));
    }

    const int n = static_cast<int>(elements.size());
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::iota(omega.begin(), omega.end(), 1);
    return mobile_labeling{labeled_poset(poset(n, covers), std::move(omega)), std::move(elements),
                           std::move(strip_element)};
}

}  // namespace detail

/// The abstract mobile poset, without labels.
inline poset to_poset(const mobile_poset& m) { return detail::build_mobile_labeling(m).lp.p; }

/// Skew-shape poset in the mobile orientation (cells weakly northwest are
/// larger, inner corners maximal) with the reversed Schur labeling: cells
/// labeled by descending content, ties broken upward. For border strips this
/// coincides with the strip part of the mobile labeling.
inline labeled_poset skew_labeled_poset(const skew_shape& s) {
    auto cs = s.cells();
    std::sort(cs.begin(), cs.end(), [](cell a, cell b) {
        return a.content() != b.content() ? a.content() > b.content() : a.row < b.row;
    });
    std::map<cell, int> id;
    for (int i = 0; i < static_cast<int>(cs.size()); ++i) id[cs[static_cast<std::size_t>(i)]] = i;
    std::vector<std::pair<int, int>> covers;
    for (cell u : cs) {
        if (s.contains({u.row - 1, u.col})) covers.emplace_back(id[u], id[{u.row - 1, u.col}]);
        if (s.contains({u.row, u.col - 1})) covers.emplace_back(id[u], id[{u.row, u.col - 1}]);
    }
    std::vector<int> omega(cs.size());
    std::iota(omega.begin(), omega.end(), 1);
    return labeled_poset(poset(static_cast<int>(cs.size()), covers), std::move(omega));
}

/// Reversed Schur labeling on the strip (labels strictly decreasing along
/// the path from the bottom-left cell to the top-right cell), natural
/// labeling on the hangings, interleaved column block by column block.
inline mobile_labeling reversed_schur_labeling(const mobile_poset& m) {
    return detail::build_mobile_labeling(m);
}

/// The inversion-statistic labeling: same block construction, only defined
/// for mobile tree posets.
inline mobile_labeling omega_inv_labeling(const mobile_poset& m) {
    if (!m.all_tree_hangings())
        throw std::invalid_argument("omega_inv_labeling: all hangings must be rooted trees");
    return detail::build_mobile_labeling(m);
}

}  // namespace mobilex
