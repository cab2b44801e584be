#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "shapes.hpp"

namespace mobilex {

/// Cell subset of [lambda] reachable from [mu] by excited moves, together
/// with its broken diagonals Br(D). |cells| = |mu| and |broken| is the same
/// for every diagram of a fixed skew shape.
struct excited_diagram {
    std::set<cell> cells;
    std::set<cell> broken;
};

/// The starting diagram D = [mu]. Its broken diagonals are the cells of
/// lambda/mu lying on the diagonals i - j = t - mu_t for t = 1..len(lambda),
/// mu padded with zeros. For mu empty this is the set of cells strictly below
/// the main diagonal, whose hooks sum to b(lambda).
inline excited_diagram initial_diagram(const skew_shape& s) {
    excited_diagram d;
    for (cell u : s.inner().cells()) d.cells.insert(u);
    std::set<int> diagonals;
    for (int t = 1; t <= s.outer().length(); ++t) diagonals.insert(t - s.inner().part(t));
    for (cell u : s.cells())
        if (diagonals.count(u.row - u.col)) d.broken.insert(u);
    return d;
}

/// A cell (i,j) of D is active when (i+1,j), (i,j+1), (i+1,j+1) are all free
/// and inside [lambda]; containment of (i+1,j+1) implies the other two.
inline std::vector<cell> active_cells(const partition& lambda, const excited_diagram& d) {
    std::vector<cell> v;
    for (cell u : d.cells) {
        if (!lambda.contains({u.row + 1, u.col + 1})) continue;
        if (d.cells.count({u.row + 1, u.col}) || d.cells.count({u.row, u.col + 1}) ||
            d.cells.count({u.row + 1, u.col + 1}))
            continue;
        v.push_back(u);
    }
    return v;
}

/// Applies the excited move at u: the cell slides to (i+1,j+1), and the
/// broken diagonal at (i+1,j+1) is replaced by (i+1,j).
inline excited_diagram excited_move(const partition& lambda, const excited_diagram& d, cell u) {
    const auto act = active_cells(lambda, d);
    if (std::find(act.begin(), act.end(), u) == act.end())
        throw std::invalid_argument("excited_move: cell is not active");
    excited_diagram e = d;
    e.cells.erase(u);
    e.cells.insert({u.row + 1, u.col + 1});
    e.broken.erase({u.row + 1, u.col + 1});
    e.broken.insert({u.row + 1, u.col});
    return e;
}

/// All excited diagrams of lambda/mu, deduplicated by cell set and sorted
/// lexicographically on the sorted cell sets. Breadth-first closure from the
/// initial diagram; the broken-diagonal set of a diagram is independent of
/// the move sequence, which is asserted on revisits.
inline std::vector<excited_diagram> enumerate_excited(const skew_shape& s) {
    std::map<std::set<cell>, excited_diagram> seen;
    std::vector<const excited_diagram*> frontier;
    excited_diagram init = initial_diagram(s);
    auto [it, inserted] = seen.emplace(init.cells, init);
    frontier.push_back(&it->second);
    while (!frontier.empty()) {
        const excited_diagram d = *frontier.back();
        frontier.pop_back();
        for (cell u : active_cells(s.outer(), d)) {
            excited_diagram e = excited_move(s.outer(), d, u);
            auto [jt, fresh] = seen.emplace(e.cells, e);
            if (fresh)
                frontier.push_back(&jt->second);
            else
                assert(jt->second.broken == e.broken);
        }
    }
    std::vector<excited_diagram> out;
    out.reserve(seen.size());
    for (auto& [key, d] : seen) out.push_back(std::move(d));
    return out;
}

/// w(D) (plain hooks) or w'(D) (modified hooks): the hook sum over the broken
/// diagonals, with the hook function supplied by the caller.
inline long long w_stat(const excited_diagram& d, const std::function<int(cell)>& hook_fn) {
    long long s = 0;
    for (cell u : d.broken) s += hook_fn(u);
    return s;
}

/// Number of monotone lattice paths from `from` to `to` (steps up or right)
/// staying inside [lambda]. For a border strip this equals |E(lambda/mu)|
/// when the endpoints are the strip's lowest- and highest-content cells.
/// Independent of the excited-move machinery, used as a cross-check.
inline long long lattice_path_count(const partition& lambda, cell from, cell to) {
    if (!lambda.contains(from) || !lambda.contains(to)) return 0;
    if (to.row > from.row || to.col < from.col) return 0;
    std::map<cell, long long> ways;
    ways[from] = 1;
    for (int i = from.row; i >= to.row; --i)
        for (int j = from.col; j <= lambda.part(i); ++j) {
            if (i == from.row && j == from.col) continue;
            long long w = 0;
            if (i < from.row && lambda.contains({i + 1, j})) w += ways[{i + 1, j}];
            if (j > from.col) w += ways[{i, j - 1}];
            ways[{i, j}] = w;
        }
    return ways.count(to) ? ways[to] : 0;
}

inline long long lattice_path_count(const partition& lambda) {
    if (lambda.empty()) return 0;
    return lattice_path_count(lambda, {lambda.length(), 1}, {1, lambda.part(1)});
}

}  // namespace mobilex
