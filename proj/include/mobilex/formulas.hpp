#pragma once

#include <boost/integer/common_factor.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "excited.hpp"
#include "int_poly.hpp"
#include "mobile.hpp"
#include "posets.hpp"
#include "shapes.hpp"

namespace mobilex {

/// Exact fraction with positive denominator, used for the linear extension
/// bounds. Values are reduced on construction.
struct rational {
    Int num = 0;
    Int den = 1;

    rational() = default;
    rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = boost::integer::gcd(abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const rational& a, const rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<=(const rational& a, const Int& v) { return a.num <= v * a.den; }
    friend bool operator<=(const Int& v, const rational& a) { return v * a.den <= a.num; }

    std::string to_string() const { return num.str() + "/" + den.str(); }
};

/// Outcome of one formula-versus-oracle comparison.
struct formula_report {
    std::string formula;
    std::string input;
    int_poly computed;
    std::optional<int_poly> oracle;
    bool match = false;
};

/// prod_{i=1..n} (1 - q^i)
inline int_poly poincare_product(int n) {
    int_poly r = int_poly::one();
    for (int i = 1; i <= n; ++i) r *= int_poly::one_minus_q_pow(i);
    return r;
}

// --- classical counts --------------------------------------------------------

/// Number of standard Young tableaux of straight shape: n! / prod of hooks.
inline Int hlf_count(const partition& lambda) {
    Int num = factorial(lambda.size());
    Int den = 1;
    for (cell u : lambda.cells()) den *= hook(lambda, u);
    if (den == 0 || num % den != 0) throw std::logic_error("hlf_count: non-integral result");
    return num / den;
}

/// Number of standard Young tableaux of skew shape via the excited diagram
/// sum, organized over the common denominator prod_{u in lambda} h(u).
inline Int nhlf_count(const skew_shape& s) {
    const partition& lam = s.outer();
    Int sum = 0;
    for (const excited_diagram& d : enumerate_excited(s)) {
        Int prod = 1;
        for (cell u : d.cells) prod *= hook(lam, u);
        sum += prod;
    }
    Int den = 1;
    for (cell u : lam.cells()) den *= hook(lam, u);
    Int num = factorial(s.size()) * sum;
    if (den == 0 || num % den != 0) throw std::logic_error("nhlf_count: non-integral result");
    return num / den;
}

// --- q-analogues --------------------------------------------------------------

/// e_q^maj of the straight-shape poset under a Schur-type labeling:
/// q^b(lambda) * prod (1-q^i) / prod (1-q^h(u)).
inline int_poly stanley_q_hlf(const partition& lambda) {
    int_poly num = poincare_product(lambda.size()).shifted(b_stat(lambda));
    int_poly den = int_poly::one();
    for (cell u : lambda.cells()) den *= int_poly::one_minus_q_pow(hook(lambda, u));
    return exact_div(num, den);
}

/// e_q^maj of the skew-shape poset under the reversed Schur labeling, via the
/// excited-diagram sum with exponents w(D).
inline int_poly mpp_q_nhlf(const skew_shape& s) {
    const partition& lam = s.outer();
    auto plain_hook = [&](cell u) { return hook(lam, u); };
    int_poly sum;
    for (const excited_diagram& d : enumerate_excited(s)) {
        int_poly term = int_poly::one().shifted(static_cast<int>(w_stat(d, plain_hook)));
        for (cell u : d.cells) term *= int_poly::one_minus_q_pow(hook(lam, u));
        sum += term;
    }
    int_poly den = int_poly::one();
    for (cell u : lam.cells()) den *= int_poly::one_minus_q_pow(hook(lam, u));
    return exact_div(poincare_product(s.size()) * sum, den);
}

/// e_q^maj of a d-complete poset (rooted tree or straight shape):
/// q^maj(P,omega) [n]_q! / prod [h(x)]_q, where maj(P,omega) adds the hook of
/// every element whose label exceeds its parent's. Trees accept any labeling;
/// shapes require a natural one (the hook-descent statistic of a non-forest
/// is not captured by cover descents), making the prefactor vanish.
inline int_poly dcomplete_maj(const hanging_poset& p, const std::vector<int>& omega_local) {
    const int n = p.size();
    if (static_cast<int>(omega_local.size()) != n)
        throw std::invalid_argument("dcomplete_maj: labeling size mismatch");
    const auto hooks = p.hook_lengths();
    long long pref = 0;
    for (auto [a, b] : p.local_covers())
        if (omega_local[static_cast<std::size_t>(a)] > omega_local[static_cast<std::size_t>(b)]) {
            if (!p.is_tree())
                throw std::invalid_argument("dcomplete_maj: shapes require a natural labeling");
            pref += hooks[static_cast<std::size_t>(a)];
        }
    int_poly num = q_factorial(n).shifted(static_cast<int>(pref));
    int_poly den = int_poly::one();
    for (int h : hooks) den *= q_int(h);
    return exact_div(num, den);
}

inline int_poly dcomplete_maj_natural(const hanging_poset& p) {
    std::vector<int> omega(static_cast<std::size_t>(p.size()));
    std::iota(omega.begin(), omega.end(), 1);
    return dcomplete_maj(p, omega);
}

/// e_q^inv of a naturally labeled rooted tree poset: [n]_q! / prod [h(x)]_q.
/// The q^inv(P,omega) prefactor vanishes on natural labelings; for
/// non-natural ones the product form fails outright, so those are rejected.
inline int_poly bw_tree_inv(const hanging_poset& p, const std::vector<int>& omega_local) {
    if (!p.is_tree()) throw std::invalid_argument("bw_tree_inv: input must be a rooted tree");
    const int n = p.size();
    if (static_cast<int>(omega_local.size()) != n)
        throw std::invalid_argument("bw_tree_inv: labeling size mismatch");
    const labeled_poset lp(poset(n, p.local_covers()), omega_local);
    if (!lp.is_natural()) throw std::invalid_argument("bw_tree_inv: labeling must be natural");
    int_poly num = q_factorial(n);
    int_poly den = int_poly::one();
    for (int h : p.hook_lengths()) den *= q_int(h);
    return exact_div(num, den);
}

inline int_poly bw_tree_inv_natural(const hanging_poset& p) {
    std::vector<int> omega(static_cast<std::size_t>(p.size()));
    std::iota(omega.begin(), omega.end(), 1);
    return bw_tree_inv(p, omega);
}

// --- mobile hook-length formulas ----------------------------------------------

namespace detail {

/// Numerator / denominator of the excited-diagram sum H for a (possibly
/// empty or disconnected) skew shape inside lambda with the given hangings:
///   H = num / den,
///   num = sum_D q^{edge(D)} prod_{u in D} (1 - q^{h'(u)}),
///   den = prod_{hanging hooks v} (1 - q^{h(v)}) * prod_{u in lambda} (1 - q^{h'(u)}),
/// where edge(D) is w'(D) for the major index and w(D) + p_D for inversions.
struct h_parts {
    int_poly num;
    int_poly den;
};

enum class h_flavor { major, inversion };

inline h_parts excited_sum_parts(const partition& lam, const partition& inner,
                                 const std::map<cell, std::vector<hanging_poset>>& hangings, h_flavor flavor) {
    const skew_shape shape(lam, inner);
    auto hanging_size_se = [&](cell u) {
        int s = 0;
        for (const auto& [at, hs] : hangings)
            if (at.row >= u.row && at.col >= u.col)
                for (const auto& h : hs) s += h.size();
        return s;
    };
    auto modified = [&](cell u) { return hook(lam, u) + hanging_size_se(u); };
    auto plain = [&](cell u) { return hook(lam, u); };

    int_poly num;
    for (const excited_diagram& d : enumerate_excited(shape)) {
        long long expo;
        if (flavor == h_flavor::major) {
            expo = w_stat(d, modified);
        } else {
            auto col_ge = [&](int col) {
                int s = 0;
                for (const auto& [at, hs] : hangings)
                    if (at.col >= col)
                        for (const auto& h : hs) s += h.size();
                return s;
            };
            long long p_d = 0;
            for (cell u : inner.cells())
                if (!d.cells.count(u)) p_d += col_ge(u.col);
            for (cell u : d.cells)
                if (!inner.contains(u)) p_d -= col_ge(u.col);
            expo = w_stat(d, plain) + p_d;
        }
        int_poly term = int_poly::one().shifted(static_cast<int>(expo));
        for (cell u : d.cells) term *= int_poly::one_minus_q_pow(modified(u));
        num += term;
    }

    int_poly den = int_poly::one();
    for (const auto& [at, hs] : hangings)
        for (const auto& h : hs)
            for (int v : h.hook_lengths()) den *= int_poly::one_minus_q_pow(v);
    for (cell u : lam.cells()) den *= int_poly::one_minus_q_pow(modified(u));
    return {std::move(num), std::move(den)};
}

inline h_parts excited_sum_parts(const mobile_poset& m, h_flavor flavor) {
    return excited_sum_parts(m.strip().outer(), m.strip().inner(), m.hangings(), flavor);
}

}  // namespace detail

/// p_D of the inversion formula: every vacated mu-cell adds the hanging
/// sizes in columns weakly to its right, every displaced cell of D off [mu]
/// subtracts the same quantity; the net effect counts the hangings in the
/// columns each cell excited past.
inline long long p_d_stat(const mobile_poset& m, const excited_diagram& d) {
    long long s = 0;
    for (cell u : m.strip().inner().cells())
        if (!d.cells.count(u)) s += m.hanging_size_col_ge(u.col);
    for (cell u : d.cells)
        if (!m.strip().inner().contains(u)) s -= m.hanging_size_col_ge(u.col);
    return s;
}

/// e_q^maj of the mobile poset under the reversed Schur labeling, computed
/// through the excited-diagram sum with modified hooks and exponents w'(D).
/// One exact division at the end; inexactness signals a bug.
inline int_poly mobile_maj_poly(const mobile_poset& m) {
    const auto parts = detail::excited_sum_parts(m, detail::h_flavor::major);
    return exact_div(poincare_product(m.size()) * parts.num, parts.den);
}

/// e_q^inv of the mobile tree poset under the inversion labeling, exponents
/// w(D) + p_D with plain hooks inside w(D).
inline int_poly mobile_inv_poly(const mobile_poset& m) {
    if (!m.all_tree_hangings())
        throw std::invalid_argument("mobile_inv_poly: all hangings must be rooted trees");
    const auto parts = detail::excited_sum_parts(m, detail::h_flavor::inversion);
    return exact_div(poincare_product(m.size()) * parts.num, parts.den);
}

/// Number of linear extensions of the mobile poset:
/// n!/H(p) * sum_D prod_{u in [lambda] \ D} 1/h'(u), evaluated as one exact
/// integer division over the common denominator.
inline Int mobile_count(const mobile_poset& m) {
    const partition& lam = m.strip().outer();
    Int sum = 0;
    for (const excited_diagram& d : enumerate_excited(m.strip())) {
        Int prod = 1;
        for (cell u : d.cells) prod *= m.modified_hook(u);
        sum += prod;
    }
    Int den = m.hangings_hook_product();
    for (cell u : lam.cells()) den *= m.modified_hook(u);
    Int num = factorial(m.size()) * sum;
    if (den == 0 || num % den != 0) throw std::logic_error("mobile_count: non-integral result");
    return num / den;
}

// --- recurrences ---------------------------------------------------------------

namespace detail {

/// Hangings restricted to the cells of a sub-shape.
inline std::map<cell, std::vector<hanging_poset>> restrict_hangings(const mobile_poset& m, const skew_shape& part) {
    std::map<cell, std::vector<hanging_poset>> out;
    for (const auto& [at, hs] : m.hangings())
        if (part.contains(at)) out[at] = hs;
    return out;
}

inline int piece_size(const mobile_poset& m, const skew_shape& part) {
    int s = part.size();
    for (const auto& [at, hs] : m.hangings())
        if (part.contains(at))
            for (const auto& h : hs) s += h.size();
    return s;
}

}  // namespace detail

/// Checks e_q^maj(P) = sum over inner corners u of q^{|left piece|} *
/// e_q^maj(P minus u), both sides computed by the brute-force oracle. The
/// exponent counts the elements of the component of content < c(u) together
/// with its hangings; the hangings at u itself belong to neither piece.
inline formula_report verify_maj_recurrence(const mobile_poset& m, int cap = 16) {
    const mobile_labeling ml = reversed_schur_labeling(m);
    const int_poly lhs = eq_stat(ml.lp, stat_kind::maj, cap);
    int_poly rhs;
    for (cell u : m.strip().inner_corners()) {
        const corner_split split = remove_inner_corner(m.strip(), u);
        const int left_size = detail::piece_size(m, split.left);
        const labeled_poset sub = ml.lp.without({ml.strip_element.at(u)});
        rhs += eq_stat(sub, stat_kind::maj, cap).shifted(left_size);
    }
    formula_report r{"maj-recurrence", "", rhs, lhs, rhs == lhs};
    return r;
}

/// Same recurrence for inversions, exponent n - omega_inv(u).
inline formula_report verify_inv_recurrence(const mobile_poset& m, int cap = 16) {
    const mobile_labeling ml = omega_inv_labeling(m);
    const int n = m.size();
    const int_poly lhs = eq_stat(ml.lp, stat_kind::inv, cap);
    int_poly rhs;
    for (cell u : m.strip().inner_corners()) {
        const int elem = ml.strip_element.at(u);
        const int expo = n - ml.lp.omega[static_cast<std::size_t>(elem)];
        const labeled_poset sub = ml.lp.without({elem});
        rhs += eq_stat(sub, stat_kind::inv, cap).shifted(expo);
    }
    formula_report r{"inv-recurrence", "", rhs, lhs, rhs == lhs};
    return r;
}

/// Pieri-Chevalley identity for the major index, verified as an exact
/// polynomial identity: multiplying both sides by prod_{i<n} (1-q^i) turns
/// every summand into a polynomial, and the left side into e_q^maj(P).
inline formula_report verify_chevalley_maj(const mobile_poset& m) {
    const int n = m.size();
    const int_poly lhs = mobile_maj_poly(m);
    const int_poly shared = poincare_product(n - 1);

    int_poly rhs;
    for (cell u : m.strip().inner_corners()) {
        const corner_split split = remove_inner_corner(m.strip(), u);
        const auto left = detail::excited_sum_parts(m.strip().outer(), split.left.inner(),
                                                    detail::restrict_hangings(m, split.left),
                                                    detail::h_flavor::major);
        const auto right = detail::excited_sum_parts(m.strip().outer(), split.right.inner(),
                                                     detail::restrict_hangings(m, split.right),
                                                     detail::h_flavor::major);
        int_poly t_prod = int_poly::one();
        if (auto it = m.hangings().find(u); it != m.hangings().end())
            for (const auto& h : it->second)
                for (int v : h.hook_lengths()) t_prod *= int_poly::one_minus_q_pow(v);
        const int left_size = detail::piece_size(m, split.left);
        rhs += exact_div((shared * left.num * right.num).shifted(left_size),
                         t_prod * left.den * right.den);
    }
    formula_report r{"chevalley-maj", "", rhs, lhs, rhs == lhs};
    return r;
}

// --- bounds and zigzag families --------------------------------------------------

struct bounds_result {
    rational lower;
    rational upper;
    Int excited_count = 0;
};

/// n!/(H(p) prod_{u in strip} h'(u)) <= e(P) <= |E(lambda/mu)| times the same.
inline bounds_result mobile_bounds(const mobile_poset& m) {
    Int den = m.hangings_hook_product();
    for (cell u : m.strip().cells()) den *= m.modified_hook(u);
    const Int num = factorial(m.size());
    const Int count = static_cast<Int>(enumerate_excited(m.strip()).size());
    return bounds_result{rational(num, den), rational(num * count, den), count};
}

inline Int catalan(int k) {
    // C(2k, k) / (k+1)
    Int num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= k + i;
        den *= i;
    }
    return num / den / (k + 1);
}

/// Up-down border strip with k peaks and k valleys (k-1 down steps):
/// lambda = (k, k, k-1, ..., 1), mu = (k-1, ..., 1).
inline skew_shape zigzag_strip(int k) {
    if (k < 1) throw std::invalid_argument("zigzag_strip: k must be positive");
    std::vector<int> lam{k};
    for (int v = k; v >= 1; --v) lam.push_back(v);
    std::vector<int> mu;
    for (int v = k - 1; v >= 1; --v) mu.push_back(v);
    return skew_shape{partition{std::move(lam)}, partition{std::move(mu)}};
}

enum class euler_kind { chains, antichains };

/// The generalized Euler-number posets: the up-down strip with a size-p chain
/// (or p one-element hangings) attached below every minimal strip cell.
inline mobile_poset euler_family(euler_kind kind, int p, int k) {
    if (p < 0 || k < 1) throw std::invalid_argument("euler_family: need p >= 0 and k >= 1");
    const skew_shape strip = zigzag_strip(k);
    mobile_poset bare(strip);
    std::map<cell, std::vector<hanging_poset>> hangings;
    if (p > 0)
        for (cell u : bare.strip_minimal_cells()) {
            if (kind == euler_kind::chains) {
                hangings[u].push_back(hanging_poset::chain(p));
            } else {
                for (int i = 0; i < p; ++i) hangings[u].push_back(hanging_poset::chain(1));
            }
        }
    return mobile_poset(strip, std::move(hangings));
}

/// Comparison of the printed closed-form zigzag bounds against the computed
/// hook products and the brute-force count. Discrepancies are reported, not
/// asserted: this is a transcription audit.
struct zigzag_audit {
    euler_kind kind;
    int p = 0;
    int k = 0;
    rational printed_lower;
    bounds_result computed;
    Int oracle_count = 0;
    bool printed_matches_computed = false;
    bool sandwich_holds = false;
};

inline zigzag_audit audit_zigzag_bounds(euler_kind kind, int p, int k, int cap = 16) {
    zigzag_audit a;
    a.kind = kind;
    a.p = p;
    a.k = k;
    const mobile_poset m = euler_family(kind, p, k);

    Int den = 1;
    if (kind == euler_kind::chains)
        for (int i = 0; i < k; ++i) den *= factorial(p + 1);
    else
        for (int i = 0; i < k; ++i) den *= p + 1;
    for (int i = 0; i < k - 1; ++i) den *= 2 * p + 3;
    den *= p + 2;
    a.printed_lower = rational(factorial(2 * k + k * p), den);

    a.computed = mobile_bounds(m);
    a.oracle_count = extension_count(reversed_schur_labeling(m).lp, cap);
    a.printed_matches_computed = (a.printed_lower == a.computed.lower);
    a.sandwich_holds = (a.computed.lower <= a.oracle_count) && (a.oracle_count <= a.computed.upper);
    return a;
}

}  // namespace mobilex
