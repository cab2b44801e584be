#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mobilex {

using Int = boost::multiprecision::cpp_int;

/// Thrown when a polynomial division that must be exact leaves a remainder.
/// Every division performed by the hook formulas is provably exact, so this
/// exception always indicates an implementation bug, never bad user input.
class non_exact_division : public std::runtime_error {
public:
    explicit non_exact_division(const std::string& what) : std::runtime_error(what) {}
};

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Canonical form: no trailing zero coefficients, the zero
/// polynomial stores an empty vector. Immutable in spirit: all operations
/// return new values.
class int_poly {
public:
    int_poly() = default;

    explicit int_poly(Int constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    explicit int_poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static int_poly zero() { return int_poly{}; }
    static int_poly one() { return int_poly{Int(1)}; }

    /// c * q^k
    static int_poly monomial(Int c, int k) {
        if (c == 0) return int_poly{};
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        std::vector<Int> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return int_poly{std::move(v)};
    }

    /// 1 - q^h, the ubiquitous hook factor.
    static int_poly one_minus_q_pow(int h) {
        if (h <= 0) throw std::invalid_argument("one_minus_q_pow: exponent must be positive");
        std::vector<Int> v(static_cast<std::size_t>(h) + 1);
        v.front() = 1;
        v.back() = -1;
        return int_poly{std::move(v)};
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^k (0 outside the stored range).
    const Int& coeff(int k) const {
        static const Int zero_coeff = 0;
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return zero_coeff;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    /// Smallest exponent with nonzero coefficient, -1 for zero.
    int low_degree() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    Int at_one() const {
        Int s = 0;
        for (const Int& c : coeffs_) s += c;
        return s;
    }

    /// Multiply by q^k.
    int_poly shifted(int k) const {
        if (is_zero()) return *this;
        if (k < 0) throw std::invalid_argument("shifted: negative exponent");
        std::vector<Int> v(coeffs_.size() + static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(k)] = coeffs_[i];
        return int_poly{std::move(v)};
    }

    friend int_poly operator+(const int_poly& a, const int_poly& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
        }
        return int_poly{std::move(v)};
    }

    friend int_poly operator-(const int_poly& a, const int_poly& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) v[i] -= b.coeffs_[i];
        }
        return int_poly{std::move(v)};
    }

    int_poly operator-() const {
        std::vector<Int> v(coeffs_);
        for (Int& c : v) c = -c;
        return int_poly{std::move(v)};
    }

    friend int_poly operator*(const int_poly& a, const int_poly& b) {
        if (a.is_zero() || b.is_zero()) return int_poly{};
        std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return int_poly{std::move(v)};
    }

    friend int_poly operator*(const int_poly& a, const Int& s) {
        std::vector<Int> v(a.coeffs_);
        for (Int& c : v) c *= s;
        return int_poly{std::move(v)};
    }

    int_poly& operator+=(const int_poly& b) { return *this = *this + b; }
    int_poly& operator-=(const int_poly& b) { return *this = *this - b; }
    int_poly& operator*=(const int_poly& b) { return *this = *this * b; }

    friend bool operator==(const int_poly& a, const int_poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const int_poly& a, const int_poly& b) { return !(a == b); }

    /// Human-readable rendering, highest degree first; used in error messages
    /// and CLI debug output.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Int& c = coeff(k);
            if (c == 0) continue;
            if (!s.empty()) s += (c > 0) ? " + " : " - ";
            else if (c < 0) s += "-";
            Int a = abs(c);
            if (a != 1 || k == 0) s += a.str();
            if (k > 0) {
                if (a != 1) s += "*";
                s += "q";
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Exact quotient a / b in Z[q]. Synthetic long division; any nonzero
/// remainder or non-integral intermediate coefficient throws.
inline int_poly exact_div(const int_poly& a, const int_poly& b) {
    if (b.is_zero()) throw non_exact_division("exact_div: division by zero polynomial");
    if (a.is_zero()) return int_poly::zero();
    if (a.degree() < b.degree())
        throw non_exact_division("exact_div: dividend degree below divisor degree");

    std::vector<Int> rem(a.coefficients());
    const int db = b.degree();
    const Int& lead = b.coeff(db);
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - db) + 1);

    for (int k = a.degree() - db; k >= 0; --k) {
        const Int& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (top % lead != 0)
            throw non_exact_division("exact_div: coefficient " + top.str() +
                                     " not divisible by leading coefficient " + lead.str());
        Int f = top / lead;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
        quot[static_cast<std::size_t>(k)] = std::move(f);
    }
    for (const Int& c : rem)
        if (c != 0) throw non_exact_division("exact_div: nonzero remainder");
    return int_poly{std::move(quot)};
}

/// [n]_q = 1 + q + ... + q^(n-1)
inline int_poly q_int(int n) {
    if (n <= 0) throw std::invalid_argument("q_int: argument must be positive");
    return int_poly{std::vector<Int>(static_cast<std::size_t>(n), Int(1))};
}

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
inline int_poly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: argument must be nonnegative");
    int_poly r = int_poly::one();
    for (int k = 2; k <= n; ++k) r *= q_int(k);
    return r;
}

/// Gaussian binomial [n choose k]_q, computed as an exact quotient of
/// q-factorials.
inline int_poly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

inline Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace mobilex
