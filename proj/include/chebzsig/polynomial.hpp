#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebzsig/errors.hpp"
#include "chebzsig/integer.hpp"

namespace chebzsig {

namespace detail {

// Floor square root usable for both cpp_int and builtin integers.
inline bigint floor_sqrt(const bigint& x) { return boost::multiprecision::sqrt(x); }

inline long long floor_sqrt(long long x) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace detail

// Dense univariate polynomial over a signed exact integer ring T, stored as
// ascending coefficients with no trailing zeros; the zero polynomial is the
// empty vector.
template <typename T>
class polynomial {
  public:
    polynomial() = default;
    polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }
    explicit polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static polynomial one() { return polynomial{T(1)}; }
    static polynomial x() { return polynomial{T(0), T(1)}; }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<T>& coeffs() const { return c_; }

    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const polynomial& p, const polynomial& q) = default;

    polynomial& operator+=(const polynomial& q) {
        if (c_.size() < q.c_.size()) c_.resize(q.c_.size(), T(0));
        for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] += q.c_[i];
        normalize();
        return *this;
    }
    polynomial& operator-=(const polynomial& q) {
        if (c_.size() < q.c_.size()) c_.resize(q.c_.size(), T(0));
        for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] -= q.c_[i];
        normalize();
        return *this;
    }
    friend polynomial operator+(polynomial p, const polynomial& q) { return p += q; }
    friend polynomial operator-(polynomial p, const polynomial& q) { return p -= q; }

    polynomial operator-() const {
        polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend polynomial operator*(const polynomial& p, const polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        }
        return polynomial(std::move(r));
    }
    polynomial& operator*=(const polynomial& q) { return *this = *this * q; }

    friend polynomial operator*(const T& s, polynomial p) {
        for (auto& c : p.c_) c *= s;
        p.normalize();
        return p;
    }

    T eval(const T& a) const {
        T v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * a + c_[i];
        return v;
    }

    // this(q(x)), by Horner over polynomial values
    polynomial compose(const polynomial& q) const {
        polynomial r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * q + polynomial{c_[i]};
        return r;
    }

    // Exact quotient in Z[x]; throws integrality_violation unless q divides
    // *this exactly (including coefficientwise divisibility at every step of
    // the long division).
    polynomial exact_div(const polynomial& q) const {
        if (q.is_zero()) throw std::domain_error("polynomial division by zero");
        if (is_zero()) return {};
        if (degree() < q.degree())
            throw integrality_violation("exact_div: degree of divisor exceeds dividend");
        std::vector<T> rem = c_;
        std::vector<T> quot(c_.size() - q.c_.size() + 1, T(0));
        std::size_t top = rem.size();
        while (top > 0 && rem[top - 1] == 0) --top;
        while (top >= q.c_.size()) {
            const T& lead = rem[top - 1];
            if (lead % q.c_.back() != 0)
                throw integrality_violation("exact_div: leading coefficient not divisible");
            T factor = lead / q.c_.back();
            std::size_t shift = top - q.c_.size();
            for (std::size_t j = 0; j < q.c_.size(); ++j) rem[shift + j] -= factor * q.c_[j];
            quot[shift] = std::move(factor);
            while (top > 0 && rem[top - 1] == 0) --top;
        }
        if (top != 0) throw integrality_violation("exact_div: nonzero remainder");
        return polynomial(std::move(quot));
    }

    // Square root in Z[x], computed top-down from the leading coefficient.
    // Requires a perfect square with positive leading coefficient; the result
    // is normalized to positive leading coefficient.  Throws not_a_square.
    polynomial sqrt_exact() const {
        if (is_zero()) return {};
        if (degree() % 2 != 0) throw not_a_square("sqrt: odd degree");
        if (leading() < 0) throw not_a_square("sqrt: negative leading coefficient");
        const std::size_t m = static_cast<std::size_t>(degree()) / 2;
        T lead_root = detail::floor_sqrt(leading());
        if (lead_root * lead_root != leading())
            throw not_a_square("sqrt: leading coefficient not a square");
        std::vector<T> q(m + 1, T(0));
        q[m] = lead_root;
        const T two_lead = T(2) * q[m];
        for (std::size_t t = m; t-- > 0;) {
            T s = coeff(m + t);
            for (std::size_t i = t + 1; i < m; ++i) s -= q[i] * q[m + t - i];
            if (s % two_lead != 0) throw not_a_square("sqrt: coefficient not divisible");
            q[t] = s / two_lead;
        }
        polynomial root(std::move(q));
        if (root * root != *this) throw not_a_square("sqrt: verification failed");
        return root;
    }

    // "c0 c1 ... ck" in decimal, "0" for the zero polynomial
    std::string coeff_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ' ';
            os << c_[i];
        }
        return os.str();
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using int_poly = polynomial<bigint>;

}  // namespace chebzsig
