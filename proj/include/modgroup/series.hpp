#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace modgroup {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den as an exact canonical rational.
Rational make_rational(const Integer& num, const Integer& den);

// Truncated univariate power series with exact rational coefficients;
// arithmetic is exact modulo x^order.  Values are immutable: every
// operation returns a fresh series.
class UniSeries {
public:
    explicit UniSeries(std::size_t order);  // the zero series

    static UniSeries from_coefficients(std::vector<Rational> coeffs);
    static UniSeries constant(const Rational& value, std::size_t order);
    static UniSeries one(std::size_t order) { return constant(1, order); }
    static UniSeries monomial(std::size_t degree, const Rational& coeff, std::size_t order);
    // Dense integer polynomial, ascending degree, truncated to order.
    static UniSeries polynomial(const std::vector<long>& coeffs, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }

    // Exact stored value; index must be below the order.
    const Rational& coefficient(std::size_t n) const;

    UniSeries truncated(std::size_t order) const;  // order must not grow
    UniSeries shifted(std::size_t k) const;        // multiply by x^k

    bool is_zero() const;
    bool is_integral() const;  // all denominators 1
    std::vector<Integer> integer_coefficients() const;

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a);
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const Rational& c, const UniSeries& a);

    friend bool operator==(const UniSeries&, const UniSeries&) = default;

private:
    std::vector<Rational> coeffs_;  // size == order
};

// Multiplicative inverse modulo the truncation ideal; the constant term
// must be nonzero (std::domain_error otherwise).
UniSeries invert(const UniSeries& a);

// Square root of a series with constant term 1, by Newton iteration with
// quadratic convergence (std::domain_error if the constant term is not 1).
UniSeries sqrt_unit(const UniSeries& a);

// Truncated bivariate power series graded by total degree: coefficients of
// total degree < order are exact.  Stored sparsely.
class BiSeries {
public:
    struct GradedLess {
        bool operator()(const std::pair<unsigned, unsigned>& x,
                        const std::pair<unsigned, unsigned>& y) const {
            unsigned dx = x.first + x.second, dy = y.first + y.second;
            if (dx != dy) return dx < dy;
            return x.first < y.first;
        }
    };
    using TermMap = std::map<std::pair<unsigned, unsigned>, Rational, GradedLess>;

    explicit BiSeries(std::size_t order);  // the zero series

    static BiSeries constant(const Rational& value, std::size_t order);
    static BiSeries one(std::size_t order) { return constant(1, order); }
    static BiSeries monomial(unsigned i, unsigned j, const Rational& coeff, std::size_t order);
    // Sparse integer polynomial given as (x-degree, y-degree, coefficient).
    static BiSeries polynomial(const std::vector<std::tuple<unsigned, unsigned, long>>& terms,
                               std::size_t order);
    // Takes ownership of a term map; terms of total degree >= order and
    // zero coefficients are dropped.
    static BiSeries from_terms(TermMap terms, std::size_t order);

    std::size_t order() const { return order_; }

    // Exact stored value (zero when absent); i + j must be below the order.
    const Rational& coefficient(unsigned i, unsigned j) const;

    const TermMap& terms() const { return terms_; }

    BiSeries truncated(std::size_t order) const;
    BiSeries shifted(unsigned dx, unsigned dy) const;  // multiply by x^dx y^dy

    bool is_zero() const;
    bool is_integral() const;
    // True when every nonzero term has x-degree divisible by xmod and
    // y-degree divisible by ymod.
    bool supported_on(unsigned xmod, unsigned ymod) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const Rational& c, const BiSeries& a);

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    void prune_zeros();

    std::size_t order_;
    TermMap terms_;  // nonzero coefficients only
};

BiSeries invert(const BiSeries& a);

// Substitutes x -> x^num_pow / den, i.e. maps x^k to x^(k*num_pow) * den^-k
// with cached powers of den^-1.  Requires num_pow >= 1 and den with
// constant term 1 (std::domain_error otherwise); the result is exact to the
// order of a.
BiSeries substitute_x(const BiSeries& a, unsigned num_pow, const BiSeries& den);

// Coefficient of x^n in the result is the sum of all coefficients of total
// degree n.
UniSeries diagonal(const BiSeries& a);

}  // namespace modgroup
