#include "modgroup/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgroup {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

UniSeries extended(const UniSeries& s, std::size_t order) {
    std::vector<Rational> c(order);
    for (std::size_t i = 0; i < s.order() && i < order; ++i) c[i] = s.coefficient(i);
    return UniSeries::from_coefficients(std::move(c));
}

BiSeries extended(const BiSeries& s, std::size_t order) {
    return BiSeries::from_terms(s.terms(), order);
}

void report(const ProgressFn& progress, std::string_view stage, std::size_t done,
            std::size_t total) {
    if (progress) progress(stage, done, total);
}

}  // namespace

BiSeries solve_W(std::size_t order, const ProgressFn& progress) {
    require(order >= 6, "solve_W needs order >= 6");
    BiSeries w(1);
    std::size_t m = 1;
    while (m < order) {
        std::size_t next = std::min(2 * m, order);
        BiSeries wn = extended(w, next);
        BiSeries one = BiSeries::one(next);
        BiSeries y2 = BiSeries::monomial(0, 2, 1, next);
        BiSeries wp1 = wn + one;
        BiSeries s1 = wp1 * wp1;            // (W+1)^2
        BiSeries s2 = wp1 * (wn + y2);      // (W+1)(W+y^2)
        // F(W) = W - x^3 (W+1)^2 (W+y^2); its derivative has unit constant
        // term, so the correction only needs the inverse to half precision.
        BiSeries f = wn - (s2 * wp1).shifted(3, 0);
        BiSeries fp = one - (Rational(2) * s2 + s1).shifted(3, 0);
        BiSeries g = extended(invert(fp.truncated(m)), next);
        wn = wn - f * g;
        w = wn;
        m = next;
        report(progress, "W", m, order);
    }
    return w;
}

BiSeries solve_W_by_substitution(std::size_t order) {
    require(order >= 6, "solve_W_by_substitution needs order >= 6");
    BiSeries w(order);
    BiSeries one = BiSeries::one(order);
    BiSeries y2 = BiSeries::monomial(0, 2, 1, order);
    for (std::size_t pass = 0;; ++pass) {
        if (pass > order + 5)
            throw std::logic_error("substitution iteration for W failed to stabilize");
        BiSeries wp1 = w + one;
        BiSeries next = (wp1 * wp1 * (w + y2)).shifted(3, 0);
        if (next == w) return w;
        w = next;
    }
}

ClassSeries class_series(std::size_t order) {
    BiSeries w = solve_W(order);
    BiSeries one = BiSeries::one(order);
    BiSeries wp1 = w + one;
    BiSeries w2 = w * w;
    // 1 / (1 - x^3 (1+W)^3)
    BiSeries common = invert(one - (wp1 * wp1 * wp1).shifted(3, 0));
    BiSeries dfrak = (w2 * common).shifted(3, 0);
    BiSeries ffrak = dfrak * wp1;
    BiSeries a = w + ffrak * wp1;

    BiSeries x3 = BiSeries::monomial(3, 0, 1, order);
    BiSeries inv1 = invert(one - x3);  // 1/(1-x^3)
    BiSeries inv2 = inv1 * inv1;

    return ClassSeries{
        a,
        x3 * inv1 + (x3 * x3 + Rational(2) * x3) * inv2 * a,
        (Rational(2) * x3) * inv1 * a,
        ((Rational(2) * x3) + one) * inv2 * dfrak,
        (Rational(3) * x3) * inv2 * ffrak,
        (Rational(2) * inv1) * ffrak,
        (Rational(2) * inv1) * dfrak,
        dfrak,
        ffrak,
    };
}

BiSeries assemble_Q_hat(std::size_t order) {
    ClassSeries cs = class_series(order);
    BiSeries one = BiSeries::one(order);
    BiSeries x3 = BiSeries::monomial(3, 0, 1, order);
    BiSeries inv1 = invert(one - x3);
    BiSeries inv2 = inv1 * inv1;
    return inv1 + (Rational(2) * x3 + one) * inv2 * cs.a + (Rational(3) * inv2) * cs.usbsu +
           (x3 + Rational(2) * one) * inv2 * cs.sbsu;
}

BiSeries assemble_Q(std::size_t order, const ProgressFn& progress) {
    require(order >= 6, "assemble_Q needs order >= 6");
    report(progress, "Q^", 0, 2);
    BiSeries qhat = assemble_Q_hat(order);
    report(progress, "Q", 1, 2);
    BiSeries den =
        BiSeries::polynomial({{0, 0, 1}, {0, 2, -1}}, order);  // 1 - y^2
    BiSeries q = substitute_x(qhat, 1, den) * invert(den);
    report(progress, "Q", 2, 2);
    return q;
}

UniSeries solve_Z(std::size_t order, const ProgressFn& progress) {
    require(order >= 6, "solve_Z needs order >= 6");
    UniSeries z(1);
    std::size_t m = 1;
    while (m < order) {
        std::size_t next = std::min(2 * m, order);
        UniSeries zn = extended(z, next);
        UniSeries one = UniSeries::one(next);
        UniSeries x2 = UniSeries::monomial(2, 1, next);
        UniSeries cube = UniSeries::polynomial({1, 0, -3, 0, 3, 0, -1}, next);  // (1-x^2)^3
        UniSeries zp1 = zn + one;
        UniSeries s1 = zp1 * zp1;
        UniSeries s2 = zp1 * (zn + x2);
        UniSeries f = cube * zn - (s2 * zp1).shifted(3);
        UniSeries fp = cube - (Rational(2) * s2 + s1).shifted(3);
        UniSeries g = extended(invert(fp.truncated(m)), next);
        z = zn - f * g;
        m = next;
        report(progress, "Z", m, order);
    }
    return z;
}

UniSeries solve_Z_stepwise(std::size_t order) {
    require(order >= 6, "solve_Z_stepwise needs order >= 6");
    // Z_1 = x^5, and each pass recomputes the right-hand side three degrees
    // further; a pass must never change coefficients it already produced.
    UniSeries z = UniSeries::monomial(5, 1, std::min<std::size_t>(9, order));
    for (std::size_t n = 1;; ++n) {
        std::size_t bound = std::min(3 * n + 6, order);
        UniSeries zn = extended(z, bound);
        UniSeries one = UniSeries::one(bound);
        UniSeries x2 = UniSeries::monomial(2, 1, bound);
        UniSeries cube = UniSeries::polynomial({1, 0, -3, 0, 3, 0, -1}, bound);
        UniSeries zp1 = zn + one;
        UniSeries next = ((zp1 * zp1 * (zn + x2)).shifted(3)) * invert(cube);
        for (std::size_t i = 0; i < std::min(z.order(), std::min(3 * n + 3, order)); ++i)
            if (next.coefficient(i) != z.coefficient(i))
                throw std::logic_error("stepwise Z iteration changed a settled coefficient");
        z = next;
        if (bound == order) return z;
    }
}

UniSeries w_to_z(const BiSeries& w) {
    std::size_t n = w.order();
    UniSeries result(n);
    UniSeries dinv = invert(UniSeries::polynomial({1, 0, -1}, n));  // 1/(1-x^2)
    UniSeries den_power = UniSeries::one(n);
    unsigned current = 0;
    std::map<unsigned, UniSeries> slices;
    for (const auto& [key, c] : w.terms()) {
        auto [it, inserted] = slices.try_emplace(key.first, n);
        // x^i y^j -> x^(i+j) (1-x^2)^(-i)
        it->second = it->second + UniSeries::monomial(key.first + key.second, c, n);
    }
    for (const auto& [i, slice] : slices) {
        while (current < i) {
            den_power = den_power * dinv;
            ++current;
        }
        result = result + slice * den_power;
    }
    return result;
}

UniSeries assemble_T(std::size_t order, const ProgressFn& progress) {
    require(order >= 1, "assemble_T needs order >= 1");
    std::size_t work = std::max<std::size_t>(order, 6);
    UniSeries z = solve_Z(work, progress);
    report(progress, "T", 0, 2);
    UniSeries one = UniSeries::one(work);
    UniSeries zp1 = z + one;
    UniSeries z2 = z * z;
    UniSeries z3 = z2 * z;
    UniSeries num = UniSeries::polynomial({1, 0, -2, 0, 1}, work) * zp1;  // (1-x^2)^2 (1+Z)
    UniSeries den = UniSeries::polynomial({1, 0, -3, -1, 3, 0, -1}, work) -
                    (Rational(3) * z + Rational(3) * z2 + z3).shifted(3);
    report(progress, "T", 1, 2);
    UniSeries t = num * invert(den);
    report(progress, "T", 2, 2);
    if (!t.is_integral()) throw std::logic_error("T must have integer coefficients");
    return t.order() == order ? t : t.truncated(order);
}

UniSeries primitive_series(const UniSeries& t) {
    require(t.coefficient(0) == 1, "primitive_series needs T(0) = 1");
    return UniSeries::one(t.order()) - invert(t);
}

GrammarSolution solve_grammar(std::size_t order, const ProgressFn& progress) {
    require(order >= 2, "solve_grammar needs order >= 2");
    BiSeries f1(1), f2(1), f3(1);
    for (std::size_t pass = 0;; ++pass) {
        if (pass > order + 8)
            throw std::logic_error("grammar iteration failed to stabilize");
        std::size_t tr = std::min(pass + 2, order);
        BiSeries e1 = extended(f1, tr);
        BiSeries e2 = extended(f2, tr);
        BiSeries e3 = extended(f3, tr);
        BiSeries x = BiSeries::monomial(1, 0, 1, tr);
        BiSeries y = BiSeries::monomial(0, 1, 1, tr);
        BiSeries n1 = x * e2 + y * e3 * e1;
        BiSeries n2 = x + y * e3 * e2;
        BiSeries n3 = x * e1 * e3 + y;
        bool settled = tr == order && n1 == e1 && n2 == e2 && n3 == e3;
        f1 = n1;
        f2 = n2;
        f3 = n3;
        report(progress, "grammar", tr, order);
        if (settled) break;
    }
    BiSeries q = invert(BiSeries::one(order) - BiSeries::monomial(1, 0, 1, order) * f1 -
                        BiSeries::monomial(0, 1, 1, order) * f3);
    return {f1, f2, f3, q};
}

CubicRelation t_cubic(std::size_t order) {
    return {
        .name = "T cubic",
        .c3 = BiSeries::polynomial({{5, 0, 6}, {4, 0, -3}, {3, 0, 2}, {2, 0, 3}, {0, 0, -1}},
                                   order),
        .c2 = BiSeries::polynomial({{5, 0, 1}, {4, 0, -1}, {3, 0, 1}, {2, 0, 2}, {0, 0, -1}},
                                   order),
        .c1 = BiSeries::polynomial({{3, 0, 1}, {2, 0, -1}, {0, 0, 1}}, order),
        .c0 = BiSeries::one(order),
    };
}

CubicRelation q_cubic(std::size_t order) {
    return {
        .name = "Q cubic",
        .c3 = BiSeries::polynomial(
            {{0, 6, 1}, {6, 0, -1}, {3, 2, 6}, {0, 4, -3}, {3, 0, 2}, {0, 2, 3}, {0, 0, -1}},
            order),
        .c2 = BiSeries::polynomial({{3, 2, 1}, {0, 4, -1}, {3, 0, 1}, {0, 2, 2}, {0, 0, -1}},
                                   order),
        .c1 = BiSeries::polynomial({{3, 0, 1}, {0, 2, -1}, {0, 0, 1}}, order),
        .c0 = BiSeries::one(order),
    };
}

CubicRelation k_cubic(std::size_t order) {
    return {
        .name = "K cubic",
        .c3 = BiSeries::polynomial({{0, 2, 1}}, order),
        .c2 = BiSeries::polynomial({{0, 1, -2}, {0, 3, -1}}, order),
        .c1 = BiSeries::polynomial({{0, 0, 1}, {0, 2, 2}, {3, 0, -1}}, order),
        .c0 = BiSeries::polynomial({{0, 1, -1}}, order),
    };
}

std::optional<std::size_t> verify_cubic(const CubicRelation& rel, const BiSeries& s) {
    require(s.order() >= 8, "verify_cubic needs order >= 8");
    std::size_t n = std::min(s.order(), rel.c3.order());
    BiSeries sv = s.order() == n ? s : s.truncated(n);
    BiSeries res = ((rel.c3.truncated(n) * sv + rel.c2.truncated(n)) * sv + rel.c1.truncated(n)) *
                       sv +
                   rel.c0.truncated(n);
    if (res.is_zero()) return std::nullopt;
    const auto& first = *res.terms().begin();  // graded order: lowest degree first
    return first.first.first + first.first.second;
}

namespace {

UniSeries pure_x(const BiSeries& p, std::size_t order) {
    UniSeries out(order);
    for (const auto& [key, c] : p.terms()) {
        if (key.second != 0)
            throw std::domain_error("relation coefficients must be univariate here");
        if (key.first < order) out = out + UniSeries::monomial(key.first, c, order);
    }
    return out;
}

}  // namespace

std::optional<std::size_t> verify_cubic(const CubicRelation& rel, const UniSeries& s) {
    require(s.order() >= 8, "verify_cubic needs order >= 8");
    std::size_t n = std::min(s.order(), rel.c3.order());
    UniSeries sv = s.order() == n ? s : s.truncated(n);
    UniSeries res =
        (pure_x(rel.c3, n) * sv + pure_x(rel.c2, n)) * sv * sv + pure_x(rel.c1, n) * sv +
        pure_x(rel.c0, n);
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(res.coefficient(i)) != 0) return i;
    return std::nullopt;
}

UniSeries cogrowth_series(std::size_t order) {
    require(order >= 2, "cogrowth_series needs order >= 2");
    UniSeries radicand =
        UniSeries::polynomial({1, -2, 1, -6, -8, -18, 9, -54, 81}, order);
    UniSeries root = sqrt_unit(radicand);
    UniSeries inner = UniSeries::polynomial({0, 1, -1, 8, -3, 9}, order) -
                      UniSeries::polynomial({2, -1, 6}, order) * root;
    UniSeries num = UniSeries::polynomial({1, 1}, order) * inner;
    UniSeries den = UniSeries::polynomial({-2, 6}, order) *       // 2(3x-1)
                    UniSeries::polynomial({1, 0, 3}, order) *     // 3x^2+1
                    UniSeries::polynomial({1, 3, 3}, order) *     // 3x^2+3x+1
                    UniSeries::polynomial({1, -1, 3}, order);     // 3x^2-x+1
    UniSeries v = num * invert(den);
    if (!v.is_integral()) throw std::logic_error("cogrowth series must be integral");
    return v;
}

UniSeries lower_bound_series(std::size_t order) {
    require(order >= 14, "lower_bound_series needs order >= 14");
    UniSeries num = UniSeries::polynomial({-1, 0, 1}, order) *  // (x-1)(x+1)
                    UniSeries::polynomial({-1, 0, 3, 1, -3, 1, 1}, order);
    UniSeries den =
        UniSeries::polynomial({1, 0, -5, -2, 10, 2, -9, 2, 5, -2, -1}, order);
    UniSeries s = num * invert(den);
    if (!s.is_integral()) throw std::logic_error("lower-bound series must be integral");
    return s;
}

Rational evaluate_at(const UniSeries& s, const Rational& point, std::size_t terms) {
    require(terms <= s.order(), "partial sum needs terms <= order");
    Rational acc = 0;
    for (std::size_t i = terms; i-- > 0;) {
        acc *= point;
        acc += s.coefficient(i);
    }
    return acc;
}

int polynomial_sign_at(const std::vector<Integer>& p, const Rational& point) {
    // Exact: evaluate sum p_k num^k den^(d-k), which has the sign of p(point).
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    if (d == 0) return 0;
    const Integer& num = point.get_num();
    const Integer& den = point.get_den();
    Integer acc = p[d - 1];
    Integer den_pow = 1;
    for (std::size_t k = d - 1; k-- > 0;) {
        den_pow *= den;
        acc = acc * num + p[k] * den_pow;
    }
    return sgn(acc);
}

std::pair<Rational, Rational> isolate_root(const std::vector<Integer>& p, Rational lo,
                                           Rational hi, const Rational& tol) {
    require(lo < hi, "bracket must be nonempty");
    require(sgn(tol) > 0, "tolerance must be positive");
    int slo = polynomial_sign_at(p, lo);
    int shi = polynomial_sign_at(p, hi);
    if (slo == 0) return {lo, lo};
    if (shi == 0) return {hi, hi};
    require(slo != shi, "polynomial does not change sign on the bracket");
    Rational half = make_rational(1, 2);
    while (hi - lo > tol) {
        Rational mid = (lo + hi) * half;
        int sm = polynomial_sign_at(p, mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

std::vector<Integer> growth_polynomial() {
    return {4, 0, -12, -8, 12, -20, 0, 1};
}

std::vector<Integer> lower_bound_denominator() {
    return {1, 0, -5, -2, 10, 2, -9, 2, 5, -2, -1};
}

}  // namespace modgroup
