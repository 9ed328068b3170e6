#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modgroup/series.hpp"

namespace modgroup {

// Long-running solvers report after each refinement step.
using ProgressFn =
    std::function<void(std::string_view stage, std::size_t done, std::size_t total)>;

// Unique zero-constant-term solution of W = x^3 (W+1)^2 (W+y^2), by Newton
// iteration on the defining equation.  The coefficient of x^(3n) y^(2m)
// counts the primitive S-bordered identity words with 3n U's and 2m S's.
BiSeries solve_W(std::size_t order, const ProgressFn& progress = {});

// Reference path: plain substitution iteration, kept as a cross-check.
BiSeries solve_W_by_substitution(std::size_t order);

// Generating functions of the seven border classes of SS-free identity
// words plus the two auxiliary border shapes, all derived from W.
struct ClassSeries {
    BiSeries a, b, c, d, e, f, g;
    BiSeries usbsu;  // border shape U S ... S U
    BiSeries sbsu;   // border shape S ... S U
};
ClassSeries class_series(std::size_t order);

// Bivariate count series of SS-free identity words by (U-count, S-count).
BiSeries assemble_Q_hat(std::size_t order);

// Full bivariate identity-word series, obtained from Q^ by reinstating the
// removed S^2 blocks; Q(0,0) = 1.
BiSeries assemble_Q(std::size_t order, const ProgressFn& progress = {});

// Unique zero-constant-term solution of
//   Z = x^3 (Z+1)^2 (Z+x^2) / (1-x^2)^3,
// by Newton iteration; lowest term x^5.
UniSeries solve_Z(std::size_t order, const ProgressFn& progress = {});

// Reference path: the order-by-order iteration from Z_1 = x^5, gaining
// three degrees per pass; every step is checked to extend the previous one.
UniSeries solve_Z_stepwise(std::size_t order);

// Z written directly in terms of W via x -> x/(1-x^2), y -> x.
UniSeries w_to_z(const BiSeries& w);

// The identity-word count series T with integer coefficients t(n),
//   T = (1-x^2)^2 (1+Z) / (1 - 3x^2 - x^3 + 3x^4 - x^6 - 3x^3 Z - 3x^3 Z^2 - x^3 Z^3).
UniSeries assemble_T(std::size_t order, const ProgressFn& progress = {});

// Primitive-word count series: 1 - 1/T.
UniSeries primitive_series(const UniSeries& t);

// Power-series solution of the grammar system
//   f1 = x f2 + y f3 f1,   f2 = x + y f3 f2,   f3 = x f1 f3 + y
// by fixed-point iteration from zero (each pass stabilizes at least one
// more total degree); q = 1/(1 - x f1 - y f3).
struct GrammarSolution {
    BiSeries f1, f2, f3, q;
};
GrammarSolution solve_grammar(std::size_t order, const ProgressFn& progress = {});

// c3 s^3 + c2 s^2 + c1 s + c0 with fixed integer polynomial coefficients.
struct CubicRelation {
    std::string name;
    BiSeries c3, c2, c1, c0;
};

// Cubic satisfied by T (coefficients pure in x).
CubicRelation t_cubic(std::size_t order);
// Cubic satisfied by Q.
CubicRelation q_cubic(std::size_t order);
// Cubic satisfied by the grammar component f3.
CubicRelation k_cubic(std::size_t order);

// Evaluates the relation on s modulo the truncation.  Returns nullopt when
// every retained coefficient vanishes ("clean"), otherwise the degree at
// which a nonzero residual is first detected.
std::optional<std::size_t> verify_cubic(const CubicRelation& rel, const BiSeries& s);
std::optional<std::size_t> verify_cubic(const CubicRelation& rel, const UniSeries& s);

// Cogrowth series: counts reduced words over {U, U^-1, S, S^-1} equal to
// the identity.  Exact integer coefficients.
UniSeries cogrowth_series(std::size_t order);

// Rational series bounding t(n) from below; agrees with t(n) through n=12.
UniSeries lower_bound_series(std::size_t order);

// Exact partial sum  sum_{n < terms} coeff(n) * point^n.
Rational evaluate_at(const UniSeries& s, const Rational& point, std::size_t terms);

// Bisection with exact rational arithmetic.  p is a dense integer
// polynomial (ascending degree) and must change sign on [lo, hi]
// (std::domain_error otherwise); returns a bracket of width <= tol.
std::pair<Rational, Rational> isolate_root(const std::vector<Integer>& p, Rational lo,
                                           Rational hi, const Rational& tol);

// Exact sign of p at a rational point.
int polynomial_sign_at(const std::vector<Integer>& p, const Rational& point);

// x^7 - 20x^5 + 12x^4 - 8x^3 - 12x^2 + 4: its smallest positive root is
// the reciprocal of the growth constant of t(n).
std::vector<Integer> growth_polynomial();

// Degree-10 denominator of the lower-bound series; its smallest positive
// root governs the lower bound's growth rate.
std::vector<Integer> lower_bound_denominator();

}  // namespace modgroup
