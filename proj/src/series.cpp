#include "modgroup/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgroup {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

bool denominator_is_one(const Rational& q) {
    return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

// Moves an integer into a canonical rational without copying limbs.
Rational steal_integer(Integer& z) {
    Rational q;
    mpz_swap(mpq_numref(q.get_mpq_t()), z.get_mpz_t());
    return q;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    require(den != 0, "rational with zero denominator");
    Rational q(num);
    q /= Rational(den);
    return q;
}

UniSeries::UniSeries(std::size_t order) {
    require(order >= 1, "series order must be positive");
    coeffs_.resize(order);
}

UniSeries UniSeries::from_coefficients(std::vector<Rational> coeffs) {
    require(!coeffs.empty(), "series order must be positive");
    UniSeries s(coeffs.size());
    s.coeffs_ = std::move(coeffs);
    return s;
}

UniSeries UniSeries::constant(const Rational& value, std::size_t order) {
    UniSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

UniSeries UniSeries::monomial(std::size_t degree, const Rational& coeff, std::size_t order) {
    UniSeries s(order);
    if (degree < order) s.coeffs_[degree] = coeff;
    return s;
}

UniSeries UniSeries::polynomial(const std::vector<long>& coeffs, std::size_t order) {
    UniSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i < order; ++i) s.coeffs_[i] = coeffs[i];
    return s;
}

const Rational& UniSeries::coefficient(std::size_t n) const {
    require(n < coeffs_.size(), "coefficient index beyond the series order");
    return coeffs_[n];
}

UniSeries UniSeries::truncated(std::size_t order) const {
    require(order >= 1 && order <= coeffs_.size(), "can only truncate to a smaller order");
    UniSeries s(order);
    for (std::size_t i = 0; i < order; ++i) s.coeffs_[i] = coeffs_[i];
    return s;
}

UniSeries UniSeries::shifted(std::size_t k) const {
    UniSeries s(coeffs_.size());
    for (std::size_t i = k; i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i - k];
    return s;
}

bool UniSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return sgn(q) == 0; });
}

bool UniSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), denominator_is_one);
}

std::vector<Integer> UniSeries::integer_coefficients() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const Rational& q : coeffs_) {
        require(denominator_is_one(q), "series has a non-integer coefficient");
        out.emplace_back(q.get_num());
    }
    return out;
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    UniSeries s(n);
    for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    UniSeries s(n);
    for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return s;
}

UniSeries operator-(const UniSeries& a) {
    UniSeries s(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) s.coeffs_[i] = -a.coeffs_[i];
    return s;
}

UniSeries operator*(const Rational& c, const UniSeries& a) {
    UniSeries s(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) s.coeffs_[i] = c * a.coeffs_[i];
    return s;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    UniSeries s(n);
    // Schoolbook product; all-integer operands stay in raw mpz accumulation.
    if (a.is_integral() && b.is_integral()) {
        std::vector<Integer> acc(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& ai = a.coeffs_[i];
            if (sgn(ai) == 0) continue;
            mpz_srcptr az = mpq_numref(ai.get_mpq_t());
            for (std::size_t j = 0; j + i < n; ++j) {
                const Rational& bj = b.coeffs_[j];
                if (sgn(bj) == 0) continue;
                mpz_addmul(acc[i + j].get_mpz_t(), az, mpq_numref(bj.get_mpq_t()));
            }
        }
        for (std::size_t k = 0; k < n; ++k) s.coeffs_[k] = steal_integer(acc[k]);
        return s;
    }
    Rational tmp;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j + i < n; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            s.coeffs_[i + j] += tmp;
        }
    }
    return s;
}

UniSeries invert(const UniSeries& a) {
    require(sgn(a.coefficient(0)) != 0, "cannot invert a series with zero constant term");
    std::size_t n = a.order();
    UniSeries b(n);
    const Rational& a0 = a.coefficient(0);
    if (a.is_integral() && (a0 == 1 || a0 == -1)) {
        bool positive = a0 == 1;
        std::vector<Integer> out(n);
        out[0] = positive ? 1 : -1;
        Integer sum;
        for (std::size_t m = 1; m < n; ++m) {
            sum = 0;
            for (std::size_t k = 1; k <= m; ++k) {
                const Rational& ak = a.coefficient(k);
                if (sgn(ak) == 0) continue;
                mpz_addmul(sum.get_mpz_t(), mpq_numref(ak.get_mpq_t()), out[m - k].get_mpz_t());
            }
            out[m] = positive ? -sum : sum;
        }
        std::vector<Rational> coeffs(n);
        for (std::size_t k = 0; k < n; ++k) coeffs[k] = steal_integer(out[k]);
        return UniSeries::from_coefficients(std::move(coeffs));
    }
    Rational inv0 = make_rational(1, 1);
    inv0 /= a0;
    std::vector<Rational> out(n);
    out[0] = inv0;
    Rational sum, tmp;
    for (std::size_t m = 1; m < n; ++m) {
        sum = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (sgn(a.coefficient(k)) == 0 || sgn(out[m - k]) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.coefficient(k).get_mpq_t(), out[m - k].get_mpq_t());
            sum += tmp;
        }
        out[m] = -inv0 * sum;
    }
    return UniSeries::from_coefficients(std::move(out));
}

UniSeries sqrt_unit(const UniSeries& a) {
    require(a.coefficient(0) == 1, "sqrt_unit needs constant term 1");
    std::size_t target = a.order();
    Rational half = make_rational(1, 2);
    std::size_t m = 1;
    UniSeries s = UniSeries::one(1);
    while (m < target) {
        std::size_t next = std::min(2 * m, target);
        // Zero-extend the current approximation; Newton corrects the tail.
        std::vector<Rational> c(next);
        for (std::size_t i = 0; i < m; ++i) c[i] = s.coefficient(i);
        UniSeries ext = UniSeries::from_coefficients(std::move(c));
        s = half * (ext + a.truncated(next) * invert(ext));
        m = next;
    }
    return s;
}

BiSeries::BiSeries(std::size_t order) : order_(order) {
    require(order >= 1, "series order must be positive");
}

BiSeries BiSeries::constant(const Rational& value, std::size_t order) {
    return monomial(0, 0, value, order);
}

BiSeries BiSeries::monomial(unsigned i, unsigned j, const Rational& coeff, std::size_t order) {
    BiSeries s(order);
    if (i + j < order && sgn(coeff) != 0) s.terms_[{i, j}] = coeff;
    return s;
}

BiSeries BiSeries::polynomial(const std::vector<std::tuple<unsigned, unsigned, long>>& terms,
                              std::size_t order) {
    BiSeries s(order);
    for (const auto& [i, j, c] : terms)
        if (i + j < order && c != 0) s.terms_[{i, j}] += c;
    s.prune_zeros();
    return s;
}

BiSeries BiSeries::from_terms(TermMap terms, std::size_t order) {
    BiSeries s(order);
    s.terms_ = std::move(terms);
    s.terms_.erase(s.terms_.lower_bound({0, static_cast<unsigned>(order)}), s.terms_.end());
    s.prune_zeros();
    return s;
}

const Rational& BiSeries::coefficient(unsigned i, unsigned j) const {
    static const Rational zero = 0;
    require(i + j < order_, "coefficient index beyond the series order");
    auto it = terms_.find({i, j});
    return it == terms_.end() ? zero : it->second;
}

BiSeries BiSeries::truncated(std::size_t order) const {
    require(order >= 1 && order <= order_, "can only truncate to a smaller order");
    BiSeries s(order);
    for (const auto& [key, c] : terms_) {
        if (key.first + key.second >= order) break;
        s.terms_.emplace(key, c);
    }
    return s;
}

BiSeries BiSeries::shifted(unsigned dx, unsigned dy) const {
    BiSeries s(order_);
    for (const auto& [key, c] : terms_) {
        unsigned i = key.first + dx, j = key.second + dy;
        if (i + j >= order_) break;
        s.terms_.emplace(std::make_pair(i, j), c);
    }
    return s;
}

bool BiSeries::is_zero() const { return terms_.empty(); }

bool BiSeries::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return denominator_is_one(t.second); });
}

bool BiSeries::supported_on(unsigned xmod, unsigned ymod) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return t.first.first % xmod == 0 && t.first.second % ymod == 0;
    });
}

void BiSeries::prune_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    BiSeries s = a.order_ == n ? a : a.truncated(n);
    for (const auto& [key, c] : b.terms_) {
        if (key.first + key.second >= n) break;
        s.terms_[key] += c;
    }
    s.prune_zeros();
    return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    BiSeries s = a.order_ == n ? a : a.truncated(n);
    for (const auto& [key, c] : b.terms_) {
        if (key.first + key.second >= n) break;
        s.terms_[key] -= c;
    }
    s.prune_zeros();
    return s;
}

BiSeries operator-(const BiSeries& a) {
    BiSeries s(a.order_);
    for (const auto& [key, c] : a.terms_) s.terms_.emplace(key, -c);
    return s;
}

BiSeries operator*(const Rational& c, const BiSeries& a) {
    BiSeries s(a.order_);
    if (sgn(c) == 0) return s;
    for (const auto& [key, v] : a.terms_) s.terms_.emplace(key, c * v);
    return s;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    BiSeries s(n);
    Rational tmp;
    for (const auto& [ka, ca] : a.terms_) {
        unsigned da = ka.first + ka.second;
        if (da >= n) break;
        for (const auto& [kb, cb] : b.terms_) {
            if (da + kb.first + kb.second >= n) break;
            mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            s.terms_[{ka.first + kb.first, ka.second + kb.second}] += tmp;
        }
    }
    s.prune_zeros();
    return s;
}

BiSeries invert(const BiSeries& a) {
    const Rational& a0 = a.coefficient(0, 0);
    require(sgn(a0) != 0, "cannot invert a series with zero constant term");
    std::size_t n = a.order();
    Rational inv0 = make_rational(1, 1);
    inv0 /= a0;

    using Key = std::pair<unsigned, unsigned>;
    BiSeries::TermMap out;
    out[{0, 0}] = inv0;
    auto degree_range = [&out](unsigned d) {
        return std::make_pair(out.lower_bound(Key{0, d}), out.lower_bound(Key{0, d + 1}));
    };
    Rational tmp;
    for (unsigned d = 1; d < n; ++d) {
        // Homogeneous slice d of a*b must vanish; solve for the degree-d
        // part of b from the lower-degree parts already known.
        BiSeries::TermMap slice;
        for (const auto& [ka, ca] : a.terms()) {
            unsigned da = ka.first + ka.second;
            if (da == 0) continue;
            if (da > d) break;
            auto [lo, hi] = degree_range(d - da);
            for (auto it = lo; it != hi; ++it) {
                mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), it->second.get_mpq_t());
                slice[{ka.first + it->first.first, ka.second + it->first.second}] += tmp;
            }
        }
        for (auto& [key, c] : slice) {
            if (sgn(c) == 0) continue;
            out[key] = -(inv0 * c);
        }
    }
    return BiSeries::from_terms(std::move(out), n);
}

BiSeries substitute_x(const BiSeries& a, unsigned num_pow, const BiSeries& den) {
    require(num_pow >= 1, "substitute_x needs a positive numerator power");
    require(den.coefficient(0, 0) == 1, "substitution denominator needs constant term 1");
    std::size_t n = a.order();
    BiSeries dinv = invert(den.order() == n ? den : den.truncated(n));

    // Slice the input per x-degree: slices[i] holds the series in y that
    // multiplies x^i.
    std::map<unsigned, BiSeries::TermMap> slices;
    for (const auto& [key, c] : a.terms()) slices[key.first][{0, key.second}] = c;

    BiSeries result(n);
    BiSeries den_power = BiSeries::one(n);  // dinv^current
    unsigned current = 0;
    for (auto& [i, slice] : slices) {
        while (current < i) {
            den_power = den_power * dinv;
            ++current;
        }
        BiSeries part = BiSeries::from_terms(std::move(slice), n);
        result = result + (part * den_power).shifted(i * num_pow, 0);
    }
    return result;
}

UniSeries diagonal(const BiSeries& a) {
    UniSeries s(a.order());
    std::vector<Rational> coeffs(a.order());
    for (const auto& [key, c] : a.terms()) coeffs[key.first + key.second] += c;
    return UniSeries::from_coefficients(std::move(coeffs));
}

}  // namespace modgroup
