#include "modgroup/matrices.hpp"

#include <stdexcept>
#include <utility>

namespace modgroup {

ProjectiveMatrix::ProjectiveMatrix(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
        throw std::invalid_argument("matrix determinant must be 1");
    normalize();
}

void ProjectiveMatrix::normalize() {
    int sign = 0;
    for (const mpz_class* e : {&a_, &b_, &c_, &d_}) {
        sign = sgn(*e);
        if (sign != 0) break;
    }
    if (sign < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

std::string ProjectiveMatrix::str() const {
    return a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str();
}

bool operator<(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    if (int c = cmp(x.a_, y.a_)) return c < 0;
    if (int c = cmp(x.b_, y.b_)) return c < 0;
    if (int c = cmp(x.c_, y.c_)) return c < 0;
    return cmp(x.d_, y.d_) < 0;
}

ProjectiveMatrix letter_matrix(Letter l) {
    return l == Letter::U ? ProjectiveMatrix(0, 1, -1, 1) : ProjectiveMatrix(0, 1, -1, 0);
}

ProjectiveMatrix multiply(const ProjectiveMatrix& m1, const ProjectiveMatrix& m2) {
    return ProjectiveMatrix(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                            m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

ProjectiveMatrix evaluate(const Word& w) {
    ProjectiveMatrix m;
    for (Letter l : w.letters()) m = multiply(m, letter_matrix(l));
    return m;
}

bool is_identity(const Word& w) { return evaluate(w).is_identity(); }

Word normal_form(const Word& w) {
    // Single left-to-right pass over a stack; cancelling the top pattern as
    // soon as it forms keeps the stack free of SS and UUU factors, so the
    // final content is the normal form.
    std::vector<Letter> stack;
    stack.reserve(w.length());
    for (Letter l : w.letters()) {
        stack.push_back(l);
        std::size_t n = stack.size();
        if (l == Letter::S) {
            if (n >= 2 && stack[n - 2] == Letter::S) stack.resize(n - 2);
        } else {
            if (n >= 3 && stack[n - 2] == Letter::U && stack[n - 3] == Letter::U)
                stack.resize(n - 3);
        }
    }
    return Word(std::move(stack));
}

bool is_primitive_identity(const Word& w) {
    if (w.empty()) return false;
    ProjectiveMatrix m;
    for (std::size_t i = 0; i + 1 < w.length(); ++i) {
        m = multiply(m, letter_matrix(w.at(i)));
        if (m.is_identity()) return false;
    }
    m = multiply(m, letter_matrix(w.at(w.length() - 1)));
    return m.is_identity();
}

}  // namespace modgroup
