#pragma once

#include <gmpxx.h>

#include <string>

#include "modgroup/words.hpp"

namespace modgroup {

// An element of PSL2(Z): integer matrix (a b; c d) with determinant 1,
// identified up to global sign.  The stored representative is normalized so
// that the first nonzero entry in the order a, b, c, d is positive; the
// identity is always (1,0,0,1).
class ProjectiveMatrix {
public:
    ProjectiveMatrix() : a_(1), b_(0), c_(0), d_(1) {}

    // Throws std::invalid_argument unless the determinant is 1 (up to the
    // global sign, i.e. ad - bc must equal 1).
    ProjectiveMatrix(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    static ProjectiveMatrix identity() { return {}; }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    std::string str() const;  // "a,b,c,d"

    friend bool operator==(const ProjectiveMatrix&, const ProjectiveMatrix&) = default;
    friend bool operator<(const ProjectiveMatrix& x, const ProjectiveMatrix& y);

private:
    void normalize();

    mpz_class a_, b_, c_, d_;
};

// The generator matrices: U = (0 1; -1 1) of order 3, S = (0 1; -1 0) of
// order 2.
ProjectiveMatrix letter_matrix(Letter l);

ProjectiveMatrix multiply(const ProjectiveMatrix& m1, const ProjectiveMatrix& m2);

// Left-to-right product of the letter matrices; the empty word gives the
// identity.
ProjectiveMatrix evaluate(const Word& w);

bool is_identity(const Word& w);

// Deletes factors SS and UUU until none remain.  The result is the unique
// free-product normal form; it is empty exactly when w is an identity word.
Word normal_form(const Word& w);

// True iff w is nonempty, an identity word, and no proper nonempty prefix
// evaluates to the identity.
bool is_primitive_identity(const Word& w);

}  // namespace modgroup
