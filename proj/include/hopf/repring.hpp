#pragma once

// Equivariant E-polynomials: the rings R(S2)[q] and R(S3)[q].
//
// R(S2) has basis {T, N} (trivial, sign). R(S3) has basis {T, S, D}
// (trivial, sign, two-dimensional standard) with D*D = T + S + D.
// Coefficients may be negative: these are virtual representations.

#include <string>

#include "hopf/poly.hpp"

namespace hopf {

struct S2Elem {
    Poly t;
    Poly n;

    friend bool operator==(const S2Elem&, const S2Elem&) = default;
    S2Elem& operator+=(const S2Elem& o);
    friend S2Elem operator+(S2Elem a, const S2Elem& b) { return a += b; }
    friend S2Elem operator*(const S2Elem& x, const S2Elem& y);
    std::string to_string() const;
};

struct S3Elem {
    Poly t;
    Poly s;
    Poly d;

    friend bool operator==(const S3Elem&, const S3Elem&) = default;
    S3Elem& operator+=(const S3Elem& o);
    friend S3Elem operator+(S3Elem a, const S3Elem& b) { return a += b; }
    friend S3Elem operator*(const S3Elem& x, const S3Elem& y);
    std::string to_string() const;
};

S2Elem s2_mul(const S2Elem& x, const S2Elem& y);
S3Elem s3_mul(const S3Elem& x, const S3Elem& y);

/// Recovers e_{S2}(X) from e(X) and e(X/S2).
S2Elem s2_from_quotients(const Poly& e_x, const Poly& e_x_mod_s2);

/// Recovers e_{S3}(X) from e(X), e(X/<tau>) and e(X/S3), tau a transposition.
S3Elem s3_from_quotients(const Poly& e_x, const Poly& e_x_mod_tau, const Poly& e_x_mod_s3);

/// A connected group acted on by inner automorphisms has trivial action in
/// cohomology, so its equivariant E-polynomial is e * T.
S2Elem trivial_action_s2(const Poly& e);
S3Elem trivial_action_s3(const Poly& e);

/// e(X/F): the coefficient of T.
inline const Poly& t_component(const S2Elem& x) { return x.t; }
inline const Poly& t_component(const S3Elem& x) { return x.t; }

/// Forgets the action: e(X) = a + b for S2, a + b + 2c for S3.
Poly dim_map(const S2Elem& x);
Poly dim_map(const S3Elem& x);

/// e(X/<tau>) = a + c for an S3-space.
Poly tau_quotient(const S3Elem& x);

}  // namespace hopf
