#pragma once

// Exact univariate integer polynomials in the Hodge variable q.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hopf {

/// Coefficient type. Every arithmetic step is overflow-checked.
using Int = __int128;

std::string to_string(Int v);
Int parse_int(const std::string& text);

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Dense polynomial; coefficient i multiplies q^i. Trailing zeros are never
/// stored, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Int> ascending);
    explicit Poly(std::vector<Int> ascending);
    /// Constant polynomial (an integer count, e.g. the size of a finite set).
    static Poly constant(Int c);
    /// c * q^k
    static Poly monomial(Int c, int k);
    static Poly q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int i) const;
    Int leading() const { return coeffs_.empty() ? Int{0} : coeffs_.back(); }
    std::span<const Int> coefficients() const { return coeffs_; }
    /// Highest degree first; {0} for the zero polynomial.
    std::vector<Int> descending() const;

    Int eval(Int x) const;
    /// Exact division of every coefficient; throws std::domain_error when
    /// some coefficient is not divisible.
    Poly exact_div(Int d) const;

    std::string to_ascii() const;
    /// Same as to_ascii without spaces, for embedding in larger expressions.
    std::string to_compact() const;
    std::string to_latex() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Int c, const Poly& p);
    friend Poly operator-(const Poly& p);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Int poly_eval(const Poly& a, Int x);

/// Product of the listed factors; empty list gives 1.
Poly product(std::initializer_list<Poly> factors);

/// e(Sym^r(P^m)): the t^r coefficient of prod_{i=0..m} 1/(1 - q^i t).
Poly sym_projective_epoly(int m, int r);

/// e(SL_r(C)) = e(PGL_r(C)) = (q^r-1)(q^r-q)...(q^r-q^{r-2}) q^{r-1}
Poly sl_epoly(int r);
/// e(GL_r(C)) = (q^r-1)(q^r-q)...(q^r-q^{r-1})
Poly gl_epoly(int r);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hopf
