#include "hopf/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopf {

std::string to_string(Int v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // Work in the unsigned domain so that the minimum value prints correctly.
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("bad integer literal: " + text);
    Int v = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + text);
        v = checked_add(checked_mul(v, 10), neg ? -(c - '0') : (c - '0'));
    }
    return v;
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit overflow in multiplication");
    return r;
}

Poly::Poly(std::initializer_list<Int> ascending) : coeffs_(ascending) { normalize(); }

Poly::Poly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { normalize(); }

Poly Poly::constant(Int c) { return Poly{c}; }

Poly Poly::monomial(Int c, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    std::vector<Int> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Int> Poly::descending() const {
    if (coeffs_.empty()) return {0};
    return {coeffs_.rbegin(), coeffs_.rend()};
}

Int Poly::eval(Int x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

Poly Poly::exact_div(Int d) const {
    if (d == 0) throw std::domain_error("division by zero");
    std::vector<Int> out(coeffs_);
    for (auto& c : out) {
        if (c % d != 0) throw std::domain_error("coefficient " + to_string(c) + " not divisible by " + to_string(d));
        c /= d;
    }
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(std::move(out));
}

Poly operator*(Int c, const Poly& p) {
    std::vector<Int> out(p.coeffs_);
    for (auto& x : out) x = checked_mul(c, x);
    return Poly(std::move(out));
}

Poly operator-(const Poly& p) { return Int{-1} * p; }

namespace {

enum class Style { ascii, compact, latex };

std::string render(std::span<const Int> coeffs, Style style) {
    if (coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Int c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (first) {
            if (neg) out += '-';
        } else if (style == Style::ascii) {
            out += neg ? " - " : " + ";
        } else {
            out += neg ? '-' : '+';
        }
        first = false;

        const std::string mag = to_string(neg ? -c : c);
        if (k == 0) {
            out += mag;
            continue;
        }
        if (mag != "1") out += mag + (style == Style::latex ? "" : "*");
        out += 'q';
        if (k > 1) out += style == Style::latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string Poly::to_ascii() const { return render(coeffs_, Style::ascii); }
std::string Poly::to_compact() const { return render(coeffs_, Style::compact); }
std::string Poly::to_latex() const { return render(coeffs_, Style::latex); }

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
Int poly_eval(const Poly& a, Int x) { return a.eval(x); }

Poly product(std::initializer_list<Poly> factors) {
    Poly acc{1};
    for (const auto& f : factors) acc *= f;
    return acc;
}

Poly sym_projective_epoly(int m, int r) {
    if (m < 0 || r < 0) throw std::invalid_argument("sym_projective_epoly: m and r must be non-negative");
    // series[k] is the t^k coefficient of the partial product; multiplying by
    // 1/(1 - q^i t) is an in-place prefix recurrence weighted by q^i.
    std::vector<Poly> series(static_cast<std::size_t>(r) + 1);
    series[0] = Poly{1};
    for (int i = 0; i <= m; ++i) {
        const Poly qi = Poly::monomial(1, i);
        for (int k = 1; k <= r; ++k) series[k] += qi * series[k - 1];
    }
    return series[static_cast<std::size_t>(r)];
}

Poly sl_epoly(int r) {
    if (r < 1) throw std::invalid_argument("sl_epoly: rank must be positive");
    Poly acc = Poly::monomial(1, r - 1);
    for (int i = 0; i <= r - 2; ++i) acc *= Poly::monomial(1, r) - Poly::monomial(1, i);
    return acc;
}

Poly gl_epoly(int r) {
    if (r < 1) throw std::invalid_argument("gl_epoly: rank must be positive");
    Poly acc{1};
    for (int i = 0; i <= r - 1; ++i) acc *= Poly::monomial(1, r) - Poly::monomial(1, i);
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_ascii(); }

}  // namespace hopf
