#include "hopf/repring.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace hopf {

S2Elem& S2Elem::operator+=(const S2Elem& o) {
    t += o.t;
    n += o.n;
    return *this;
}

S2Elem operator*(const S2Elem& x, const S2Elem& y) {
    return {x.t * y.t + x.n * y.n, x.t * y.n + x.n * y.t};
}

S3Elem& S3Elem::operator+=(const S3Elem& o) {
    t += o.t;
    s += o.s;
    d += o.d;
    return *this;
}

S3Elem operator*(const S3Elem& x, const S3Elem& y) {
    // T is the unit, S*S = T, S*D = D, D*D = T + S + D.
    const Poly dd = x.d * y.d;
    return {
        x.t * y.t + x.s * y.s + dd,
        x.t * y.s + x.s * y.t + dd,
        x.t * y.d + x.d * y.t + x.s * y.d + x.d * y.s + dd,
    };
}

S2Elem s2_mul(const S2Elem& x, const S2Elem& y) { return x * y; }
S3Elem s3_mul(const S3Elem& x, const S3Elem& y) { return x * y; }

S2Elem s2_from_quotients(const Poly& e_x, const Poly& e_x_mod_s2) { return {e_x_mod_s2, e_x - e_x_mod_s2}; }

S3Elem s3_from_quotients(const Poly& e_x, const Poly& e_x_mod_tau, const Poly& e_x_mod_s3) {
    return {e_x_mod_s3, e_x - Int{2} * e_x_mod_tau + e_x_mod_s3, e_x_mod_tau - e_x_mod_s3};
}

S2Elem trivial_action_s2(const Poly& e) { return {e, {}}; }
S3Elem trivial_action_s3(const Poly& e) { return {e, {}, {}}; }

Poly dim_map(const S2Elem& x) { return x.t + x.n; }
Poly dim_map(const S3Elem& x) { return x.t + x.s + Int{2} * x.d; }

Poly tau_quotient(const S3Elem& x) { return x.t + x.d; }

namespace {

// Renders sum_i coeff_i * basis_i as "(q^2+1)*T - 2*q*N".
std::string render(const std::vector<std::pair<const Poly*, const char*>>& terms) {
    std::string out;
    for (const auto& [coeff, basis] : terms) {
        if (coeff->is_zero()) continue;
        std::string body;
        bool negative = false;
        if (coeff->degree() >= 0 && std::count_if(coeff->coefficients().begin(), coeff->coefficients().end(),
                                                  [](Int c) { return c != 0; }) == 1) {
            negative = coeff->leading() < 0;
            const Poly mag = negative ? -*coeff : *coeff;
            body = mag == Poly{1} ? std::string(basis) : mag.to_compact() + "*" + basis;
        } else {
            body = "(" + coeff->to_compact() + ")*" + basis;
        }
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string S2Elem::to_string() const { return render({{&t, "T"}, {&n, "N"}}); }
std::string S3Elem::to_string() const { return render({{&t, "T"}, {&s, "S"}, {&d, "D"}}); }

}  // namespace hopf
