#include "support.hpp"

using namespace hopf;
using testing::P;
using testing::q;

namespace {

const S3Elem T3{P(1), {}, {}};
const S3Elem S3{{}, P(1), {}};
const S3Elem D3{{}, {}, P(1)};

// Restriction to <tau>: T -> T, S -> N, D -> T + N.
S2Elem restrict_to_tau(const S3Elem& x) { return {x.t + x.d, x.s + x.d}; }

}  // namespace

TEST_CASE("s2_mul") {
    const S2Elem torus{q, -P(1)};
    CHECK(s2_mul(torus, torus) == S2Elem{q * q + P(1), Poly{0, -2}});
    const S2Elem x{q * q - P(3), P(4) - q};
    CHECK(s2_mul(S2Elem{P(1), {}}, x) == x);
    for (std::int64_t n : {1, 2, 7}) {
        const Poly k = P(n - 1);
        CHECK(s2_mul({k, k}, {q * q, q}) == S2Elem{k * (q * q + q), k * (q * q + q)});
    }
}

TEST_CASE("s3_mul table") {
    CHECK(s3_mul(S3, S3) == T3);
    CHECK(s3_mul(D3, D3) == S3Elem{P(1), P(1), P(1)});
    CHECK(s3_mul(T3, D3) == D3);
    CHECK(s3_mul(S3, D3) == D3);
    const S3Elem torus{q * q, P(1), -q};
    const S3Elem pgl_mod_torus{Poly::monomial(1, 6), Poly::monomial(1, 3), Poly::monomial(1, 5) + Poly::monomial(1, 4)};
    CHECK(s3_mul(torus, pgl_mod_torus).t == sl_epoly(3));
}

TEST_CASE("quotient reconstruction") {
    CHECK(s2_from_quotients(q - P(3), q - P(2)) == S2Elem{q - P(2), -P(1)});
    CHECK(s2_from_quotients(P(6), P(3)) == S2Elem{P(3), P(3)});
    CHECK(s2_from_quotients(q * q, q * q) == S2Elem{q * q, {}});
    CHECK(s3_from_quotients(Poly{10, -5, 1}, Poly{5, -3, 1}, Poly{1, -1, 1}) ==
          S3Elem{Poly{1, -1, 1}, P(1), Poly{4, -2}});
    CHECK(s3_from_quotients(q, q, q) == S3Elem{q, {}, {}});
    CHECK(s3_from_quotients((q - P(1)) * (q - P(1)), q * q - q, q * q) == S3Elem{q * q, P(1), -q});
}

TEST_CASE("trivial actions") {
    CHECK(trivial_action_s3(sl_epoly(3)) == S3Elem{Poly{0, 0, 0, 1, 0, -1, -1, 0, 1}, {}, {}});
    CHECK(trivial_action_s2(sl_epoly(2)) == S2Elem{sl_epoly(2), {}});
}

TEST_CASE("rendering") {
    CHECK(S2Elem{q * q + P(1), Poly{0, -2}}.to_string() == "(q^2+1)*T - 2*q*N");
    CHECK(S3Elem{Poly{1, -1, 1}, P(1), Poly{4, -2}}.to_string() == "(q^2-q+1)*T + S + (-2*q+4)*D");
}

TEST_CASE("ring properties on random elements") {
    std::mt19937_64 rng(3);
    const S2Elem one2{P(1), {}};
    for (int i = 0; i < 200; ++i) {
        const S2Elem a = testing::random_s2(rng), b = testing::random_s2(rng), c = testing::random_s2(rng);
        CHECK(a * one2 == a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(dim_map(a * b) == dim_map(a) * dim_map(b));
        CHECK(dim_map(a + b) == dim_map(a) + dim_map(b));
    }
    for (int i = 0; i < 200; ++i) {
        const S3Elem a = testing::random_s3(rng), b = testing::random_s3(rng), c = testing::random_s3(rng);
        CHECK(a * T3 == a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(dim_map(a * b) == dim_map(a) * dim_map(b));
        // Restriction is a ring map and commutes with dim.
        CHECK(restrict_to_tau(a * b) == restrict_to_tau(a) * restrict_to_tau(b));
        CHECK(dim_map(restrict_to_tau(a)) == dim_map(a));
        CHECK(t_component(restrict_to_tau(a)) == tau_quotient(a));
    }
}

TEST_CASE("quotient round trips") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Poly e = testing::random_poly(rng), et = testing::random_poly(rng), e3 = testing::random_poly(rng);
        const S2Elem x = s2_from_quotients(e, et);
        CHECK(dim_map(x) == e);
        CHECK(t_component(x) == et);
        const S3Elem y = s3_from_quotients(e, et, e3);
        CHECK(dim_map(y) == e);
        CHECK(tau_quotient(y) == et);
        CHECK(t_component(y) == e3);
    }
}
