#include <algorithm>

#include "hopf/primes.hpp"
#include "hopf/strata.hpp"
#include "support.hpp"

using namespace hopf;
using testing::P;
using testing::q;

namespace {

PartitionId s(int rank, int index) { return PartitionId::make(rank, index); }

// Independent F_q count of Delta^r_{src->tgt}: runs over every tuple in
// (F_q^*)^r with product 1, sorts it by coincidence pattern directly, and
// counts those whose pattern is the representative of src (same equalities
// slot by slot) and whose n-th powers have the representative of tgt.
std::int64_t oracle_delta(PartitionId src, PartitionId tgt, std::int64_t n, std::int64_t q) {
    const int r = src.rank;
    const auto pattern_of = [&](const std::vector<std::int64_t>& v) {
        std::vector<int> lab(v.size());
        std::vector<std::int64_t> seen;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto it = std::find(seen.begin(), seen.end(), v[i]);
            lab[i] = static_cast<int>(it - seen.begin());
            if (it == seen.end()) seen.push_back(v[i]);
        }
        return lab;
    };
    const auto powmod = [q](std::int64_t a, std::int64_t e) {
        std::int64_t r = 1;
        for (a %= q; e > 0; e >>= 1, a = a * a % q)
            if (e & 1) r = r * a % q;
        return r;
    };
    std::int64_t count = 0;
    std::vector<std::int64_t> v(static_cast<std::size_t>(r), 1);
    while (true) {
        std::int64_t prod = 1;
        for (auto x : v) prod = prod * x % q;
        if (prod == 1 && pattern_of(v) == src.labels()) {
            std::vector<std::int64_t> w;
            for (auto x : v) w.push_back(powmod(x, n));
            if (pattern_of(w) == tgt.labels()) ++count;
        }
        std::size_t k = 0;
        while (k < v.size() && ++v[k] == q) v[k++] = 1;
        if (k == v.size()) break;
    }
    return count;
}

}  // namespace

TEST_CASE("TwistCount and PartitionId validation") {
    CHECK_THROWS_AS(TwistCount(0), std::invalid_argument);
    CHECK(TwistCount(5).value() == 5);
    CHECK_THROWS_AS(PartitionId::make(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(PartitionId::make(4, 1), std::invalid_argument);
    CHECK(s(3, 2).labels() == std::vector<int>{0, 0, 1});
    CHECK(s(3, 2).block_sizes() == std::vector<int>{2, 1});
}

TEST_CASE("refines") {
    CHECK(refines(s(2, 2), s(2, 1)));
    CHECK_FALSE(refines(s(2, 1), s(2, 2)));
    CHECK(refines(s(3, 3), s(3, 2)));
    CHECK(refines(s(3, 3), s(3, 1)));
    CHECK(refines(s(3, 2), s(3, 1)));
    CHECK_FALSE(refines(s(3, 2), s(3, 3)));
    CHECK_THROWS_AS(refines(s(2, 1), s(3, 1)), std::invalid_argument);
    CHECK(refinement_pairs(2).size() == 3);
    CHECK(refinement_pairs(3).size() == 6);
}

TEST_CASE("delta_epoly examples") {
    CHECK(delta_epoly(s(3, 3), s(3, 1), TwistCount(3)) == P(6));
    CHECK(delta_epoly(s(3, 3), s(3, 1), TwistCount(1)).is_zero());
    CHECK(delta_epoly(s(3, 3), s(3, 3), TwistCount(2)) == Poly{31, -8, 1});
    CHECK(delta_epoly(s(3, 1), s(3, 1), TwistCount(9)) == P(3));
    CHECK(delta_epoly(s(2, 2), s(2, 1), TwistCount(4)) == P(6));
    CHECK(delta_epoly(s(2, 2), s(2, 2), TwistCount(4)) == q - P(9));
    CHECK_THROWS_AS(delta_epoly(s(3, 1), s(3, 2), TwistCount(1)), std::invalid_argument);
}

TEST_CASE("config spaces") {
    CHECK(config_epoly(s(3, 1)) == P(3));
    CHECK(config_epoly(s(3, 2)) == q - P(4));
    CHECK(config_epoly(s(3, 3)) == Poly{10, -5, 1});
    CHECK(config_epoly(s(2, 1)) == P(2));
    CHECK(config_epoly(s(2, 2)) == q - P(3));
    CHECK(config_equivariant_s2(s(2, 2)) == S2Elem{q - P(2), -P(1)});
    CHECK(config_equivariant_s3(s(3, 3)) == S3Elem{Poly{1, -1, 1}, P(1), Poly{4, -2}});
}

TEST_CASE("equivariant deltas") {
    CHECK(delta_equivariant_s2(s(2, 2), s(2, 1), TwistCount(5)) == S2Elem{P(4), P(4)});
    for (std::int64_t n = 1; n <= 10; ++n)
        CHECK(delta_equivariant_s2(s(2, 2), s(2, 2), TwistCount(n)) == S2Elem{q - P(n + 1), P(-n)});
    // At n = 1 nothing degenerates: the full configuration space.
    CHECK(delta_equivariant_s3(s(3, 3), s(3, 3), TwistCount(1)) == config_equivariant_s3(s(3, 3)));
    CHECK(delta_equivariant_s3(s(3, 3), s(3, 1), TwistCount(4)) == S3Elem{P(3), P(3), P(6)});
    CHECK_THROWS(delta_equivariant_s2(s(3, 2), s(3, 1), TwistCount(2)));
    CHECK_THROWS(delta_equivariant_s3(s(3, 3), s(3, 2), TwistCount(2)));
}

TEST_CASE("equivariant quotient closed forms") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        const TwistCount tn(n);
        const S2Elem x = delta_equivariant_s2(s(3, 3), s(3, 2), tn);
        CHECK(x.t == P(n / 2) * (q - P(1)) - P(3 * n * (n - 1) / 2));
        CHECK(x.n == P((n - 1) / 2) * (q - P(1)) - P(3 * n * (n - 1) / 2));
        const S3Elem y = delta_equivariant_s3(s(3, 3), s(3, 3), tn);
        CHECK(y.t == q * q - q - P(n / 2) * (q - P(1)) + P(n * n));
        CHECK(y.s == -(P((n - 1) / 2) * (q - P(1)) - P(n * n)));
        CHECK(y.d == -(P(n + 1) * (q - P(1)) - P(2 * n * n)));
        const Poly h = P((n * n - 3 * n + 2) / 2);
        CHECK(delta_equivariant_s3(s(3, 3), s(3, 1), tn) == S3Elem{h, h, P(n * n - 3 * n + 2)});
    }
}

TEST_CASE("decomposition identities") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        const TwistCount tn(n);
        CHECK(config_epoly(s(2, 2)) == delta_epoly(s(2, 2), s(2, 2), tn) + delta_epoly(s(2, 2), s(2, 1), tn));
        CHECK(config_epoly(s(3, 2)) == delta_epoly(s(3, 2), s(3, 2), tn) + delta_epoly(s(3, 2), s(3, 1), tn));
        CHECK(config_epoly(s(3, 3)) == delta_epoly(s(3, 3), s(3, 3), tn) + P(3) * delta_epoly(s(3, 3), s(3, 2), tn) +
                                           delta_epoly(s(3, 3), s(3, 1), tn));
        CHECK(config_epoly(s(3, 1)) == delta_epoly(s(3, 1), s(3, 1), tn));
        CHECK(config_epoly(s(2, 1)) == delta_epoly(s(2, 1), s(2, 1), tn));
        CHECK(config_equivariant_s2(s(2, 2)) ==
              delta_equivariant_s2(s(2, 2), s(2, 2), tn) + delta_equivariant_s2(s(2, 2), s(2, 1), tn));
    }
}

TEST_CASE("equivariant data forgets to plain data") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        const TwistCount tn(n);
        CHECK(dim_map(delta_equivariant_s2(s(2, 2), s(2, 1), tn)) == delta_epoly(s(2, 2), s(2, 1), tn));
        CHECK(dim_map(delta_equivariant_s2(s(2, 2), s(2, 2), tn)) == delta_epoly(s(2, 2), s(2, 2), tn));
        CHECK(dim_map(delta_equivariant_s2(s(3, 3), s(3, 2), tn)) == delta_epoly(s(3, 3), s(3, 2), tn));
        CHECK(dim_map(delta_equivariant_s3(s(3, 3), s(3, 1), tn)) == delta_epoly(s(3, 3), s(3, 1), tn));
        CHECK(dim_map(delta_equivariant_s3(s(3, 3), s(3, 3), tn)) ==
              q * q - P(3 * n + 2) * q + P(6 * n * n + 3 * n + 1));
    }
}

TEST_CASE("configuration counts match E-polynomials over F_q") {
    for (int rank : {2, 3})
        for (const auto& [src, tgt] : refinement_pairs(rank))
            for (std::int64_t n = 1; n <= 6; ++n)
                for (std::int64_t p = 3; p <= 97; ++p) {
                    if (!is_prime(static_cast<std::uint64_t>(p)) || !delta_count_admissible(rank, n, p)) continue;
                    const std::int64_t count = count_delta_points(src, tgt, TwistCount(n), p);
                    CAPTURE(rank);
                    CAPTURE(n);
                    CAPTURE(p);
                    CHECK(Int{count} == delta_epoly(src, tgt, TwistCount(n)).eval(p));
                }
}

TEST_CASE("configuration counter agrees with an independent enumeration") {
    for (int rank : {2, 3})
        for (const auto& [src, tgt] : refinement_pairs(rank))
            for (auto [n, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 7}, {2, 13}, {3, 19}, {2, 7}}) {
                if (!delta_count_admissible(rank, n, p)) continue;
                CHECK(count_delta_points(src, tgt, TwistCount(n), p) == oracle_delta(src, tgt, n, p));
            }
}

TEST_CASE("configuration counter preconditions") {
    CHECK_FALSE(delta_count_admissible(3, 2, 11));
    CHECK(delta_count_admissible(3, 2, 7));
    CHECK_THROWS_AS(count_delta_points(s(3, 3), s(3, 3), TwistCount(2), 11), std::invalid_argument);
    CHECK_THROWS_AS(count_delta_points(s(3, 3), s(3, 3), TwistCount(1), 9), std::invalid_argument);
}
