// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hopf/charvar.hpp"
#include "hopf/ffcount.hpp"
#include "hopf/geom.hpp"
#include "hopf/primes.hpp"

using namespace hopf;

namespace {

const Poly q = Poly::q();
Poly P(Int c) { return Poly::constant(c); }
Poly mono(int k) { return Poly::monomial(1, k); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > limit_seconds) out.fail("over time limit");
    if (!out.ok) ++failures;
    std::printf("[%s] %d %s (%.3f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_seconds,
                out.ok ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

std::string at(std::int64_t n) { return "n=" + std::to_string(n); }

}  // namespace

int main() {
    criterion(1, "rank-2 strata sum equals ((n-1)q^2+nq-n+5)(q^3-q) for n=1..200", 1, [](Outcome& o) {
        for (std::int64_t n = 1; n <= 200; ++n) {
            const Poly expected = (P(n - 1) * q * q + P(n) * q + P(5 - n)) * (mono(3) - q);
            if (rep_variety_epoly_strata(2, TwistCount(n)) != expected) o.fail(at(n));
            if (rep_variety_epoly_formula(2, TwistCount(n)) != expected) o.fail("formula " + at(n));
        }
    });

    criterion(2, "rank-3 strata sum equals the SL3 closed formula for n=1..200", 5, [](Outcome& o) {
        for (std::int64_t n = 1; n <= 200; ++n)
            if (rep_variety_epoly_strata(3, TwistCount(n)) != rep_variety_epoly_formula(3, TwistCount(n))) o.fail(at(n));
    });

    criterion(3, "character variety piece sums equal the closed formulas, both ranks, n=1..200", 1, [](Outcome& o) {
        for (std::int64_t n = 1; n <= 200; ++n) {
            const TwistCount tn(n);
            const auto piece = [&](int r, CharPieceKind k) { return char_piece_epoly(CharPiece::make(r, k), tn); };
            const Poly rank2_anchor = q * q + P(1) + P(n - 1) * (q * q - q + P(1));
            if (char_variety_epoly_formula(2, tn) != rank2_anchor) o.fail("rank 2 formula " + at(n));
            if (piece(2, CharPieceKind::red_total) + piece(2, CharPieceKind::irr_total) != rank2_anchor)
                o.fail("rank 2 pieces " + at(n));
            const Poly sum3 = piece(3, CharPieceKind::red_111) + piece(3, CharPieceKind::red_21) +
                              piece(3, CharPieceKind::irr_xi6_xi1) + piece(3, CharPieceKind::irr_xi4_xi1);
            if (sum3 != char_variety_epoly_formula(3, tn)) o.fail("rank 3 " + at(n));
        }
    });

    criterion(4, "rank-2 point counts equal the E-polynomial at 11 admissible (n,q)", 11, [](Outcome& o) {
        const std::pair<std::int64_t, std::uint32_t> points[] = {{1, 3},  {1, 5},  {1, 7},  {1, 11}, {2, 5},  {2, 13},
                                                                 {3, 7},  {3, 13}, {4, 17}, {5, 11}, {6, 13}};
        for (auto [n, p] : points) {
            const auto start = std::chrono::steady_clock::now();
            if (!ff::oracle_admissible(2, n, p)) o.fail("not admissible " + at(n));
            const Int count = ff::count_rep_variety_points(2, TwistCount(n), p);
            if (count != rep_variety_epoly_formula(2, TwistCount(n)).eval(p))
                o.fail(at(n) + " q=" + std::to_string(p) + " count " + to_string(count));
            if (std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > 1.0)
                o.fail(at(n) + " q=" + std::to_string(p) + " over 1 s");
        }
    });

    criterion(5, "rank-3 point count at n=1, q=7 equals the E-polynomial (360364032)", 300, [](Outcome& o) {
        const Int count = ff::count_rep_variety_points(3, TwistCount(1), 7);
        const Int expected = rep_variety_epoly_formula(3, TwistCount(1)).eval(7);
        if (expected != 360364032) o.fail("formula gives " + to_string(expected));
        if (count != expected) o.fail("count " + to_string(count));
    });

    criterion(6, "commuting pairs in SL2(F_q) = (q+4)|SL2(F_q)| = (q+4)(q^3-q), q=5,7,11", 10, [](Outcome& o) {
        for (std::uint32_t p : {5u, 7u, 11u}) {
            const Int count = ff::count_rep_variety_points(2, TwistCount(1), p);
            const Int classes = Int{p} + 4;
            if (count != classes * ff::sl_order(2, p)) o.fail("q=" + std::to_string(p));
            if (count != ((q + P(4)) * (mono(3) - q)).eval(p)) o.fail("polynomial q=" + std::to_string(p));
        }
    });

    criterion(7, "equivariant consistency: dimensions, sigma3 decomposition, S3 fibration of SL3", 1, [](Outcome& o) {
        const auto s = [](int r, int i) { return PartitionId::make(r, i); };
        for (std::int64_t n = 1; n <= 100; ++n) {
            const TwistCount tn(n);
            for (int rank : {2, 3})
                for (const auto& st : admissible_strata(rank)) {
                    if (st.group() == ActingGroup::trivial) continue;
                    const Poly plain = delta_epoly(st.src.partition(), st.tgt.partition(), tn) *
                                       pgl_mod_stab_epoly(st.src) * stabilizer_epoly(st.tgt);
                    const Poly dim = st.group() == ActingGroup::s2 ? dim_map(stratum_equivariant_s2(st, tn))
                                                                   : dim_map(stratum_equivariant_s3(st, tn));
                    if (dim != plain) o.fail(st.name() + " " + at(n));
                }
            if (dim_map(delta_equivariant_s2(s(3, 3), s(3, 2), tn)) != delta_epoly(s(3, 3), s(3, 2), tn) ||
                dim_map(delta_equivariant_s3(s(3, 3), s(3, 3), tn)) != delta_epoly(s(3, 3), s(3, 3), tn) ||
                dim_map(delta_equivariant_s3(s(3, 3), s(3, 1), tn)) != delta_epoly(s(3, 3), s(3, 1), tn) ||
                dim_map(delta_equivariant_s2(s(2, 2), s(2, 2), tn)) != delta_epoly(s(2, 2), s(2, 2), tn) ||
                dim_map(delta_equivariant_s2(s(2, 2), s(2, 1), tn)) != delta_epoly(s(2, 2), s(2, 1), tn))
                o.fail("delta dimensions " + at(n));
            const Poly split = delta_epoly(s(3, 3), s(3, 3), tn) + P(3) * delta_epoly(s(3, 3), s(3, 2), tn) +
                               delta_epoly(s(3, 3), s(3, 1), tn);
            if (split != config_epoly(s(3, 3))) o.fail("sigma3 decomposition " + at(n));
        }
        const auto pieces = equivariant_pieces_s3(JordanTypeId::make(3, 6));
        if (pieces.stabilizer * pieces.pgl_mod_stab != trivial_action_s3(sl_epoly(3))) o.fail("fibration identity");
    });

    criterion(8, "configuration point counts equal delta E-polynomials, n<=6, admissible q<=97", 10, [](Outcome& o) {
        for (int rank : {2, 3})
            for (const auto& [src, tgt] : refinement_pairs(rank))
                for (std::int64_t n = 1; n <= 6; ++n) {
                    int tested = 0;
                    for (std::int64_t p = 3; p <= 97; ++p) {
                        if (!is_prime(static_cast<std::uint64_t>(p)) || !delta_count_admissible(rank, n, p)) continue;
                        ++tested;
                        if (Int{count_delta_points(src, tgt, TwistCount(n), p)} != delta_epoly(src, tgt, TwistCount(n)).eval(p))
                            o.fail(src.name() + "->" + tgt.name() + " " + at(n) + " q=" + std::to_string(p));
                    }
                    if (tested == 0) o.fail("no admissible prime for " + at(n));
                }
    });

    criterion(9, "symmetric products: Sym^2(P^2), Sym^3(P^2), Sym^r(P^1)", 1, [](Outcome& o) {
        if (sym_projective_epoly(2, 2) != Poly{1, 1, 2, 1, 1}) o.fail("Sym^2(P^2)");
        if (sym_projective_epoly(2, 3) != Poly{1, 1, 2, 2, 2, 1, 1}) o.fail("Sym^3(P^2)");
        for (int r = 0; r <= 20; ++r) {
            Poly expected;
            for (int i = 0; i <= r; ++i) expected += mono(i);
            if (sym_projective_epoly(1, r) != expected) o.fail("Sym^" + std::to_string(r) + "(P^1)");
        }
    });

    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
