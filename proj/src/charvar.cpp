#include "hopf/charvar.hpp"

#include <stdexcept>

#include "hopf/repring.hpp"

namespace hopf {

namespace {

const Poly q = Poly::q();
Poly P(Int c) { return Poly::constant(c); }

constexpr std::pair<CharPieceKind, const char*> kNames[] = {
    {CharPieceKind::red_111, "red_111"},         {CharPieceKind::red_21, "red_21"},
    {CharPieceKind::red_total, "red_total"},     {CharPieceKind::irr_xi4_xi1, "irr_xi4_xi1"},
    {CharPieceKind::irr_xi6_xi1, "irr_xi6_xi1"}, {CharPieceKind::irr_total, "irr_total"},
    {CharPieceKind::total, "total"},
};

// C^* with lambda -> 1/lambda.
S2Elem units_s2() { return s2_from_quotients(q - P(1), q); }

// Diagonal torus of SL_3 under permutation of entries.
S3Elem torus3_s3() { return s3_from_quotients((q - P(1)) * (q - P(1)), q * q - q, q * q); }

Poly rank2_red() { return t_component(units_s2() * units_s2()); }

// (a, d) with ad != 1: the plane minus a hyperbola.
Poly rank2_irr_slice() { return q * q - (q - P(1)); }

Poly rank3_red_111() { return t_component(torus3_s3() * torus3_s3()); }

Poly rank3_red_21(Int n) {
    // Irreducible GL_2 blocks with eigenvalues (l, l e), e in mu_n^*.
    // e != -1: eigenvalue swap pairs e with 1/e, leaving (GL_2 - {bc=0})/C^*.
    const Poly generic = (q * q - q + P(1)) * (q - P(1));  // q^3-2q^2+2q-1
    // e == -1 (n even): further quotient by the swap. Base B/C^* = C^*
    // inverted; fibre {ad != bc+1} with (a, d) swapped.
    const S2Elem fibre = s2_from_quotients(q * q - q + P(1), q * q - q);
    const Poly involuted = t_component(units_s2() * fibre);  // q^3-q^2-1
    const Int generic_pairs = (n - 1) / 2;
    const Int minus_one = n - 1 - 2 * generic_pairs;
    return Int{generic_pairs} * generic + Int{minus_one} * involuted;
}

Poly rank3_irr_xi6_xi1(Int n) {
    // A diagonal with distinct eigenvalues whose n-th powers agree; B is cut
    // by the conditions that no coordinate line or plane is invariant.
    // d, g != 0 (normalised to 1), minus the loci U1 = {b=c=0},
    // U2 = {b=h=0}, U3 = {c=f=0} by inclusion-exclusion.
    const Poly both = q * (q * q * q - q) * q * q -
                      (gl_epoly(2) + Int{2} * q * q * (q * q - q) - Int{2} * q * (q - P(1)) * (q - P(1)));
    // Exactly one of d, g nonzero: q^5 minus {b=c=0} u {c=f=0}.
    const Poly one = Poly::monomial(1, 5) - (Int{2} * q * (q * q - q) - (q - P(1)) * (q - P(1)));
    const Int orbits = (n - 1) * (n - 2) / 2;
    return Int{orbits} * (both + Int{2} * one);
}

Poly rank3_irr_xi4_xi1(Int n) {
    // B_1 diagonalizable with both diagonal entries a, e nonzero: swap of
    // (a, e, c, f), then a = 0; B_1 a Jordan block.
    const S2Elem distinct_pairs = s2_from_quotients((q - P(1)) * (q - P(1)) - (q - P(1)), q * q - Int{2} * q + P(1));
    const S2Elem unit_pairs = s2_from_quotients((q - P(1)) * (q - P(1)), q * q - q);
    const Poly diag_nonzero = t_component(distinct_pairs * unit_pairs);
    const Poly diag_zero = (q - P(1)) * (q - P(1)) * q;
    const Poly jordan = (q - P(1)) * (q * q - q) + q * q;
    return Int{3 * n - 3} * (diag_nonzero + diag_zero + jordan);
}

}  // namespace

CharPiece CharPiece::make(int rank, CharPieceKind kind) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    if (rank == 2 && kind != CharPieceKind::red_total && kind != CharPieceKind::irr_total &&
        kind != CharPieceKind::total)
        throw std::invalid_argument("rank 2 character variety has only red_total, irr_total, total");
    return {rank, kind};
}

std::string CharPiece::name() const {
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

std::vector<CharPieceKind> char_piece_kinds(int rank) {
    if (rank == 2) return {CharPieceKind::red_total, CharPieceKind::irr_total, CharPieceKind::total};
    return {CharPieceKind::red_111,     CharPieceKind::red_21,      CharPieceKind::red_total,
            CharPieceKind::irr_xi4_xi1, CharPieceKind::irr_xi6_xi1, CharPieceKind::irr_total,
            CharPieceKind::total};
}

CharPieceKind parse_char_piece_kind(const std::string& name) {
    for (const auto& [k, n] : kNames)
        if (name == n) return k;
    throw std::invalid_argument("unknown character-variety piece: " + name);
}

Poly char_piece_epoly(CharPiece p, TwistCount tw) {
    p = CharPiece::make(p.rank, p.kind);
    const Int n = tw.value();
    if (p.rank == 2) {
        // Irreducibles: A diagonal with eigenvalues in (mu_2n - mu_2)/S2,
        // B normalised to b = 1, c = 1 - ad.
        const Poly red = rank2_red();
        const Poly irr = Int{n - 1} * rank2_irr_slice();
        switch (p.kind) {
        case CharPieceKind::red_total: return red;
        case CharPieceKind::irr_total: return irr;
        default: return red + irr;
        }
    }
    switch (p.kind) {
    case CharPieceKind::red_111: return rank3_red_111();
    case CharPieceKind::red_21: return rank3_red_21(n);
    case CharPieceKind::red_total: return rank3_red_111() + rank3_red_21(n);
    case CharPieceKind::irr_xi4_xi1: return rank3_irr_xi4_xi1(n);
    case CharPieceKind::irr_xi6_xi1: return rank3_irr_xi6_xi1(n);
    case CharPieceKind::irr_total: return rank3_irr_xi4_xi1(n) + rank3_irr_xi6_xi1(n);
    case CharPieceKind::total: break;
    }
    return rank3_red_111() + rank3_red_21(n) + rank3_irr_xi4_xi1(n) + rank3_irr_xi6_xi1(n);
}

Poly char_variety_epoly_formula(int rank, TwistCount tw) {
    const Int n = tw.value();
    if (rank == 2) return q * q + P(1) + Int{n - 1} * (q * q - q + P(1));
    if (rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    const Poly sextic{2, -3, 3, 1, -4, 2, 1};  // q^6+2q^5-4q^4+q^3+3q^2-3q+2
    const Poly quartic{1, -1, 1, -1, 1};       // q^4-q^3+q^2-q+1
    return Poly::monomial(1, 4) + (Int{n * n - 3 * n + 2} * sextic).exact_div(2) -
           Int{(n - 1) / 2} * (q * q * q - Int{2} * q - P(1)) + Int{3 * (n - 1)} * quartic -
           Int{n - 2} * (q * q + P(1)) + Int{n - 1} * q * q * q;
}

}  // namespace hopf
