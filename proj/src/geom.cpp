#include "hopf/geom.hpp"

#include <stdexcept>

namespace hopf {

namespace {

const Poly q = Poly::q();
Poly P(Int c) { return Poly::constant(c); }

// e(P^m) and e(Sym^r(P^m)).
Poly proj(int m) { return sym_projective_epoly(m, 1); }
Poly sym(int m, int r) { return sym_projective_epoly(m, r); }

// PGL_2/D = pairs of distinct points of P^1.
Poly pgl2_mod_diag() { return proj(1) * proj(1) - proj(1); }
Poly pgl2_mod_diag_mod_s2() { return sym(1, 2) - proj(1); }

// PGL_3/D = ordered non-collinear triples in P^2. The collinear locus is the
// coincident triples (a copy of P^2) plus, for each line, the not-all-equal
// triples on it.
Poly pgl3_mod_diag() {
    const Poly line_triples = proj(1) * proj(1) * proj(1) - proj(1);
    return proj(2) * proj(2) * proj(2) - (proj(2) + proj(2) * line_triples);
}
Poly pgl3_mod_diag_mod_s3() { return sym(2, 3) - (proj(2) + proj(2) * (sym(1, 3) - proj(1))); }
Poly pgl3_mod_diag_mod_tau() {
    return sym(2, 2) * proj(2) - (proj(2) + proj(2) * (sym(1, 2) * proj(1) - proj(1)));
}

// The diagonal torus of SL_3: D/S3 = C^2 (elementary symmetric functions),
// D/<tau> = C x C^*.
S3Elem torus3_s3() { return s3_from_quotients((q - P(1)) * (q - P(1)), q * q - q, q * q); }

int stratum_code(const StratumId& s) { return s.src.index * 10 + s.tgt.index; }

void require_dim(const Poly& equivariant_dim, const Poly& plain, const StratumId& s) {
    if (equivariant_dim != plain) throw std::logic_error("dimension mismatch in stratum " + s.name());
}

}  // namespace

JordanTypeId JordanTypeId::make(int rank, int index) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    const int count = rank == 2 ? 3 : 6;
    if (index < 1 || index > count) throw std::invalid_argument("Jordan type index out of range for rank");
    return {rank, index};
}

PartitionId JordanTypeId::partition() const {
    if (rank == 2) return PartitionId::make(2, index <= 2 ? 1 : 2);
    return PartitionId::make(3, index <= 3 ? 1 : (index <= 5 ? 2 : 3));
}

std::string JordanTypeId::name() const { return "xi" + std::to_string(index); }

bool is_admissible(JordanTypeId src, JordanTypeId tgt) {
    if (src.rank != tgt.rank) return false;
    if (src.index == tgt.index) return true;
    const int code = src.index * 10 + tgt.index;
    if (src.rank == 2) return code == 31;
    return code == 41 || code == 52 || code == 61 || code == 64;
}

StratumId StratumId::make(JordanTypeId src, JordanTypeId tgt) {
    src = JordanTypeId::make(src.rank, src.index);
    tgt = JordanTypeId::make(tgt.rank, tgt.index);
    if (!is_admissible(src, tgt))
        throw std::invalid_argument("inadmissible stratum " + src.name() + " -> " + tgt.name() + " (empty)");
    return {src, tgt};
}

ActingGroup StratumId::group() const {
    const int code = stratum_code(*this);
    if (src.rank == 2) return (code == 33 || code == 31) ? ActingGroup::s2 : ActingGroup::trivial;
    if (code == 66 || code == 61) return ActingGroup::s3;
    if (code == 64) return ActingGroup::s2;
    return ActingGroup::trivial;
}

std::string StratumId::name() const {
    return "rank " + std::to_string(src.rank) + " " + src.name() + "->" + tgt.name();
}

std::vector<StratumId> admissible_strata(int rank) {
    const int count = rank == 2 ? 3 : 6;
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    std::vector<StratumId> out;
    for (int i = 1; i <= count; ++i)
        for (int j = 1; j <= count; ++j)
            if (is_admissible({rank, i}, {rank, j})) out.push_back({{rank, i}, {rank, j}});
    return out;
}

Poly stabilizer_epoly(JordanTypeId xi) {
    xi = JordanTypeId::make(xi.rank, xi.index);
    if (xi.rank == 2) {
        switch (xi.index) {
        case 1: return sl_epoly(2);
        case 2: return Int{2} * q;  // C x mu_2
        default: return q - P(1);   // C^*
        }
    }
    switch (xi.index) {
    case 1: return sl_epoly(3);
    case 2: return (q - P(1)) * q * q * q;
    case 3: return Int{3} * q * q;  // mu_3 x C^2
    case 4: return gl_epoly(2);
    case 5: return q * (q - P(1));
    default: return (q - P(1)) * (q - P(1));
    }
}

Poly pgl_mod_stab_epoly(JordanTypeId xi) {
    xi = JordanTypeId::make(xi.rank, xi.index);
    if (xi.rank == 2) {
        switch (xi.index) {
        case 1: return P(1);
        case 2: return q * q - P(1);  // (q^3 - q)/q
        default: return pgl2_mod_diag();
        }
    }
    const Poly q3m1 = q * q * q - P(1);
    switch (xi.index) {
    case 1: return P(1);
    case 2: return q3m1 * (q + P(1));
    case 3: return q3m1 * (q * q - P(1)) * q;
    case 4: return (q * q + q + P(1)) * q * q;
    case 5: return q3m1 * (q * q * q + q * q);
    default: return pgl3_mod_diag();
    }
}

EquivariantPieces<S3Elem> equivariant_pieces_s3(JordanTypeId xi) {
    if (xi != JordanTypeId{3, 6}) throw std::invalid_argument("S3 equivariant data exists only for rank-3 xi6");
    return {s3_from_quotients(pgl3_mod_diag(), pgl3_mod_diag_mod_tau(), pgl3_mod_diag_mod_s3()), torus3_s3()};
}

EquivariantPieces<S2Elem> equivariant_pieces_s2(JordanTypeId xi) {
    if (xi == JordanTypeId{2, 3})
        // Stab~ = C^* with alpha -> 1/alpha; the quotient is C.
        return {s2_from_quotients(pgl2_mod_diag(), pgl2_mod_diag_mod_s2()), s2_from_quotients(q - P(1), q)};
    if (xi == JordanTypeId{3, 6})
        return {s2_from_quotients(pgl3_mod_diag(), pgl3_mod_diag_mod_tau()),
                s2_from_quotients((q - P(1)) * (q - P(1)), q * q - q)};
    throw std::invalid_argument("S2 equivariant data exists only for rank-2 xi3 and rank-3 xi6");
}

S2Elem trivial_stabilizer_s2(JordanTypeId xi) {
    if (xi == JordanTypeId{2, 1} || xi == JordanTypeId{3, 4}) return trivial_action_s2(stabilizer_epoly(xi));
    throw std::invalid_argument("no trivial-action S2 stabilizer for " + xi.name());
}

S3Elem trivial_stabilizer_s3(JordanTypeId xi) {
    if (xi == JordanTypeId{3, 1}) return trivial_action_s3(stabilizer_epoly(xi));
    throw std::invalid_argument("no trivial-action S3 stabilizer for " + xi.name());
}

namespace {

Poly plain_product(const StratumId& s, TwistCount n) {
    return delta_epoly(s.src.partition(), s.tgt.partition(), n) * pgl_mod_stab_epoly(s.src) * stabilizer_epoly(s.tgt);
}

}  // namespace

S2Elem stratum_equivariant_s2(StratumId s, TwistCount n) {
    s = StratumId::make(s.src, s.tgt);
    if (s.group() != ActingGroup::s2) throw std::invalid_argument("stratum " + s.name() + " has no S2 action");
    const auto src_pieces = equivariant_pieces_s2(s.src);
    const S2Elem stab = s.src == s.tgt ? src_pieces.stabilizer : trivial_stabilizer_s2(s.tgt);
    const S2Elem out =
        delta_equivariant_s2(s.src.partition(), s.tgt.partition(), n) * src_pieces.pgl_mod_stab * stab;
    require_dim(dim_map(out), plain_product(s, n), s);
    return out;
}

S3Elem stratum_equivariant_s3(StratumId s, TwistCount n) {
    s = StratumId::make(s.src, s.tgt);
    if (s.group() != ActingGroup::s3) throw std::invalid_argument("stratum " + s.name() + " has no S3 action");
    const auto src_pieces = equivariant_pieces_s3(s.src);
    const S3Elem stab = s.src == s.tgt ? src_pieces.stabilizer : trivial_stabilizer_s3(s.tgt);
    const S3Elem out =
        delta_equivariant_s3(s.src.partition(), s.tgt.partition(), n) * src_pieces.pgl_mod_stab * stab;
    require_dim(dim_map(out), plain_product(s, n), s);
    return out;
}

Poly stratum_epoly(StratumId s, TwistCount n) {
    s = StratumId::make(s.src, s.tgt);
    switch (s.group()) {
    case ActingGroup::s2: return t_component(stratum_equivariant_s2(s, n));
    case ActingGroup::s3: return t_component(stratum_equivariant_s3(s, n));
    case ActingGroup::trivial: break;
    }
    return plain_product(s, n);
}

Poly rep_variety_epoly_strata(int rank, TwistCount n) {
    Poly total;
    for (const auto& s : admissible_strata(rank)) total += stratum_epoly(s, n);
    return total;
}

Poly rep_variety_epoly_formula(int rank, TwistCount tw) {
    const Int n = tw.value();
    if (rank == 2) return (Int{n - 1} * q * q + Int{n} * q - P(n - 5)) * (q * q * q - q);
    if (rank != 3) throw std::invalid_argument("rank must be 2 or 3");

    const Poly quadratic_part{0, 2, -3, -3, 1, 2, 2, 1};    // q^7+2q^6+2q^5+q^4-3q^3-3q^2+2q
    const Poly linear_part{0, 12, -1, -17, -3, 0, 6, 3};    // 3q^7+6q^6-3q^4-17q^3-q^2+12q
    const Poly constant_part{0, 13, 2, -6, -2, -1, 2, 1};   // q^7+2q^6-q^5-2q^4-6q^3+2q^2+13q
    // n^2/2 * A - n/2 * B has integer coefficients for every n.
    const Poly halves = (Int{n * n} * quadratic_part - Int{n} * linear_part).exact_div(2);
    const Poly bracket = Int{n / 2} * (q * q - q) * (q * q - q - P(1)) + halves + constant_part;
    return (q * q * q - P(1)) * (q * q - P(1)) * q * q * bracket;
}

}  // namespace hopf
