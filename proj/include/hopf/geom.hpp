#pragma once

// Jordan types, their stabilizers, and assembly of the representation
// variety R(H_n, SL_r) = {(A, B) : A^n B = B A^n} from strata R_{xi' -> xi}.
//
// A stratum is the quotient of
//     Delta_{sigma' -> sigma} x PGL_r / Stab(xi') x Stab~(xi)
// by the group of eigenvalue permutations preserving the refinement. When
// that group is trivial the E-polynomial is a plain product; otherwise it is
// the T-component of the equivariant product.
//
// Rank 2 types:  xi1 = +-Id, xi2 = +-(Jordan block), xi3 = distinct eigenvalues.
// Rank 3 types:  xi1 scalar, xi2 = J2(l) + l, xi3 = J3(l)        (over sigma1)
//                xi4 = diag(l, l, m), xi5 = J2(l) + m            (over sigma2)
//                xi6 = diag(l1, l2, l3) distinct                 (over sigma3)

#include <string>
#include <vector>

#include "hopf/poly.hpp"
#include "hopf/repring.hpp"
#include "hopf/strata.hpp"

namespace hopf {

struct JordanTypeId {
    int rank;
    int index;

    static JordanTypeId make(int rank, int index);
    PartitionId partition() const;
    std::string name() const;

    friend bool operator==(const JordanTypeId&, const JordanTypeId&) = default;
};

enum class ActingGroup { trivial, s2, s3 };

/// An admissible pair src -> tgt of Jordan types (src refines tgt). Pairs
/// that do not refine give empty strata and are rejected by make().
struct StratumId {
    JordanTypeId src;
    JordanTypeId tgt;

    static StratumId make(JordanTypeId src, JordanTypeId tgt);
    ActingGroup group() const;
    std::string name() const;

    friend bool operator==(const StratumId&, const StratumId&) = default;
};

bool is_admissible(JordanTypeId src, JordanTypeId tgt);
std::vector<StratumId> admissible_strata(int rank);

/// e(Stab~(xi)): stabilizer in SL_r of a matrix of type xi.
Poly stabilizer_epoly(JordanTypeId xi);
/// e(PGL_r / Stab(xi)): the conjugacy orbit of a matrix of type xi.
Poly pgl_mod_stab_epoly(JordanTypeId xi);

template <class Elem>
struct EquivariantPieces {
    Elem pgl_mod_stab;
    Elem stabilizer;
};

/// Equivariant data of xi (pgl_mod_stab for xi in the source role,
/// stabilizer for xi in the target role):
///   rank 3 xi6 under S3.
EquivariantPieces<S3Elem> equivariant_pieces_s3(JordanTypeId xi);
///   rank 2 xi3 under S2; rank 3 xi6 under <tau>.
EquivariantPieces<S2Elem> equivariant_pieces_s2(JordanTypeId xi);

/// Stabilizers that carry a trivial action: xi1 is SL_r itself, rank-3 xi4
/// is a copy of GL_2; both connected and acted on by conjugation.
S2Elem trivial_stabilizer_s2(JordanTypeId xi);
S3Elem trivial_stabilizer_s3(JordanTypeId xi);

/// Equivariant E-polynomial of the covering space of a stratum before the
/// quotient (only for strata whose group is s2 / s3).
S2Elem stratum_equivariant_s2(StratumId s, TwistCount n);
S3Elem stratum_equivariant_s3(StratumId s, TwistCount n);

Poly stratum_epoly(StratumId s, TwistCount n);

/// Sum of stratum_epoly over all admissible strata.
Poly rep_variety_epoly_strata(int rank, TwistCount n);

/// Closed formulas for e(R(H_n, SL_2)) and e(R(H_n, SL_3)).
Poly rep_variety_epoly_formula(int rank, TwistCount n);

}  // namespace hopf
