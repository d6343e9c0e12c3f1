#pragma once

// E-polynomials of the character varieties M(H_n, SL_r) = R(H_n, SL_r) // SL_r
// for r = 2, 3, split into reducible and irreducible loci.

#include <string>
#include <vector>

#include "hopf/poly.hpp"
#include "hopf/strata.hpp"

namespace hopf {

enum class CharPieceKind {
    red_111,      // sums of three characters (rank 3)
    red_21,       // irreducible GL_2 plus a character (rank 3)
    red_total,
    irr_xi4_xi1,  // irreducibles with A of type xi4, A^n scalar (rank 3)
    irr_xi6_xi1,  // irreducibles with A of type xi6, A^n scalar (rank 3)
    irr_total,
    total,
};

struct CharPiece {
    int rank;
    CharPieceKind kind;

    /// Rank 2 only has red_total, irr_total and total.
    static CharPiece make(int rank, CharPieceKind kind);
    std::string name() const;
};

std::vector<CharPieceKind> char_piece_kinds(int rank);
CharPieceKind parse_char_piece_kind(const std::string& name);

Poly char_piece_epoly(CharPiece p, TwistCount n);

/// Closed formulas for e(M(H_n, SL_2)) and e(M(H_n, SL_3)).
Poly char_variety_epoly_formula(int rank, TwistCount n);

}  // namespace hopf
