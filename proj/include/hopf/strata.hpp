#pragma once

// Eigenvalue configuration spaces of SL_2 and SL_3 and how they degenerate
// under the n-th power map.
//
// Delta^r_sigma is the set of eigenvalue tuples whose coincidence pattern is
// exactly sigma. For a refinement src -> tgt, Delta^r_{src->tgt} holds the
// tuples of pattern src whose n-th powers have pattern tgt. Only one
// representative of each partition class is modelled; the rank-3 split
// Delta_{s3} = Delta_{s3->s3} + 3 Delta_{s3->s2} + Delta_{s3->s1} applies the
// factor 3 for the three labellings of s2 explicitly.

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/poly.hpp"
#include "hopf/repring.hpp"

namespace hopf {

/// Number of twists of the Hopf link; n >= 1.
class TwistCount {
public:
    explicit TwistCount(std::int64_t n);
    std::int64_t value() const { return n_; }

private:
    std::int64_t n_;
};

/// Eigenvalue partition representative. Index 1 is "all eigenvalues equal",
/// the last index is "all distinct":
///   rank 2: s1 = {{1,2}}, s2 = {{1},{2}}
///   rank 3: s1 = {{1,2,3}}, s2 = {{1,2},{3}}, s3 = {{1},{2},{3}}
struct PartitionId {
    int rank;
    int index;

    /// Throws std::invalid_argument for an index outside the rank's range.
    static PartitionId make(int rank, int index);

    /// Block label of each of the r eigenvalue slots, e.g. {0,0,1} for s2.
    std::vector<int> labels() const;
    /// Size of each block in label order, e.g. {2,1} for s2.
    std::vector<int> block_sizes() const;
    std::string name() const;

    friend bool operator==(const PartitionId&, const PartitionId&) = default;
};

/// True iff src is a refinement of tgt (identity included). Throws
/// std::invalid_argument on rank mismatch.
bool refines(PartitionId src, PartitionId tgt);

/// All refinement pairs (src, tgt) of the given rank.
std::vector<std::pair<PartitionId, PartitionId>> refinement_pairs(int rank);

/// e(Delta^r_sigma), independent of n.
Poly config_epoly(PartitionId sigma);

/// e_{S2}(Delta^2_{s2}) for the swap of the two eigenvalues.
S2Elem config_equivariant_s2(PartitionId sigma);
/// e_{S3}(Delta^3_{s3}) for the permutation action on the three eigenvalues.
S3Elem config_equivariant_s3(PartitionId sigma);

/// e(Delta^r_{src->tgt}) at the given n. Throws std::invalid_argument when
/// src does not refine tgt.
Poly delta_epoly(PartitionId src, PartitionId tgt, TwistCount n);

/// S2-equivariant E-polynomial of the pairs that carry an S2 action:
/// rank 2 (s2 -> s1), (s2 -> s2); rank 3 (s3 -> s2) under the transposition
/// that preserves the refinement.
S2Elem delta_equivariant_s2(PartitionId src, PartitionId tgt, TwistCount n);

/// S3-equivariant E-polynomial of rank 3 (s3 -> s1) and (s3 -> s3).
S3Elem delta_equivariant_s3(PartitionId src, PartitionId tgt, TwistCount n);

/// True iff rank * n divides q - 1 for a prime q, which puts every root of
/// unity used by the configuration spaces inside F_q.
bool delta_count_admissible(int rank, std::int64_t n, std::int64_t q);

/// Number of F_q-points of Delta^r_{src->tgt}: tuples in (F_q^*)^s with
/// prod lambda_i^{|block_i|} = 1, pairwise distinct, whose n-th powers
/// coincide exactly according to tgt. Throws std::invalid_argument unless q
/// is prime with rank * n | q - 1, or if src does not refine tgt.
std::int64_t count_delta_points(PartitionId src, PartitionId tgt, TwistCount n, std::int64_t q);

}  // namespace hopf
