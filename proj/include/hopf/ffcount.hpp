#pragma once

// Point counts of R(H_n, SL_r) over prime fields:
//
//     #{(A, B) in SL_r(F_q)^2 : A^n B = B A^n} = sum_A #C_{SL_r}(A^n)
//
// where C_{SL_r}(M) is the set of determinant-one matrices commuting with M.
// The centralizer size is a class function, memoised on a conjugacy key.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hopf/poly.hpp"
#include "hopf/strata.hpp"

namespace hopf::ff {

/// Arithmetic in F_q for an odd prime q.
class PrimeField {
public:
    /// Throws std::invalid_argument unless q is an odd prime below 2^16.
    explicit PrimeField(std::uint32_t q);

    std::uint32_t order() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a + b >= q_ ? a + b - q_ : a + b; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a * b % q_; }
    /// Inverse of a nonzero element.
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t from_int(std::int64_t v) const;

private:
    std::uint32_t q_;
    std::vector<std::uint32_t> inverse_;
};

/// Row-major r x r matrix over F_q, r in {2, 3}.
struct FqMatrix {
    int rank = 2;
    std::array<std::uint32_t, 9> e{};

    static FqMatrix identity(int rank);
    static FqMatrix from_rows(std::initializer_list<std::initializer_list<std::uint32_t>> rows);

    std::uint32_t at(int i, int j) const { return e[static_cast<std::size_t>(i * rank + j)]; }
    std::uint32_t& at(int i, int j) { return e[static_cast<std::size_t>(i * rank + j)]; }
    bool is_scalar() const;

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, const PrimeField& f);
/// A^n by binary exponentiation, n >= 0.
FqMatrix mat_pow(const FqMatrix& a, std::int64_t n, const PrimeField& f);
std::uint32_t determinant(const FqMatrix& m, const PrimeField& f);

/// Basis of {X : XM = MX} from the kernel of X -> XM - MX.
std::vector<FqMatrix> commutant_basis(const FqMatrix& m, const PrimeField& f);
int commutant_dimension(const FqMatrix& m, const PrimeField& f);

/// Characteristic and minimal polynomial of a matrix. Coefficients are
/// ascending and exclude the leading 1. For r <= 3 the pair determines the
/// invariant factors (d_r = minpoly, d_{r-1} = charpoly / minpoly, the rest
/// trivial or equal to a linear minpoly), hence the GL_r(F_q) conjugacy class.
struct ConjugacyKey {
    std::uint8_t rank = 0;
    std::uint8_t min_degree = 0;
    std::array<std::uint32_t, 3> charpoly{};
    std::array<std::uint32_t, 3> minpoly{};

    friend bool operator==(const ConjugacyKey&, const ConjugacyKey&) = default;
};

struct ConjugacyKeyHash {
    std::size_t operator()(const ConjugacyKey& k) const noexcept;
};

ConjugacyKey conjugacy_key(const FqMatrix& m, const PrimeField& f);

/// |SL_r(F_q)| = q^{r(r-1)/2} prod_{i=2..r} (q^i - 1).
Int sl_order(int rank, std::uint32_t q);

/// #{B in SL_r(F_q) : BM = MB}, memoised per conjugacy key. One instance per
/// thread; not safe for concurrent use.
class CommutantCounter {
public:
    CommutantCounter(int rank, const PrimeField& field);

    Int count(const FqMatrix& m);
    Int count_uncached(const FqMatrix& m) const;
    std::size_t cache_size() const { return cache_.size(); }

private:
    int rank_;
    const PrimeField* field_;
    Int sl_order_;
    std::unordered_map<ConjugacyKey, Int, ConjugacyKeyHash> cache_;
};

Int count_commuting_det1(const FqMatrix& m, CommutantCounter& memo);

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ceiling on q^{r^2}; HOPF_MAX_ENUM overrides the built-in 1e10.
double default_enumeration_ceiling();

struct CountOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Refuse when q^{r^2} exceeds this.
    double max_enumeration = default_enumeration_ceiling();
};

/// Whether the count is expected to equal the E-polynomial at q: 2n | q-1
/// for rank 2, 6n | q-1 for rank 3.
bool oracle_admissible(int rank, std::int64_t n, std::int64_t q);

/// Calls visit(A) for every A in SL_r(F_q) whose first row has index in
/// [first_row_begin, first_row_end) (rows indexed base q, first entry most
/// significant). The last row is solved from the determinant condition
/// instead of enumerated.
void for_each_sl(int rank, const PrimeField& f, std::uint64_t first_row_begin, std::uint64_t first_row_end,
                 const std::function<void(const FqMatrix&)>& visit);

/// #{(A, B) in SL_r(F_q)^2 : A^n B = B A^n}. Throws std::invalid_argument for
/// a bad rank or q, ResourceLimitError when q^{r^2} exceeds the ceiling.
Int count_rep_variety_points(int rank, TwistCount n, std::uint32_t q, const CountOptions& options = {});

/// |SL_r(F_q)| by the same enumerator.
Int count_sl_points(int rank, std::uint32_t q, const CountOptions& options = {});

}  // namespace hopf::ff
