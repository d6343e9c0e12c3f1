#include "hopf/ffcount.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "hopf/primes.hpp"

namespace hopf::ff {

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q < 3 || q >= (1u << 16) || !is_prime(q))
        throw std::invalid_argument("field order must be an odd prime below 65536, got " + std::to_string(q));
    inverse_.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a) inverse_[a] = pow(a, q - 2);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (; e > 0; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
    const std::int64_t m = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(m < 0 ? m + q_ : m);
}

FqMatrix FqMatrix::identity(int rank) {
    FqMatrix m;
    m.rank = rank;
    for (int i = 0; i < rank; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::from_rows(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    FqMatrix m;
    m.rank = static_cast<int>(rows.size());
    if (m.rank != 2 && m.rank != 3) throw std::invalid_argument("matrix rank must be 2 or 3");
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.rank) throw std::invalid_argument("matrix must be square");
        int j = 0;
        for (auto v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool FqMatrix::is_scalar() const {
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (i != j ? at(i, j) != 0 : at(i, i) != at(0, 0)) return false;
    return true;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, const PrimeField& f) {
    FqMatrix c;
    c.rank = a.rank;
    const int r = a.rank;
    const std::uint32_t q = f.order();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < r; ++k) acc += std::uint64_t{a.at(i, k)} * b.at(k, j);
            c.at(i, j) = static_cast<std::uint32_t>(acc % q);
        }
    return c;
}

FqMatrix mat_pow(const FqMatrix& a, std::int64_t n, const PrimeField& f) {
    if (n < 0) throw std::invalid_argument("mat_pow: negative exponent");
    FqMatrix result = FqMatrix::identity(a.rank);
    FqMatrix base = a;
    for (; n > 0; n >>= 1) {
        if (n & 1) result = mat_mul(result, base, f);
        if (n > 1) base = mat_mul(base, base, f);
    }
    return result;
}

std::uint32_t determinant(const FqMatrix& m, const PrimeField& f) {
    const std::uint64_t q = f.order();
    if (m.rank == 2) return f.sub(f.mul(m.at(0, 0), m.at(1, 1)), f.mul(m.at(0, 1), m.at(1, 0)));
    const std::uint64_t t0 = m.at(0, 0) * ((std::uint64_t{m.at(1, 1)} * m.at(2, 2) + (q - m.at(1, 2)) * m.at(2, 1)) % q);
    const std::uint64_t t1 = m.at(0, 1) * ((std::uint64_t{m.at(1, 2)} * m.at(2, 0) + (q - m.at(1, 0)) * m.at(2, 2)) % q);
    const std::uint64_t t2 = m.at(0, 2) * ((std::uint64_t{m.at(1, 0)} * m.at(2, 1) + (q - m.at(1, 1)) * m.at(2, 0)) % q);
    return static_cast<std::uint32_t>((t0 + t1 + t2) % q);
}

std::vector<FqMatrix> commutant_basis(const FqMatrix& m, const PrimeField& f) {
    const int r = m.rank;
    const int dim = r * r;
    // Row (i,j) of the operator X -> XM - MX acting on vec(X), column (a,b):
    // [a == i] M[b][j] - [b == j] M[i][a].
    std::vector<std::vector<std::uint32_t>> op(static_cast<std::size_t>(dim), std::vector<std::uint32_t>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    std::uint32_t v = 0;
                    if (a == i) v = f.add(v, m.at(b, j));
                    if (b == j) v = f.sub(v, m.at(i, a));
                    op[static_cast<std::size_t>(i * r + j)][static_cast<std::size_t>(a * r + b)] = v;
                }

    // Reduced row echelon form.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < dim && row < dim; ++col) {
        int p = row;
        while (p < dim && op[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] == 0) ++p;
        if (p == dim) continue;
        std::swap(op[static_cast<std::size_t>(p)], op[static_cast<std::size_t>(row)]);
        auto& prow = op[static_cast<std::size_t>(row)];
        const std::uint32_t scale = f.inv(prow[static_cast<std::size_t>(col)]);
        for (auto& v : prow) v = f.mul(v, scale);
        for (int k = 0; k < dim; ++k) {
            if (k == row) continue;
            auto& krow = op[static_cast<std::size_t>(k)];
            const std::uint32_t factor = krow[static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = 0; c < dim; ++c)
                krow[static_cast<std::size_t>(c)] = f.sub(krow[static_cast<std::size_t>(c)], f.mul(factor, prow[static_cast<std::size_t>(c)]));
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<FqMatrix> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        FqMatrix x;
        x.rank = r;
        x.e[static_cast<std::size_t>(free)] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            x.e[static_cast<std::size_t>(pivot_col[k])] = f.neg(op[k][static_cast<std::size_t>(free)]);
        basis.push_back(x);
    }
    return basis;
}

int commutant_dimension(const FqMatrix& m, const PrimeField& f) {
    return static_cast<int>(commutant_basis(m, f).size());
}

namespace {

// Monic polynomial of degree <= 3 over F_q; c[i] multiplies x^i, c[deg] = 1.
struct SmallPoly {
    int deg = 0;
    std::array<std::uint32_t, 4> c{1, 0, 0, 0};
};

SmallPoly char_poly(const FqMatrix& m, const PrimeField& f) {
    SmallPoly p;
    p.deg = m.rank;
    if (m.rank == 2) {
        p.c = {determinant(m, f), f.neg(f.add(m.at(0, 0), m.at(1, 1))), 1, 0};
        return p;
    }
    const std::uint32_t trace = f.add(f.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
    const auto minor = [&](int a, int b) { return f.sub(f.mul(m.at(a, a), m.at(b, b)), f.mul(m.at(a, b), m.at(b, a))); };
    const std::uint32_t minors = f.add(f.add(minor(0, 1), minor(0, 2)), minor(1, 2));
    p.c = {f.neg(determinant(m, f)), minors, f.neg(trace), 1};
    return p;
}

bool squarefree(const SmallPoly& p, const PrimeField& f) {
    if (p.deg == 2) {
        // x^2 + b x + c: b^2 - 4c
        return f.sub(f.mul(p.c[1], p.c[1]), f.mul(4 % f.order(), p.c[0])) != 0;
    }
    // x^3 + b x^2 + c x + d: b^2c^2 - 4c^3 - 4b^3d - 27d^2 + 18bcd, valid in
    // every characteristic.
    const std::uint32_t b = p.c[2], c = p.c[1], d = p.c[0];
    const auto k = [&](std::int64_t v) { return f.from_int(v); };
    std::uint32_t disc = f.mul(f.mul(b, b), f.mul(c, c));
    disc = f.sub(disc, f.mul(k(4), f.mul(c, f.mul(c, c))));
    disc = f.sub(disc, f.mul(k(4), f.mul(f.mul(b, f.mul(b, b)), d)));
    disc = f.sub(disc, f.mul(k(27), f.mul(d, d)));
    disc = f.add(disc, f.mul(k(18), f.mul(f.mul(b, c), d)));
    return disc != 0;
}

std::uint32_t eval(const SmallPoly& p, std::uint32_t x, const PrimeField& f) {
    std::uint32_t acc = 0;
    for (int i = p.deg; i >= 0; --i) acc = f.add(f.mul(acc, x), p.c[static_cast<std::size_t>(i)]);
    return acc;
}

// Divides by (x - root), assuming root is a root.
SmallPoly deflate(const SmallPoly& p, std::uint32_t root, const PrimeField& f) {
    SmallPoly out;
    out.deg = p.deg - 1;
    std::uint32_t carry = 0;
    for (int i = p.deg; i >= 1; --i) {
        carry = f.add(f.mul(carry, root), p.c[static_cast<std::size_t>(i)]);
        out.c[static_cast<std::size_t>(i - 1)] = carry;
    }
    return out;
}

SmallPoly from_roots(const std::vector<std::uint32_t>& roots, const PrimeField& f) {
    SmallPoly p;  // 1
    for (std::uint32_t r : roots) {
        SmallPoly next;
        next.deg = p.deg + 1;
        next.c = {};
        for (int i = 0; i <= p.deg; ++i) {
            next.c[static_cast<std::size_t>(i + 1)] = f.add(next.c[static_cast<std::size_t>(i + 1)], p.c[static_cast<std::size_t>(i)]);
            next.c[static_cast<std::size_t>(i)] = f.sub(next.c[static_cast<std::size_t>(i)], f.mul(r, p.c[static_cast<std::size_t>(i)]));
        }
        p = next;
    }
    return p;
}

bool annihilates(const SmallPoly& p, const FqMatrix& m, const PrimeField& f) {
    // Horner on matrices: acc = acc * M + c_i I.
    FqMatrix acc;
    acc.rank = m.rank;
    for (int i = p.deg; i >= 0; --i) {
        acc = mat_mul(acc, m, f);
        for (int j = 0; j < m.rank; ++j) acc.at(j, j) = f.add(acc.at(j, j), p.c[static_cast<std::size_t>(i)]);
    }
    return acc == FqMatrix{m.rank, {}};
}

SmallPoly min_poly(const FqMatrix& m, const SmallPoly& charpoly, const PrimeField& f) {
    if (squarefree(charpoly, f)) return charpoly;
    // A repeated factor of a polynomial of degree <= 3 is linear, and so is
    // the cofactor: the characteristic polynomial splits.
    std::vector<std::uint32_t> roots;
    SmallPoly rest = charpoly;
    for (std::uint32_t x = 0; x < f.order() && rest.deg > 0; ++x)
        while (rest.deg > 0 && eval(rest, x, f) == 0) {
            roots.push_back(x);
            rest = deflate(rest, x, f);
        }
    if (rest.deg != 0) throw std::logic_error("non-squarefree characteristic polynomial failed to split");

    // Monic divisors in increasing degree: sub-multisets of the roots.
    const int n = static_cast<int>(roots.size());
    for (int degree = 1; degree < n; ++degree) {
        std::vector<SmallPoly> tried;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != degree) continue;
            std::vector<std::uint32_t> pick;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) pick.push_back(roots[static_cast<std::size_t>(i)]);
            const SmallPoly candidate = from_roots(pick, f);
            if (std::any_of(tried.begin(), tried.end(), [&](const SmallPoly& t) { return t.c == candidate.c; })) continue;
            tried.push_back(candidate);
            if (annihilates(candidate, m, f)) return candidate;
        }
    }
    return charpoly;
}

}  // namespace

std::size_t ConjugacyKeyHash::operator()(const ConjugacyKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t{k.rank} << 8 | k.min_degree);
    for (auto v : k.charpoly) h = (h ^ v) * 0x100000001b3ull;
    for (auto v : k.minpoly) h = (h ^ v) * 0x100000001b3ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
}

ConjugacyKey conjugacy_key(const FqMatrix& m, const PrimeField& f) {
    const SmallPoly cp = char_poly(m, f);
    const SmallPoly mp = min_poly(m, cp, f);
    ConjugacyKey key;
    key.rank = static_cast<std::uint8_t>(m.rank);
    key.min_degree = static_cast<std::uint8_t>(mp.deg);
    for (int i = 0; i < cp.deg; ++i) key.charpoly[static_cast<std::size_t>(i)] = cp.c[static_cast<std::size_t>(i)];
    for (int i = 0; i < mp.deg; ++i) key.minpoly[static_cast<std::size_t>(i)] = mp.c[static_cast<std::size_t>(i)];
    return key;
}

Int sl_order(int rank, std::uint32_t q) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    const Int Q = q;
    if (rank == 2) return Q * (Q * Q - 1);
    return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q - 1);
}

CommutantCounter::CommutantCounter(int rank, const PrimeField& field)
    : rank_(rank), field_(&field), sl_order_(sl_order(rank, field.order())) {}

Int CommutantCounter::count(const FqMatrix& m) {
    if (m.is_scalar()) return sl_order_;
    const ConjugacyKey key = conjugacy_key(m, *field_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const Int c = count_uncached(m);
    cache_.emplace(key, c);
    return c;
}

Int CommutantCounter::count_uncached(const FqMatrix& m) const {
    if (m.rank != rank_) throw std::invalid_argument("matrix rank does not match counter");
    if (m.is_scalar()) return sl_order_;
    const PrimeField& f = *field_;
    const std::vector<FqMatrix> basis = commutant_basis(m, f);
    const std::size_t d = basis.size();
    const std::size_t cells = static_cast<std::size_t>(rank_ * rank_);
    std::vector<std::uint32_t> coeff(d, 0);
    Int count = 0;
    while (true) {
        FqMatrix x;
        x.rank = rank_;
        for (std::size_t k = 0; k < d; ++k) {
            if (coeff[k] == 0) continue;
            for (std::size_t c = 0; c < cells; ++c) x.e[c] = f.add(x.e[c], f.mul(coeff[k], basis[k].e[c]));
        }
        if (determinant(x, f) == 1) ++count;
        std::size_t k = 0;
        while (k < d && ++coeff[k] == f.order()) coeff[k++] = 0;
        if (k == d) break;
    }
    return count;
}

Int count_commuting_det1(const FqMatrix& m, CommutantCounter& memo) { return memo.count(m); }

double default_enumeration_ceiling() {
    if (const char* env = std::getenv("HOPF_MAX_ENUM")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e10;
}

bool oracle_admissible(int rank, std::int64_t n, std::int64_t q) {
    if (q < 3 || n < 1 || !is_prime(static_cast<std::uint64_t>(q))) return false;
    const std::int64_t step = rank == 2 ? 2 * n : 6 * n;
    return (q - 1) % step == 0;
}

namespace {

// Enumerates SL_r(F_q) by first row index in [begin, end). The last row x
// satisfies x . (cofactor vector) = 1; one coordinate with a nonzero
// cofactor is solved for, the others are free.
template <class Visit>
void enumerate_sl(int rank, const PrimeField& f, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    const std::uint32_t q = f.order();
    FqMatrix a;
    a.rank = rank;
    if (rank == 2) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            a.at(0, 0) = static_cast<std::uint32_t>(idx / q);
            a.at(0, 1) = static_cast<std::uint32_t>(idx % q);
            // det = a00 * x1 - a01 * x0
            const std::array<std::uint32_t, 2> cof{f.neg(a.at(0, 1)), a.at(0, 0)};
            if (cof[0] == 0 && cof[1] == 0) continue;
            const int solve = cof[1] != 0 ? 1 : 0;
            const int other = 1 - solve;
            const std::uint32_t inv = f.inv(cof[static_cast<std::size_t>(solve)]);
            for (std::uint32_t x = 0; x < q; ++x) {
                a.at(1, other) = x;
                a.at(1, solve) = f.mul(f.sub(1, f.mul(cof[static_cast<std::size_t>(other)], x)), inv);
                visit(a);
            }
        }
        return;
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        a.at(0, 0) = static_cast<std::uint32_t>(idx / (q * q));
        a.at(0, 1) = static_cast<std::uint32_t>(idx / q % q);
        a.at(0, 2) = static_cast<std::uint32_t>(idx % q);
        for (std::uint32_t r1 = 0; r1 < q * q * q; ++r1) {
            a.at(1, 0) = r1 / (q * q);
            a.at(1, 1) = r1 / q % q;
            a.at(1, 2) = r1 % q;
            const std::array<std::uint32_t, 3> cof{
                f.sub(f.mul(a.at(0, 1), a.at(1, 2)), f.mul(a.at(0, 2), a.at(1, 1))),
                f.sub(f.mul(a.at(0, 2), a.at(1, 0)), f.mul(a.at(0, 0), a.at(1, 2))),
                f.sub(f.mul(a.at(0, 0), a.at(1, 1)), f.mul(a.at(0, 1), a.at(1, 0))),
            };
            if (cof[0] == 0 && cof[1] == 0 && cof[2] == 0) continue;
            const int solve = cof[2] != 0 ? 2 : (cof[1] != 0 ? 1 : 0);
            const int o1 = solve == 0 ? 1 : 0;
            const int o2 = solve == 2 ? 1 : 2;
            const std::uint32_t inv = f.inv(cof[static_cast<std::size_t>(solve)]);
            for (std::uint32_t x = 0; x < q; ++x) {
                a.at(2, o1) = x;
                const std::uint32_t partial = f.sub(1, f.mul(cof[static_cast<std::size_t>(o1)], x));
                for (std::uint32_t y = 0; y < q; ++y) {
                    a.at(2, o2) = y;
                    a.at(2, solve) = f.mul(f.sub(partial, f.mul(cof[static_cast<std::size_t>(o2)], y)), inv);
                    visit(a);
                }
            }
        }
    }
}

void check_request(int rank, std::uint32_t q, const CountOptions& options) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    const double work = std::pow(static_cast<double>(q), rank * rank);
    if (work <= options.max_enumeration) return;
    char msg[160];
    std::snprintf(msg, sizeof msg, "q^%d = %.4g exceeds the enumeration ceiling %.4g (raise with --max-enum or HOPF_MAX_ENUM)",
                  rank * rank, work, options.max_enumeration);
    throw ResourceLimitError(msg);
}

// Splits the first-row range across workers by dynamic chunks; every worker
// accumulates into its own total, summed after join.
template <class MakeWorker>
Int parallel_sum(int rank, std::uint32_t q, unsigned threads, MakeWorker&& make_worker) {
    const std::uint64_t rows = rank == 2 ? std::uint64_t{q} * q : std::uint64_t{q} * q * q;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, rows));
    const std::uint64_t chunk = rank == 2 ? q : 1;

    std::atomic<std::uint64_t> next{0};
    std::vector<Int> totals(threads, 0);
    const auto run = [&](unsigned w) {
        auto worker = make_worker();
        Int total = 0;
        for (std::uint64_t b; (b = next.fetch_add(chunk)) < rows;) total += worker(b, std::min(rows, b + chunk));
        totals[w] = total;
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    Int sum = 0;
    for (Int t : totals) sum = checked_add(sum, t);
    return sum;
}

}  // namespace

void for_each_sl(int rank, const PrimeField& f, std::uint64_t first_row_begin, std::uint64_t first_row_end,
                 const std::function<void(const FqMatrix&)>& visit) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    enumerate_sl(rank, f, first_row_begin, first_row_end, visit);
}

Int count_rep_variety_points(int rank, TwistCount n, std::uint32_t q, const CountOptions& options) {
    check_request(rank, q, options);
    const PrimeField field(q);
    const std::int64_t power = n.value();
    return parallel_sum(rank, q, options.threads, [&] {
        return [&field, rank, power, counter = CommutantCounter(rank, field)](std::uint64_t b, std::uint64_t e) mutable {
            Int total = 0;
            enumerate_sl(rank, field, b, e, [&](const FqMatrix& a) {
                total += counter.count(power == 1 ? a : mat_pow(a, power, field));
            });
            return total;
        };
    });
}

Int count_sl_points(int rank, std::uint32_t q, const CountOptions& options) {
    check_request(rank, q, options);
    const PrimeField field(q);
    return parallel_sum(rank, q, options.threads, [&] {
        return [&field, rank](std::uint64_t b, std::uint64_t e) {
            Int total = 0;
            enumerate_sl(rank, field, b, e, [&](const FqMatrix&) { ++total; });
            return total;
        };
    });
}

}  // namespace hopf::ff
