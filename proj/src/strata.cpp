#include "hopf/strata.hpp"

#include <map>
#include <stdexcept>

#include "hopf/primes.hpp"

namespace hopf {

namespace {

Poly P(Int c) { return Poly::constant(c); }
const Poly q = Poly::q();

std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// Rejects an equivariant element whose dimension disagrees with the plain
// E-polynomial of the same space.
template <class Elem>
Elem checked(Elem e, const Poly& plain, const char* what) {
    if (dim_map(e) != plain) throw std::logic_error(std::string("dimension mismatch in ") + what);
    return e;
}

}  // namespace

TwistCount::TwistCount(std::int64_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("twist count must be >= 1, got " + std::to_string(n));
}

PartitionId PartitionId::make(int rank, int index) {
    if (rank != 2 && rank != 3) throw std::invalid_argument("rank must be 2 or 3");
    if (index < 1 || index > rank) throw std::invalid_argument("partition index out of range for rank");
    return {rank, index};
}

std::vector<int> PartitionId::labels() const {
    if (rank == 2) return index == 1 ? std::vector<int>{0, 0} : std::vector<int>{0, 1};
    switch (index) {
    case 1: return {0, 0, 0};
    case 2: return {0, 0, 1};
    default: return {0, 1, 2};
    }
}

std::vector<int> PartitionId::block_sizes() const {
    std::vector<int> sizes;
    for (int l : labels()) {
        if (l >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(l) + 1, 0);
        ++sizes[static_cast<std::size_t>(l)];
    }
    return sizes;
}

std::string PartitionId::name() const { return "sigma" + std::to_string(index) + "(rank " + std::to_string(rank) + ")"; }

bool refines(PartitionId src, PartitionId tgt) {
    if (src.rank != tgt.rank) throw std::invalid_argument("refines: rank mismatch");
    // Representatives are nested: every s_i refines s_j for j <= i.
    return src.index >= tgt.index;
}

std::vector<std::pair<PartitionId, PartitionId>> refinement_pairs(int rank) {
    std::vector<std::pair<PartitionId, PartitionId>> out;
    for (int s = 1; s <= rank; ++s)
        for (int t = 1; t <= s; ++t) out.emplace_back(PartitionId::make(rank, s), PartitionId::make(rank, t));
    return out;
}

Poly config_epoly(PartitionId sigma) {
    if (sigma.rank == 2) return sigma.index == 1 ? P(2) : q - P(3);
    switch (sigma.index) {
    case 1: return P(3);                          // mu_3
    case 2: return q - P(4);                      // C^* - mu_3
    default: return q * q - Int{5} * q + P(10);   // (q-1)^2 - 3(q-1) + 3*3 - 3
    }
}

S2Elem config_equivariant_s2(PartitionId sigma) {
    if (sigma != PartitionId{2, 2}) throw std::invalid_argument("S2 action only on rank-2 sigma2");
    // (C^* - mu_2)/S2 = C - {+-2} via lambda + 1/lambda.
    return checked(s2_from_quotients(config_epoly(sigma), q - P(2)), config_epoly(sigma), "Delta^2_s2");
}

S3Elem config_equivariant_s3(PartitionId sigma) {
    if (sigma != PartitionId{3, 3}) throw std::invalid_argument("S3 action only on rank-3 sigma3");
    const Poly mod_s3 = q * q - q + P(1);
    const Poly mod_tau = q * q - Int{3} * q + P(5);
    return checked(s3_from_quotients(config_epoly(sigma), mod_tau, mod_s3), config_epoly(sigma), "Delta^3_s3");
}

Poly delta_epoly(PartitionId src, PartitionId tgt, TwistCount tw) {
    if (!refines(src, tgt)) throw std::invalid_argument("delta_epoly: " + src.name() + " does not refine " + tgt.name());
    const Int n = tw.value();
    if (src.rank == 2) {
        if (src.index == 1) return P(2);
        if (tgt.index == 1) return P(2 * n - 2);  // e(mu_2n) - e(mu_2)
        return q - P(2 * n + 1);
    }
    switch (src.index * 10 + tgt.index) {
    case 11: return P(3);
    case 21: return P(3 * n - 3);                       // e(mu_3n) - e(mu_3)
    case 31: return P(3 * n * n - 9 * n + 6);
    case 22: return q - P(3 * n + 1);
    case 32: return Int{n - 1} * (q - P(3 * n + 1));
    default: return q * q - Int{3 * n + 2} * q + P(6 * n * n + 3 * n + 1);
    }
}

S2Elem delta_equivariant_s2(PartitionId src, PartitionId tgt, TwistCount tw) {
    const Int n = tw.value();
    const Poly plain = delta_epoly(src, tgt, tw);
    if (src == PartitionId{2, 2} && tgt == PartitionId{2, 1})
        // mu_2n / S2 has n + 1 points; remove the two fixed points of mu_2.
        return checked(s2_from_quotients(plain, P(n - 1)), plain, "Delta^2_{s2->s1}");
    if (src == PartitionId{2, 2} && tgt == PartitionId{2, 2})
        return checked(s2_from_quotients(plain, q - P(n + 1)), plain, "Delta^2_{s2->s2}");
    if (src == PartitionId{3, 3} && tgt == PartitionId{3, 2}) {
        // (C^* x mu_n^*)/<tau> contributes floor(n/2) punctured lines; the
        // 3n(n-1) removed points form free orbits.
        const Poly mod_tau = Int{floor_half(n)} * (q - P(1)) - P(3 * n * (n - 1) / 2);
        return checked(s2_from_quotients(plain, mod_tau), plain, "Delta^3_{s3->s2}");
    }
    throw std::invalid_argument("delta_equivariant_s2: no S2 action on " + src.name() + " -> " + tgt.name());
}

S3Elem delta_equivariant_s3(PartitionId src, PartitionId tgt, TwistCount tw) {
    if (src != PartitionId{3, 3}) throw std::invalid_argument("delta_equivariant_s3: source must be rank-3 sigma3");
    const Int n = tw.value();
    const Poly plain = delta_epoly(src, tgt, tw);
    if (tgt.index == 1) {
        // Finitely many points, S3 acts freely: (n-1)(n-2)/2 orbits.
        const Int orbits = (n - 1) * (n - 2) / 2;
        return checked(s3_from_quotients(plain, P(3 * orbits), P(orbits)), plain, "Delta^3_{s3->s1}");
    }
    if (tgt.index == 3) {
        const Poly mod_s3 = q * q - q - Int{floor_half(n)} * (q - P(1)) + P(n * n);
        const Poly mod_tau = q * q - Int{floor_half(3 * n + 4)} * (q - P(1)) + P(3 * n * n - 1);
        return checked(s3_from_quotients(plain, mod_tau, mod_s3), plain, "Delta^3_{s3->s3}");
    }
    throw std::invalid_argument("delta_equivariant_s3: no S3 action on " + src.name() + " -> " + tgt.name());
}

bool delta_count_admissible(int rank, std::int64_t n, std::int64_t q_) {
    return q_ > 2 && is_prime(static_cast<std::uint64_t>(q_)) && n >= 1 && (q_ - 1) % (rank * n) == 0;
}

std::int64_t count_delta_points(PartitionId src, PartitionId tgt, TwistCount tw, std::int64_t fq) {
    if (!refines(src, tgt)) throw std::invalid_argument("count_delta_points: " + src.name() + " does not refine " + tgt.name());
    const std::int64_t n = tw.value();
    if (!delta_count_admissible(src.rank, n, fq))
        throw std::invalid_argument("count_delta_points: need prime q with rank*n | q-1");

    const auto mulmod = [fq](std::int64_t a, std::int64_t b) { return a * b % fq; };
    const auto powmod = [&](std::int64_t a, std::int64_t e) {
        std::int64_t r = 1;
        for (; e > 0; e >>= 1, a = mulmod(a, a))
            if (e & 1) r = mulmod(r, a);
        return r;
    };

    const std::vector<int> slots = src.labels();
    const std::vector<int> sizes = src.block_sizes();
    const std::vector<int> want = tgt.labels();
    const std::size_t blocks = sizes.size();

    std::vector<std::int64_t> power_n(static_cast<std::size_t>(fq));
    for (std::int64_t x = 1; x < fq; ++x) power_n[static_cast<std::size_t>(x)] = powmod(x, n);

    std::int64_t count = 0;
    std::vector<std::int64_t> lambda(blocks, 1);
    std::vector<int> seen(slots.size());
    while (true) {
        std::int64_t prod = 1;
        for (std::size_t b = 0; b < blocks; ++b) prod = mulmod(prod, powmod(lambda[b], sizes[b]));
        bool ok = prod == 1;
        for (std::size_t i = 0; ok && i < blocks; ++i)
            for (std::size_t j = i + 1; ok && j < blocks; ++j) ok = lambda[i] != lambda[j];
        if (ok) {
            // Coincidence pattern of the n-th powers, canonically relabelled.
            std::map<std::int64_t, int> relabel;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                const std::int64_t v = power_n[static_cast<std::size_t>(lambda[static_cast<std::size_t>(slots[s])])];
                auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
                seen[s] = it->second;
            }
            if (seen == want) ++count;
        }
        std::size_t b = 0;
        while (b < blocks && ++lambda[b] == fq) lambda[b++] = 1;
        if (b == blocks) break;
    }
    return count;
}

}  // namespace hopf
