#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "hopf/poly.hpp"
#include "hopf/repring.hpp"

namespace doctest {
template <>
struct StringMaker<hopf::Poly> {
    static String convert(const hopf::Poly& p) { return p.to_ascii().c_str(); }
};
template <>
struct StringMaker<hopf::S2Elem> {
    static String convert(const hopf::S2Elem& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<hopf::S3Elem> {
    static String convert(const hopf::S3Elem& x) { return x.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

inline const hopf::Poly q = hopf::Poly::q();

inline hopf::Poly P(hopf::Int c) { return hopf::Poly::constant(c); }

inline hopf::Poly random_poly(std::mt19937_64& rng, int max_degree = 5, int bound = 20) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::vector<hopf::Int> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) v = coef(rng);
    return hopf::Poly(std::move(c));
}

inline hopf::S2Elem random_s2(std::mt19937_64& rng) { return {random_poly(rng, 3), random_poly(rng, 3)}; }
inline hopf::S3Elem random_s3(std::mt19937_64& rng) {
    return {random_poly(rng, 3), random_poly(rng, 3), random_poly(rng, 3)};
}

}  // namespace testing
