#pragma once

#include <cstdint>
#include <vector>

#include "lielap/rational.hpp"

namespace lielap {

/// Primes p = 1 (mod 4) just below 2^62, in decreasing order, with a fixed
/// square root of -1 modulo each.
struct GaussPrime {
    std::uint64_t p;
    std::uint64_t sqrt_minus_one;
};
const GaussPrime& gauss_prime(std::size_t index);

/// Characteristic polynomial det(M - X Id) of a square integer matrix modulo p,
/// by Hessenberg reduction over F_p. Entries must already be reduced.
std::vector<std::uint64_t> char_poly_mod(std::vector<std::uint64_t> m, std::size_t n, std::uint64_t p);

/// det(M - X Id) over Q(i), coefficients low degree first. Clears
/// denominators, reduces under both embeddings i -> +-r modulo enough primes
/// for a rigorous coefficient bound, and lifts the real and imaginary parts by
/// Chinese remaindering.
std::vector<GaussRational> char_poly_multimodular(const GMatrix& m);

}  // namespace lielap
