#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "korolat/numeric.hpp"

namespace korolat {

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors_sorted(std::int64_t n);

// A verified prime p >= 3. All residues are kept canonical in [0, p);
// signed representatives appear only in the lattice module.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p);
    std::int64_t value() const { return p_; }

private:
    std::int64_t p_;
};

struct Subgroup {
    PrimeModulus modulus;
    std::int64_t order;                  // d, divides p-1
    std::int64_t generator;              // element of multiplicative order d
    std::vector<std::int64_t> elements;  // sorted, size d, closed under *
};

struct Coset {
    std::int64_t representative;         // v in [1, p-1]
    Subgroup base;
    std::vector<std::int64_t> elements;  // sorted, size == base.order
};

// Smallest g in [2, p-1] of multiplicative order p-1.
std::int64_t primitive_root(const PrimeModulus& p);

std::int64_t multiplicative_order(std::int64_t a, const PrimeModulus& p);

// The unique subgroup of order d, i.e. {x : x^d == 1 mod p}.
// Throws NonDivisorOrder when d does not divide p-1.
Subgroup subgroup_of_order(const PrimeModulus& p, std::int64_t d);

// Subgroup of smallest order d with d | p-1 and d >= p^delta.
// The comparison d >= p^delta is decided exactly: d^den >= p^num for
// delta = num/den, so boundary cases never depend on floating point.
Subgroup smallest_subgroup_meeting(const PrimeModulus& p, const Rational& delta);

Coset coset(std::int64_t v, const Subgroup& base);

std::int64_t euler_phi(std::int64_t n);

} // namespace korolat
