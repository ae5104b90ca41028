#pragma once

#include <cstdint>
#include <vector>

#include "korolat/modp.hpp"

namespace korolat {

// Continued fraction x/N = [0; b_1, ..., b_l] in canonical form: every
// quotient >= 1 and b_l >= 2 when l >= 2, which the Euclidean algorithm
// produces directly. Non-reduced inputs are expanded after reduction, with
// the gcd recorded.
struct ContinuedFractionExpansion {
    std::int64_t numerator;    // x as given, 1 <= x < N
    std::int64_t denominator;  // N
    std::int64_t reduction;    // gcd(x, N); quotients expand (x/g)/(N/g)
    std::vector<std::int64_t> quotients;
    std::int64_t sum_b;
};

ContinuedFractionExpansion cf_expand(std::int64_t x, std::int64_t N);

// Ostrowski-style constant-free proxy: sum_b + l + 1.
std::int64_t cf_discrepancy_proxy(const ContinuedFractionExpansion& e);

struct LarcherResult {
    std::int64_t g;
    std::int64_t sum_b;
};

// Minimizes sum_b over g in [1, N-1] with gcd(g, N) = 1; ties -> smallest g.
LarcherResult larcher_search(std::int64_t N);

struct SubgroupCfResult {
    std::int64_t a;
    std::int64_t sum_b;
    double reference;  // 500 ln p ln ln p, reported, never asserted
};

SubgroupCfResult subgroup_cf_search(const std::vector<std::int64_t>& residues, std::int64_t p);
SubgroupCfResult subgroup_cf_search(const Subgroup& g);
SubgroupCfResult subgroup_cf_search(const Coset& r);

} // namespace korolat
