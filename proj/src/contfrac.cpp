#include "korolat/contfrac.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "korolat/errors.hpp"

namespace korolat {

ContinuedFractionExpansion cf_expand(std::int64_t x, std::int64_t N) {
    if (N < 2) fail(Errc::OutOfRange, "denominator must be >= 2");
    if (x < 1 || x >= N)
        fail(Errc::OutOfRange, "numerator must lie in [1, N-1], got " + std::to_string(x));
    std::int64_t g = gcd64(x, N);
    std::int64_t a = N / g, b = x / g;  // expand b/a with b < a
    std::vector<std::int64_t> quotients;
    std::int64_t sum = 0;
    // Euclid on (a, b); the last quotient is >= 2 whenever a remainder step
    // precedes it, so the canonical form needs no fixup.
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t r = a % b;
        quotients.push_back(q);
        sum += q;
        a = b;
        b = r;
    }
    return ContinuedFractionExpansion{x, N, g, std::move(quotients), sum};
}

std::int64_t cf_discrepancy_proxy(const ContinuedFractionExpansion& e) {
    return e.sum_b + static_cast<std::int64_t>(e.quotients.size()) + 1;
}

LarcherResult larcher_search(std::int64_t N) {
    if (N < 2) fail(Errc::OutOfRange, "larcher_search expects N >= 2");
    LarcherResult best{0, 0};
    for (std::int64_t g = 1; g < N; ++g) {
        if (gcd64(g, N) != 1) continue;
        std::int64_t sum = cf_expand(g, N).sum_b;
        if (best.g == 0 || sum < best.sum_b) best = {g, sum};
    }
    return best;
}

SubgroupCfResult subgroup_cf_search(const std::vector<std::int64_t>& residues, std::int64_t p) {
    if (residues.empty()) fail(Errc::EmptyInput, "subgroup_cf_search needs a nonempty set");
    std::int64_t best_a = 0, best_sum = 0;
    for (std::int64_t a : residues) {
        if (a < 1 || a >= p)
            fail(Errc::OutOfRange, "set element " + std::to_string(a) + " outside [1, p-1]");
        std::int64_t sum = cf_expand(a, p).sum_b;
        if (best_a == 0 || sum < best_sum || (sum == best_sum && a < best_a)) {
            best_a = a;
            best_sum = sum;
        }
    }
    double lp = std::log(static_cast<double>(p));
    return SubgroupCfResult{best_a, best_sum, 500.0 * lp * std::log(lp)};
}

SubgroupCfResult subgroup_cf_search(const Subgroup& g) {
    return subgroup_cf_search(g.elements, g.modulus.value());
}

SubgroupCfResult subgroup_cf_search(const Coset& r) {
    return subgroup_cf_search(r.elements, r.base.modulus.value());
}

} // namespace korolat
