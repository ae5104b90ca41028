#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "korolat/numeric.hpp"

namespace korolat {

// Case1 covers beta_m <= delta < alpha_m, Case2 covers
// alpha_{m+1} <= delta < beta_m. The two families interleave as
// alpha_1 > beta_1 > alpha_2 > beta_2 > ... and tile (1/4, 1) exactly;
// delta <= 1/4 has no branch and raises NoBranch.
enum class Branch { Case1, Case2 };

struct BranchInfo {
    int m;
    Branch branch;
    Rational alpha;  // alpha_m
    Rational beta;   // beta_m
};

Rational alpha_threshold(int m);  // 2^(m-1) / (2^(m+1) - m - 2)
Rational beta_threshold(int m);   // 2^m     / (2^(m+2) - m - 4)

BranchInfo find_branch(const Rational& delta);

// max(3, ceil(81/delta + 1/ln2 - 160)). The transcendental term is held as
// an exact 244-digit bracket; the ceiling is certified by evaluating both
// endpoints, which subsumes the 1e-9 near-integer guard.
BigInt n_delta(const Rational& delta);

// Ceiling-expression of the branch of delta, plus 2. NoBranch for
// delta <= 1/4.
BigInt s_prime(const Rational& delta);

struct SDoublePrime {
    bool overflow;  // n_delta > 1e6: 2^n_delta exceeds the evaluation budget
    BigInt value;   // valid when !overflow
};

SDoublePrime s_double_prime(const Rational& delta);

struct ThresholdProfile {
    Rational delta;
    std::optional<BranchInfo> branch;        // empty for delta <= 1/4
    BigInt n_delta;
    std::optional<BigInt> s_prime;           // empty when no branch
    SDoublePrime s_double_prime;
    std::optional<BigInt> s_min;             // empty only if both sides are unavailable
};

ThresholdProfile threshold_profile(const Rational& delta);

struct CorollaryRow {
    Rational left;
    Rational right;
    int expected_s;
    BigInt s_left;
    BigInt s_mid;
    bool pass;
};

// Recomputes every row of the 18-entry dimension table at the interval's
// left endpoint and midpoint; expected_s is the fixture the computed values
// are compared against.
std::vector<CorollaryRow> corollary_table();

// Throws TableMismatch when any row fails.
void verify_corollary_table();

} // namespace korolat
