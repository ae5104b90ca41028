#pragma once

#include <cstdint>

namespace korolat {

// Work caps for the exact-enumeration paths. The KOROLAT_BUDGET environment
// variable, when set to a positive integer, replaces every default cap.
namespace budget {

constexpr std::uint64_t kLatticeBoxDefault = 100'000'000;    // candidate vectors
constexpr std::uint64_t kDiscrepancyDefault = 1'000'000'000; // grid-point evaluations
constexpr std::uint64_t kExpsumDefault = 100'000'000;        // term evaluations

std::uint64_t lattice_box();
std::uint64_t discrepancy();
std::uint64_t expsum();

} // namespace budget

} // namespace korolat
