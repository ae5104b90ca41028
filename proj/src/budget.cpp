#include "korolat/budget.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace korolat {
namespace budget {

namespace {

std::optional<std::uint64_t> env_override() {
    static std::optional<std::uint64_t> cached = []() -> std::optional<std::uint64_t> {
        const char* raw = std::getenv("KOROLAT_BUDGET");
        if (raw == nullptr || *raw == '\0') return std::nullopt;
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0) return std::nullopt;
        return static_cast<std::uint64_t>(v);
    }();
    return cached;
}

} // namespace

std::uint64_t lattice_box() { return env_override().value_or(kLatticeBoxDefault); }
std::uint64_t discrepancy() { return env_override().value_or(kDiscrepancyDefault); }
std::uint64_t expsum() { return env_override().value_or(kExpsumDefault); }

} // namespace budget
} // namespace korolat
