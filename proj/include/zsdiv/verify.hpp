#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zsdiv {

struct VerifyCheck {
    std::string name;
    bool ok;
    std::string detail;
};

// Default seed for the randomized cross-check suite.
inline constexpr std::uint64_t verify_default_seed = 1729;

// Scopes: "group" (orthogonality + Davenport), "zerosum" (seeded three-way
// count agreement), "paper" (the bundled-field goldens), "all".
std::vector<VerifyCheck> run_verify(const std::string& scope, std::uint64_t seed);

} // namespace zsdiv
