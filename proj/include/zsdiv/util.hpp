#pragma once

#include <cstdint>
#include <string>

#include "zsdiv/errors.hpp"

namespace zsdiv {

using int128 = __int128;

// Narrow a 128-bit intermediate back to 64 bits or report a capability limit.
std::int64_t narrow_i64(int128 v, const char* what);

std::string i128_to_string(int128 v);

// Floor of the square root for non-negative 128-bit values.
int128 isqrt128(int128 n);
std::int64_t isqrt64(std::int64_t n);

bool is_perfect_square(int128 n, int128& root);

// Extended gcd: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

// Mathematical mod: result in [0, m) for m > 0.
std::int64_t mod_floor(int128 v, std::int64_t m);

// Kronecker symbol (D | n) for n >= 0.
int kronecker(std::int64_t D, std::int64_t n);

// True when |d| has no repeated prime factor.  Trial division.
bool is_squarefree(std::int64_t d);

} // namespace zsdiv
