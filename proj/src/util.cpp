#include "zsdiv/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace zsdiv {

std::int64_t narrow_i64(int128 v, const char* what) {
    if (v > int128(std::numeric_limits<std::int64_t>::max()) ||
        v < int128(std::numeric_limits<std::int64_t>::min())) {
        throw capability_error(std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

std::string i128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

int128 isqrt128(int128 n) {
    if (n < 0) throw validation_error("isqrt of negative value");
    if (n == 0) return 0;
    int128 r = static_cast<int128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t isqrt64(std::int64_t n) {
    return static_cast<std::int64_t>(isqrt128(n));
}

bool is_perfect_square(int128 n, int128& root) {
    if (n < 0) return false;
    root = isqrt128(n);
    return root * root == n;
}

std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, cx = 0;
    std::int64_t old_y = 0, cy = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cx; old_x = cx; cx = t;
        t = old_y - q * cy; old_y = cy; cy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

std::int64_t mod_floor(int128 v, std::int64_t m) {
    if (m <= 0) throw validation_error("mod_floor requires positive modulus");
    int128 r = v % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

namespace {

int jacobi(std::int64_t a, std::int64_t n) {
    // n odd positive, a reduced mod n
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t m = n % 8;
            if (m == 3 || m == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace

int kronecker(std::int64_t D, std::int64_t n) {
    if (n < 0) throw validation_error("kronecker expects n >= 0");
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        if (D % 2 == 0) return 0;
        n /= 2;
        std::int64_t m = mod_floor(D, 8);
        if (m == 3 || m == 5) result = -result;
    }
    if (n == 1) return result;
    return result * jacobi(mod_floor(D, n), n);
}

bool is_squarefree(std::int64_t d) {
    std::int64_t n = std::llabs(d);
    if (n == 0) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

} // namespace zsdiv
