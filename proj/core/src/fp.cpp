#include "mor/fp.hpp"

namespace mor {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^63, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, BigInt e, std::uint64_t p) {
    std::uint64_t base = a % p;
    std::uint64_t acc = 1 % p;
    while (e > 0) {
        if (bit_test(e, 0)) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero();
    // extended Euclid on (p, a); p prime so gcd = 1
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = a;
    while (nr != 0) {
        std::uint64_t q = r / nr;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * nt;
        t = nt;
        nt = tmp_t;
        std::uint64_t tmp_r = r - q * nr;
        r = nr;
        nr = tmp_r;
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = pow_mod(a, BigInt(d), n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // this base set is deterministic for all n < 3.3 * 10^24
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (!miller_rabin_u64(n, a)) return false;
    }
    return true;
}

}  // namespace mor
