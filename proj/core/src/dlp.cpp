#include "mor/dlp.hpp"

#include <algorithm>
#include <map>

#include "mor/polyfactor.hpp"

namespace mor {

namespace {

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        constexpr std::uint64_t limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& a) {
    if (a % n == 0) return true;
    BigInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
BigInt pollard_rho_brent(const BigInt& n, Rng& rng) {
    constexpr std::uint64_t budget = 1ULL << 26;
    for (int attempt = 0; attempt < 16; ++attempt) {
        BigInt y = rng.below_big(n - 2) + 1;
        BigInt c = rng.below_big(n - 2) + 1;
        BigInt x = 0, ys = 0, q = 1, g = 1;
        std::uint64_t r = 1, m = 128, spent = 0;
        auto step = [&](BigInt& v) { v = (v * v + c) % n; };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t chunk = std::min(m, r - k);
                for (std::uint64_t i = 0; i < chunk; ++i) {
                    step(y);
                    q = (q * boost::multiprecision::abs(x - y)) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += chunk;
            }
            r *= 2;
            spent += r;
            if (spent > budget) break;
        }
        if (g == n) {
            do {
                step(ys);
                g = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
            } while (g == 1);
        }
        if (g > 1 && g < n) return g;
    }
    throw ResourceLimit("factor_integer: composite cofactor " + to_decimal(n) +
                        " survived the rho iteration budget");
}

}  // namespace

bool is_probable_prime(const BigInt& n, Rng& rng) {
    if (n < 2) return false;
    if (n < (BigInt(1) << 64)) return is_prime_u64(static_cast<std::uint64_t>(n));
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return false;
    }
    for (int round = 0; round < 64; ++round) {
        BigInt a = rng.below_big(n - 3) + 2;
        if (!miller_rabin_round(n, a)) return false;
    }
    return true;
}

FactoredInteger factor_integer(BigInt n, Rng& rng) {
    if (n < 1) throw InvalidInput("factor_integer requires n >= 1");
    std::map<BigInt, unsigned> acc;
    for (std::uint64_t q : small_primes()) {
        if (n == 1) break;
        if (BigInt(q) * q > n) break;
        while (n % q == 0) {
            n /= q;
            ++acc[q];
        }
    }
    // remaining part has no factor below 10^6 (or is prime/1)
    std::vector<BigInt> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        BigInt m = stack.back();
        stack.pop_back();
        if (is_probable_prime(m, rng)) {
            ++acc[m];
            continue;
        }
        BigInt d = pollard_rho_brent(m, rng);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    FactoredInteger out;
    for (const auto& [q, e] : acc) {
        out.factors.emplace_back(q, e);
        for (unsigned i = 0; i < e; ++i) out.value *= q;
    }
    return out;
}

FactoredInteger factor_integer(const BigInt& n) {
    Rng rng(0x6d6f722d666163ULL);
    return factor_integer(BigInt(n), rng);
}

FactoredInteger FactoredInteger::of_divisor(const FactoredInteger& whole, const BigInt& d) {
    if (d < 1 || whole.value % d != 0) throw InvalidInput("not a divisor of the factored value");
    FactoredInteger out;
    BigInt rest = d;
    for (const auto& [q, e] : whole.factors) {
        unsigned k = 0;
        while (rest % q == 0) {
            rest /= q;
            ++k;
        }
        if (k > 0) {
            out.factors.emplace_back(q, k);
            for (unsigned i = 0; i < k; ++i) out.value *= q;
        }
    }
    if (rest != 1) throw InvalidInput("divisor has a prime outside the factor list");
    return out;
}

BigInt inv_mod_big(const BigInt& a, const BigInt& m) {
    BigInt t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        BigInt q = r / nr;
        BigInt tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DivisionByZero("element not invertible modulo m");
    return t < 0 ? t + m : t;
}

Residue crt_combine(const std::vector<Residue>& residues) {
    if (residues.empty()) throw InvalidInput("crt_combine requires at least one residue");
    Residue acc = residues.front();
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const Residue& b = residues[i];
        const BigInt g = boost::multiprecision::gcd(acc.modulus, b.modulus);
        BigInt diff = b.r - acc.r;
        if (diff % g != 0) {
            throw Inconsistent("residues disagree: " + to_decimal(acc.r) + " mod " +
                               to_decimal(acc.modulus) + " vs " + to_decimal(b.r) + " mod " +
                               to_decimal(b.modulus));
        }
        const BigInt l = acc.modulus / g * b.modulus;
        const BigInt step = acc.modulus;
        const BigInt reduced = b.modulus / g;
        BigInt t = ((diff / g) % reduced) * inv_mod_big((step / g) % reduced, reduced) % reduced;
        if (t < 0) t += reduced;
        acc = Residue(acc.r + step * t, l);
    }
    return acc;
}

FactoredInteger matrix_order_bound(const MatrixFp& a, Rng& rng) {
    const std::uint64_t p = a.modulus();
    auto factors = factor_poly(char_poly(a), rng);
    std::vector<long> degrees;
    for (const auto& [f, mult] : factors) {
        if (f.degree() == 1 && f.coeff(0) == 0) {
            throw SingularMatrix();  // factor x means eigenvalue 0
        }
        degrees.push_back(f.degree());
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    BigInt l = 1;
    for (long d : degrees) {
        BigInt unit = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d)) - 1;
        l = boost::multiprecision::lcm(l, unit);
    }
    // unipotent part: p^s with p^s >= n
    BigInt ps = 1;
    while (ps < a.dim()) ps *= p;
    FactoredInteger out = factor_integer(l * ps, rng);
    return out;
}

FactoredInteger matrix_order_bound(const MatrixFp& a) {
    Rng rng(0x6d6f722d626e64ULL);
    return matrix_order_bound(a, rng);
}

}  // namespace mor
