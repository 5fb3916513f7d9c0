#ifndef MOR_DLP_HPP
#define MOR_DLP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mor/bigint.hpp"
#include "mor/errors.hpp"
#include "mor/extfield.hpp"
#include "mor/matrix.hpp"
#include "mor/rng.hpp"

namespace mor {

struct FactoredInteger {
    BigInt value{1};
    std::vector<std::pair<BigInt, unsigned>> factors;  // primes strictly increasing

    /// Factorization of a divisor d of value, computed by exponent counting.
    static FactoredInteger of_divisor(const FactoredInteger& whole, const BigInt& d);
};

/// Trial division to 10^6, then Brent-cycle Pollard rho; deterministic given
/// the RNG seed. Primality certificates are deterministic Miller-Rabin below
/// 2^64 and 64 seeded rounds above (desk scale tops out near 2^80).
FactoredInteger factor_integer(BigInt n, Rng& rng);
FactoredInteger factor_integer(const BigInt& n);

bool is_probable_prime(const BigInt& n, Rng& rng);

struct Residue {
    BigInt r;
    BigInt modulus;

    Residue() : r(0), modulus(1) {}
    Residue(BigInt r_, BigInt m_) : r(std::move(r_)), modulus(std::move(m_)) {
        if (modulus < 1) throw InvalidInput("modulus must be >= 1");
        r %= modulus;
        if (r < 0) r += modulus;
    }
    bool operator==(const Residue& o) const { return r == o.r && modulus == o.modulus; }
};

/// Combined residue mod lcm of all moduli; non-coprime moduli are checked
/// for consistency and an disagreement throws Inconsistent.
Residue crt_combine(const std::vector<Residue>& residues);

BigInt inv_mod_big(const BigInt& a, const BigInt& m);

enum class SolverKind { Exhaustive, Bsgs, PohligHellman };

struct SolverConfig {
    SolverKind kind = SolverKind::PohligHellman;
    std::uint64_t bsgs_ceiling = 1ULL << 40;
};

// ---- group adapters -------------------------------------------------------
// A group adapter supplies: Elem, one(), mul(a,b), eq(a,b), key(a).

struct ExtUnitGroup {
    using Elem = ExtElem;
    ExtFieldPtr ctx;
    Elem one() const { return ExtElem::one(ctx); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string key(const Elem& a) const {
        std::string out;
        for (auto c : a.rep().coeffs()) {
            for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((c >> (8 * b)) & 0xff));
        }
        return out;
    }
};

struct FpUnitGroup {
    using Elem = std::uint64_t;
    std::uint64_t p;
    Elem one() const { return 1; }
    Elem mul(Elem a, Elem b) const { return mul_mod(a, b, p); }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string key(Elem a) const {
        std::string out;
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((a >> (8 * b)) & 0xff));
        return out;
    }
};

struct MatrixGroup {
    using Elem = MatrixFp;
    Elem one_;  // identity of the right dimension/modulus
    const Elem& one() const { return one_; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string key(const Elem& a) const { return a.key(); }
};

// ---- generic machinery ----------------------------------------------------

template <class G>
typename G::Elem group_pow(const G& g, const typename G::Elem& base, BigInt e) {
    typename G::Elem acc = g.one();
    typename G::Elem b = base;
    while (e > 0) {
        if (bit_test(e, 0)) acc = g.mul(acc, b);
        b = g.mul(b, b);
        e >>= 1;
    }
    return acc;
}

/// Exact order of x given a factored multiple of it: divide out primes while
/// the power stays the identity. Throws InvalidInput when x^group_order != 1.
template <class G>
BigInt element_order(const G& g, const typename G::Elem& x, const FactoredInteger& group_order) {
    if (!g.eq(group_pow(g, x, group_order.value), g.one())) {
        throw InvalidInput("group_order is not a multiple of the element order");
    }
    BigInt ord = group_order.value;
    for (const auto& [q, e] : group_order.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (ord % q != 0) break;
            BigInt trial = ord / q;
            if (!g.eq(group_pow(g, x, trial), g.one())) break;
            ord = trial;
        }
    }
    return ord;
}

/// Smallest e in [0, order) with base^e = target, or nullopt when target is
/// outside <base>. order must be the order of base. Ceiling guards the
/// sqrt(order) baby-step table.
template <class G>
std::optional<BigInt> bsgs(const G& g, const typename G::Elem& base, const typename G::Elem& target,
                           const BigInt& order, std::uint64_t ceiling = SolverConfig{}.bsgs_ceiling) {
    if (order > ceiling) {
        throw ResourceLimit("bsgs: group order " + to_decimal(order) + " exceeds solver ceiling " +
                            std::to_string(ceiling));
    }
    if (g.eq(target, g.one())) return BigInt(0);
    const std::uint64_t ord = static_cast<std::uint64_t>(order);
    std::uint64_t s = 1;
    while (s * s < ord) ++s;  // ceil(sqrt)
    std::unordered_map<std::string, std::uint64_t> baby;
    baby.reserve(s * 2);
    typename G::Elem cur = g.one();
    for (std::uint64_t j = 0; j < s; ++j) {
        baby.emplace(g.key(cur), j);
        cur = g.mul(cur, base);
    }
    const typename G::Elem giant = group_pow(g, base, order - s);  // base^{-s}
    cur = target;
    for (std::uint64_t i = 0; i * s < ord + s; ++i) {
        auto it = baby.find(g.key(cur));
        if (it != baby.end()) {
            BigInt e = BigInt(i) * s + it->second;
            e %= order;
            if (g.eq(group_pow(g, base, e), target)) return e;
        }
        cur = g.mul(cur, giant);
    }
    return std::nullopt;
}

/// Exhaustive scan, for cross-validation and tiny orders.
template <class G>
std::optional<BigInt> exhaustive_dlp(const G& g, const typename G::Elem& base,
                                     const typename G::Elem& target, const BigInt& order,
                                     std::uint64_t ceiling = SolverConfig{}.bsgs_ceiling) {
    if (order > ceiling) {
        throw ResourceLimit("exhaustive: group order " + to_decimal(order) + " exceeds solver ceiling " +
                            std::to_string(ceiling));
    }
    typename G::Elem cur = g.one();
    for (BigInt e = 0; e < order; ++e) {
        if (g.eq(cur, target)) return e;
        cur = g.mul(cur, base);
    }
    return std::nullopt;
}

/// Pohlig-Hellman decomposition: per prime power a digit-lifting walk whose
/// digits come from bsgs in the order-q subgroup, recombined by CRT. order
/// must be the factored order of base. Throws NoSolution when target is
/// outside <base>.
template <class G>
Residue pohlig_hellman(const G& g, const typename G::Elem& base, const typename G::Elem& target,
                       const FactoredInteger& order,
                       std::uint64_t ceiling = SolverConfig{}.bsgs_ceiling) {
    std::vector<Residue> parts;
    for (const auto& [q, e] : order.factors) {
        BigInt qe = 1;
        for (unsigned i = 0; i < e; ++i) qe *= q;
        const BigInt cofactor = order.value / qe;
        const typename G::Elem base_q = group_pow(g, base, cofactor);
        const typename G::Elem target_q = group_pow(g, target, cofactor);
        const typename G::Elem gamma = group_pow(g, base_q, qe / q);  // order q
        BigInt x = 0;
        BigInt qj = 1;  // q^j
        for (unsigned j = 0; j < e; ++j) {
            // shift out known digits, land in the order-q subgroup
            typename G::Elem shifted =
                g.mul(target_q, group_pow(g, base_q, qe - (x % qe)));
            typename G::Elem h = group_pow(g, shifted, qe / (qj * q));
            auto digit = bsgs(g, gamma, h, q, ceiling);
            if (!digit) throw NoSolution("target is outside the cyclic subgroup");
            x += *digit * qj;
            qj *= q;
        }
        parts.emplace_back(x, qe);
    }
    if (parts.empty()) parts.emplace_back(0, 1);
    Residue combined = crt_combine(parts);
    Residue result(combined.r, order.value);
    if (!g.eq(group_pow(g, base, result.r), target)) {
        throw NoSolution("target is outside the cyclic subgroup");
    }
    return result;
}

/// Strategy dispatch used by the attack pipeline; returns e with
/// base^e = target as a residue mod order.value.
template <class G>
Residue solve_dlp(const G& g, const typename G::Elem& base, const typename G::Elem& target,
                  const FactoredInteger& order, const SolverConfig& cfg) {
    switch (cfg.kind) {
        case SolverKind::Exhaustive: {
            auto e = exhaustive_dlp(g, base, target, order.value, cfg.bsgs_ceiling);
            if (!e) throw NoSolution("target is outside the cyclic subgroup");
            return Residue(*e, order.value);
        }
        case SolverKind::Bsgs: {
            auto e = bsgs(g, base, target, order.value, cfg.bsgs_ceiling);
            if (!e) throw NoSolution("target is outside the cyclic subgroup");
            return Residue(*e, order.value);
        }
        case SolverKind::PohligHellman:
        default:
            return pohlig_hellman(g, base, target, order, cfg.bsgs_ceiling);
    }
}

/// Factored multiple of the order of an invertible matrix over Z_p:
/// lcm(p^{d_i} - 1) over the distinct irreducible factor degrees d_i of the
/// characteristic polynomial, times p^ceil(log_p n) for the unipotent part.
FactoredInteger matrix_order_bound(const MatrixFp& a, Rng& rng);
FactoredInteger matrix_order_bound(const MatrixFp& a);

}  // namespace mor

#endif
