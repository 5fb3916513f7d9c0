#include "mor/polyfactor.hpp"

#include <algorithm>
#include <map>

#include "mor/errors.hpp"

namespace mor {

namespace {

// g with g^p = f, valid when f' = 0: over Z_p the coefficients are fixed by
// Frobenius, so the root just gathers every p-th coefficient.
PolyFp pth_root(const PolyFp& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree() / static_cast<long>(p)) + 1);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = f.coeff(j * p);
    return PolyFp(p, std::move(c));
}

PolyFp random_poly_below(long deg_bound, std::uint64_t p, Rng& rng) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg_bound));
    for (auto& x : c) x = rng.below(p);
    return PolyFp(p, std::move(c));
}

// Equal-degree splitting of a squarefree monic g whose irreducible factors
// all have degree d.
void equal_degree(const PolyFp& g, long d, Rng& rng, std::vector<PolyFp>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.modulus();
    const BigInt half = (boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
    for (;;) {
        PolyFp u = random_poly_below(g.degree(), p, rng);
        if (u.is_zero()) continue;
        PolyFp t = poly_gcd(u, g);
        if (t.degree() > 0 && t.degree() < g.degree()) {
            equal_degree(t, d, rng, out);
            equal_degree(poly_divmod(g, t).first, d, rng, out);
            return;
        }
        PolyFp w;
        if (p == 2) {
            // trace map over F_2: u + u^2 + u^4 + ... + u^(2^(d-1))
            w = PolyFp::zero(p);
            PolyFp term = poly_mod(u, g);
            for (long i = 0; i < d; ++i) {
                w = w + term;
                term = poly_mod(term * term, g);
            }
        } else {
            w = poly_powmod(u, half, g) - PolyFp::constant(1, p);
        }
        t = poly_gcd(w, g);
        if (t.degree() > 0 && t.degree() < g.degree()) {
            equal_degree(t, d, rng, out);
            equal_degree(poly_divmod(g, t).first, d, rng, out);
            return;
        }
    }
}

// Distinct-degree split of a squarefree monic s: list of (irreducible, 1)
// after equal-degree refinement.
void ddf_edf(const PolyFp& s, Rng& rng, std::vector<PolyFp>& out) {
    const std::uint64_t p = s.modulus();
    PolyFp f = s;
    PolyFp h = poly_mod(PolyFp::x(p), f);
    long d = 0;
    while (f.degree() > 0 && f.degree() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(h, BigInt(p), f);  // x^(p^d) mod f
        PolyFp g = poly_gcd(h - PolyFp::x(p), f);
        if (g.degree() > 0) {
            equal_degree(g, d, rng, out);
            f = poly_divmod(f, g).first;
            h = poly_mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(f);  // remainder is irreducible
}

void factor_monic(const PolyFp& f, Rng& rng, std::map<std::vector<std::uint64_t>, unsigned>& acc,
                  unsigned mult_scale);

// Accumulates factor -> multiplicity; keys are coefficient vectors (all
// factors share one modulus).
void factor_monic(const PolyFp& f, Rng& rng, std::map<std::vector<std::uint64_t>, unsigned>& acc,
                  unsigned mult_scale) {
    if (f.degree() <= 0) return;
    const std::uint64_t p = f.modulus();
    PolyFp fd = f.derivative();
    if (fd.is_zero()) {
        factor_monic(pth_root(f), rng, acc, mult_scale * static_cast<unsigned>(p));
        return;
    }
    PolyFp rest = f;
    PolyFp s = poly_divmod(f, poly_gcd(f, fd)).first;  // squarefree part
    std::vector<PolyFp> irr;
    ddf_edf(s, rng, irr);
    for (const PolyFp& q : irr) {
        unsigned e = 0;
        for (;;) {
            auto [quo, rem] = poly_divmod(rest, q);
            if (!rem.is_zero()) break;
            rest = quo;
            ++e;
        }
        acc[q.coeffs()] += e * mult_scale;
    }
    // leftover factors all have multiplicity divisible by p; recursion takes
    // the p-th-root branch
    factor_monic(rest, rng, acc, mult_scale);
}

}  // namespace

std::vector<std::pair<PolyFp, unsigned>> factor_poly(const PolyFp& f, Rng& rng) {
    if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
    const std::uint64_t p = f.modulus();
    std::map<std::vector<std::uint64_t>, unsigned> acc;
    factor_monic(f.monic(), rng, acc, 1);
    std::vector<std::pair<PolyFp, unsigned>> out;
    out.reserve(acc.size());
    for (const auto& [coeffs, mult] : acc) out.emplace_back(PolyFp(p, coeffs), mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return PolyFp::canonical_less(a.first, b.first); });
    return out;
}

std::vector<std::pair<PolyFp, unsigned>> factor_poly(const PolyFp& f) {
    Rng rng(0x6d6f722d637aULL);
    return factor_poly(f, rng);
}

bool is_irreducible(const PolyFp& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto factors = factor_poly(f);
    return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace mor
