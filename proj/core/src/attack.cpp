#include "mor/attack.hpp"

#include <chrono>

#include "mor/polyfactor.hpp"

namespace mor {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t us_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

}  // namespace

GlDlpInstance::GlDlpInstance(MatrixFp a_, MatrixFp b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.dim() != b.dim()) throw DimensionMismatch();
    if (a.modulus() != b.modulus()) throw ModulusMismatch();
    if (!a.is_invertible() || !b.is_invertible()) throw SingularMatrix();
}

GlDlpInstance reduce_mor_to_gl(const PublicKey& pk) {
    return GlDlpInstance(induced_map(pk.phi), induced_map(pk.phi_m));
}

AttackReport gl_dlp(const GlDlpInstance& instance, const SolverConfig& cfg, Rng& rng) {
    const auto t_total = Clock::now();
    const MatrixFp& a = instance.a;
    const MatrixFp& b = instance.b;
    const std::uint64_t p = a.modulus();
    AttackReport report;

    auto t_factor = Clock::now();
    const PolyFp cp = char_poly(a);
    const auto factors = factor_poly(cp, rng);
    report.timings.factor_us = us_since(t_factor);

    std::vector<Residue> residues;
    for (const auto& [f, mult] : factors) {
        const auto t_dlp = Clock::now();
        ExtFieldPtr field = ExtField::create(f);
        const ExtElem lambda = ExtElem::generator(field);

        MatrixExt shifted = MatrixExt::from_base(field, a);
        for (std::size_t i = 0; i < a.dim(); ++i) shifted.set(i, i, shifted.at(i, i) - lambda);
        const auto basis = kernel_basis(shifted);
        if (basis.empty()) {
            throw Inconsistent("no eigenvector for an irreducible factor of the char poly");
        }
        const std::vector<ExtElem>& v = basis.front();
        std::size_t k = 0;
        while (v[k].is_zero()) ++k;
        const std::vector<ExtElem> bv = MatrixExt::from_base(field, b).apply(v);
        const ExtElem mu = bv[k] * v[k].inv();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!(bv[i] == mu * v[i])) {
                throw EigenvectorMismatch(
                    "B does not act as a scalar on an eigenvector of A; B is not a power of A");
            }
        }

        const ExtUnitGroup units{field};
        const FactoredInteger unit_order = factor_integer(field->unit_order(), rng);
        const BigInt ord_lambda = element_order(units, lambda, unit_order);
        const FactoredInteger ord_factored = FactoredInteger::of_divisor(unit_order, ord_lambda);
        Residue res;
        try {
            res = solve_dlp(units, lambda, mu, ord_factored, cfg);
        } catch (const NoSolution&) {
            throw Inconsistent("eigenvalue of B lies outside the cyclic group of the eigenvalue of A");
        } catch (const ResourceLimit& e) {
            throw ResourceLimit("DLP in F_{" + std::to_string(p) + "^" +
                                std::to_string(f.degree()) + "} (field size " +
                                to_decimal(field->order()) + "): " + e.what());
        }
        report.per_factor.push_back(PerFactorResult{f, mult, f.degree(), res});
        residues.push_back(res);
        report.timings.dlp_us += us_since(t_dlp);

        if (mult >= 2) {
            const auto t_jordan = Clock::now();
            auto jr = jordan_exponent_residue(a, b, lambda);
            if (jr) {
                Residue jres{BigInt(*jr), BigInt(p)};
                report.jordan_residues.push_back(jres);
                residues.push_back(jres);
            }
            report.timings.jordan_us += us_since(t_jordan);
        }
    }

    const Residue partial = crt_combine(residues);

    // finish the p-power part: ord(A)/partial.modulus is a small power of p
    const auto t_completion = Clock::now();
    MatrixGroup mg{MatrixFp::identity(a.dim(), p)};
    const BigInt ord_a = element_order(mg, a, matrix_order_bound(a, rng));
    if (ord_a % partial.modulus != 0) {
        throw Inconsistent("per-factor moduli do not divide the matrix order");
    }
    const BigInt steps = ord_a / partial.modulus;
    std::optional<BigInt> recovered;
    for (BigInt k = 0; k < steps; ++k) {
        BigInt cand = partial.r + k * partial.modulus;
        if (a.pow(cand) == b) {
            recovered = cand;
            break;
        }
    }
    if (!recovered) throw Inconsistent("B is not a power of A");
    report.timings.completion_us = us_since(t_completion);

    report.recovered = Residue(*recovered, ord_a);
    report.modulus = ord_a;
    report.degenerate = (ord_a == 1);
    report.timings.total_us = us_since(t_total);
    return report;
}

AttackReport gl_dlp(const GlDlpInstance& instance, const SolverConfig& cfg) {
    Rng rng(0x6d6f722d61746bULL);
    return gl_dlp(instance, cfg, rng);
}

BreakResult break_mor(const PublicKey& pk, const std::vector<Ciphertext>& challenges,
                      const SolverConfig& cfg) {
    BreakResult out;
    const auto t_reduce = Clock::now();
    GlDlpInstance instance = reduce_mor_to_gl(pk);
    const std::int64_t reduce_us = us_since(t_reduce);

    out.report = gl_dlp(instance, cfg);
    out.report.timings.reduce_us = reduce_us;

    // self-check: phi^recovered must linearize to induced_map(phi_m) exactly
    if (instance.a.pow(out.report.recovered.r) != instance.b) {
        throw Inconsistent("recovered exponent fails the re-exponentiation check");
    }
    out.report.full_order_match = compose_power(pk.phi, out.report.modulus).is_identity();

    for (const Ciphertext& ct : challenges) {
        if (ct.params != pk.params) throw ParamsMismatch();
        Automorphism psi = compose_power(ct.phi_r, out.report.recovered.r);
        UTElement candidate = invert_automorphism(psi).apply(ct.masked);
        // the quotient part is certified: induced(psi) = induced(phi_r)^m
        // because recovered = m mod M and ord(induced(phi_r)) divides M
        out.superdiagonal_leaks.push_back(frattini_project(candidate));
        out.plaintext_candidates.push_back(std::move(candidate));
    }
    return out;
}

}  // namespace mor
