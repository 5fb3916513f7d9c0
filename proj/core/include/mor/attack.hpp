#ifndef MOR_ATTACK_HPP
#define MOR_ATTACK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mor/dlp.hpp"
#include "mor/morsys.hpp"

namespace mor {

/// Matrix DLP instance on the Frattini quotient: B is assumed to be a power
/// of A; violations surface as Inconsistent or EigenvectorMismatch.
struct GlDlpInstance {
    MatrixFp a;
    MatrixFp b;

    GlDlpInstance(MatrixFp a_, MatrixFp b_);
};

struct PerFactorResult {
    PolyFp factor;          // irreducible factor of char_poly(A)
    unsigned multiplicity;
    long field_degree;      // d: the DLP lives in F_{p^d}
    Residue residue;        // m mod ord(lambda)
};

struct AttackTimings {
    std::int64_t reduce_us = 0;
    std::int64_t factor_us = 0;
    std::int64_t dlp_us = 0;
    std::int64_t jordan_us = 0;
    std::int64_t completion_us = 0;
    std::int64_t total_us = 0;
};

struct AttackReport {
    Residue recovered;  // m mod M, self-certified: A^recovered = B
    BigInt modulus;     // M = ord(induced_map(phi))
    std::vector<PerFactorResult> per_factor;
    std::vector<Residue> jordan_residues;  // each mod p
    bool full_order_match = false;         // ord(phi) == M?
    bool degenerate = false;               // M == 1 (identity induced map)
    AttackTimings timings;
    std::optional<bool> known_m_match;  // test hook only
};

/// A = induced_map(phi), B = induced_map(phi^m); B = A^m by functoriality.
GlDlpInstance reduce_mor_to_gl(const PublicKey& pk);

/// Menezes-Wu style reduction: factor char_poly(A); per irreducible factor
/// take the canonical eigenvalue lambda = x in F_{p^d}, an eigenvector v of
/// A, read mu from B v = mu v and solve lambda^m = mu in the unit group; add
/// the Jordan residue (m mod p) at repeated factors when a chain exists;
/// recombine by CRT and finish the p-power part against ord(A). The result
/// always satisfies A^recovered = B.
AttackReport gl_dlp(const GlDlpInstance& instance, const SolverConfig& cfg, Rng& rng);
AttackReport gl_dlp(const GlDlpInstance& instance, const SolverConfig& cfg = {});

struct BreakResult {
    AttackReport report;
    std::vector<UTElement> plaintext_candidates;  // exact plaintext when full_order_match
    /// First superdiagonal of the true plaintext, recovered from ciphertext
    /// and public key alone; valid for every key regardless of
    /// full_order_match.
    std::vector<FrattiniVector> superdiagonal_leaks;
};

BreakResult break_mor(const PublicKey& pk, const std::vector<Ciphertext>& challenges,
                      const SolverConfig& cfg = {});

}  // namespace mor

#endif
