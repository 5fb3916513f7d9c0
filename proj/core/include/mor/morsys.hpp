#ifndef MOR_MORSYS_HPP
#define MOR_MORSYS_HPP

#include <string>
#include <string_view>
#include <utility>

#include "mor/automorphism.hpp"
#include "mor/bigint.hpp"
#include "mor/rng.hpp"
#include "mor/utgroup.hpp"

namespace mor {

struct PublicKey {
    GroupParams params;
    Automorphism phi;    // public form only
    Automorphism phi_m;  // phi^m, public form only
};

struct PrivateKey {
    GroupParams params;
    BigInt m;
    BigInt order;  // t = ord(phi), cached at keygen
};

struct Ciphertext {
    GroupParams params;
    Automorphism phi_r;  // public form
    UTElement masked;    // phi^{mr}(a)
};

/// Keygen family: conjugation by a random invertible upper-triangular g,
/// optionally composed with the graph flip. Pure conjugation induces only a
/// diagonal map on the quotient; the flip produces anti-diagonal induced
/// maps whose characteristic polynomials can be irreducible, forcing
/// genuine extension-field DLPs.
enum class KeyFamily {
    Mixed,                // random flip bit
    DiagonalConjugation,  // g diagonal, no flip
    UpperConjugation,     // g upper-triangular, no flip
    GraphFlip,            // g upper-triangular, with flip
};

struct KeygenOptions {
    KeyFamily family = KeyFamily::Mixed;
};

/// Draws phi, computes t = ord(phi), draws m uniformly from [2, t-1] and
/// publishes (phi, phi^m). Deterministic given the seed. Retries a bounded
/// number of times on t <= 2 and then throws DegenerateKey.
std::pair<PublicKey, PrivateKey> keygen(const GroupParams& params, Rng& rng,
                                        const KeygenOptions& options = {});
std::pair<PublicKey, PrivateKey> keygen(const GroupParams& params, std::uint64_t seed,
                                        const KeygenOptions& options = {});

/// (phi^r, (phi^m)^r(a)) for r uniform in [2, 2^64). The encryptor never
/// needs ord(phi); r is discarded after use.
Ciphertext encrypt(const PublicKey& pk, const UTElement& msg, Rng& rng);
/// Test hook with a forced exponent.
Ciphertext encrypt_with_exponent(const PublicKey& pk, const UTElement& msg, const BigInt& r);

UTElement decrypt(const PrivateKey& sk, const Ciphertext& ct);

/// Demo byte packing. One entry carries the byte count, the remaining
/// positions carry base-p digits of the payload. The packing fills all
/// strictly-upper entries, including the first superdiagonal, whose content
/// is recoverable from a ciphertext by the quotient attack alone.
std::size_t packing_capacity(const GroupParams& params);
UTElement pack_bytes(const GroupParams& params, std::string_view bytes);
std::string unpack_bytes(const UTElement& elem);

}  // namespace mor

#endif
