#include "mor/morsys.hpp"

#include "mor/errors.hpp"

namespace mor {

namespace {

MatrixFp random_conjugator(const GroupParams& params, Rng& rng, bool diagonal_only) {
    MatrixFp g(params.n, params.p);
    for (std::size_t i = 0; i < params.n; ++i) {
        for (std::size_t j = i; j < params.n; ++j) {
            if (i == j) {
                g.set(i, j, 1 + rng.below(params.p - 1));
            } else if (!diagonal_only) {
                g.set(i, j, rng.below(params.p));
            }
        }
    }
    return g;
}

}  // namespace

std::pair<PublicKey, PrivateKey> keygen(const GroupParams& params, Rng& rng,
                                        const KeygenOptions& options) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        bool diagonal = options.family == KeyFamily::DiagonalConjugation;
        bool flip;
        switch (options.family) {
            case KeyFamily::DiagonalConjugation:
            case KeyFamily::UpperConjugation: flip = false; break;
            case KeyFamily::GraphFlip: flip = true; break;
            case KeyFamily::Mixed:
            default: flip = (rng.next() & 1) != 0; break;
        }
        MatrixFp g = random_conjugator(params, rng, diagonal);
        Automorphism phi = Automorphism::from_private(params, g, flip);
        BigInt t = automorphism_order(phi);
        if (t <= 2) continue;
        BigInt m = 2 + rng.below_big(t - 2);  // uniform in [2, t-1]
        Automorphism phi_m = compose_power(phi, m);
        PublicKey pk{params, phi.stripped(), phi_m.stripped()};
        PrivateKey sk{params, m, t};
        return {std::move(pk), std::move(sk)};
    }
    throw DegenerateKey("no automorphism of order > 2 found after 32 attempts");
}

std::pair<PublicKey, PrivateKey> keygen(const GroupParams& params, std::uint64_t seed,
                                        const KeygenOptions& options) {
    Rng rng(seed);
    return keygen(params, rng, options);
}

Ciphertext encrypt(const PublicKey& pk, const UTElement& msg, Rng& rng) {
    if (msg.params() != pk.params) throw ParamsMismatch();
    // r uniform in [2, 2^64)
    std::uint64_t r;
    do {
        r = rng.next();
    } while (r < 2);
    return encrypt_with_exponent(pk, msg, BigInt(r));
}

Ciphertext encrypt_with_exponent(const PublicKey& pk, const UTElement& msg, const BigInt& r) {
    if (msg.params() != pk.params) throw ParamsMismatch();
    Automorphism phi_r = compose_power(pk.phi, r);
    Automorphism phi_mr = compose_power(pk.phi_m, r);
    return Ciphertext{pk.params, std::move(phi_r), phi_mr.apply(msg)};
}

UTElement decrypt(const PrivateKey& sk, const Ciphertext& ct) {
    if (ct.params != sk.params) throw ParamsMismatch();
    if (ct.masked.params() != sk.params || ct.phi_r.params() != sk.params) {
        throw MalformedCiphertext("ciphertext components disagree with the key parameters");
    }
    Automorphism psi = compose_power(ct.phi_r, sk.m);  // phi^{mr}
    return invert_automorphism(psi).apply(ct.masked);
}

std::size_t packing_capacity(const GroupParams& params) {
    // largest L with 256^L <= p^(k-1), and L must fit the length entry
    const std::size_t payload_digits = params.positions() - 1;
    BigInt capacity = boost::multiprecision::pow(BigInt(params.p), static_cast<unsigned>(payload_digits));
    std::size_t bytes = 0;
    BigInt need = 256;
    while (need <= capacity) {
        ++bytes;
        need *= 256;
    }
    return std::min<std::size_t>(bytes, params.p - 1);
}

UTElement pack_bytes(const GroupParams& params, std::string_view bytes) {
    const std::size_t cap = packing_capacity(params);
    if (bytes.size() > cap) {
        throw InvalidInput("message of " + std::to_string(bytes.size()) +
                           " bytes exceeds packing capacity of " + std::to_string(cap));
    }
    BigInt acc = 0;
    for (std::size_t i = bytes.size(); i-- > 0;) {
        acc = (acc << 8) | static_cast<unsigned char>(bytes[i]);
    }
    UTElement e(params);
    const auto& pos = root_positions(params.n);
    e.set_entry(pos[0].i, pos[0].j, bytes.size());  // length prefix
    for (std::size_t k = 1; k < pos.size(); ++k) {
        e.set_entry(pos[k].i, pos[k].j, static_cast<std::uint64_t>(acc % params.p));
        acc /= params.p;
    }
    return e;
}

std::string unpack_bytes(const UTElement& elem) {
    const GroupParams& params = elem.params();
    const auto& pos = root_positions(params.n);
    const std::uint64_t len = elem.entry(pos[0].i, pos[0].j);
    if (len > packing_capacity(params)) {
        throw InvalidInput("length prefix exceeds packing capacity");
    }
    BigInt acc = 0;
    for (std::size_t k = pos.size(); k-- > 1;) {
        acc = acc * params.p + elem.entry(pos[k].i, pos[k].j);
    }
    std::string out(static_cast<std::size_t>(len), '\0');
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<char>(static_cast<std::uint64_t>(acc & 0xff));
        acc >>= 8;
    }
    if (acc != 0) throw InvalidInput("payload digits exceed the declared length");
    return out;
}

}  // namespace mor
