#ifndef MOR_FP_HPP
#define MOR_FP_HPP

#include <cstdint>

#include "mor/bigint.hpp"
#include "mor/errors.hpp"

namespace mor {

// Raw modular helpers. Moduli fit in 63 bits so products fit __int128.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, BigInt e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);  // throws DivisionByZero

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Scalar of Z_p. The modulus travels with the value; mixing moduli throws.
/// Primality of p is the caller's contract and is checked once wherever
/// parameters enter the system (GroupParams, ExtField, deserialization).
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const { check(o); return raw(add_mod(v_, o.v_, p_), p_); }
    Fp operator-(const Fp& o) const { check(o); return raw(sub_mod(v_, o.v_, p_), p_); }
    Fp operator*(const Fp& o) const { check(o); return raw(mul_mod(v_, o.v_, p_), p_); }
    Fp operator/(const Fp& o) const { check(o); return raw(mul_mod(v_, inv_mod(o.v_, p_), p_), p_); }
    Fp operator-() const { return raw(sub_mod(0, v_, p_), p_); }

    Fp inv() const { return raw(inv_mod(v_, p_), p_); }
    Fp pow(const BigInt& e) const { return raw(pow_mod(v_, e, p_), p_); }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool is_zero() const { return v_ == 0; }

    static Fp raw(std::uint64_t reduced, std::uint64_t p) {
        Fp x;
        x.v_ = reduced;
        x.p_ = p;
        return x;
    }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw ModulusMismatch();
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace mor

#endif
