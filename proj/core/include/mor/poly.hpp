#ifndef MOR_POLY_HPP
#define MOR_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mor/bigint.hpp"
#include "mor/fp.hpp"

namespace mor {

/// Univariate polynomial over Z_p, coefficients lowest degree first with no
/// trailing zeros; the zero polynomial has an empty coefficient list.
class PolyFp {
  public:
    PolyFp() : p_(0) {}
    explicit PolyFp(std::uint64_t p) : p_(p) {}
    PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static PolyFp zero(std::uint64_t p) { return PolyFp(p); }
    static PolyFp constant(std::uint64_t c, std::uint64_t p);
    static PolyFp x(std::uint64_t p);   // the monomial x
    static PolyFp monomial(std::size_t degree, std::uint64_t coeff, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_monic() const { return lead() == 1; }

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp operator-() const;
    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const PolyFp& o) const { return !(*this == o); }

    PolyFp scaled(std::uint64_t s) const;
    PolyFp monic() const;  // throws DivisionByZero on the zero polynomial
    PolyFp derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    /// Canonical ordering: by degree, then coefficients compared from the
    /// highest term down. Makes factor lists deterministic.
    static bool canonical_less(const PolyFp& a, const PolyFp& b);

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    void check(const PolyFp& o) const;
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// (quotient, remainder) with a = q*b + r, deg r < deg b.
std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b);
PolyFp poly_mod(const PolyFp& a, const PolyFp& b);

/// Monic gcd; gcd(0, 0) = 0.
PolyFp poly_gcd(PolyFp a, PolyFp b);

/// base^e mod m by repeated squaring.
PolyFp poly_powmod(const PolyFp& base, const BigInt& e, const PolyFp& m);

}  // namespace mor

#endif
