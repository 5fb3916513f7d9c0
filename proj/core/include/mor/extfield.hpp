#ifndef MOR_EXTFIELD_HPP
#define MOR_EXTFIELD_HPP

#include <memory>
#include <string>

#include "mor/bigint.hpp"
#include "mor/poly.hpp"

namespace mor {

/// F_{p^d} presented as Z_p[x]/(f), f monic irreducible of degree d >= 1.
/// Immutable; shared by all elements of the field.
class ExtField {
  public:
    /// Validates monicity and irreducibility (via the factorization routine).
    static std::shared_ptr<const ExtField> create(PolyFp f);

    std::uint64_t p() const { return f_.modulus(); }
    const PolyFp& modulus_poly() const { return f_; }
    long degree() const { return f_.degree(); }
    BigInt order() const;       // p^d
    BigInt unit_order() const;  // p^d - 1

    bool operator==(const ExtField& o) const { return f_ == o.f_; }

  private:
    explicit ExtField(PolyFp f) : f_(std::move(f)) {}
    PolyFp f_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

class ExtElem {
  public:
    ExtElem() = default;
    ExtElem(ExtFieldPtr ctx, const PolyFp& rep);  // reduces rep mod f

    static ExtElem zero(const ExtFieldPtr& ctx);
    static ExtElem one(const ExtFieldPtr& ctx);
    static ExtElem from_base(const ExtFieldPtr& ctx, std::uint64_t c);
    /// The canonical root x of f; for a linear factor x - a this is the base
    /// field element a itself.
    static ExtElem generator(const ExtFieldPtr& ctx);

    const ExtFieldPtr& context() const { return ctx_; }
    const PolyFp& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator-() const;
    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    ExtElem inv() const;  // throws DivisionByZero on zero
    ExtElem pow(const BigInt& e) const;

    /// True when the representative is a constant polynomial.
    bool in_prime_field() const { return rep_.degree() <= 0; }
    std::uint64_t as_base() const;  // requires in_prime_field()

    std::string to_string() const { return rep_.to_string(); }

  private:
    void check(const ExtElem& o) const;
    ExtFieldPtr ctx_;
    PolyFp rep_;
};

/// Evaluate a Z_p polynomial at an extension-field point (Horner).
ExtElem eval_poly(const PolyFp& poly, const ExtElem& at);

}  // namespace mor

#endif
