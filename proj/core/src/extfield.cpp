#include "mor/extfield.hpp"

#include "mor/errors.hpp"
#include "mor/polyfactor.hpp"

namespace mor {

std::shared_ptr<const ExtField> ExtField::create(PolyFp f) {
    if (f.degree() < 1) throw InvalidInput("extension modulus must have degree >= 1");
    if (!f.is_monic()) throw InvalidInput("extension modulus must be monic");
    if (!is_prime_u64(f.modulus())) throw ValidationError("p not prime");
    if (f.modulus() >= (1ULL << 63)) throw InvalidInput("p must fit in 63 bits");
    if (!is_irreducible(f)) throw InvalidInput("extension modulus is reducible: " + f.to_string());
    return std::shared_ptr<const ExtField>(new ExtField(std::move(f)));
}

BigInt ExtField::order() const {
    return boost::multiprecision::pow(BigInt(p()), static_cast<unsigned>(degree()));
}

BigInt ExtField::unit_order() const { return order() - 1; }

ExtElem::ExtElem(ExtFieldPtr ctx, const PolyFp& rep) : ctx_(std::move(ctx)) {
    if (rep.modulus() != ctx_->p()) throw ModulusMismatch();
    rep_ = poly_mod(rep, ctx_->modulus_poly());
}

ExtElem ExtElem::zero(const ExtFieldPtr& ctx) { return ExtElem(ctx, PolyFp::zero(ctx->p())); }

ExtElem ExtElem::one(const ExtFieldPtr& ctx) { return ExtElem(ctx, PolyFp::constant(1, ctx->p())); }

ExtElem ExtElem::from_base(const ExtFieldPtr& ctx, std::uint64_t c) {
    return ExtElem(ctx, PolyFp::constant(c, ctx->p()));
}

ExtElem ExtElem::generator(const ExtFieldPtr& ctx) { return ExtElem(ctx, PolyFp::x(ctx->p())); }

void ExtElem::check(const ExtElem& o) const {
    if (!ctx_ || !o.ctx_) throw ContextMismatch("uninitialized extension element");
    if (!(*ctx_ == *o.ctx_)) throw ContextMismatch();
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check(o);
    ExtElem r;
    r.ctx_ = ctx_;
    r.rep_ = rep_ + o.rep_;
    return r;
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    check(o);
    ExtElem r;
    r.ctx_ = ctx_;
    r.rep_ = rep_ - o.rep_;
    return r;
}

ExtElem ExtElem::operator-() const {
    ExtElem r;
    r.ctx_ = ctx_;
    r.rep_ = -rep_;
    return r;
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check(o);
    ExtElem r;
    r.ctx_ = ctx_;
    r.rep_ = poly_mod(rep_ * o.rep_, ctx_->modulus_poly());
    return r;
}

bool ExtElem::operator==(const ExtElem& o) const {
    check(o);
    return rep_ == o.rep_;
}

ExtElem ExtElem::inv() const {
    if (is_zero()) throw DivisionByZero();
    // extended Euclid in Z_p[x] against the irreducible modulus
    const PolyFp& f = ctx_->modulus_poly();
    const std::uint64_t p = ctx_->p();
    PolyFp t = PolyFp::zero(p), nt = PolyFp::constant(1, p);
    PolyFp r = f, nr = rep_;
    while (!nr.is_zero()) {
        auto [q, rem] = poly_divmod(r, nr);
        PolyFp t2 = t - q * nt;
        t = nt;
        nt = t2;
        r = nr;
        nr = rem;
    }
    // r is a nonzero constant (f irreducible, rep nonzero)
    ExtElem out;
    out.ctx_ = ctx_;
    out.rep_ = t.scaled(inv_mod(r.coeff(0), p));
    return out;
}

ExtElem ExtElem::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    ExtElem acc = one(ctx_);
    ExtElem base = *this;
    BigInt k = e;
    while (k > 0) {
        if (bit_test(k, 0)) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::uint64_t ExtElem::as_base() const {
    if (!in_prime_field()) throw InvalidInput("element lies outside the prime field");
    return rep_.coeff(0);
}

ExtElem eval_poly(const PolyFp& poly, const ExtElem& at) {
    ExtElem acc = ExtElem::zero(at.context());
    for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
        acc = acc * at + ExtElem::from_base(at.context(), poly.coeff(i));
    }
    return acc;
}

}  // namespace mor
