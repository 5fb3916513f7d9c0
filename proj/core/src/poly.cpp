#include "mor/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mor/errors.hpp"

namespace mor {

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

PolyFp PolyFp::constant(std::uint64_t c, std::uint64_t p) { return PolyFp(p, {c}); }

PolyFp PolyFp::x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

PolyFp PolyFp::monomial(std::size_t degree, std::uint64_t coeff, std::uint64_t p) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return PolyFp(p, std::move(c));
}

void PolyFp::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void PolyFp::check(const PolyFp& o) const {
    if (p_ != o.p_) throw ModulusMismatch();
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    check(o);
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_mod(coeff(i), o.coeff(i), p_);
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
    check(o);
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub_mod(coeff(i), o.coeff(i), p_);
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::operator-() const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = sub_mod(0, c_[i], p_);
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] = add_mod(r[i + j], mul_mod(c_[i], o.c_[j], p_), p_);
        }
    }
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mul_mod(c_[i], s % p_, p_);
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::monic() const {
    if (is_zero()) throw DivisionByZero("monic of zero polynomial");
    return scaled(inv_mod(lead(), p_));
}

PolyFp PolyFp::derivative() const {
    if (c_.size() <= 1) return zero(p_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul_mod(c_[i], i % p_, p_);
    return PolyFp(p_, std::move(r));
}

std::uint64_t PolyFp::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x % p_, p_), c_[i], p_);
    return acc;
}

bool PolyFp::canonical_less(const PolyFp& a, const PolyFp& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::string PolyFp::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0 || c_[i] != 1) out << c_[i];
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch();
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) return {PolyFp::zero(p), a};
    std::vector<std::uint64_t> rem(a.coeffs());
    std::vector<std::uint64_t> quo(a.degree() - b.degree() + 1, 0);
    const std::uint64_t lead_inv = inv_mod(b.lead(), p);
    for (std::size_t k = quo.size(); k-- > 0;) {
        std::uint64_t top = rem[k + b.degree()];
        if (top == 0) continue;
        std::uint64_t q = mul_mod(top, lead_inv, p);
        quo[k] = q;
        for (long i = 0; i <= b.degree(); ++i) {
            rem[k + i] = sub_mod(rem[k + i], mul_mod(q, b.coeff(i), p), p);
        }
    }
    return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp poly_mod(const PolyFp& a, const PolyFp& b) { return poly_divmod(a, b).second; }

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    if (a.modulus() != b.modulus()) throw ModulusMismatch();
    while (!b.is_zero()) {
        PolyFp r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

PolyFp poly_powmod(const PolyFp& base, const BigInt& e, const PolyFp& m) {
    PolyFp acc = poly_mod(PolyFp::constant(1, base.modulus()), m);
    PolyFp b = poly_mod(base, m);
    BigInt k = e;
    while (k > 0) {
        if (bit_test(k, 0)) acc = poly_mod(acc * b, m);
        b = poly_mod(b * b, m);
        k >>= 1;
    }
    return acc;
}

}  // namespace mor
