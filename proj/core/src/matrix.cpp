#include "mor/matrix.hpp"

#include <algorithm>

#include "mor/errors.hpp"

namespace mor {

MatrixFp MatrixFp::identity(std::size_t n, std::uint64_t p) {
    MatrixFp m(n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void MatrixFp::check(const MatrixFp& o) const {
    if (p_ != o.p_) throw ModulusMismatch();
    if (n_ != o.n_) throw DimensionMismatch();
}

MatrixFp MatrixFp::operator+(const MatrixFp& o) const {
    check(o);
    MatrixFp r(n_, p_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = add_mod(e_[k], o.e_[k], p_);
    return r;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
    check(o);
    MatrixFp r(n_, p_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            std::uint64_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                r.e_[i * n_ + j] = add_mod(r.e_[i * n_ + j], mul_mod(a, o.at(k, j), p_), p_);
            }
        }
    }
    return r;
}

std::vector<std::uint64_t> MatrixFp::apply(const std::vector<std::uint64_t>& v) const {
    if (v.size() != n_) throw DimensionMismatch();
    std::vector<std::uint64_t> r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            r[i] = add_mod(r[i], mul_mod(at(i, j), v[j] % p_, p_), p_);
        }
    }
    return r;
}

MatrixFp MatrixFp::inv() const {
    // Gauss-Jordan on [A | I]
    MatrixFp a = *this;
    MatrixFp r = identity(n_, p_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && a.at(piv, col) == 0) ++piv;
        if (piv == n_) throw SingularMatrix();
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a.e_[piv * n_ + j], a.e_[col * n_ + j]);
                std::swap(r.e_[piv * n_ + j], r.e_[col * n_ + j]);
            }
        }
        std::uint64_t s = inv_mod(a.at(col, col), p_);
        for (std::size_t j = 0; j < n_; ++j) {
            a.e_[col * n_ + j] = mul_mod(a.e_[col * n_ + j], s, p_);
            r.e_[col * n_ + j] = mul_mod(r.e_[col * n_ + j], s, p_);
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == col) continue;
            std::uint64_t f = a.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                a.e_[i * n_ + j] = sub_mod(a.e_[i * n_ + j], mul_mod(f, a.e_[col * n_ + j], p_), p_);
                r.e_[i * n_ + j] = sub_mod(r.e_[i * n_ + j], mul_mod(f, r.e_[col * n_ + j], p_), p_);
            }
        }
    }
    return r;
}

MatrixFp MatrixFp::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(-e);
    MatrixFp acc = identity(n_, p_);
    MatrixFp base = *this;
    BigInt k = e;
    while (k > 0) {
        if (bit_test(k, 0)) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::uint64_t MatrixFp::det() const {
    MatrixFp a = *this;
    std::uint64_t d = 1;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && a.at(piv, col) == 0) ++piv;
        if (piv == n_) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a.e_[piv * n_ + j], a.e_[col * n_ + j]);
            d = sub_mod(0, d, p_);
        }
        d = mul_mod(d, a.at(col, col), p_);
        std::uint64_t s = inv_mod(a.at(col, col), p_);
        for (std::size_t i = col + 1; i < n_; ++i) {
            std::uint64_t f = mul_mod(a.at(i, col), s, p_);
            if (f == 0) continue;
            for (std::size_t j = col; j < n_; ++j) {
                a.e_[i * n_ + j] = sub_mod(a.e_[i * n_ + j], mul_mod(f, a.e_[col * n_ + j], p_), p_);
            }
        }
    }
    return d;
}

bool MatrixFp::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

std::string MatrixFp::key() const {
    std::string out;
    out.reserve(8 + e_.size() * 8);
    auto put = [&out](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    };
    put(n_);
    for (auto v : e_) put(v);
    return out;
}

PolyFp char_poly(const MatrixFp& a) {
    const std::size_t n = a.dim();
    const std::uint64_t p = a.modulus();
    MatrixFp h = a;

    // Hessenberg reduction with exact pivoting: row op plus the inverse
    // column op keep similarity.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h.at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k) {
                std::uint64_t t = h.at(piv, k);
                h.set(piv, k, h.at(j + 1, k));
                h.set(j + 1, k, t);
            }
            for (std::size_t k = 0; k < n; ++k) {
                std::uint64_t t = h.at(k, piv);
                h.set(k, piv, h.at(k, j + 1));
                h.set(k, j + 1, t);
            }
        }
        std::uint64_t pivot_inv = inv_mod(h.at(j + 1, j), p);
        for (std::size_t i = j + 2; i < n; ++i) {
            std::uint64_t m = mul_mod(h.at(i, j), pivot_inv, p);
            if (m == 0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                h.set(i, k, sub_mod(h.at(i, k), mul_mod(m, h.at(j + 1, k), p), p));
            }
            for (std::size_t k = 0; k < n; ++k) {
                h.set(k, j + 1, add_mod(h.at(k, j + 1), mul_mod(m, h.at(k, i), p), p));
            }
        }
    }

    // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i}^{k-1} h_{j+1,j}) p_{i-1}
    std::vector<PolyFp> cp(n + 1, PolyFp::zero(p));
    cp[0] = PolyFp::constant(1, p);
    for (std::size_t k = 1; k <= n; ++k) {
        PolyFp xm(p, {sub_mod(0, h.at(k - 1, k - 1), p), 1});
        cp[k] = xm * cp[k - 1];
        std::uint64_t prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = mul_mod(prod, h.at(i, i - 1), p);
            if (prod == 0) break;
            std::uint64_t c = mul_mod(h.at(i - 1, k - 1), prod, p);
            if (c != 0) cp[k] = cp[k] - cp[i - 1].scaled(c);
        }
    }
    return cp[n];
}

MatrixExt::MatrixExt(ExtFieldPtr ctx, std::size_t n)
    : ctx_(std::move(ctx)), n_(n), e_(n * n, PolyFp::zero(ctx_->p())) {}

MatrixExt MatrixExt::from_base(const ExtFieldPtr& ctx, const MatrixFp& a) {
    if (ctx->p() != a.modulus()) throw ModulusMismatch();
    MatrixExt m(ctx, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            m.e_[i * a.dim() + j] = PolyFp::constant(a.at(i, j), ctx->p());
        }
    }
    return m;
}

MatrixExt MatrixExt::identity(const ExtFieldPtr& ctx, std::size_t n) {
    MatrixExt m(ctx, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = PolyFp::constant(1, ctx->p());
    return m;
}

ExtElem MatrixExt::at(std::size_t i, std::size_t j) const { return ExtElem(ctx_, e_[i * n_ + j]); }

void MatrixExt::set(std::size_t i, std::size_t j, const ExtElem& v) {
    if (!(*v.context() == *ctx_)) throw ContextMismatch();
    e_[i * n_ + j] = v.rep();
}

MatrixExt MatrixExt::operator*(const MatrixExt& o) const {
    if (!(*ctx_ == *o.ctx_)) throw ContextMismatch();
    if (n_ != o.n_) throw DimensionMismatch();
    MatrixExt r(ctx_, n_);
    const PolyFp& f = ctx_->modulus_poly();
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const PolyFp& a = e_[i * n_ + k];
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                r.e_[i * n_ + j] = poly_mod(r.e_[i * n_ + j] + a * o.e_[k * n_ + j], f);
            }
        }
    }
    return r;
}

MatrixExt MatrixExt::operator-(const MatrixExt& o) const {
    if (!(*ctx_ == *o.ctx_)) throw ContextMismatch();
    if (n_ != o.n_) throw DimensionMismatch();
    MatrixExt r(ctx_, n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

std::vector<ExtElem> MatrixExt::apply(const std::vector<ExtElem>& v) const {
    if (v.size() != n_) throw DimensionMismatch();
    std::vector<ExtElem> r(n_, ExtElem::zero(ctx_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) r[i] = r[i] + at(i, j) * v[j];
    }
    return r;
}

std::vector<std::vector<ExtElem>> kernel_basis(const MatrixExt& m) {
    const std::size_t n = m.dim();
    const ExtFieldPtr& ctx = m.context();
    // reduced row echelon form
    std::vector<std::vector<ExtElem>> r(n, std::vector<ExtElem>(n, ExtElem::zero(ctx)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i][j] = m.at(i, j);
    }
    std::vector<long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && r[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(r[piv], r[row]);
        ExtElem s = r[row][col].inv();
        for (std::size_t j = 0; j < n; ++j) r[row][j] = r[row][j] * s;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || r[i][col].is_zero()) continue;
            ExtElem f = r[i][col];
            for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] - f * r[row][j];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<ExtElem>> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<ExtElem> v(n, ExtElem::zero(ctx));
        v[fc] = ExtElem::one(ctx);
        for (std::size_t col = 0; col < n; ++col) {
            if (pivot_of_col[col] >= 0) v[col] = -r[static_cast<std::size_t>(pivot_of_col[col])][fc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::uint64_t> jordan_exponent_residue(const MatrixFp& a, const MatrixFp& b,
                                                     const ExtElem& lam) {
    if (a.dim() != b.dim()) throw DimensionMismatch();
    if (a.modulus() != b.modulus()) throw ModulusMismatch();
    const ExtFieldPtr& ctx = lam.context();
    if (ctx->p() != a.modulus()) throw ModulusMismatch();
    PolyFp cp = char_poly(a);
    if (!eval_poly(cp, lam).is_zero()) throw InvalidInput("lam is not an eigenvalue of A");
    if (lam.is_zero()) throw InvalidInput("zero eigenvalue has no exponent residue");

    const std::size_t n = a.dim();
    MatrixExt ae = MatrixExt::from_base(ctx, a);
    MatrixExt be = MatrixExt::from_base(ctx, b);
    MatrixExt shifted = ae;
    for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, ae.at(i, i) - lam);

    auto nonzero = [](const std::vector<ExtElem>& v) {
        for (const auto& x : v) {
            if (!x.is_zero()) return true;
        }
        return false;
    };

    // look for w with (A - lam)w != 0, (A - lam)^2 w = 0
    for (const auto& w : kernel_basis(shifted * shifted)) {
        std::vector<ExtElem> v = shifted.apply(w);
        if (!nonzero(v)) continue;

        std::size_t k = 0;
        while (v[k].is_zero()) ++k;
        std::vector<ExtElem> bv = be.apply(v);
        ExtElem mu = bv[k] * v[k].inv();  // lam^m, read off the true eigenvector
        for (std::size_t i = 0; i < n; ++i) {
            if (!(bv[i] == mu * v[i])) throw InvalidInput("B does not act as a power of A on the chain");
        }
        std::vector<ExtElem> bw = be.apply(w);
        // B.w - mu.w = m lam^(m-1) v
        ExtElem coeff = (bw[k] - mu * w[k]) * v[k].inv();
        for (std::size_t i = 0; i < n; ++i) {
            if (!(bw[i] - mu * w[i] == coeff * v[i])) {
                throw InvalidInput("B does not act as a power of A on the chain");
            }
        }
        ExtElem m_ext = coeff * lam * mu.inv();
        if (!m_ext.in_prime_field()) throw InvalidInput("extracted exponent lies outside Z_p");
        return m_ext.as_base();
    }
    return std::nullopt;  // semisimple at lam
}

}  // namespace mor
