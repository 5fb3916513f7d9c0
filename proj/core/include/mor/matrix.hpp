#ifndef MOR_MATRIX_HPP
#define MOR_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mor/bigint.hpp"
#include "mor/extfield.hpp"
#include "mor/poly.hpp"

namespace mor {

/// Square matrix over Z_p, row-major, entries reduced.
class MatrixFp {
  public:
    MatrixFp() : n_(0), p_(0) {}
    MatrixFp(std::size_t n, std::uint64_t p) : n_(n), p_(p), e_(n * n, 0) {}
    static MatrixFp identity(std::size_t n, std::uint64_t p);

    std::size_t dim() const { return n_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { e_[i * n_ + j] = v % p_; }

    MatrixFp operator+(const MatrixFp& o) const;
    MatrixFp operator*(const MatrixFp& o) const;
    bool operator==(const MatrixFp& o) const { return n_ == o.n_ && p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const MatrixFp& o) const { return !(*this == o); }

    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;

    MatrixFp inv() const;  // throws SingularMatrix
    /// Square-and-multiply; negative exponents go through the inverse.
    MatrixFp pow(const BigInt& e) const;
    std::uint64_t det() const;
    bool is_identity() const;
    bool is_invertible() const { return det() != 0; }

    /// Stable byte key for hash tables (dimension + entries).
    std::string key() const;

  private:
    void check(const MatrixFp& o) const;
    std::size_t n_;
    std::uint64_t p_;
    std::vector<std::uint64_t> e_;
};

/// det(xI - A), monic of degree n. Hessenberg reduction by exact similarity
/// transforms, then the standard recurrence on the Hessenberg form; O(n^3)
/// field operations and no polynomial-ring elimination.
PolyFp char_poly(const MatrixFp& a);

/// Square matrix over an extension field.
class MatrixExt {
  public:
    MatrixExt(ExtFieldPtr ctx, std::size_t n);
    static MatrixExt from_base(const ExtFieldPtr& ctx, const MatrixFp& a);
    static MatrixExt identity(const ExtFieldPtr& ctx, std::size_t n);

    std::size_t dim() const { return n_; }
    const ExtFieldPtr& context() const { return ctx_; }
    ExtElem at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const ExtElem& v);

    MatrixExt operator*(const MatrixExt& o) const;
    MatrixExt operator-(const MatrixExt& o) const;
    std::vector<ExtElem> apply(const std::vector<ExtElem>& v) const;

  private:
    ExtFieldPtr ctx_;
    std::size_t n_;
    std::vector<PolyFp> e_;  // reduced representatives, context held once
};

/// Basis of the null space via Gaussian elimination; empty for full rank.
/// Vector count equals dim - rank.
std::vector<std::vector<ExtElem>> kernel_basis(const MatrixExt& m);

/// Extracts m mod p from a length-2 generalized eigenvector chain of A at
/// lam, given B = A^m: on such a chain B.w = lam^m w + m lam^(m-1) v.
/// Returns nullopt when A is semisimple at lam (no chain exists). Longer
/// chains carry no extra information mod p, so only the first superdiagonal
/// coefficient is read.
std::optional<std::uint64_t> jordan_exponent_residue(const MatrixFp& a, const MatrixFp& b,
                                                     const ExtElem& lam);

}  // namespace mor

#endif
