#include <doctest.h>

#include "mor/errors.hpp"
#include "mor/matrix.hpp"
#include "mor/polyfactor.hpp"
#include "mor/rng.hpp"

using namespace mor;

namespace {

MatrixFp mat(std::uint64_t p, std::vector<std::vector<std::uint64_t>> rows) {
    MatrixFp m(rows.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

MatrixFp random_matrix(std::size_t n, std::uint64_t p, Rng& rng) {
    MatrixFp m(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.below(p));
    }
    return m;
}

MatrixFp random_invertible(std::size_t n, std::uint64_t p, Rng& rng) {
    for (;;) {
        MatrixFp m = random_matrix(n, p, rng);
        if (m.det() != 0) return m;
    }
}

// oracle: determinant of xI - A over the polynomial ring by cofactor
// expansion along the first row
PolyFp charpoly_cofactor(const MatrixFp& a) {
    const std::size_t n = a.dim();
    const std::uint64_t p = a.modulus();
    std::vector<std::vector<PolyFp>> m(n, std::vector<PolyFp>(n, PolyFp::zero(p)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = (i == j) ? PolyFp(p, {sub_mod(0, a.at(i, j), p), 1})
                               : PolyFp::constant(sub_mod(0, a.at(i, j), p), p);
        }
    }
    struct Rec {
        static PolyFp det(const std::vector<std::vector<PolyFp>>& mm, std::vector<std::size_t> cols,
                          std::size_t row, std::uint64_t p) {
            if (cols.empty()) return PolyFp::constant(1, p);
            PolyFp acc = PolyFp::zero(p);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                std::vector<std::size_t> rest = cols;
                rest.erase(rest.begin() + k);
                PolyFp sub = mm[row][cols[k]] * det(mm, rest, row + 1, p);
                acc = (k % 2 == 0) ? acc + sub : acc - sub;
            }
            return acc;
        }
    };
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return Rec::det(m, cols, 0, p);
}

MatrixFp eval_poly_at_matrix(const PolyFp& cp, const MatrixFp& a) {
    MatrixFp acc(a.dim(), a.modulus());
    MatrixFp power = MatrixFp::identity(a.dim(), a.modulus());
    for (std::size_t i = 0; i < cp.coeffs().size(); ++i) {
        if (cp.coeff(i) != 0) {
            MatrixFp scaled(a.dim(), a.modulus());
            for (std::size_t r = 0; r < a.dim(); ++r) {
                for (std::size_t c = 0; c < a.dim(); ++c) {
                    scaled.set(r, c, mul_mod(cp.coeff(i), power.at(r, c), a.modulus()));
                }
            }
            acc = acc + scaled;
        }
        power = power * a;
    }
    return acc;
}

}  // namespace

TEST_CASE("matrix pow examples and the naive-product oracle") {
    const MatrixFp a = mat(5, {{2, 0}, {0, 3}});
    CHECK(a.pow(3) == mat(5, {{3, 0}, {0, 2}}));
    CHECK(MatrixFp::identity(4, 7).pow(123456789) == MatrixFp::identity(4, 7));

    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        MatrixFp m = random_matrix(3, 7, rng);
        const std::uint64_t e = rng.below(65);
        MatrixFp naive = MatrixFp::identity(3, 7);
        for (std::uint64_t i = 0; i < e; ++i) naive = naive * m;
        CHECK(m.pow(e) == naive);
    }
    // pow(A, s+t) = pow(A, s) pow(A, t)
    for (int it = 0; it < 20; ++it) {
        MatrixFp m = random_matrix(3, 11, rng);
        const std::uint64_t s = rng.below(1000), t = rng.below(1000);
        CHECK(m.pow(s + t) == m.pow(s) * m.pow(t));
    }
}

TEST_CASE("matrix inverse and errors") {
    Rng rng(8);
    for (int it = 0; it < 30; ++it) {
        MatrixFp m = random_invertible(4, 101, rng);
        CHECK(m.inv() * m == MatrixFp::identity(4, 101));
    }
    CHECK_THROWS_AS(MatrixFp(3, 5).inv(), SingularMatrix);
    CHECK_THROWS_AS(mat(5, {{1, 0}, {0, 1}}) * MatrixFp(3, 5), DimensionMismatch);
}

TEST_CASE("char_poly pinned examples") {
    // [[0,4],[2,0]] over Z_5: x^2 - 8 = x^2 + 2
    CHECK(char_poly(mat(5, {{0, 4}, {2, 0}})) == PolyFp(5, {2, 0, 1}));

    // diagonal: product of (x - d_i)
    const MatrixFp d = mat(7, {{2, 0, 0}, {0, 3, 0}, {0, 0, 2}});
    PolyFp expect = PolyFp(7, {5, 1}) * PolyFp(7, {4, 1}) * PolyFp(7, {5, 1});
    CHECK(char_poly(d) == expect);
}

TEST_CASE("char_poly matches the cofactor oracle and Cayley-Hamilton") {
    Rng rng(9);
    for (int it = 0; it < 60; ++it) {
        MatrixFp m = random_matrix(4, 7, rng);
        CHECK(char_poly(m) == charpoly_cofactor(m));
    }
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 101ULL}) {
        for (std::size_t n = 2; n <= 6; ++n) {
            for (int it = 0; it < 32; ++it) {
                MatrixFp m = random_matrix(n, p, rng);
                PolyFp cp = char_poly(m);
                CHECK(cp.is_monic());
                CHECK(cp.degree() == static_cast<long>(n));
                CHECK(eval_poly_at_matrix(cp, m) == MatrixFp(n, p));
                // det = (-1)^n * constant term; invertible iff nonzero
                const std::uint64_t sign_det =
                    (n % 2 == 0) ? cp.coeff(0) : sub_mod(0, cp.coeff(0), p);
                CHECK(m.det() == sign_det);
            }
        }
    }
}

TEST_CASE("kernel_basis over extension fields") {
    const auto f25 = ExtField::create(PolyFp(5, {2, 0, 1}));

    MatrixExt zero(f25, 3);
    CHECK(kernel_basis(zero).size() == 3);
    CHECK(kernel_basis(MatrixExt::identity(f25, 3)).empty());

    // A = [[0,4],[2,0]] over Z_5, lam = x in F_25: one basis vector with
    // A v = lam v
    const MatrixFp a = mat(5, {{0, 4}, {2, 0}});
    const ExtElem lam = ExtElem::generator(f25);
    MatrixExt shifted = MatrixExt::from_base(f25, a);
    shifted.set(0, 0, shifted.at(0, 0) - lam);
    shifted.set(1, 1, shifted.at(1, 1) - lam);
    auto basis = kernel_basis(shifted);
    REQUIRE(basis.size() == 1);
    auto av = MatrixExt::from_base(f25, a).apply(basis[0]);
    for (std::size_t i = 0; i < 2; ++i) CHECK(av[i] == lam * basis[0][i]);

    // random singular matrices: every kernel vector annihilates, and the
    // count matches a second independent rank computation
    Rng rng(10);
    for (int it = 0; it < 40; ++it) {
        MatrixFp m = random_matrix(4, 5, rng);
        MatrixExt me = MatrixExt::from_base(f25, m);
        auto kb = kernel_basis(me);
        for (const auto& v : kb) {
            auto mv = me.apply(v);
            for (const auto& x : mv) CHECK(x.is_zero());
        }
        // independent rank: row reduce a transposed copy over Z_p
        MatrixFp t(4, 5);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) t.set(i, j, m.at(j, i));
        }
        std::size_t rank = 0;
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<std::uint64_t> row(4);
            for (std::size_t j = 0; j < 4; ++j) row[j] = t.at(i, j);
            rows.push_back(row);
        }
        std::size_t lead = 0;
        for (std::size_t col = 0; col < 4 && lead < 4; ++col) {
            std::size_t piv = lead;
            while (piv < 4 && rows[piv][col] == 0) ++piv;
            if (piv == 4) continue;
            std::swap(rows[piv], rows[lead]);
            const std::uint64_t s = inv_mod(rows[lead][col], 5);
            for (auto& x : rows[lead]) x = mul_mod(x, s, 5);
            for (std::size_t i2 = 0; i2 < 4; ++i2) {
                if (i2 == lead || rows[i2][col] == 0) continue;
                const std::uint64_t f = rows[i2][col];
                for (std::size_t j2 = 0; j2 < 4; ++j2) {
                    rows[i2][j2] = sub_mod(rows[i2][j2], mul_mod(f, rows[lead][j2], 5), 5);
                }
            }
            ++lead;
            ++rank;
        }
        CHECK(kb.size() == 4 - rank);
    }
}

TEST_CASE("jordan exponent residue") {
    // J = [[1,1],[0,1]] over Z_5, B = J^4: binomial gives m = 4 mod 5
    const MatrixFp j = mat(5, {{1, 1}, {0, 1}});
    const auto f5 = ExtField::create(PolyFp(5, {4, 1}));  // x - 1, lam = 1
    const ExtElem lam1 = ExtElem::generator(f5);
    auto r = jordan_exponent_residue(j, j.pow(4), lam1);
    REQUIRE(r.has_value());
    CHECK(*r == 4);

    // semisimple at lam: absent
    CHECK_FALSE(jordan_exponent_residue(MatrixFp::identity(2, 5), MatrixFp::identity(2, 5), lam1)
                    .has_value());

    // A = 2[[1,1],[0,1]] over Z_7, B = A^3 (verified by the naive oracle)
    const MatrixFp a = mat(7, {{2, 2}, {0, 2}});
    MatrixFp b = MatrixFp::identity(2, 7);
    for (int i = 0; i < 3; ++i) b = b * a;
    const auto f7 = ExtField::create(PolyFp(7, {5, 1}));  // x - 2
    auto r2 = jordan_exponent_residue(a, b, ExtElem::generator(f7));
    REQUIRE(r2.has_value());
    CHECK(*r2 == 3);

    // lam not an eigenvalue
    const auto f5b = ExtField::create(PolyFp(5, {2, 1}));  // x - 3
    CHECK_THROWS_AS(jordan_exponent_residue(j, j.pow(4), ExtElem::generator(f5b)), InvalidInput);
}
