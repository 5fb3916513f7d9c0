#include <doctest.h>

#include "mor/dlp.hpp"
#include "mor/errors.hpp"

using namespace mor;

namespace {

// oracle: factorization by plain trial division
std::vector<std::pair<BigInt, unsigned>> trial_factor(BigInt n) {
    std::vector<std::pair<BigInt, unsigned>> out;
    for (BigInt q = 2; q * q <= n; ++q) {
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e) out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

TEST_CASE("factor_integer pinned examples and trial-division oracle") {
    auto f = factor_integer(8051);
    CHECK(f.value == 8051);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<BigInt, unsigned>{83, 1});
    CHECK(f.factors[1] == std::pair<BigInt, unsigned>{97, 1});

    // 24 = 5^2 - 1, the unit-group order of F_25
    auto f24 = factor_integer(24);
    REQUIRE(f24.factors.size() == 2);
    CHECK(f24.factors[0] == std::pair<BigInt, unsigned>{2, 3});
    CHECK(f24.factors[1] == std::pair<BigInt, unsigned>{3, 1});

    CHECK(factor_integer(1).factors.empty());
    CHECK(factor_integer(1).value == 1);
    CHECK_THROWS_AS(factor_integer(0), InvalidInput);

    Rng rng(3);
    for (int it = 0; it < 100; ++it) {
        BigInt n = 1 + rng.below(1 << 20);
        auto got = factor_integer(n, rng);
        CHECK(got.value == n);
        auto want = trial_factor(n);
        REQUIRE(got.factors.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.factors[i] == want[i]);
    }

    // a 2^40-scale semiprime forces the rho path
    const BigInt semi = BigInt(1048573) * 1048571;
    auto fs = factor_integer(semi);
    REQUIRE(fs.factors.size() == 2);
    CHECK(fs.factors[0].first == 1048571);
    CHECK(fs.factors[1].first == 1048573);
}

TEST_CASE("element_order") {
    FpUnitGroup z5{5};
    CHECK(element_order(z5, 3, factor_integer(4)) == 4);
    CHECK(element_order(z5, 1, factor_integer(4)) == 1);
    CHECK_THROWS_AS(element_order(z5, 2, factor_integer(3)), InvalidInput);

    // order of lam = x in F_25 divides 24; verify minimality exhaustively
    const auto f25 = ExtField::create(PolyFp(5, {2, 0, 1}));
    ExtUnitGroup units{f25};
    const ExtElem lam = ExtElem::generator(f25);
    const BigInt ord = element_order(units, lam, factor_integer(24));
    CHECK(lam.pow(ord).is_one());
    for (BigInt e = 1; e < ord; ++e) CHECK_FALSE(lam.pow(e).is_one());

    MatrixFp a(2, 5);
    a.set(0, 0, 2);
    a.set(1, 1, 3);
    MatrixGroup mg{MatrixFp::identity(2, 5)};
    CHECK(element_order(mg, a, matrix_order_bound(a)) == 4);
}

TEST_CASE("bsgs examples and exhaustive cross-check") {
    FpUnitGroup z5{5};
    auto e = bsgs(z5, 2, 3, 4);
    REQUIRE(e.has_value());
    CHECK(*e == 3);  // 2^3 = 8 = 3 (mod 5)
    CHECK(*bsgs(z5, 2, 1, 4) == 0);

    // 3 has order 4 mod 5; 2 = 3^? -> 3^3 = 27 = 2
    CHECK(*bsgs(z5, 3, 2, 4) == 3);

    CHECK_THROWS_AS(bsgs(z5, 2, 3, BigInt(100), 10), ResourceLimit);

    Rng rng(4);
    FpUnitGroup z10007{10007};
    const FactoredInteger ord = factor_integer(10006);
    for (int it = 0; it < 50; ++it) {
        std::uint64_t g = 2 + rng.below(10004);
        const BigInt og = element_order(z10007, g, ord);
        if (og > 10000) continue;  // keep exhaustive oracle cheap
        const BigInt e_true = rng.below_big(og);
        const std::uint64_t target = static_cast<std::uint64_t>(
            group_pow(z10007, g, e_true));
        auto got = bsgs(z10007, g, target, og);
        REQUIRE(got.has_value());
        auto brute = exhaustive_dlp(z10007, g, target, og);
        REQUIRE(brute.has_value());
        CHECK(*got == *brute);
        CHECK(group_pow(z10007, g, *got) == target);
    }
}

TEST_CASE("pohlig_hellman") {
    // base of order 24 in F_25, target = base^19
    const auto f25 = ExtField::create(PolyFp(5, {2, 0, 1}));
    ExtUnitGroup units{f25};
    const FactoredInteger unit_ord = factor_integer(24);
    // x itself has order 8; x + 1 generates the full unit group
    ExtElem gen(f25, PolyFp(5, {1, 1}));
    REQUIRE(element_order(units, gen, unit_ord) == 24);
    Residue r = pohlig_hellman(units, gen, gen.pow(19), unit_ord);
    CHECK(r.r == 19);
    CHECK(r.modulus == 24);

    // prime order degenerates to a single bsgs call
    FpUnitGroup z11{11};
    // 3 has order 5 mod 11: 3,9,27=5,15=4,12=1
    FactoredInteger five = factor_integer(5);
    CHECK(pohlig_hellman(z11, 3, 9, five).r == bsgs(z11, 3, 9, 5).value());

    // agreement with bsgs on random instances of smooth order
    Rng rng(5);
    FpUnitGroup zp{9973};
    const FactoredInteger ord = factor_integer(9972);
    for (int it = 0; it < 500; ++it) {
        std::uint64_t g = 2 + rng.below(9970);
        const BigInt og = element_order(zp, g, ord);
        if (og > 10000) continue;
        const FactoredInteger og_f = FactoredInteger::of_divisor(ord, og);
        const BigInt e_true = rng.below_big(og);
        const std::uint64_t target = static_cast<std::uint64_t>(group_pow(zp, g, e_true));
        Residue ph = pohlig_hellman(zp, g, target, og_f);
        CHECK(ph.r == *bsgs(zp, g, target, og));
        CHECK(ph.r == e_true);
    }

    // target outside the cyclic subgroup
    FpUnitGroup z7{7};
    // 2 has order 3 mod 7 ({1,2,4}); 3 is outside
    CHECK_THROWS_AS(pohlig_hellman(z7, 2, 3, factor_integer(3)), NoSolution);
    CHECK_FALSE(bsgs(z7, 2, 3, 3).has_value());
}

TEST_CASE("crt_combine") {
    Residue r = crt_combine({Residue(3, 4), Residue(1, 3)});
    CHECK(r.r == 7);
    CHECK(r.modulus == 12);
    // enumeration oracle: 7 is the unique solution below 12
    for (int x = 0; x < 12; ++x) {
        const bool fits = (x % 4 == 3) && (x % 3 == 1);
        CHECK(fits == (x == 7));
    }

    Residue same = crt_combine({Residue(5, 6), Residue(5, 6)});
    CHECK(same.r == 5);
    CHECK(same.modulus == 6);

    CHECK_THROWS_AS(crt_combine({Residue(1, 4), Residue(0, 6)}), Inconsistent);  // 1 vs 0 mod 2
    CHECK_THROWS_AS(crt_combine({}), InvalidInput);

    // result reduces correctly modulo every input modulus
    Rng rng(6);
    for (int it = 0; it < 200; ++it) {
        const BigInt m1 = 2 + rng.below(50), m2 = 2 + rng.below(50);
        const BigInt x = rng.below(10000);
        Residue c = crt_combine({Residue(x % m1, m1), Residue(x % m2, m2)});
        CHECK(c.modulus == boost::multiprecision::lcm(m1, m2));
        CHECK(c.r % m1 == x % m1);
        CHECK(c.r % m2 == x % m2);
    }
}

TEST_CASE("solver dispatch equivalence") {
    FpUnitGroup zp{10007};
    const FactoredInteger ord_all = factor_integer(10006);
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        std::uint64_t g = 2 + rng.below(10004);
        const BigInt og = element_order(zp, g, ord_all);
        const FactoredInteger og_f = FactoredInteger::of_divisor(ord_all, og);
        const BigInt e_true = rng.below_big(og);
        const std::uint64_t target = static_cast<std::uint64_t>(group_pow(zp, g, e_true));
        for (SolverKind kind :
             {SolverKind::Exhaustive, SolverKind::Bsgs, SolverKind::PohligHellman}) {
            SolverConfig cfg{kind, 1ULL << 40};
            Residue r = solve_dlp(zp, g, target, og_f, cfg);
            CHECK(r.r == e_true % og);
            CHECK(r.modulus == og);
        }
    }
}
