#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfore/cyclotomic.hpp"
#include "hopfore/qcalc.hpp"
#include "test_support.hpp"

using namespace hopfore;
using hopfore::testing::random_nonzero_scalar;
using hopfore::testing::random_scalar;

namespace {

std::vector<Rational> poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> p;
    for (long c : coeffs) p.emplace_back(c);
    return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: known small cases", "[scalars]") {
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));      // x - 1
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));       // x + 1
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));    // x^2 + 1
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));   // x^2 - x + 1
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic polynomials: product over divisors is x^m - 1", "[scalars]") {
    for (unsigned long m = 1; m <= 30; ++m) {
        detail::Poly product{Rational(1)};
        for (unsigned long d = 1; d <= m; ++d)
            if (m % d == 0) product = detail::poly_mul(product, cyclotomic_polynomial(d));
        std::vector<Rational> expect(m + 1, Rational(0));
        expect[0] = -1;
        expect[m] = 1;
        REQUIRE(product == expect);
        REQUIRE(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
}

TEST_CASE("field arithmetic in Q(zeta_4)", "[scalars]") {
    const CyclotomicField& f = CyclotomicField::of(4);
    Scalar one = f.one();
    Scalar z = f.zeta_power(1);

    SECTION("(1+z)(1-z) = 2 and the derived inverse") {
        Scalar p = (one + z) * (one - z);
        CHECK(p == f.from_int(2));
        Scalar inv = (one + z).inverse();
        CHECK(inv == (one - z) * f.from_rational(Rational(1, 2)));
        CHECK(inv * (one + z) == one);
    }

    SECTION("additive identity") {
        Scalar a = f.from_rational(Rational(7, 3)) + z;
        CHECK(a + f.zero() == a);
    }

    SECTION("division errors") {
        CHECK_THROWS_AS(f.zero().inverse(), Error);
        CHECK_THROWS_AS(one / f.zero(), Error);
    }

    SECTION("field mismatch is rejected") {
        const CyclotomicField& g = CyclotomicField::of(3);
        CHECK_THROWS_AS(f.one() + g.one(), Error);
    }
}

TEST_CASE("field axioms on random elements", "[scalars]") {
    std::mt19937_64 rng(20240811);
    for (unsigned long m : {3ul, 4ul, 8ul, 9ul}) {
        const CyclotomicField& f = CyclotomicField::of(m);
        for (int i = 0; i < 125; ++i) {
            Scalar a = random_nonzero_scalar(f, rng, 4);
            Scalar b = random_nonzero_scalar(f, rng, 4);
            Scalar c = random_scalar(f, rng, 4);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * a.inverse() == f.one());
        }
    }
}

TEST_CASE("multiplicative order decisions", "[scalars]") {
    const CyclotomicField& f4 = CyclotomicField::of(4);
    CHECK(f4.zeta_power(1).multiplicative_order() == 4ul);
    CHECK(f4.from_int(-1).multiplicative_order() == 2ul);
    CHECK(f4.one().multiplicative_order() == 1ul);
    CHECK_FALSE(f4.from_int(2).multiplicative_order().has_value());
    const CyclotomicField& f9 = CyclotomicField::of(9);
    CHECK(f9.zeta_power(1).multiplicative_order() == 9ul);
    CHECK(f9.zeta_power(3).multiplicative_order() == 3ul);
    CHECK_FALSE(f9.from_rational(Rational(1, 2)).multiplicative_order().has_value());
    CHECK_THROWS_AS(f9.zero().multiplicative_order(), Error);
}

TEST_CASE("q-calculus basics", "[scalars]") {
    const CyclotomicField& f = CyclotomicField::of(1);
    std::mt19937_64 rng(7);
    Scalar q = random_nonzero_scalar(f, rng);

    CHECK(q_integer(0, q).is_zero());
    CHECK(q_binomial(2, 1, q) == f.one() + q);

    // C(4,2)_q = 1 + q + 2q^2 + q^3 + q^4
    Scalar expect = f.one() + q + f.from_int(2) * q.pow(2) + q.pow(3) + q.pow(4);
    CHECK(q_binomial(4, 2, q) == expect);

    CHECK(q_binomial(2, 1, f.from_int(-1)).is_zero());
    CHECK_THROWS_AS(q_binomial(2, 3, q), Error);
}

TEST_CASE("q-binomials at q = 1 are binomial coefficients", "[scalars]") {
    const CyclotomicField& f = CyclotomicField::of(1);
    Scalar one = f.one();
    for (long n = 0; n <= 12; ++n)
        for (long i = 0; i <= n; ++i)
            REQUIRE(q_binomial(n, i, one) == f.from_rational(Rational(binomial(n, i))));
}

TEST_CASE("q-binomials vanish at primitive roots of unity", "[scalars]") {
    for (unsigned long s = 2; s <= 8; ++s) {
        const CyclotomicField& f = CyclotomicField::of(s);
        Scalar q = f.zeta_power(1);
        REQUIRE(q.multiplicative_order() == s);
        for (long i = 1; i < static_cast<long>(s); ++i)
            REQUIRE(q_binomial(static_cast<long>(s), i, q).is_zero());
    }
}

TEST_CASE("q-binomial recurrence agrees with the factorial quotient when defined", "[scalars]") {
    std::mt19937_64 rng(99);
    const CyclotomicField& f = CyclotomicField::of(8);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar q = random_nonzero_scalar(f, rng, 3);
        long n = 1 + static_cast<long>(rng() % 8);
        long i = static_cast<long>(rng() % (n + 1));
        Scalar denom = q_factorial(i, q) * q_factorial(n - i, q);
        if (denom.is_zero()) continue;
        REQUIRE(q_binomial(n, i, q) == q_factorial(n, q) / denom);
    }
}

TEST_CASE("q-integer shift identity over random tuples", "[scalars]") {
    // q^{-j-1}(l-i-1)_q - q^{1-m}(m-j-1)_q = q^{-j}(l-i-2)_q - q^{1-m}(m-j-2)_q
    std::mt19937_64 rng(20250811);
    int done = 0;
    while (done < 200) {
        unsigned long conductor = (done % 2 == 0) ? 1ul : 12ul;
        const CyclotomicField& f = CyclotomicField::of(conductor);
        Scalar q = random_nonzero_scalar(f, rng, 3);
        long l = 2 + static_cast<long>(rng() % 8);
        long m = 2 + static_cast<long>(rng() % 8);
        long i = static_cast<long>(rng() % (l - 1));
        long j = static_cast<long>(rng() % (m - 1));
        Scalar lhs = q.pow(-j - 1) * q_integer(l - i - 1, q) - q.pow(1 - m) * q_integer(m - j - 1, q);
        Scalar rhs = q.pow(-j) * q_integer(l - i - 2, q) - q.pow(1 - m) * q_integer(m - j - 2, q);
        REQUIRE(lhs == rhs);
        ++done;
    }
}

TEST_CASE("scalar literals parse and print", "[scalars]") {
    const CyclotomicField& f = CyclotomicField::of(8);

    CHECK(parse_scalar(f, "2") == f.from_int(2));
    CHECK(parse_scalar(f, "-1/3") == f.from_rational(Rational(-1, 3)));
    CHECK(parse_scalar(f, "z^2") == f.zeta_power(2));
    CHECK(parse_scalar(f, " 1/2*z^3 + 2 ") == f.from_rational(Rational(1, 2)) * f.zeta_power(3) + f.from_int(2));
    CHECK(parse_scalar(f, "1/2 z^3+2") == parse_scalar(f, "1/2*z^3 + 2"));
    CHECK(parse_scalar(f, "z^8") == f.one());  // exponents reduce mod the conductor
    CHECK(parse_scalar(f, "-z") == -f.zeta_power(1));

    CHECK_THROWS_AS(parse_scalar(f, "z^"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar(f, "1//2"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar(f, "q + 1"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar(f, "1 + "), SyntaxError);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Scalar s = random_scalar(f, rng);
        REQUIRE(parse_scalar(f, s.str()) == s);
    }
}

TEST_CASE("scalar total order is a strict order consistent with equality", "[scalars]") {
    const CyclotomicField& f = CyclotomicField::of(4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(f, rng);
        Scalar b = random_scalar(f, rng);
        bool lt = a < b, gt = b < a, eq = a == b;
        REQUIRE((lt ? 1 : 0) + (gt ? 1 : 0) + (eq ? 1 : 0) == 1);
        REQUIRE_FALSE(a < a);
    }
}
