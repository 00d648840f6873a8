#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace hopfore;
using namespace hopfore::testing;

TEST_CASE("label dimensions", "[labels]") {
    Context fin3 = cyclic_context(3);
    Character eps = fin3.trivial_character();

    CHECK(ModuleLabel::nilpotent(3, eps).dim(fin3) == 3);
    CHECK(ModuleLabel::nilpotent(1, eps).dim(fin3) == 1);
    CHECK(ModuleLabel::non_nilpotent(2, eps, fin3.field().one(), fin3).dim(fin3) == 6);  // t*s with s = 3
}

TEST_CASE("canonicalize collapses beta = 0 and coset-reduces beta != 0", "[labels]") {
    Context ctx = cyclic_context(2);
    const CyclotomicField& f = ctx.field();
    Character sgn = char_of(ctx, f.from_int(-1));

    SECTION("V_t(sigma, 0) = V_{ts}(sigma), character kept verbatim") {
        ModuleLabel l = canonicalize(2, sgn, f.zero(), ctx);
        CHECK(l.is_nilpotent());
        CHECK(l.t() == 4);
        CHECK(l.weight() == sgn);
    }

    SECTION("chi-twist does not change a non-nilpotent label") {
        Scalar beta = f.from_int(3);
        ModuleLabel a = canonicalize(2, sgn, beta, ctx);
        ModuleLabel b = canonicalize(2, ctx.chi() * sgn, beta, ctx);
        CHECK(a == b);
        CHECK(a.weight() == ctx.coset_canonical(sgn));
    }

    SECTION("idempotence") {
        ModuleLabel a = canonicalize(1, sgn, f.from_int(-1), ctx);
        ModuleLabel again = canonicalize(a.t(), a.weight(), a.beta(), ctx);
        CHECK(a == again);
    }
}

TEST_CASE("label parsing examples", "[labels]") {
    Context ctx = cyclic_context(2);

    ModuleLabel nil = parse_label("N(3; [1])", ctx);
    CHECK(nil.is_nilpotent());
    CHECK(nil.t() == 3);
    CHECK(nil.weight() == char_of(ctx, ctx.field().from_int(-1)));

    ModuleLabel per = parse_label("P(2; [0]; -1)", ctx);
    CHECK_FALSE(per.is_nilpotent());
    CHECK(per.t() == 2);
    CHECK(per.weight() == ctx.coset_canonical(ctx.trivial_character()));
    CHECK(per.beta() == ctx.field().from_int(-1));

    SECTION("semantic rejections") {
        CHECK_THROWS_AS(parse_label("P(1; [0]; 0)", ctx), Error);   // beta must be nonzero
        CHECK_THROWS_AS(parse_label("N(0; [0])", ctx), Error);      // t >= 1
        Context inf = infinite_context();
        CHECK_THROWS_AS(parse_label("P(1; [2]; 1)", inf), Error);   // no P labels in INF
    }

    SECTION("syntax rejections carry a position") {
        try {
            parse_label("N(3; [1)", ctx);
            FAIL("expected syntax error");
        } catch (const SyntaxError& e) {
            CHECK(e.position() == 7);
        }
        CHECK_THROWS_AS(parse_label("X(1;[0])", ctx), SyntaxError);
        CHECK_THROWS_AS(parse_label("N(1;[0]) garbage", ctx), SyntaxError);
    }

    SECTION("infinite factors take scalar literal entries") {
        Context inf = infinite_context();
        ModuleLabel l = parse_label("N(2; [ -2/3 ])", inf);
        CHECK(l.weight().values()[0] == inf.field().from_rational(Rational(-2, 3)));
    }
}

TEST_CASE("parse-print round trip on random labels", "[labels]") {
    std::mt19937_64 rng(20250101);

    Context fin = cyclic_square_context(2);  // G = Z/4, conductor 4
    const CyclotomicField& f = fin.field();
    for (int i = 0; i < 250; ++i) {
        long t = 1 + static_cast<long>(rng() % 9);
        Character w = char_of(fin, f.zeta_power(static_cast<long>(rng() % 4)));
        ModuleLabel l = (rng() % 2 == 0)
                            ? ModuleLabel::nilpotent(t, w)
                            : ModuleLabel::non_nilpotent(t, w, random_nonzero_scalar(f, rng, 3), fin);
        ModuleLabel back = parse_label(l.str(fin), fin);
        REQUIRE(back == l);
    }

    Context inf = infinite_context();
    for (int i = 0; i < 250; ++i) {
        long t = 1 + static_cast<long>(rng() % 9);
        Character w = char_of(inf, inf.field().from_rational(random_nonzero_rational(rng)));
        ModuleLabel l = ModuleLabel::nilpotent(t, w);
        REQUIRE(parse_label(l.str(inf), inf) == l);
    }
}

TEST_CASE("decomposition builder keeps canonical sorted multisets", "[labels]") {
    Context ctx = cyclic_context(2);
    const CyclotomicField& f = ctx.field();
    Character eps = ctx.trivial_character();
    Character sgn = char_of(ctx, f.from_int(-1));

    Decomposition::Builder b(ctx);
    b.add(ModuleLabel::non_nilpotent(1, eps, f.one(), ctx), 2);
    b.add(ModuleLabel::nilpotent(2, sgn));
    b.add(ModuleLabel::nilpotent(2, eps));
    b.add(ModuleLabel::nilpotent(2, sgn), 0);  // zero multiplicity disappears
    Decomposition d = b.build();

    REQUIRE(d.summands().size() == 3);
    CHECK(d.summands()[0].first.is_nilpotent());
    CHECK(d.summands()[2].first.is_nilpotent() == false);
    CHECK(d.total_dim() == 2 + 2 + 2 * 2);
    CHECK(d.summand_count() == 4);

    SECTION("dimension assertion") {
        Decomposition::Builder bad(ctx);
        bad.add(ModuleLabel::nilpotent(2, eps));
        CHECK_THROWS_AS(bad.build(5), Error);
    }

    SECTION("equality is multiset equality") {
        Decomposition::Builder c(ctx);
        c.add(ModuleLabel::nilpotent(2, eps));
        c.add(ModuleLabel::nilpotent(2, sgn));
        c.add(ModuleLabel::non_nilpotent(1, eps, f.one(), ctx));
        c.add(ModuleLabel::non_nilpotent(1, eps, f.one(), ctx));
        CHECK(c.build() == d);
    }
}

TEST_CASE("label order sorts nilpotent first, then size, weight, eigenvalue", "[labels]") {
    Context ctx = cyclic_square_context(2);
    const CyclotomicField& f = ctx.field();
    Character eps = ctx.trivial_character();

    ModuleLabel n1 = ModuleLabel::nilpotent(1, eps);
    ModuleLabel n5 = ModuleLabel::nilpotent(5, eps);
    ModuleLabel p1 = ModuleLabel::non_nilpotent(1, eps, f.from_int(-1), ctx);
    ModuleLabel p1b = ModuleLabel::non_nilpotent(1, eps, f.one(), ctx);

    CHECK(n1 < n5);
    CHECK(n5 < p1);
    CHECK((p1 < p1b) != (p1b < p1));
    CHECK_FALSE(p1 < p1);
}
