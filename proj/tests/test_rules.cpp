#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfore/rules.hpp"
#include "test_support.hpp"

using namespace hopfore;
using namespace hopfore::testing;

namespace {

Decomposition expect(const Context& ctx, std::initializer_list<std::pair<ModuleLabel, long>> items) {
    Decomposition::Builder b(ctx);
    for (const auto& [label, mult] : items) b.add(label, mult);
    return b.build();
}

}  // namespace

TEST_CASE("infinite-regime ladder", "[rules]") {
    Context ctx = infinite_context();
    const CyclotomicField& f = ctx.field();
    Character lam = char_of(ctx, f.from_int(3));
    Character sig = char_of(ctx, f.from_rational(Rational(-1, 2)));
    auto nil = [&](long t, const Character& w) { return ModuleLabel::nilpotent(t, w); };
    Character w = lam * sig;

    CHECK(tensor_decompose(nil(2, lam), nil(3, sig), ctx) ==
          expect(ctx, {{nil(4, w), 1}, {nil(2, ctx.twist(w, 1)), 1}}));

    CHECK(decompose_nil_nil_infinite(1, 5, lam, sig, ctx) == expect(ctx, {{nil(5, w), 1}}));

    CHECK(decompose_nil_nil_infinite(3, 3, lam, sig, ctx) ==
          expect(ctx, {{nil(5, w), 1}, {nil(3, ctx.twist(w, 1)), 1}, {nil(1, ctx.twist(w, 2)), 1}}));

    CHECK(decompose_nil_nil_infinite(2, 2, lam, sig, ctx) ==
          expect(ctx, {{nil(3, w), 1}, {nil(1, ctx.twist(w, 1)), 1}}));

    SECTION("symmetric in the two dimensions") {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 60; ++i) {
            long a = 1 + static_cast<long>(rng() % 8), b = 1 + static_cast<long>(rng() % 8);
            REQUIRE(decompose_nil_nil_infinite(a, b, lam, sig, ctx) ==
                    decompose_nil_nil_infinite(b, a, lam, sig, ctx));
        }
    }

    SECTION("regime guard") {
        Context fin = cyclic_context(2);
        CHECK_THROWS_AS(
            decompose_nil_nil_infinite(2, 2, fin.trivial_character(), fin.trivial_character(), fin),
            Error);
    }
}

TEST_CASE("finite-regime string products", "[rules]") {
    Context ctx = cyclic_context(2);
    const CyclotomicField& f = ctx.field();
    Character lam = char_of(ctx, f.from_int(-1));
    Character sig = ctx.trivial_character();
    Character w = lam * sig;
    auto nil = [&](long t, const Character& c) { return ModuleLabel::nilpotent(t, c); };

    CHECK(decompose_nil_nil_finite(3, lam, 1, sig, ctx) == expect(ctx, {{nil(3, w), 1}}));

    CHECK(decompose_nil_nil_finite(3, lam, 3, sig, ctx) ==
          expect(ctx, {{nil(5, w), 1}, {nil(3, ctx.twist(w, 1)), 1}, {nil(1, w), 1}}));

    CHECK(decompose_nil_nil_finite(2, lam, 2, sig, ctx) ==
          expect(ctx, {{nil(2, w), 1}, {nil(2, ctx.twist(w, 1)), 1}}));

    CHECK(tensor_decompose(nil(2, lam), nil(2, sig), ctx) ==
          expect(ctx, {{nil(2, w), 1}, {nil(2, ctx.twist(w, 1)), 1}}));

    SECTION("commutative and dimension-exact over a sweep") {
        for (unsigned long s : {2ul, 3ul}) {
            Context c = cyclic_context(s);
            Character a = char_of(c, c.field().zeta_power(1));
            Character b = c.trivial_character();
            for (long n = 1; n <= 12; ++n)
                for (long t = 1; t <= 12; ++t) {
                    Decomposition d = decompose_nil_nil_finite(n, a, t, b, c);
                    REQUIRE(d.total_dim() == n * t);
                    REQUIRE(d == decompose_nil_nil_finite(t, b, n, a, c));
                    if (n >= 2 && t >= 2) {
                        REQUIRE(d.all_nilpotent());
                        REQUIRE(d.summand_count() == std::min(n, t));
                    }
                }
        }
    }
}

TEST_CASE("finite-regime mixed products and the order twist", "[rules]") {
    Context ctx = cyclic_square_context(2);  // G = Z/4, s = 2
    const CyclotomicField& f = ctx.field();
    Character lam = char_of(ctx, f.zeta_power(1));  // faithful: lam(a^2) = -1
    Character sig = ctx.trivial_character();
    Scalar beta = f.from_int(1);
    Character w = sig * lam;

    REQUIRE(ctx.eval_a_power_s(lam) == f.from_int(-1));

    auto per = [&](long t, const Scalar& b) { return ModuleLabel::non_nilpotent(t, w, b, ctx); };

    SECTION("p = 1 passes the periodic factor through") {
        for (long t = 1; t <= 3; ++t)
            CHECK(decompose_nil_nonnil_finite(1, lam, t, sig, beta, TensorSide::nil_left, ctx) ==
                  expect(ctx, {{per(t, beta), 1}}));
    }

    SECTION("p = 3, t = 1: one short and one long string of eigenvectors") {
        CHECK(decompose_nil_nonnil_finite(3, lam, 1, sig, beta, TensorSide::nil_left, ctx) ==
              expect(ctx, {{per(1, beta), 1}, {per(2, beta), 1}}));
    }

    SECTION("right order twists the eigenvalue by lam(a^s)") {
        CHECK(decompose_nil_nonnil_finite(1, lam, 1, sig, beta, TensorSide::nil_right, ctx) ==
              expect(ctx, {{per(1, f.from_int(-1) * beta), 1}}));
    }

    SECTION("twist relation holds for every summand over a sweep") {
        for (long p = 1; p <= 6; ++p)
            for (long t = 1; t <= 3; ++t) {
                Decomposition left = decompose_nil_nonnil_finite(p, lam, t, sig, beta, TensorSide::nil_left, ctx);
                Decomposition right =
                    decompose_nil_nonnil_finite(p, lam, t, sig, beta, TensorSide::nil_right, ctx);
                REQUIRE(left.total_dim() == right.total_dim());
                Decomposition::Builder mapped(ctx);
                for (const auto& [label, mult] : left.summands()) {
                    REQUIRE_FALSE(label.is_nilpotent());
                    mapped.add(ModuleLabel::non_nilpotent(label.t(), label.weight(),
                                                          ctx.eval_a_power_s(lam) * label.beta(), ctx),
                               mult);
                }
                REQUIRE(mapped.build() == right);
            }
    }

    SECTION("label dispatch covers both mixed orders") {
        ModuleLabel n3 = ModuleLabel::nilpotent(3, lam);
        ModuleLabel p1 = ModuleLabel::non_nilpotent(1, sig, beta, ctx);
        CHECK(tensor_decompose(n3, p1, ctx) ==
              decompose_nil_nonnil_finite(3, lam, 1, sig, beta, TensorSide::nil_left, ctx));
        CHECK(tensor_decompose(p1, n3, ctx) ==
              decompose_nil_nonnil_finite(3, lam, 1, sig, beta, TensorSide::nil_right, ctx));
        CHECK(tensor_decompose(n3, p1, ctx) != tensor_decompose(p1, n3, ctx));
    }
}

TEST_CASE("products of two periodic modules", "[rules]") {
    Context ctx = cyclic_square_context(2);
    const CyclotomicField& f = ctx.field();
    Character sig = ctx.trivial_character();
    Character lam = char_of(ctx, f.zeta_power(2));  // lam(a^2) = zeta_4^4 = 1
    Character w = sig * lam;
    REQUIRE(ctx.eval_a_power_s(lam) == f.one());

    SECTION("generic case collapses the twists to multiplicity s") {
        Decomposition d = decompose_nonnil_nonnil_finite(1, sig, f.one(), 1, lam, f.one(), ctx);
        CHECK(d == expect(ctx, {{ModuleLabel::non_nilpotent(1, w, f.from_int(2), ctx), 2}}));
    }

    SECTION("degenerate case produces the s distinct nilpotent modules") {
        Decomposition d = decompose_nonnil_nonnil_finite(1, sig, f.one(), 1, lam, f.from_int(-1), ctx);
        CHECK(d == expect(ctx, {{ModuleLabel::nilpotent(2, w), 1},
                                {ModuleLabel::nilpotent(2, ctx.twist(w, 1)), 1}}));
    }

    SECTION("dimension identity across a sweep") {
        std::mt19937_64 rng(55);
        for (int i = 0; i < 50; ++i) {
            long p = 1 + static_cast<long>(rng() % 4), t = 1 + static_cast<long>(rng() % 4);
            Scalar alpha = random_nonzero_scalar(f, rng, 2);
            Scalar beta = random_nonzero_scalar(f, rng, 2);
            Decomposition d = decompose_nonnil_nonnil_finite(p, sig, alpha, t, lam, beta, ctx);
            REQUIRE(d.total_dim() == p * t * 4);
        }
    }
}

TEST_CASE("dimension conservation on random pairs in all regimes", "[rules]") {
    std::mt19937_64 rng(987);

    SECTION("infinite regime") {
        Context ctx = infinite_context();
        for (int i = 0; i < 150; ++i) {
            Character a = char_of(ctx, ctx.field().from_rational(random_nonzero_rational(rng)));
            Character b = char_of(ctx, ctx.field().from_rational(random_nonzero_rational(rng)));
            ModuleLabel la = ModuleLabel::nilpotent(1 + static_cast<long>(rng() % 10), a);
            ModuleLabel lb = ModuleLabel::nilpotent(1 + static_cast<long>(rng() % 10), b);
            Decomposition d = tensor_decompose(la, lb, ctx);
            REQUIRE(d.total_dim() == la.dim(ctx) * lb.dim(ctx));
        }
    }

    SECTION("finite regimes") {
        for (unsigned long s : {2ul, 3ul}) {
            Context ctx = cyclic_square_context(s);
            const CyclotomicField& f = ctx.field();
            for (int i = 0; i < 200; ++i) {
                auto random_label = [&]() {
                    Character c = char_of(ctx, f.zeta_power(static_cast<long>(rng() % (s * s))));
                    long t = 1 + static_cast<long>(rng() % 6);
                    if (rng() % 2 == 0) return ModuleLabel::nilpotent(t, c);
                    return ModuleLabel::non_nilpotent(1 + static_cast<long>(rng() % 3), c,
                                                      random_nonzero_scalar(f, rng, 2), ctx);
                };
                ModuleLabel la = random_label(), lb = random_label();
                Decomposition d = tensor_decompose(la, lb, ctx);
                REQUIRE(d.total_dim() == la.dim(ctx) * lb.dim(ctx));
            }
        }
    }
}

TEST_CASE("special-case formulas", "[rules]") {
    Context ctx = cyclic_context(2);
    const CyclotomicField& f = ctx.field();
    Character eps = ctx.trivial_character();
    Character lam = char_of(ctx, f.from_int(-1));

    SECTION("periodic times the trivial 2s string, with the zero module dropped") {
        ModuleLabel p1 = ModuleLabel::non_nilpotent(1, eps, f.from_int(5), ctx);
        ModuleLabel n4 = ModuleLabel::nilpotent(4, eps);
        auto d = decompose_special(p1, n4, ctx);
        REQUIRE(d.has_value());
        CHECK(*d == expect(ctx, {{ModuleLabel::non_nilpotent(2, eps, f.from_int(5), ctx), 2}}));
        CHECK(*d == tensor_decompose(p1, n4, ctx));
    }

    SECTION("two-dimensional factor against an odd string") {
        ModuleLabel n2 = ModuleLabel::nilpotent(2, lam);
        ModuleLabel n3 = ModuleLabel::nilpotent(3, eps);
        auto d = decompose_special(n2, n3, ctx);
        REQUIRE(d.has_value());
        Character w = eps * lam;
        CHECK(*d == expect(ctx, {{ModuleLabel::nilpotent(4, w), 1},
                                 {ModuleLabel::nilpotent(2, ctx.twist(w, 1)), 1}}));
    }

    SECTION("no special hypothesis applies") {
        Context fin5 = cyclic_context(5);
        ModuleLabel a = ModuleLabel::nilpotent(7, fin5.trivial_character());
        ModuleLabel b = ModuleLabel::nilpotent(8, fin5.trivial_character());
        CHECK_FALSE(decompose_special(a, b, ctx = fin5).has_value());
    }

    SECTION("every applicable special case equals the master formula") {
        for (unsigned long s : {2ul, 3ul}) {
            Context c = cyclic_context(s);
            Character x = char_of(c, c.field().zeta_power(1));
            Character y = c.trivial_character();
            for (long n = 1; n <= 12; ++n)
                for (long t = 1; t <= 12; ++t) {
                    ModuleLabel a = ModuleLabel::nilpotent(n, x);
                    ModuleLabel b = ModuleLabel::nilpotent(t, y);
                    Decomposition master = tensor_decompose(a, b, c);
                    for (const auto& [tag, d] : special_case_decompositions(a, b, c)) {
                        INFO("s=" << s << " n=" << n << " t=" << t << " tag=" << tag);
                        REQUIRE(d == master);
                    }
                }
            // the periodic-times-trivial-string hypothesis
            for (long t = 1; t <= 12 / static_cast<long>(s); ++t)
                for (long k : {1L, 2L}) {
                    ModuleLabel a = ModuleLabel::non_nilpotent(t, x, c.field().from_int(2 * k - 3), c);
                    ModuleLabel b = ModuleLabel::nilpotent(2 * static_cast<long>(s), y);
                    Decomposition master = tensor_decompose(a, b, c);
                    auto specials = special_case_decompositions(a, b, c);
                    REQUIRE_FALSE(specials.empty());
                    for (const auto& [tag, d] : specials) {
                        INFO("s=" << s << " t=" << t << " tag=" << tag);
                        REQUIRE(d == master);
                    }
                }
        }
    }
}
