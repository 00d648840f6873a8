#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfore/label.hpp"

namespace hopfore {

/// p = quotient*s + remainder with 0 <= remainder < s.
struct EuclideanSplit {
    long quotient;
    long remainder;
};

inline EuclideanSplit split_dim(long value, long s) {
    if (value < 0 || s <= 0) fail(errc::internal_dimension_mismatch, "euclidean split of negative data");
    return {value / s, value % s};
}

namespace detail {

/// Emits one nilpotent summand, enforcing the vanishing conventions:
/// dimension 0 disappears, negative dimensions indicate a broken formula.
inline void add_nilpotent(Decomposition::Builder& b, long dim, const Character& weight, long mult = 1) {
    if (dim < 0)
        fail(errc::internal_dimension_mismatch, "nilpotent summand with negative dimension " + std::to_string(dim));
    if (dim == 0 || mult == 0) return;
    b.add(ModuleLabel::nilpotent(dim, weight), mult);
}

inline void add_non_nilpotent(Decomposition::Builder& b, long t, const Character& weight, const Scalar& beta,
                              const Context& ctx, long mult = 1) {
    if (t < 0) fail(errc::internal_dimension_mismatch, "summand with negative parameter " + std::to_string(t));
    if (t == 0 || mult == 0) return;
    b.add(ModuleLabel::non_nilpotent(t, weight, beta, ctx), mult);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Infinite regime: |chi| = infinity and q = chi^{-1}(a) is not a root of
// unity. The product of two string modules obeys a Clebsch-Gordan ladder.
// ---------------------------------------------------------------------------

/// V_{d1}(lambda) (x) V_{d2}(sigma) = (+)_{k=1..min(d1,d2)}
///     V_{d1+d2+1-2k}(chi^{k-1} lambda sigma)
inline Decomposition decompose_nil_nil_infinite(long d1, long d2, const Character& lambda,
                                                const Character& sigma, const Context& ctx) {
    if (ctx.finite()) fail(errc::regime_mismatch, "infinite-regime rule called in the finite regime");
    Decomposition::Builder b(ctx);
    Character w = lambda * sigma;
    for (long k = 1; k <= std::min(d1, d2); ++k) {
        detail::add_nilpotent(b, d1 + d2 + 1 - 2 * k, w);
        w = w * ctx.chi();
    }
    return b.build(d1 * d2);
}

// ---------------------------------------------------------------------------
// Finite regime: |chi| = |chi(a)| = s, q a primitive s-th root of unity.
// ---------------------------------------------------------------------------

enum class TensorSide { nil_left, nil_right };

/// Mixed product of a string module of dimension p = u*s + r with a
/// non-nilpotent module of parameter t:
///
///   V_p(lambda) (x) V_t(sigma, beta)
///     = (+)_{i=1..min(t,u)}   (s-r) V_{2i-1+|t-u|}  (sigma lambda, beta)
///     (+)_{i=1..min(t,u+1)}      r  V_{2i-1+|t-u-1|}(sigma lambda, beta)
///
/// and with the factors in the other order the same shape with the
/// eigenvalue twisted: beta -> lambda(a^s) beta. Empty ranges vanish.
inline Decomposition decompose_nil_nonnil_finite(long p, const Character& lambda, long t,
                                                 const Character& sigma, const Scalar& beta,
                                                 TensorSide side, const Context& ctx) {
    if (!ctx.finite()) fail(errc::regime_mismatch, "finite-regime rule called in the infinite regime");
    if (beta.is_zero()) fail(errc::zero_beta, "non-nilpotent factor requires beta != 0");
    const long s = static_cast<long>(ctx.s());
    auto [u, r] = split_dim(p, s);
    Scalar twisted = side == TensorSide::nil_left ? beta : ctx.eval_a_power_s(lambda) * beta;
    Character w = sigma * lambda;
    Decomposition::Builder b(ctx);
    for (long i = 1; i <= std::min(t, u); ++i)
        detail::add_non_nilpotent(b, 2 * i - 1 + std::labs(t - u), w, twisted, ctx, s - r);
    for (long i = 1; i <= std::min(t, u + 1); ++i)
        detail::add_non_nilpotent(b, 2 * i - 1 + std::labs(t - u - 1), w, twisted, ctx, r);
    return b.build(p * t * s);
}

/// Product of two non-nilpotent modules. With u = alpha*lambda(a^s) + beta,
/// the raw summands are (2j-1+|p-t|, chi^i sigma lambda, u) over j =
/// 1..min(p,t) and i = 0..s-1; canonicalization collapses the s twists to
/// multiplicity s of one label when u != 0, and to the s distinct nilpotent
/// modules of dimension (2j-1+|p-t|)*s when u = 0.
inline Decomposition decompose_nonnil_nonnil_finite(long p, const Character& sigma, const Scalar& alpha,
                                                    long t, const Character& lambda, const Scalar& beta,
                                                    const Context& ctx) {
    if (!ctx.finite()) fail(errc::regime_mismatch, "finite-regime rule called in the infinite regime");
    if (alpha.is_zero() || beta.is_zero()) fail(errc::zero_beta, "non-nilpotent factors require nonzero eigenvalues");
    const long s = static_cast<long>(ctx.s());
    Scalar u = alpha * ctx.eval_a_power_s(lambda) + beta;
    Decomposition::Builder b(ctx);
    for (long j = 1; j <= std::min(p, t); ++j) {
        long k = 2 * j - 1 + std::labs(p - t);
        Character w = sigma * lambda;
        for (long i = 0; i < s; ++i) {
            b.add(canonicalize(k, w, u, ctx));
            w = w * ctx.chi();
        }
    }
    return b.build(p * t * s * s);
}

/// Product of two string modules in the finite regime. Writing the larger
/// dimension as n = r'*s + l' and the smaller as t = r*s + l, the result
/// consists of four interleaved ladders whose rungs are either "free"
/// strings of decreasing dimension n+t-1-2is-2j or "locked" strings of
/// constant dimension (multiples of s). The product is commutative.
inline Decomposition decompose_nil_nil_finite(long n, const Character& lambda, long t, const Character& sigma,
                                              const Context& ctx) {
    if (!ctx.finite()) fail(errc::regime_mismatch, "finite-regime rule called in the infinite regime");
    if (n < t) return decompose_nil_nil_finite(t, sigma, n, lambda, ctx);
    const long s = static_cast<long>(ctx.s());
    auto [rp, lp] = split_dim(n, s);  // n = rp*s + lp
    auto [r, l] = split_dim(t, s);    // t = r*s + l
    const long mn = std::min(l, lp);
    const long mx = std::max(l, lp);
    Decomposition::Builder b(ctx);
    auto twist = [&](long j) { return ctx.chi().pow(j) * lambda * sigma; };
    if (l + lp <= s) {
        for (long i = 0; i <= r; ++i)
            for (long j = 0; j <= mn - 1; ++j) detail::add_nilpotent(b, n + t - 1 - 2 * i * s - 2 * j, twist(j));
        const long mid_top = l <= lp ? r - 1 : r;
        for (long i = 0; i <= mid_top; ++i)
            for (long j = mn; j <= mx - 1; ++j) detail::add_nilpotent(b, (r + rp - 2 * i) * s, twist(j));
        for (long i = 0; i <= r - 1; ++i)
            for (long j = mx; j <= l + lp - 1; ++j) detail::add_nilpotent(b, n + t - 1 - 2 * i * s - 2 * j, twist(j));
        for (long i = 0; i <= r - 1; ++i)
            for (long j = l + lp; j <= s - 1; ++j) detail::add_nilpotent(b, (r + rp - 1 - 2 * i) * s, twist(j));
    } else {
        const long m = l + lp - s - 1;
        for (long i = 0; i <= r; ++i)
            for (long j = 0; j <= m; ++j) detail::add_nilpotent(b, (r + rp + 1 - 2 * i) * s, twist(j));
        for (long i = 0; i <= r; ++i)
            for (long j = m + 1; j <= mn - 1; ++j) detail::add_nilpotent(b, n + t - 1 - 2 * i * s - 2 * j, twist(j));
        const long mid_top = l <= lp ? r - 1 : r;
        for (long i = 0; i <= mid_top; ++i)
            for (long j = mn; j <= mx - 1; ++j) detail::add_nilpotent(b, (r + rp - 2 * i) * s, twist(j));
        for (long i = 0; i <= r - 1; ++i)
            for (long j = mx; j <= s - 1; ++j) detail::add_nilpotent(b, n + t - 1 - 2 * i * s - 2 * j, twist(j));
    }
    return b.build(n * t);
}

/// Canonical decomposition of A (x) B (order-sensitive; A is the left
/// factor). Dimension conservation is asserted before returning.
inline Decomposition tensor_decompose(const ModuleLabel& A, const ModuleLabel& B, const Context& ctx) {
    A.validate(ctx);
    B.validate(ctx);
    if (!ctx.finite())
        return decompose_nil_nil_infinite(A.t(), B.t(), A.weight(), B.weight(), ctx);
    if (A.is_nilpotent() && B.is_nilpotent())
        return decompose_nil_nil_finite(A.t(), A.weight(), B.t(), B.weight(), ctx);
    if (A.is_nilpotent())
        return decompose_nil_nonnil_finite(A.t(), A.weight(), B.t(), B.weight(), B.beta(),
                                           TensorSide::nil_left, ctx);
    if (B.is_nilpotent())
        return decompose_nil_nonnil_finite(B.t(), B.weight(), A.t(), A.weight(), A.beta(),
                                           TensorSide::nil_right, ctx);
    return decompose_nonnil_nonnil_finite(A.t(), A.weight(), A.beta(), B.t(), B.weight(), B.beta(), ctx);
}

// ---------------------------------------------------------------------------
// Special-case formulas. Each entry below transcribes one closed-form special
// case directly from its own statement (not through the master formulas), so
// the two paths can be cross-checked against each other wherever a special
// hypothesis applies.
// ---------------------------------------------------------------------------

/// All special-case decompositions applicable to (A, B), keyed by a short
/// hypothesis tag. Empty when none applies (e.g. in the infinite regime).
inline std::vector<std::pair<std::string, Decomposition>> special_case_decompositions(
    const ModuleLabel& A, const ModuleLabel& B, const Context& ctx) {
    std::vector<std::pair<std::string, Decomposition>> out;
    if (!ctx.finite()) return out;
    const long s = static_cast<long>(ctx.s());

    // periodic times the dimension-2s trivial string:
    // V_t(sigma,beta) (x) V_{2s}(eps) = s V_{t-1}(sigma,beta) + s V_{t+1}(sigma,beta)
    if (!A.is_nilpotent() && B.is_nilpotent() && B.t() == 2 * s && B.weight().is_trivial()) {
        Decomposition::Builder b(ctx);
        detail::add_non_nilpotent(b, A.t() - 1, A.weight(), A.beta(), ctx, s);
        detail::add_non_nilpotent(b, A.t() + 1, A.weight(), A.beta(), ctx, s);
        out.emplace_back("periodic_times_trivial_2s", b.build(A.t() * s * 2 * s));
    }

    if (A.is_nilpotent() && B.is_nilpotent()) {
        const Character w = A.weight() * B.weight();
        auto twist = [&](long j) { return ctx.chi().pow(j) * w; };

        // a one-dimensional factor only multiplies the weight
        if (A.t() == 1 || B.t() == 1) {
            long t = A.t() == 1 ? B.t() : A.t();
            Decomposition::Builder b(ctx);
            detail::add_nilpotent(b, t, w);
            out.emplace_back("unit_factor", b.build(t));
        }

        // a two-dimensional factor splits off one step up and one step down
        if (A.t() == 2 || B.t() == 2) {
            long t = A.t() == 2 ? B.t() : A.t();
            Decomposition::Builder b(ctx);
            if (t % s != 0) {
                detail::add_nilpotent(b, t + 1, w);
                detail::add_nilpotent(b, t - 1, twist(1));
            } else {
                detail::add_nilpotent(b, t, w);
                detail::add_nilpotent(b, t, twist(1));
            }
            out.emplace_back("dim2_factor", b.build(2 * t));
        }

        // factor of dimension n <= s
        if (std::min(A.t(), B.t()) <= s) {
            long n = std::min(A.t(), B.t());
            long t = std::max(A.t(), B.t());
            Decomposition::Builder b(ctx);
            if (t % s == 0) {
                for (long i = 0; i <= n - 1; ++i) detail::add_nilpotent(b, t, twist(i));
            } else {
                auto [r, l] = split_dim(t, s);
                if (n + l <= s) {
                    for (long i = 0; i <= std::min(n, l) - 1; ++i)
                        detail::add_nilpotent(b, n + t - 1 - 2 * i, twist(i));
                    for (long i = l; i <= n - 1; ++i) detail::add_nilpotent(b, r * s, twist(i));
                } else {
                    long m = n + l - s - 1;
                    for (long i = 0; i <= m; ++i) detail::add_nilpotent(b, r * s + s, twist(i));
                    for (long i = m + 1; i <= std::min(n, l) - 1; ++i)
                        detail::add_nilpotent(b, n + t - 1 - 2 * i, twist(i));
                    for (long i = l; i <= n - 1; ++i) detail::add_nilpotent(b, r * s, twist(i));
                }
            }
            out.emplace_back("short_factor", b.build(n * t));
        }

        // factor of dimension s + 1
        if (A.t() == s + 1 || B.t() == s + 1) {
            long t = A.t() == s + 1 ? B.t() : A.t();
            Decomposition::Builder b(ctx);
            auto [r, l] = split_dim(t, s);
            if (l == 0) {
                detail::add_nilpotent(b, t - s, w);
                detail::add_nilpotent(b, t + s, w);
                for (long i = 1; i <= s - 1; ++i) detail::add_nilpotent(b, t, twist(i));
            } else if (r == 0) {
                detail::add_nilpotent(b, s + l, w);
                for (long i = 1; i <= l - 1; ++i) detail::add_nilpotent(b, s, twist(i));
            } else {
                detail::add_nilpotent(b, t + s, w);
                for (long i = 1; i <= l - 1; ++i) detail::add_nilpotent(b, (r + 1) * s, twist(i));
                detail::add_nilpotent(b, t + s - 2 * l, twist(l));
                for (long i = l + 1; i <= s - 1; ++i) detail::add_nilpotent(b, r * s, twist(i));
                detail::add_nilpotent(b, t - s, w);
            }
            out.emplace_back("cycle_plus_one_factor", b.build((s + 1) * t));
        }

        // one factor a multiple of s
        if (A.t() % s == 0 || B.t() % s == 0) {
            long t = B.t() % s == 0 ? B.t() : A.t();
            long n = B.t() % s == 0 ? A.t() : B.t();
            long r = t / s;
            auto [rp, l] = split_dim(n, s);
            Decomposition::Builder b(ctx);
            for (long i = 0; i <= std::min(rp, r - 1); ++i)
                for (long j = 0; j <= l - 1; ++j) detail::add_nilpotent(b, (r + rp - 2 * i) * s, twist(j));
            for (long i = 0; i <= std::min(r, rp) - 1; ++i)
                for (long j = l; j <= s - 1; ++j) detail::add_nilpotent(b, (r + rp - 1 - 2 * i) * s, twist(j));
            out.emplace_back("cycle_multiple_factor", b.build(n * t));
        }

        // one factor of dimension r*s + 1, the other not a multiple of s
        {
            long n = 0, tt = 0;
            if (B.t() % s == 1 && A.t() % s != 0)
                n = A.t(), tt = B.t();
            else if (A.t() % s == 1 && B.t() % s != 0)
                n = B.t(), tt = A.t();
            if (n > 0) {
                auto [rp, l] = split_dim(n, s);
                long r = (tt - 1) / s;
                Decomposition::Builder b(ctx);
                for (long i = 0; i <= std::min(rp, r); ++i)
                    detail::add_nilpotent(b, (r + rp - 2 * i) * s + l, w);
                for (long i = 0; i <= std::min(rp, r - 1); ++i)
                    for (long j = 1; j <= l - 1; ++j) detail::add_nilpotent(b, (r + rp - 2 * i) * s, twist(j));
                for (long i = 0; i <= std::min(rp, r) - 1; ++i)
                    detail::add_nilpotent(b, (r + rp - 2 * i) * s - l, twist(l));
                for (long i = 0; i <= std::min(rp, r) - 1; ++i)
                    for (long j = l + 1; j <= s - 1; ++j)
                        detail::add_nilpotent(b, (r + rp - 1 - 2 * i) * s, twist(j));
                out.emplace_back("cycle_plus_one_other_factor", b.build(n * tt));
            }
        }
    }
    return out;
}

/// First applicable special-case formula, or nullopt.
inline std::optional<Decomposition> decompose_special(const ModuleLabel& A, const ModuleLabel& B,
                                                      const Context& ctx) {
    auto all = special_case_decompositions(A, B, ctx);
    if (all.empty()) return std::nullopt;
    return all.front().second;
}

}  // namespace hopfore
