#pragma once

#include <random>
#include <vector>

#include "hopfore/context.hpp"
#include "hopfore/json_io.hpp"

namespace hopfore::testing {

/// FIN(s) context on G = Z/s with a the generator and chi the faithful
/// character zeta_s; q = zeta_s^{-1}.
inline Context cyclic_context(unsigned long s) {
    const CyclotomicField& f = CyclotomicField::of(s);
    GroupSpec g({s});
    return Context(g, GroupElement(g, {1}), Character(g, {f.root_of_unity(s, 1)}), f);
}

/// FIN(s) context on G = Z/s^2 with a the generator and chi of order s,
/// chi(a) primitive of order s. Conductor s^2 so that faithful characters
/// and zeta-valued eigenvalue parameters are available.
inline Context cyclic_square_context(unsigned long s) {
    const CyclotomicField& f = CyclotomicField::of(s * s);
    GroupSpec g({s * s});
    return Context(g, GroupElement(g, {1}), Character(g, {f.root_of_unity(s, 1)}), f);
}

/// INF context on G = Z with chi(a) = 1/2, so q = 2.
inline Context infinite_context() {
    const CyclotomicField& f = CyclotomicField::of(1);
    GroupSpec g({0ul});
    return Context(g, GroupElement(g, {1}), Character(g, {f.from_rational(Rational(1, 2))}), f);
}

/// Character of a one-generator group from a raw value.
inline Character char_of(const Context& ctx, const Scalar& value) {
    return Character(ctx.group(), {value});
}

inline Rational random_rational(std::mt19937_64& rng, long span = 6) {
    long num = static_cast<long>(rng() % (2 * span + 1)) - span;
    long den = 1 + static_cast<long>(rng() % span);
    return Rational(num, den);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long span = 6) {
    Rational r = random_rational(rng, span);
    while (r == 0) r = random_rational(rng, span);
    return r;
}

inline Scalar random_scalar(const CyclotomicField& f, std::mt19937_64& rng, long span = 6) {
    std::vector<Rational> coeffs;
    for (unsigned long i = 0; i < f.degree(); ++i) coeffs.push_back(random_rational(rng, span));
    return Scalar(f, std::move(coeffs));
}

inline Scalar random_nonzero_scalar(const CyclotomicField& f, std::mt19937_64& rng, long span = 6) {
    Scalar s = random_scalar(f, rng, span);
    while (s.is_zero()) s = random_scalar(f, rng, span);
    return s;
}

}  // namespace hopfore::testing
