#pragma once

#include <algorithm>
#include <vector>

#include "hopfore/cyclotomic.hpp"
#include "hopfore/errors.hpp"

namespace hopfore {

/// (n)_q = 1 + q + ... + q^{n-1}, with (0)_q = 0.
inline Scalar q_integer(long n, const Scalar& q) {
    Scalar acc = q.field().zero();
    Scalar p = q.field().one();
    for (long i = 0; i < n; ++i) {
        acc += p;
        p *= q;
    }
    return acc;
}

/// (n)!_q = (n)_q (n-1)_q ... (1)_q, with (0)!_q = 1.
inline Scalar q_factorial(long n, const Scalar& q) {
    Scalar acc = q.field().one();
    for (long i = 1; i <= n; ++i) acc *= q_integer(i, q);
    return acc;
}

/// Gaussian binomial C(n,i)_q via the Pascal recurrence
///   C(n,i)_q = q^i C(n-1,i)_q + C(n-1,i-1)_q
/// evaluated at q. The factorial quotient is not used here: it breaks down at
/// roots of unity where (n-i)!_q can vanish, while the recurrence is total.
inline Scalar q_binomial(long n, long i, const Scalar& q) {
    if (i < 0 || i > n)
        fail(errc::index_out_of_range,
             "q_binomial: need 0 <= i <= n, got n=" + std::to_string(n) + " i=" + std::to_string(i));
    const CyclotomicField& f = q.field();
    std::vector<Scalar> qpow(static_cast<std::size_t>(i) + 1, f.one());
    for (long k = 1; k <= i; ++k) qpow[k] = qpow[k - 1] * q;
    // row-by-row evaluation, one row per upper index m; entries beyond the
    // previous row's top stay zero, which is exactly C(m-1, k) for k > m-1.
    std::vector<Scalar> row(static_cast<std::size_t>(i) + 1, f.zero());
    row[0] = f.one();
    for (long m = 1; m <= n; ++m)
        for (long k = std::min<long>(i, m); k >= 1; --k)
            row[k] = qpow[k] * row[k] + row[k - 1];
    return row[i];
}

}  // namespace hopfore
