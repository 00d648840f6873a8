#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfore/errors.hpp"
#include "hopfore/rational.hpp"

namespace hopfore {

class Scalar;

namespace detail {

/// Dense univariate polynomials over Q, coefficients low degree first.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

/// Quotient and remainder of a by b (b nonzero, trimmed). Exact over Q.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (k + 1 < b.size()) break;
        if (a[k] == 0) continue;
        std::size_t shift = k - (b.size() - 1);
        Rational f = a[k] / lead;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    poly_trim(a);
    return {q, a};
}

}  // namespace detail

inline unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Coefficients (low degree first) of the m-th cyclotomic polynomial,
/// obtained by dividing x^m - 1 by the product of the proper-divisor
/// cyclotomic polynomials. Monic of degree phi(m), integer coefficients.
inline std::vector<Rational> cyclotomic_polynomial(unsigned long m) {
    if (m == 0) fail(errc::index_out_of_range, "cyclotomic_polynomial: m must be positive");
    static std::map<unsigned long, detail::Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto compute = [](auto&& self, unsigned long n) -> const detail::Poly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        detail::Poly xn_minus_1(n + 1, Rational(0));
        xn_minus_1[0] = -1;
        xn_minus_1[n] = 1;
        detail::Poly divisor{Rational(1)};
        for (unsigned long d = 1; d < n; ++d)
            if (n % d == 0) divisor = detail::poly_mul(divisor, self(self, d));
        auto [q, r] = detail::poly_divmod(xn_minus_1, divisor);
        if (!r.empty()) fail(errc::internal_dimension_mismatch, "cyclotomic division not exact");
        return cache.emplace(n, std::move(q)).first->second;
    };
    return compute(compute, m);
}

/// The field Q(zeta_m), modeled as Q[x]/(Phi_m). Instances are immutable
/// interned singletons, one per conductor; Scalars refer to them by pointer.
class CyclotomicField {
public:
    static const CyclotomicField& of(unsigned long conductor) {
        if (conductor == 0) fail(errc::index_out_of_range, "conductor must be positive");
        static std::map<unsigned long, std::unique_ptr<const CyclotomicField>> registry;
        static std::mutex mutex;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = registry.find(conductor);
        if (it == registry.end())
            it = registry.emplace(conductor, std::unique_ptr<const CyclotomicField>(new CyclotomicField(conductor))).first;
        return *it->second;
    }

    unsigned long conductor() const { return conductor_; }
    unsigned long degree() const { return degree_; }
    const std::vector<Rational>& minimal_polynomial() const { return min_poly_; }

    /// x^k mod Phi_m as a coefficient vector of length degree(), for any k >= 0.
    const std::vector<Rational>& power_residue(unsigned long k) const {
        // x^m = 1, so the residues are m-periodic; the table covers [0, size).
        return power_residues_[k < power_residues_.size() ? k : k % conductor_];
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_rational(const Rational& r) const;
    Scalar from_int(long n) const;
    /// zeta_m^k for any integer k.
    Scalar zeta_power(long k) const;
    /// zeta_n^k where n divides the conductor.
    Scalar root_of_unity(unsigned long n, long k) const;

private:
    explicit CyclotomicField(unsigned long conductor)
        : conductor_(conductor), degree_(euler_phi(conductor)), min_poly_(cyclotomic_polynomial(conductor)) {
        // residues of x^k for k = 0 .. max(m, 2*deg) - 1; covers both the
        // multiplication folding range [deg, 2deg-2] and the zeta powers.
        unsigned long count = std::max<unsigned long>(conductor_, 2 * degree_);
        power_residues_.reserve(count);
        std::vector<Rational> cur(degree_, Rational(0));
        cur[0] = 1;
        power_residues_.push_back(cur);
        for (unsigned long k = 1; k < count; ++k) {
            Rational top = cur[degree_ - 1];
            for (unsigned long i = degree_; i-- > 1;) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (unsigned long i = 0; i < degree_; ++i) cur[i] -= top * min_poly_[i];
            power_residues_.push_back(cur);
        }
    }

    unsigned long conductor_;
    unsigned long degree_;
    std::vector<Rational> min_poly_;
    std::vector<std::vector<Rational>> power_residues_;

    friend class Scalar;
};

/// An element of Q(zeta_m): coordinates in the power basis 1, z, ..., z^{phi(m)-1}.
/// Immutable value type; all operations are pure.
class Scalar {
public:
    Scalar() : field_(nullptr) {}

    Scalar(const CyclotomicField& field, std::vector<Rational> coeffs)
        : field_(&field), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != field.degree())
            fail(errc::field_mismatch, "scalar coefficient count does not match field degree");
    }

    const CyclotomicField& field() const { return *field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (coeffs_[0] != 1) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    /// The rational value, if this element lies in Q.
    std::optional<Rational> as_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order: lexicographic on the coefficient tuple. Used only for
    /// canonical representatives and deterministic output ordering.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] < b.coeffs_[i]) return true;
            if (b.coeffs_[i] < a.coeffs_[i]) return false;
        }
        return false;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        std::vector<Rational> c(a.coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return Scalar(*a.field_, std::move(c));
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        std::vector<Rational> c(a.coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
        return Scalar(*a.field_, std::move(c));
    }

    friend Scalar operator-(const Scalar& a) {
        std::vector<Rational> c(a.coeffs_);
        for (auto& x : c) x = -x;
        return Scalar(*a.field_, std::move(c));
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        const unsigned long d = a.field_->degree();
        if (a.is_zero() || b.is_zero()) return a.field_->zero();
        if (d == 1) {
            std::vector<Rational> c{a.coeffs_[0] * b.coeffs_[0]};
            return Scalar(*a.field_, std::move(c));
        }
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (unsigned long i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (unsigned long j = 0; j < d; ++j) {
                if (b.coeffs_[j] == 0) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        std::vector<Rational> c(conv.begin(), conv.begin() + d);
        for (unsigned long k = d; k < 2 * d - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = a.field_->power_residue(k);
            for (unsigned long i = 0; i < d; ++i) c[i] += conv[k] * row[i];
        }
        return Scalar(*a.field_, std::move(c));
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_m (which is irreducible, so any nonzero residue is a unit).
    Scalar inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        detail::Poly r0(field_->min_poly_);
        detail::Poly r1(coeffs_.begin(), coeffs_.end());
        detail::poly_trim(r1);
        detail::Poly s0{}, s1{Rational(1)};  // coefficients of *this in the Bezout identity
        while (true) {
            auto [q, r2] = detail::poly_divmod(r0, r1);
            if (r2.empty()) break;
            detail::Poly qs1 = detail::poly_mul(q, s1);
            detail::Poly s2(std::max(s0.size(), qs1.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
            for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            detail::poly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant gcd; s1 / r1 represents the inverse.
        if (r1.size() != 1)
            fail(errc::internal_dimension_mismatch, "minimal polynomial not coprime to residue");
        std::vector<Rational> c(field_->degree(), Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] / r1[0];
        return Scalar(*field_, std::move(c));
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) fail(errc::division_by_zero, "division by zero");
        return a * b.inverse();
    }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar base = *this;
        Scalar acc = field_->one();
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    /// Multiplicative order, or nullopt when this element is not a root of
    /// unity. A unit u in Q(zeta_m) is a root of unity iff u^L = 1 with
    /// L = lcm(2, m); the order is then the least divisor of L fixing u^d = 1.
    std::optional<unsigned long> multiplicative_order() const {
        if (is_zero()) fail(errc::zero_element, "multiplicative order of zero");
        unsigned long L = std::lcm<unsigned long>(2, field_->conductor());
        if (!pow(static_cast<long>(L)).is_one()) return std::nullopt;
        for (unsigned long d = 1; d <= L; ++d)
            if (L % d == 0 && pow(static_cast<long>(d)).is_one()) return d;
        return L;  // unreachable
    }

    std::string str() const;

private:
    void check_field(const Scalar& other) const {
        if (field_ != other.field_) fail(errc::field_mismatch, "scalars from different cyclotomic fields");
    }

    const CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

inline Scalar CyclotomicField::zero() const {
    return Scalar(*this, std::vector<Rational>(degree_, Rational(0)));
}

inline Scalar CyclotomicField::one() const { return from_rational(Rational(1)); }

inline Scalar CyclotomicField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = r;
    return Scalar(*this, c);
}

inline Scalar CyclotomicField::from_int(long n) const { return from_rational(Rational(n)); }

inline Scalar CyclotomicField::zeta_power(long k) const {
    long m = static_cast<long>(conductor_);
    long r = ((k % m) + m) % m;
    return Scalar(*this, power_residues_[static_cast<unsigned long>(r)]);
}

inline Scalar CyclotomicField::root_of_unity(unsigned long n, long k) const {
    if (n == 0 || conductor_ % n != 0)
        fail(errc::field_too_small, "conductor " + std::to_string(conductor_) +
                                        " does not contain a root of unity of order " + std::to_string(n));
    return zeta_power(static_cast<long>(conductor_ / n) * k);
}

// ---------------------------------------------------------------------------
// Scalar literal grammar: rational-coefficient polynomial expressions in `z`,
// e.g. "2", "-1/3", "z^2", "1/2*z^3 + 2". Whitespace insignificant, `*`
// optional between a coefficient and z.
// ---------------------------------------------------------------------------

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline Scalar parse_scalar_impl(const CyclotomicField& field, const std::string& s, std::size_t& pos) {
    Scalar acc = field.zero();
    bool first = true;
    skip_ws(s, pos);
    while (true) {
        int sign = 1;
        skip_ws(s, pos);
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws(s, pos);
        } else if (!first) {
            break;  // no joining operator: end of expression
        }
        if (pos >= s.size()) throw SyntaxError("unexpected end of scalar literal", pos);
        Rational coef(1);
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef = parse_rational(s, pos);
            saw_coef = true;
            skip_ws(s, pos);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws(s, pos);
            }
        }
        long zexp = 0;
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            zexp = 1;
            skip_ws(s, pos);
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws(s, pos);
                std::size_t d0 = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == d0) throw SyntaxError("expected exponent after '^'", d0);
                if (pos - d0 > 9) throw SyntaxError("exponent too large", d0);
                zexp = std::stol(s.substr(d0, pos - d0));
            }
        } else if (!saw_coef) {
            throw SyntaxError("expected coefficient or 'z' at position " + std::to_string(pos), pos);
        }
        Scalar term = field.zeta_power(zexp) * field.from_rational(sign < 0 ? Rational(-coef) : coef);
        acc += term;
        first = false;
        skip_ws(s, pos);
        if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
    }
    return acc;
}

}  // namespace detail

inline Scalar parse_scalar(const CyclotomicField& field, const std::string& text, std::size_t& pos) {
    return detail::parse_scalar_impl(field, text, pos);
}

inline Scalar parse_scalar(const CyclotomicField& field, const std::string& text) {
    std::size_t pos = 0;
    Scalar v = detail::parse_scalar_impl(field, text, pos);
    detail::skip_ws(text, pos);
    if (pos != text.size()) throw SyntaxError("trailing characters in scalar literal", pos);
    return v;
}

inline std::string Scalar::str() const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit_coef = mag == 1 && k > 0;
        if (!unit_coef) out += to_string(mag);
        if (k > 0) {
            if (!unit_coef) out += "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace hopfore
