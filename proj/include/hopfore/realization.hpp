#pragma once

#include <utility>
#include <vector>

#include "hopfore/context.hpp"
#include "hopfore/label.hpp"
#include "hopfore/matrix.hpp"
#include "hopfore/qcalc.hpp"

namespace hopfore {

/// Explicit matrix model of a weight module: the group acts diagonally
/// (each basis vector carries a weight character) and x acts by x_matrix,
/// which shifts every weight by chi.
class WeightModule {
public:
    WeightModule(const Context& ctx, std::vector<Character> weights, Matrix x)
        : ctx_(&ctx), weights_(std::move(weights)), x_(std::move(x)) {
        if (x_.rows() != x_.cols() || x_.rows() != static_cast<long>(weights_.size()))
            fail(errc::dimension_mismatch, "weight list and x matrix disagree");
    }

    const Context& ctx() const { return *ctx_; }
    long dim() const { return static_cast<long>(weights_.size()); }
    const Character& weight_of(long i) const { return weights_[static_cast<std::size_t>(i)]; }
    const std::vector<Character>& weights() const { return weights_; }
    const Matrix& x_matrix() const { return x_; }

    /// Diagonal action of the distinguished central element a, derived from
    /// the weights (never stored independently).
    Matrix a_action() const {
        Matrix d(ctx_->field(), dim(), dim());
        for (long i = 0; i < dim(); ++i) d.set(i, i, weights_[static_cast<std::size_t>(i)](ctx_->a()));
        return d;
    }

    /// Every nonzero x entry must connect a weight mu column to a chi*mu row.
    bool weight_graded() const {
        for (long r = 0; r < dim(); ++r)
            for (long c = 0; c < dim(); ++c) {
                if (x_.at(r, c).is_zero()) continue;
                if (weight_of(r) != ctx_->chi() * weight_of(c)) return false;
            }
        return true;
    }

private:
    const Context* ctx_;
    std::vector<Character> weights_;
    Matrix x_;
};

/// Matrix model of a canonical label.
///
/// Nilpotent N(t; lambda): basis m_0..m_{t-1}, weight of m_i is chi^i lambda,
/// x shifts down and kills m_{t-1}.
///
/// Non-nilpotent P(t; sigma; beta): basis m_0..m_{ts-1}, weight chi^i sigma,
/// x shifts down and folds the top vector back:
///   x m_{ts-1} = sum_j a_j m_{js},  a_j = (-1)^{t+1-j} C(t,j) beta^{t-j},
/// the companion data of (y - beta)^t, so x^s has single eigenvalue beta with
/// one size-t Jordan block per weight space.
inline WeightModule realize(const ModuleLabel& label, const Context& ctx) {
    label.validate(ctx);
    const CyclotomicField& f = ctx.field();
    const long d = label.dim(ctx);
    std::vector<Character> weights;
    weights.reserve(static_cast<std::size_t>(d));
    Character w = label.weight();
    for (long i = 0; i < d; ++i) {
        weights.push_back(w);
        w = ctx.chi() * w;
    }
    Matrix x(f, d, d);
    for (long i = 0; i + 1 < d; ++i) x.set(i + 1, i, f.one());
    if (!label.is_nilpotent()) {
        const long t = label.t();
        const long s = static_cast<long>(ctx.s());
        const Scalar& beta = label.beta();
        for (long j = 0; j < t; ++j) {
            Scalar aj = f.from_rational(Rational(binomial(t, j))) * beta.pow(t - j);
            if ((t + 1 - j) % 2 != 0) aj = -aj;
            x.set(j * s, d - 1, std::move(aj));
        }
    }
    return WeightModule(ctx, std::move(weights), std::move(x));
}

/// Tensor product model. Basis pairs (i, j) in left-major order; weights
/// multiply; x acts by x (x) a + 1 (x) x.
inline WeightModule tensor_realize(const WeightModule& m, const WeightModule& n) {
    if (m.ctx() != n.ctx()) fail(errc::context_mismatch, "tensor factors from different contexts");
    std::vector<Character> weights;
    weights.reserve(static_cast<std::size_t>(m.dim() * n.dim()));
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < n.dim(); ++j) weights.push_back(m.weight_of(i) * n.weight_of(j));
    Matrix x = kron(m.x_matrix(), n.a_action()) + kron(Matrix::identity(m.ctx().field(), m.dim()), n.x_matrix());
    return WeightModule(m.ctx(), std::move(weights), std::move(x));
}

/// Verifies the q-binomial expansion of the m-th power of the x action on a
/// tensor product:
///   (x (x) a + 1 (x) x)^m = sum_i C(m,i)_q  x^i (x) a^i x^{m-i}
/// as an exact matrix identity.
inline bool check_x_power_expansion(long power, const WeightModule& m, const WeightModule& n) {
    if (m.ctx() != n.ctx()) fail(errc::context_mismatch, "tensor factors from different contexts");
    const Context& ctx = m.ctx();
    Matrix lhs = tensor_realize(m, n).x_matrix().pow(power);
    Matrix rhs(ctx.field(), lhs.rows(), lhs.cols());
    Matrix a_n = n.a_action();
    for (long i = 0; i <= power; ++i) {
        Scalar c = q_binomial(power, i, ctx.q());
        if (c.is_zero()) continue;
        Matrix right = a_n.pow(i) * n.x_matrix().pow(power - i);
        rhs = rhs + c * kron(m.x_matrix().pow(i), right);
    }
    return lhs == rhs;
}

/// A module map between two explicit models.
struct LinearMap {
    WeightModule source;
    WeightModule target;
    Matrix matrix;  // target.dim x source.dim

    bool intertwines_x() const {
        return matrix * source.x_matrix() == target.x_matrix() * matrix;
    }

    bool is_injective() const { return rank(matrix) == matrix.cols(); }
};

/// The canonical embedding of N(d1-1; chi lambda) (x) N(d2-1; sigma) into
/// N(d1; lambda) (x) N(d2; sigma) in the infinite regime:
///   y_i (x) z_j  |->  (d1-i-1)_q m_i (x) v_{j+1}
///                     - q^{1-d2} sigma(a) (d2-j-1)_q m_{i+1} (x) v_j.
inline LinearMap tensor_embedding(long d1, long d2, const Character& lambda, const Character& sigma,
                                  const Context& ctx) {
    if (ctx.finite()) fail(errc::regime_mismatch, "the tensor embedding is an infinite-regime construction");
    if (d1 < 2 || d2 < 2) fail(errc::index_out_of_range, "tensor embedding needs both dimensions >= 2");
    WeightModule source =
        tensor_realize(realize(ModuleLabel::nilpotent(d1 - 1, ctx.chi() * lambda), ctx),
                       realize(ModuleLabel::nilpotent(d2 - 1, sigma), ctx));
    WeightModule target = tensor_realize(realize(ModuleLabel::nilpotent(d1, lambda), ctx),
                                         realize(ModuleLabel::nilpotent(d2, sigma), ctx));
    Matrix f(ctx.field(), target.dim(), source.dim());
    const Scalar& q = ctx.q();
    Scalar twist = q.pow(1 - d2) * sigma(ctx.a());
    for (long i = 0; i <= d1 - 2; ++i)
        for (long j = 0; j <= d2 - 2; ++j) {
            long col = i * (d2 - 1) + j;
            f.set(i * d2 + (j + 1), col, q_integer(d1 - i - 1, q));
            f.set((i + 1) * d2 + j, col, -(twist * q_integer(d2 - j - 1, q)));
        }
    return LinearMap{std::move(source), std::move(target), std::move(f)};
}

}  // namespace hopfore
