#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "hopfore/cyclotomic.hpp"
#include "hopfore/errors.hpp"

namespace hopfore {

/// Dense matrix over one cyclotomic field. Desk-scale exact arithmetic: no
/// sparsity machinery, no pivot-size heuristics; elimination pivots on the
/// first nonzero entry scanning top-to-bottom so all outputs are
/// deterministic.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(nullptr) {}

    Matrix(const CyclotomicField& field, long rows, long cols)
        : rows_(rows), cols_(cols), field_(&field), e_(static_cast<std::size_t>(rows * cols), field.zero()) {}

    static Matrix identity(const CyclotomicField& field, long n) {
        Matrix m(field, n, n);
        for (long i = 0; i < n; ++i) m.set(i, i, field.one());
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const CyclotomicField& field() const { return *field_; }

    const Scalar& at(long i, long j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    void set(long i, long j, Scalar v) { e_[static_cast<std::size_t>(i * cols_ + j)] = std::move(v); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix c(a);
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix c(a);
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
        return c;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product shape mismatch");
        Matrix c(*a.field_, a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    c.e_[static_cast<std::size_t>(i * c.cols_ + j)] += aik * bkj;
                }
            }
        return c;
    }

    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix c(a);
        for (auto& x : c.e_) x *= s;
        return c;
    }

    Matrix pow(long e) const {
        if (!is_square()) fail(errc::dimension_mismatch, "power of non-square matrix");
        if (e < 0) fail(errc::index_out_of_range, "negative matrix power");
        Matrix acc = identity(*field_, rows_);
        Matrix base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Matrix transpose() const {
        Matrix c(*field_, cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) c.set(j, i, at(i, j));
        return c;
    }

    /// Kronecker product, left index major: (a (x) b)[(i1,i2),(j1,j2)].
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix c(*a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (long i1 = 0; i1 < a.rows_; ++i1)
            for (long j1 = 0; j1 < a.cols_; ++j1) {
                const Scalar& aij = a.at(i1, j1);
                if (aij.is_zero()) continue;
                for (long i2 = 0; i2 < b.rows_; ++i2)
                    for (long j2 = 0; j2 < b.cols_; ++j2) {
                        const Scalar& bij = b.at(i2, j2);
                        if (bij.is_zero()) continue;
                        c.set(i1 * b.rows_ + i2, j1 * b.cols_ + j2, aij * bij);
                    }
            }
        return c;
    }

    Matrix column(long j) const {
        Matrix c(*field_, rows_, 1);
        for (long i = 0; i < rows_; ++i) c.set(i, 0, at(i, j));
        return c;
    }

    Matrix columns(const std::vector<long>& idx) const {
        Matrix c(*field_, rows_, static_cast<long>(idx.size()));
        for (long j = 0; j < c.cols_; ++j)
            for (long i = 0; i < rows_; ++i) c.set(i, j, at(i, idx[static_cast<std::size_t>(j)]));
        return c;
    }

    friend Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) fail(errc::dimension_mismatch, "hcat row mismatch");
        Matrix c(*a.field_, a.rows_, a.cols_ + b.cols_);
        for (long i = 0; i < a.rows_; ++i) {
            for (long j = 0; j < a.cols_; ++j) c.set(i, j, a.at(i, j));
            for (long j = 0; j < b.cols_; ++j) c.set(i, a.cols_ + j, b.at(i, j));
        }
        return c;
    }

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<long> rref_in_place() {
        std::vector<long> pivots;
        long row = 0;
        for (long col = 0; col < cols_ && row < rows_; ++col) {
            long p = -1;
            for (long i = row; i < rows_; ++i)
                if (!at(i, col).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (long j = 0; j < cols_; ++j) std::swap(e_[row * cols_ + j], e_[p * cols_ + j]);
            Scalar inv = at(row, col).inverse();
            for (long j = col; j < cols_; ++j)
                if (!at(row, j).is_zero()) set(row, j, at(row, j) * inv);
            for (long i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const Scalar f = at(i, col);
                if (f.is_zero()) continue;
                for (long j = col; j < cols_; ++j) {
                    if (at(row, j).is_zero()) continue;
                    set(i, j, at(i, j) - f * at(row, j));
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix shape mismatch");
    }

    long rows_, cols_;
    const CyclotomicField* field_;
    std::vector<Scalar> e_;
};

inline long rank(const Matrix& m) {
    Matrix r = m;
    return static_cast<long>(r.rref_in_place().size());
}

/// Canonical basis of the null space, one column per free variable of the
/// reduced echelon form. Empty kernel yields a rows x 0 matrix.
inline Matrix kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<long> pivots = r.rref_in_place();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (long p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<long> free_cols;
    for (long j = 0; j < m.cols(); ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    Matrix k(m.field(), m.cols(), static_cast<long>(free_cols.size()));
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
        long f = free_cols[fj];
        k.set(f, static_cast<long>(fj), m.field().one());
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.set(pivots[pi], static_cast<long>(fj), -r.at(static_cast<long>(pi), f));
    }
    return k;
}

/// Canonical basis of the column space: reduced echelon basis, returned as
/// columns. rank + nullity = cols by construction.
inline Matrix image_basis(const Matrix& m) {
    Matrix t = m.transpose();
    std::vector<long> pivots = t.rref_in_place();
    Matrix img(m.field(), m.rows(), static_cast<long>(pivots.size()));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (long j = 0; j < m.rows(); ++j) img.set(j, static_cast<long>(i), t.at(static_cast<long>(i), j));
    return img;
}

/// Basis of span(a) intersect span(b); a and b hold spanning columns in a
/// common ambient space.
inline Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(errc::dimension_mismatch, "intersection ambient mismatch");
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.field(), a.rows(), 0);
    Matrix k = kernel_basis(hcat(a, b));
    // each kernel column (x; y) satisfies a x = -b y; collect a x
    Matrix result(a.field(), a.rows(), k.cols());
    for (long j = 0; j < k.cols(); ++j)
        for (long i = 0; i < a.rows(); ++i) {
            Scalar acc = a.field().zero();
            for (long c = 0; c < a.cols(); ++c) {
                if (a.at(i, c).is_zero() || k.at(c, j).is_zero()) continue;
                acc += a.at(i, c) * k.at(c, j);
            }
            result.set(i, j, std::move(acc));
        }
    return image_basis(result);
}

/// Coordinates of the columns of rhs in the given independent column basis:
/// solves basis * y = rhs. Throws NotInvariant when some column of rhs lies
/// outside the span.
inline Matrix solve_in_basis(const Matrix& basis, const Matrix& rhs) {
    if (basis.rows() != rhs.rows()) fail(errc::dimension_mismatch, "solve shape mismatch");
    Matrix aug = hcat(basis, rhs);
    std::vector<long> pivots = aug.rref_in_place();
    long brank = 0;
    for (long p : pivots) {
        if (p >= basis.cols())
            fail(errc::not_invariant, "right-hand side lies outside the span of the basis");
        ++brank;
    }
    if (brank != basis.cols()) fail(errc::semantic_error, "basis columns are not independent");
    Matrix y(basis.field(), basis.cols(), rhs.cols());
    for (long i = 0; i < brank; ++i)
        for (long j = 0; j < rhs.cols(); ++j) y.set(i, j, aug.at(i, basis.cols() + j));
    return y;
}

/// Expresses the action of m on the invariant subspace spanned by the
/// columns of basis, in basis coordinates: solves basis * y = m * basis.
/// Throws NotInvariant when m does not map the span into itself.
inline Matrix restrict_to_invariant(const Matrix& m, const Matrix& basis) {
    if (m.cols() != basis.rows()) fail(errc::dimension_mismatch, "restriction shape mismatch");
    return solve_in_basis(basis, m * basis);
}

/// A list of independent vectors (columns) in a coordinate ambient space.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(Matrix columns, bool verify = false) : cols_(std::move(columns)) {
        if (verify && rank(cols_) != cols_.cols())
            fail(errc::semantic_error, "subspace basis vectors are dependent");
    }

    const Matrix& columns() const { return cols_; }
    long ambient_dim() const { return cols_.rows(); }
    long dim() const { return cols_.cols(); }

private:
    Matrix cols_;
};

/// Fitting decomposition of a square operator: ambient = ker(m^N) + im(m^N)
/// once the rank chain stabilizes (equivalently N = dim). Both parts are
/// m-invariant and m is nonsingular on the image part.
inline std::pair<SubspaceBasis, SubspaceBasis> fitting_split(const Matrix& m) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "fitting split of non-square matrix");
    if (m.rows() == 0) return {SubspaceBasis(Matrix(m.field(), 0, 0)), SubspaceBasis(Matrix(m.field(), 0, 0))};
    Matrix p = m;
    long r = rank(p);
    while (r > 0) {
        Matrix next = p * m;
        long r2 = rank(next);
        if (r2 == r) break;
        p = std::move(next);
        r = r2;
    }
    return {SubspaceBasis(kernel_basis(p)), SubspaceBasis(image_basis(p))};
}

/// d_k = dim ker (m - u I)^k for k = 1..dim(m); nondecreasing and eventually
/// constant. The Jordan block multiset at eigenvalue u is recovered from the
/// increments: #blocks of size >= k equals d_k - d_{k-1}.
inline std::vector<long> generalized_eigen_profile(const Matrix& m, const Scalar& u) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "eigen profile of non-square matrix");
    const long n = m.rows();
    std::vector<long> d;
    if (n == 0) return d;
    Matrix shifted = m - u * Matrix::identity(m.field(), n);
    Matrix p = shifted;
    long prev = 0;
    for (long k = 1; k <= n; ++k) {
        long dk = n - rank(p);
        d.push_back(dk);
        if (dk == prev) break;  // chain stabilized; pad below
        prev = dk;
        if (k < n) p = p * shifted;
    }
    while (static_cast<long>(d.size()) < n) d.push_back(prev);
    return d;
}

/// Jordan block sizes (with multiplicity) for eigenvalue u, from its
/// generalized kernel profile.
inline std::map<long, long> jordan_blocks_at(const Matrix& m, const Scalar& u) {
    std::vector<long> d = generalized_eigen_profile(m, u);
    std::map<long, long> blocks;
    long n = static_cast<long>(d.size());
    auto d_at = [&](long k) { return k <= 0 ? 0L : d[static_cast<std::size_t>(std::min(k, n) - 1)]; };
    for (long k = 1; k <= n; ++k) {
        long exact = (d_at(k) - d_at(k - 1)) - (d_at(k + 1) - d_at(k));
        if (exact > 0) blocks[k] = exact;
    }
    return blocks;
}

/// J_n(alpha): alpha on the diagonal, ones on the first subdiagonal.
inline Matrix jordan_block(const CyclotomicField& field, long n, const Scalar& alpha) {
    Matrix m(field, n, n);
    for (long i = 0; i < n; ++i) {
        m.set(i, i, alpha);
        if (i + 1 < n) m.set(i + 1, i, field.one());
    }
    return m;
}

}  // namespace hopfore
