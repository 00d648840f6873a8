#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfore/matrix.hpp"
#include "hopfore/realization.hpp"
#include "hopfore/rules.hpp"

namespace hopfore {

/// Brute-force decomposition diagnostics, kept for report output.
struct OracleDiagnostics {
    std::vector<long> weight_space_dims;                     // per occurring weight, in weight order
    long nil_dim = 0;                                        // total dimension of the x^s-nilpotent part
    long inv_dim = 0;                                        // total dimension of the x^s-invertible part
    std::vector<std::pair<std::string, long>> eigenvalues;   // eigenvalue literal -> generalized multiplicity
};

/// Candidate x^s-eigenvalues for the brute-force decomposition of A (x) B:
/// {0} together with the closure of the labels' eigenvalue parameters under
/// the twists the tensor product can introduce (beta -> lambda(a^s) beta for
/// the factor crossings, and the sum alpha lambda(a^s) + beta in both
/// orders). A superset suffices: completeness is checked downstream.
inline std::set<Scalar> candidate_eigenvalues(const ModuleLabel& A, const ModuleLabel& B, const Context& ctx) {
    if (!ctx.finite()) fail(errc::regime_mismatch, "eigenvalue candidates apply to the finite regime");
    std::set<Scalar> out;
    out.insert(ctx.field().zero());
    auto other_weight = [&](const ModuleLabel& self) -> const Character& {
        return (&self == &A ? B : A).weight();
    };
    for (const ModuleLabel* label : {&A, &B}) {
        if (label->is_nilpotent()) continue;
        const Scalar& beta = label->beta();
        out.insert(beta);
        out.insert(ctx.eval_a_power_s(other_weight(*label)) * beta);
    }
    if (!A.is_nilpotent() && !B.is_nilpotent()) {
        out.insert(A.beta() * ctx.eval_a_power_s(B.weight()) + B.beta());
        out.insert(B.beta() * ctx.eval_a_power_s(A.weight()) + A.beta());
    }
    return out;
}

namespace detail {

/// Submatrix of the x action from the weight-nu block to the weight-chi*nu
/// block, in bucket coordinates. Missing buckets give zero-extent shapes.
inline Matrix x_block(const WeightModule& m, const std::map<Character, std::vector<long>>& buckets,
                      const Character& from) {
    const Context& ctx = m.ctx();
    auto fit = buckets.find(from);
    auto tit = buckets.find(ctx.chi() * from);
    long nf = fit == buckets.end() ? 0 : static_cast<long>(fit->second.size());
    long nt = tit == buckets.end() ? 0 : static_cast<long>(tit->second.size());
    Matrix b(ctx.field(), nt, nf);
    for (long j = 0; j < nf; ++j)
        for (long i = 0; i < nt; ++i) b.set(i, j, m.x_matrix().at(tit->second[i], fit->second[j]));
    return b;
}

/// Decomposes a weight-graded nilpotent x action into string modules.
/// `part_basis` holds, per weight, a basis (bucket coordinates) of the
/// subspace under analysis; the x action must map each part into the next.
/// A string of length t with socle of weight nu contributes N(t; chi^{1-t} nu),
/// with multiplicity
///   dim(ker x  /\  im x^{t-1}  /\  part_nu) - dim(ker x  /\  im x^t  /\  part_nu).
inline void string_decompose(const WeightModule& m, const std::map<Character, std::vector<long>>& buckets,
                             const std::map<Character, Matrix>& part_basis, Decomposition::Builder& out) {
    const Context& ctx = m.ctx();
    long total = 0;
    for (const auto& [nu, basis] : part_basis) total += basis.cols();
    if (total == 0) return;

    // x in part coordinates: step[nu] maps part_nu into part_{chi nu}
    std::map<Character, Matrix> step;
    std::map<Character, Matrix> kernels;
    for (const auto& [nu, basis] : part_basis) {
        if (basis.cols() == 0) continue;
        Matrix moved = x_block(m, buckets, nu) * basis;
        Character up = ctx.chi() * nu;
        auto target = part_basis.find(up);
        Matrix d(ctx.field(), 0, basis.cols());
        if (target == part_basis.end() || target->second.cols() == 0) {
            if (!moved.is_zero())
                fail(errc::not_invariant, "x leaves the nilpotent part of a weight space");
        } else {
            d = solve_in_basis(target->second, moved);
        }
        step.emplace(nu, std::move(d));
        kernels.emplace(nu, kernel_basis(step.at(nu)));
    }

    // cur[nu] = basis of im(x^{t-1}) inside part_nu
    std::map<Character, Matrix> cur;
    for (const auto& [nu, basis] : part_basis)
        if (basis.cols() > 0) cur.emplace(nu, Matrix::identity(ctx.field(), basis.cols()));
    Character chi_inv = ctx.chi().inverse();
    long emitted = 0;
    for (long t = 1; emitted < total; ++t) {
        if (t > total + 1)
            fail(errc::internal_dimension_mismatch, "x is not nilpotent on the string part");
        std::map<Character, Matrix> next;
        for (const auto& [nu, basis] : part_basis) {
            if (basis.cols() == 0) continue;
            Character below = chi_inv * nu;
            auto src = cur.find(below);
            if (src == cur.end() || src->second.cols() == 0) continue;
            auto d = step.find(below);
            if (d == step.end() || d->second.rows() == 0) continue;
            Matrix img = image_basis(d->second * src->second);
            if (img.cols() > 0) next.emplace(nu, std::move(img));
        }
        for (const auto& [nu, im_now] : cur) {
            const Matrix& ker = kernels.at(nu);
            long now = subspace_intersection(ker, im_now).cols();
            long later = 0;
            auto nx = next.find(nu);
            if (nx != next.end()) later = subspace_intersection(ker, nx->second).cols();
            long mult = now - later;
            if (mult < 0) fail(errc::internal_dimension_mismatch, "negative string multiplicity");
            if (mult > 0) {
                out.add(ModuleLabel::nilpotent(t, ctx.chi().pow(1 - t) * nu), mult);
                emitted += mult * t;
            }
        }
        cur = std::move(next);
        if (cur.empty() && emitted != total)
            fail(errc::internal_dimension_mismatch, "string analysis lost dimensions");
    }
}

}  // namespace detail

/// Independent brute-force decomposition of an explicit weight module into
/// canonical labels. Never consults the closed-form rules: only the module's
/// own matrices and exact linear algebra.
///
/// Finite regime: the endomorphism x^s preserves every weight space; its
/// Fitting decomposition splits the module into an x-nilpotent part,
/// analyzed as string modules, and an x-invertible part whose Jordan data at
/// one representative weight per <chi>-orbit yields the non-nilpotent
/// summands (one P(k; [weight]; u) per Jordan block J_k(u)). The candidate
/// set must cover every eigenvalue of the invertible part; a completeness
/// check fails loudly otherwise.
///
/// Infinite regime: x itself is nilpotent on the whole module (asserted),
/// and the string analysis alone decomposes it.
inline Decomposition oracle_decompose(const WeightModule& m, const std::set<Scalar>& candidates,
                                      OracleDiagnostics* diag = nullptr) {
    const Context& ctx = m.ctx();
    if (!m.weight_graded())
        fail(errc::not_invariant, "module is not weight graded: x must shift weights by chi");
    std::map<Character, std::vector<long>> buckets;
    for (long i = 0; i < m.dim(); ++i) buckets[m.weight_of(i)].push_back(i);
    if (diag)
        for (const auto& [nu, idx] : buckets) diag->weight_space_dims.push_back(static_cast<long>(idx.size()));

    Decomposition::Builder out(ctx);

    if (!ctx.finite()) {
        std::map<Character, Matrix> whole;
        for (const auto& [nu, idx] : buckets)
            whole.emplace(nu, Matrix::identity(ctx.field(), static_cast<long>(idx.size())));
        if (diag) diag->nil_dim = m.dim();
        detail::string_decompose(m, buckets, whole, out);
        return out.build(m.dim());
    }

    const long s = static_cast<long>(ctx.s());

    // x^s restricted to each weight space, as the cycle of x blocks
    std::map<Character, Matrix> phi;
    for (const auto& [nu, idx] : buckets) {
        long d = static_cast<long>(idx.size());
        Matrix acc = Matrix::identity(ctx.field(), d);
        Character at = nu;
        bool dead = false;
        for (long k = 0; k < s && !dead; ++k) {
            Matrix blk = detail::x_block(m, buckets, at);
            if (blk.rows() == 0) dead = true;
            else acc = blk * acc;
            at = ctx.chi() * at;
        }
        phi.emplace(nu, dead ? Matrix(ctx.field(), d, d) : std::move(acc));
    }

    // Fitting split per weight space; both parts are x-invariant since x
    // commutes with x^s (asserted by the in-basis solves below).
    std::map<Character, Matrix> nil_part, inv_part;
    for (const auto& [nu, p] : phi) {
        auto [nil_b, inv_b] = fitting_split(p);
        if (diag) {
            diag->nil_dim += nil_b.dim();
            diag->inv_dim += inv_b.dim();
        }
        nil_part.emplace(nu, nil_b.columns());
        inv_part.emplace(nu, inv_b.columns());
    }
    for (const auto& [nu, basis] : inv_part) {
        if (basis.cols() == 0) continue;
        Character up = ctx.chi() * nu;
        auto target = inv_part.find(up);
        Matrix moved = detail::x_block(m, buckets, nu) * basis;
        if (target == inv_part.end() || target->second.cols() == 0) {
            if (!moved.is_zero()) fail(errc::not_invariant, "x leaves the invertible part");
        } else {
            solve_in_basis(target->second, moved);  // throws NotInvariant on failure
        }
    }

    // Invertible part: Jordan data at the canonical representative weight of
    // each <chi>-orbit. Every orbit weight must carry the same Jordan type.
    std::map<Character, std::vector<Character>> orbits;
    for (const auto& [nu, idx] : buckets) orbits[ctx.coset_canonical(nu)].push_back(nu);
    std::map<Scalar, long> eigen_table;
    for (const auto& [rep, members] : orbits) {
        auto rep_inv = inv_part.find(rep);
        long rep_dim = rep_inv == inv_part.end() ? 0 : rep_inv->second.cols();
        for (const auto& mu : members)
            if (inv_part.at(mu).cols() != rep_dim)
                fail(errc::internal_dimension_mismatch,
                     "invertible part dimensions differ across one weight orbit");
        if (rep_dim == 0) continue;
        if (rep_inv == inv_part.end())
            fail(errc::eigenvalue_outside_candidates, "orbit representative weight missing from the module");
        std::map<Character, Matrix> restricted;
        for (const auto& mu : members)
            restricted.emplace(mu, restrict_to_invariant(phi.at(mu), inv_part.at(mu)));
        const Matrix& r = restricted.at(rep);
        long covered = 0;
        for (const Scalar& u : candidates) {
            if (u.is_zero()) continue;
            std::vector<long> profile = generalized_eigen_profile(r, u);
            for (const auto& mu : members)
                if (mu != rep && generalized_eigen_profile(restricted.at(mu), u) != profile)
                    fail(errc::internal_dimension_mismatch, "Jordan type differs across one weight orbit");
            if (profile.empty() || profile.back() == 0) continue;
            covered += profile.back();
            eigen_table[u] += profile.back();
            std::map<long, long> blocks = jordan_blocks_at(r, u);
            for (const auto& [size, count] : blocks)
                out.add(ModuleLabel::non_nilpotent(size, rep, u, ctx), count);
        }
        if (covered != rep_dim)
            fail(errc::eigenvalue_outside_candidates,
                 "invertible part has eigenvalues outside the candidate set (covered " +
                     std::to_string(covered) + " of " + std::to_string(rep_dim) + ")");
    }
    if (diag)
        for (const auto& [u, mult] : eigen_table) diag->eigenvalues.emplace_back(u.str(), mult);

    // Nilpotent part: graded string analysis.
    detail::string_decompose(m, buckets, nil_part, out);

    return out.build(m.dim());
}

/// One rule-versus-oracle comparison.
struct OracleReport {
    ModuleLabel left;
    ModuleLabel right;
    Decomposition rule_result;
    Decomposition oracle_result;
    bool agree = false;
    OracleDiagnostics diagnostics;
};

/// Runs the closed-form rules and the brute-force decomposition of the
/// explicit tensor model, and compares the canonical multisets.
inline OracleReport verify_pair(const ModuleLabel& A, const ModuleLabel& B, const Context& ctx) {
    OracleReport report{A, B, {}, {}, false, {}};
    report.rule_result = tensor_decompose(A, B, ctx);
    WeightModule product = tensor_realize(realize(A, ctx), realize(B, ctx));
    std::set<Scalar> candidates;
    if (ctx.finite()) candidates = candidate_eigenvalues(A, B, ctx);
    report.oracle_result = oracle_decompose(product, candidates, &report.diagnostics);
    report.agree = report.rule_result == report.oracle_result;
    return report;
}

}  // namespace hopfore
