// The Liu-Schulz algebra A(q) on generators x0, x1, x2 with x_i^2 = 0 and
// x_{i+1} x_i = -q x_i x_{i+1} (indices mod 3), its cyclic ideals I_j = A u_j
// and J_j = u_j A for u_j = x2 + q^j x1, the canonical sequences
// delta_j : 0 -> I_{j+1} -> A -> I_j -> 0, and the two builders for the
// endomorphism-style algebras Lambda_m^Phi.

#pragma once

#include "fdalg/ext.hpp"

namespace fdalg {

namespace detail {

/// Reduces a word over {0,1,2} to a scalar multiple of one of the eight
/// normal monomials. Rules: x_i x_i -> 0, the three reordering rules
/// x1x0 -> -q x0x1, x2x1 -> -q x1x2, x0x2 -> -q x2x0, and rotation of the
/// degree-3 monomials x1x2x0 and x2x0x1 to x0x1x2. The system is not assumed
/// confluent; the associativity audit after construction is the safety net.
template <ScalarField F>
std::pair<F, std::vector<int>> normalize_word(std::vector<int> w, const F& q) {
    F coeff = F::one();
    for (int guard = 0; guard < 1000; ++guard) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1]) return {F::zero(), {}};
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            int a = w[i], b = w[i + 1];
            if ((a == 1 && b == 0) || (a == 2 && b == 1) || (a == 0 && b == 2)) {
                std::swap(w[i], w[i + 1]);
                coeff = coeff * (-q);
                changed = true;
                break;
            }
        }
        if (!changed)
            for (std::size_t i = 0; i + 2 < w.size(); ++i) {
                int a = w[i], b = w[i + 1], c = w[i + 2];
                if ((a == 1 && b == 2 && c == 0) || (a == 2 && b == 0 && c == 1)) {
                    w[i] = 0; w[i + 1] = 1; w[i + 2] = 2;
                    changed = true;
                    break;
                }
            }
        if (!changed) return {coeff, w};
    }
    throw std::logic_error("normalize_word: rewriting did not terminate");
}

} // namespace detail

template <ScalarField F>
Algebra<F> build_liu_schulz_algebra(const F& q) {
    if (!admissible_parameter(q))
        throw std::invalid_argument("build_liu_schulz_algebra: q must avoid {0, 1, -1}");
    const std::vector<std::vector<int>> words = {
        {}, {0}, {1}, {2}, {0, 1}, {1, 2}, {2, 0}, {0, 1, 2}};
    const std::vector<std::string> labels = {"1",    "x0",   "x1",   "x2",
                                             "x0x1", "x1x2", "x2x0", "x0x1x2"};
    auto word_index = [&](const std::vector<int>& w) -> std::size_t {
        for (std::size_t k = 0; k < words.size(); ++k)
            if (words[k] == w) return k;
        throw std::logic_error("build_liu_schulz_algebra: non-normal word survived rewriting");
    };
    std::vector<StructureTriple<F>> triples;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::vector<int> w = words[i];
            w.insert(w.end(), words[j].begin(), words[j].end());
            auto [c, nw] = detail::normalize_word(std::move(w), q);
            if (!c.is_zero()) triples.push_back({i, j, word_index(nw), c});
        }
    std::vector<F> unit(8, F::zero());
    unit[0] = F::one();
    Algebra<F> A("LiuSchulz(q=" + q.str() + ")", 8, labels, unit, triples,
                 std::vector<std::vector<F>>{unit}, std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3}, q);
    require_sound(A);
    return A;
}

template <ScalarField F>
class LiuSchulzContext {
public:
    explicit LiuSchulzContext(F q)
        : q_(q), A_(build_liu_schulz_algebra(q)), env_(A_) {}

    const F& q() const { return q_; }
    const Algebra<F>& algebra() const { return A_; }
    ModuleEnv<F>& env() const { return env_; }

    std::vector<F> x(int i) const { return A_.basis_element(1 + i); }

    /// u_j = x2 + q^j x1.
    std::vector<F> u(long j) const {
        std::vector<F> v(8, F::zero());
        v[3] = F::one();
        v[2] = field_pow(q_, j);
        return v;
    }

    CyclicIdeal<F> ideal(long j, Side side) const {
        return make_cyclic_ideal(A_, u(j), side);
    }

    const Module<F>& I_module(long j) const {
        auto it = i_modules_.find(j);
        if (it == i_modules_.end()) {
            Module<F> m = module_from_cyclic_ideal(ideal(j, Side::left), "I_" + std::to_string(j));
            it = i_modules_.emplace(j, std::move(m)).first;
        }
        return it->second;
    }

    /// J_j as a module over the opposite algebra.
    const Module<F>& J_module(long j) const {
        auto it = j_modules_.find(j);
        if (it == j_modules_.end()) {
            Module<F> m = module_from_right_ideal(ideal(j, Side::right),
                                                  env_.opposite().algebra(),
                                                  "J_" + std::to_string(j));
            it = j_modules_.emplace(j, std::move(m)).first;
        }
        return it->second;
    }

    const Module<F>& regular() const {
        if (!regular_) regular_ = std::make_unique<Module<F>>(regular_module(A_));
        return *regular_;
    }

    // the named subspaces of Section 6: C = <1, x1, x2, x0x1, x1x2, x2x0, x0x1x2>,
    // T = C without the unit, S = T + <x0>
    Subspace<F> C_space() const { return span_of({0, 2, 3, 4, 5, 6, 7}); }
    Subspace<F> T_space() const { return span_of({2, 3, 4, 5, 6, 7}); }
    Subspace<F> S_space() const { return span_of({1, 2, 3, 4, 5, 6, 7}); }

    struct Delta {
        const Module<F>* X; // I_{j+1}
        Module<F> M;        // the regular module
        const Module<F>* Y; // I_j
        ModuleMap<F> f;     // inclusion I_{j+1} -> A
        ModuleMap<F> g;     // right multiplication A -> I_j
    };

    /// delta_j : 0 -> I_{j+1} -> A -> I_j -> 0.
    Delta delta(long j) const {
        const Module<F>& X = I_module(j + 1);
        const Module<F>& Y = I_module(j);
        Subspace<F> xb = ideal(j + 1, Side::left).basis;
        Subspace<F> yb = ideal(j, Side::left).basis;
        ModuleMap<F> f{xb.basis().transpose()};
        Matrix<F> g(Y.dim, 8);
        Matrix<F> ru = A_.right_mult_matrix(u(j));
        for (std::size_t c = 0; c < 8; ++c) {
            auto coords = yb.coordinates(ru.col(c));
            if (!coords) throw std::logic_error("delta: image not inside I_j");
            for (std::size_t r = 0; r < Y.dim; ++r) g.at(r, c) = (*coords)[r];
        }
        return {&X, regular_module(A_), &Y, std::move(f), ModuleMap<F>{std::move(g)}};
    }

private:
    Subspace<F> span_of(const std::vector<std::size_t>& idx) const {
        Matrix<F> rows(idx.size(), 8);
        for (std::size_t t = 0; t < idx.size(); ++t)
            rows.set_row(t, A_.basis_element(idx[t]));
        return Subspace<F>::from_span(8, rows);
    }

    F q_;
    Algebra<F> A_;
    mutable ModuleEnv<F> env_;
    mutable std::map<long, Module<F>> i_modules_;
    mutable std::map<long, Module<F>> j_modules_;
    mutable std::unique_ptr<Module<F>> regular_;
};

// ---- the Lambda builders ------------------------------------------------------

/// Summand list A, I_0, ..., I_n, I_m of the module V_m.
template <ScalarField F>
std::vector<const Module<F>*> lambda_summands(const LiuSchulzContext<F>& ctx, long n, long m) {
    std::vector<const Module<F>*> parts{&ctx.regular()};
    for (long i = 0; i <= n; ++i) parts.push_back(&ctx.I_module(i));
    parts.push_back(&ctx.I_module(m));
    return parts;
}

/// Route 1: the Yoneda builder on V = A + I_0 + ... + I_n + I_m.
template <ScalarField F>
YonedaAlgebraBuild<F> build_lambda_yoneda(const LiuSchulzContext<F>& ctx, long n, long m,
                                          const AdmissibleSet& phi) {
    if (m >= 0 && m <= n)
        throw std::invalid_argument("build_lambda_yoneda: m collides with 0..n");
    std::string phis;
    for (std::size_t v : phi.elements()) phis += (phis.empty() ? "" : ",") + std::to_string(v);
    return build_phi_yoneda_algebra(lambda_summands(ctx, n, m), phi, ctx.env(),
                                    "Lambda(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                                        ",Phi={" + phis + "})");
}

/// Route 2 (n = 0, Phi = {0} only): the matrix algebra M_A(1, u_0, u_m).
template <ScalarField F>
MatrixEndoAlgebra<F> build_lambda_matrix(const LiuSchulzContext<F>& ctx, long m) {
    std::vector<std::vector<F>> xs{ctx.algebra().unit(), ctx.u(0), ctx.u(m)};
    return matrix_endomorphism_algebra(ctx.algebra(), xs,
                                       "M_A(1,u0,u" + std::to_string(m) + ")");
}

// ---- D-split classification -----------------------------------------------------

template <ScalarField F>
struct DSplitRange {
    std::vector<long> definitional; // j with delta_j add(A + I_0..I_n)-split
    std::vector<long> ext_criterion;
};

/// Runs the definitional check and the Ext-vanishing criterion
/// (Ext^1(I_l, I_{j+1}) = 0 and Ext^1(I_j, I_l) = 0 for all 0 <= l <= n)
/// over an inclusive range of j.
template <ScalarField F>
DSplitRange<F> dsplit_range(const LiuSchulzContext<F>& ctx, long n, long jlo, long jhi) {
    DSplitRange<F> out;
    ModuleEnv<F>& env = ctx.env();
    std::vector<const Module<F>*> atoms{&ctx.regular()};
    for (long l = 0; l <= n; ++l) atoms.push_back(&ctx.I_module(l));

    for (long j = jlo; j <= jhi; ++j) {
        auto d = ctx.delta(j);
        std::vector<const Module<F>*> m_parts{&d.M};
        if (d_split_check(*d.X, d.M, *d.Y, d.f, d.g, atoms, m_parts, env))
            out.definitional.push_back(j);

        bool ext_ok = true;
        for (long l = 0; l <= n && ext_ok; ++l) {
            Resolution<F> res_l(ctx.I_module(l), env);
            Resolution<F> res_j(ctx.I_module(j), env);
            if (ext_dim(res_l, ctx.I_module(j + 1), 1) != 0) ext_ok = false;
            if (ext_ok && ext_dim(res_j, ctx.I_module(l), 1) != 0) ext_ok = false;
        }
        if (ext_ok) out.ext_criterion.push_back(j);
    }
    return out;
}

} // namespace fdalg
