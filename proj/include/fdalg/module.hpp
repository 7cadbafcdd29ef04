// Finite-dimensional left modules as action matrices: radicals, socles,
// projective covers, syzygies, duality, injective hulls, isomorphism testing
// with certificates, dominant dimension, minimal Wedderburn projectives and
// D-split sequence checks.

#pragma once

#include "fdalg/ideal.hpp"

#include <memory>
#include <numeric>

namespace fdalg {

template <ScalarField F>
struct Module {
    const Algebra<F>* alg = nullptr;
    std::size_t dim = 0;
    std::vector<Matrix<F>> action; // one dim x dim matrix per algebra basis vector
    std::string name;
};

template <ScalarField F>
struct ModuleMap {
    Matrix<F> mat; // target-dim x source-dim, acting on column vectors
};

template <ScalarField F>
Module<F> zero_module(const Algebra<F>& A) {
    return {&A, 0, std::vector<Matrix<F>>(A.dim()), "0"};
}

template <ScalarField F>
Module<F> regular_module(const Algebra<F>& A) {
    Module<F> m{&A, A.dim(), {}, A.name()};
    for (std::size_t i = 0; i < A.dim(); ++i)
        m.action.push_back(A.left_mult_matrix(A.basis_element(i)));
    return m;
}

/// Action of an algebra element on a module.
template <ScalarField F>
Matrix<F> act(const Module<F>& X, const std::vector<F>& a) {
    Matrix<F> m(X.dim, X.dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t r = 0; r < X.dim; ++r)
            for (std::size_t c = 0; c < X.dim; ++c) {
                const F& v = X.action[i].at(r, c);
                if (!v.is_zero()) m.at(r, c) += a[i] * v;
            }
    }
    return m;
}

// ---- submodules, quotients, direct sums -------------------------------------

/// U must be stable under the action; throws otherwise.
template <ScalarField F>
std::pair<Module<F>, ModuleMap<F>> submodule(const Module<F>& X, const Subspace<F>& U,
                                             const std::string& name) {
    std::size_t d = U.dim();
    Module<F> sub{X.alg, d, {}, name};
    for (std::size_t i = 0; i < X.alg->dim(); ++i) {
        Matrix<F> m(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            std::vector<F> img = X.action[i].apply(U.basis_vector(c));
            auto coords = U.coordinates(img);
            if (!coords) throw std::logic_error("submodule: subspace not action-stable");
            for (std::size_t r = 0; r < d; ++r) m.at(r, c) = (*coords)[r];
        }
        sub.action.push_back(std::move(m));
    }
    ModuleMap<F> incl{U.basis().transpose()};
    return {std::move(sub), std::move(incl)};
}

/// Quotient X/U with the standard-coordinate complement basis.
template <ScalarField F>
std::pair<Module<F>, ModuleMap<F>> quotient_module(const Module<F>& X, const Subspace<F>& U,
                                                   const std::string& name) {
    std::vector<bool> is_pivot(X.dim, false);
    for (std::size_t c : U.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < X.dim; ++c)
        if (!is_pivot[c]) keep.push_back(c);
    std::size_t d = keep.size();
    Matrix<F> proj(d, X.dim);
    auto project = [&](const std::vector<F>& v) {
        std::vector<F> red = U.reduce(v);
        std::vector<F> out(d);
        for (std::size_t t = 0; t < d; ++t) out[t] = red[keep[t]];
        return out;
    };
    for (std::size_t c = 0; c < X.dim; ++c) {
        std::vector<F> e(X.dim, F::zero());
        e[c] = F::one();
        std::vector<F> p = project(e);
        for (std::size_t r = 0; r < d; ++r) proj.at(r, c) = p[r];
    }
    Module<F> quot{X.alg, d, {}, name};
    for (std::size_t i = 0; i < X.alg->dim(); ++i) {
        Matrix<F> m(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            std::vector<F> e(X.dim, F::zero());
            e[keep[c]] = F::one();
            std::vector<F> img = project(X.action[i].apply(e));
            for (std::size_t r = 0; r < d; ++r) m.at(r, c) = img[r];
        }
        quot.action.push_back(std::move(m));
    }
    return {std::move(quot), ModuleMap<F>{std::move(proj)}};
}

template <ScalarField F>
struct DirectSum {
    Module<F> module;
    std::vector<std::size_t> offsets; // one per part, plus total at the end
};

template <ScalarField F>
DirectSum<F> direct_sum(const Algebra<F>& A, const std::vector<const Module<F>*>& parts,
                        const std::string& name) {
    std::vector<std::size_t> offsets{0};
    for (const Module<F>* p : parts) offsets.push_back(offsets.back() + p->dim);
    std::size_t d = offsets.back();
    Module<F> sum{&A, d, {}, name};
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Matrix<F> m(d, d);
        for (std::size_t t = 0; t < parts.size(); ++t)
            for (std::size_t r = 0; r < parts[t]->dim; ++r)
                for (std::size_t c = 0; c < parts[t]->dim; ++c)
                    m.at(offsets[t] + r, offsets[t] + c) = parts[t]->action[i].at(r, c);
        sum.action.push_back(std::move(m));
    }
    return {std::move(sum), std::move(offsets)};
}

// ---- modules from cyclic ideals ---------------------------------------------

template <ScalarField F>
Module<F> module_from_cyclic_ideal(const CyclicIdeal<F>& ideal, const std::string& name) {
    if (ideal.side != Side::left)
        throw std::invalid_argument(
            "module_from_cyclic_ideal: right ideal needs opposite-algebra wrapping");
    const Algebra<F>& A = *ideal.alg;
    Module<F> reg = regular_module(A);
    return submodule(reg, ideal.basis, name).first;
}

/// Right ideal uB as a left module over the opposite algebra.
template <ScalarField F>
Module<F> module_from_right_ideal(const CyclicIdeal<F>& ideal, const Algebra<F>& opposite,
                                  const std::string& name) {
    if (ideal.side != Side::right)
        throw std::invalid_argument("module_from_right_ideal: expected a right ideal");
    const Algebra<F>& A = *ideal.alg;
    const Subspace<F>& U = ideal.basis;
    Module<F> m{&opposite, U.dim(), {}, name};
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Matrix<F> r = A.right_mult_matrix(A.basis_element(i));
        Matrix<F> mi(U.dim(), U.dim());
        for (std::size_t c = 0; c < U.dim(); ++c) {
            auto coords = U.coordinates(r.apply(U.basis_vector(c)));
            if (!coords) throw std::logic_error("module_from_right_ideal: not stable");
            for (std::size_t rr = 0; rr < U.dim(); ++rr) mi.at(rr, c) = (*coords)[rr];
        }
        m.action.push_back(std::move(mi));
    }
    return m;
}

// ---- module environment -----------------------------------------------------

/// Per-algebra context: radical, generating set, split checks, and the lazily
/// built opposite algebra with its own environment (for duals and hulls).
template <ScalarField F>
class ModuleEnv {
public:
    explicit ModuleEnv(const Algebra<F>& A)
        : A_(&A), rad_(radical(A)), gens_(generating_set(A)) {}

    const Algebra<F>& algebra() const { return *A_; }
    const Subspace<F>& rad() const { return rad_; }
    const std::vector<std::vector<F>>& generators() const { return gens_; }

    const std::vector<std::vector<F>>& idempotents() const {
        if (!A_->idempotents())
            throw std::invalid_argument("ModuleEnv: algebra '" + A_->name() +
                                        "' has no idempotent decomposition");
        return *A_->idempotents();
    }

    /// Requires every e_i(A/rad)e_i to be one-dimensional (split simples);
    /// projective covers are computed under that hypothesis.
    void require_split() const {
        for (const auto& e : idempotents()) {
            Subspace<F> corner = sandwich_span(*A_, e, e);
            Matrix<F> rows(rad_.dim(), A_->dim());
            for (std::size_t t = 0; t < rad_.dim(); ++t)
                rows.set_row(t, A_->multiply(e, A_->multiply(rad_.basis_vector(t), e)));
            Subspace<F> corner_rad = Subspace<F>::from_span(A_->dim(), rows);
            if (corner.dim() - corner_rad.dim() != 1)
                throw std::invalid_argument(
                    "ModuleEnv: top decomposition requires an idempotent refinement the "
                    "algebra lacks (non-split simple at some idempotent)");
        }
    }

    ModuleEnv& opposite() const {
        if (!opp_env_) {
            opp_alg_ = std::make_unique<Algebra<F>>(opposite_algebra(*A_));
            opp_env_ = std::make_unique<ModuleEnv>(*opp_alg_);
        }
        return *opp_env_;
    }

    /// Projective A e_i as a module, with its subspace basis inside A.
    const std::pair<Module<F>, Subspace<F>>& projective(std::size_t i) const {
        if (projectives_.empty()) {
            Module<F> reg = regular_module(*A_);
            for (const auto& e : idempotents()) {
                Subspace<F> sp = Subspace<F>::from_span(
                    A_->dim(), A_->right_mult_matrix(e).transpose());
                Module<F> p = submodule(reg, sp, "P").first;
                projectives_.emplace_back(std::move(p), std::move(sp));
            }
        }
        return projectives_[i];
    }

private:
    const Algebra<F>* A_;
    Subspace<F> rad_;
    std::vector<std::vector<F>> gens_;
    mutable std::unique_ptr<Algebra<F>> opp_alg_;
    mutable std::unique_ptr<ModuleEnv> opp_env_;
    mutable std::vector<std::pair<Module<F>, Subspace<F>>> projectives_;
};

/// Checks the representation property on the generating set; together with
/// the algebra's own associativity audit this pins it on all pairs.
template <ScalarField F>
std::vector<std::string> audit_module(const Module<F>& X, const ModuleEnv<F>& env) {
    std::vector<std::string> issues;
    if (act(X, X.alg->unit()) != Matrix<F>::identity(X.dim))
        issues.push_back("unit does not act as identity on " + X.name);
    for (std::size_t g = 0; g < env.generators().size(); ++g) {
        const auto& gen = env.generators()[g];
        Matrix<F> ag = act(X, gen);
        for (std::size_t j = 0; j < X.alg->dim(); ++j) {
            Matrix<F> lhs = act(X, X.alg->multiply(gen, X.alg->basis_element(j)));
            if (lhs != ag * X.action[j]) {
                issues.push_back("representation property fails on " + X.name +
                                 " at generator " + std::to_string(g) + ", basis " +
                                 std::to_string(j));
                if (issues.size() > 4) return issues;
            }
        }
    }
    return issues;
}

// ---- hom spaces --------------------------------------------------------------

/// Basis of the intertwiner space Hom(X, Y), echelonized over row-major
/// vectorization, so the basis is canonical.
template <ScalarField F>
std::vector<ModuleMap<F>> hom_space(const Module<F>& X, const Module<F>& Y,
                                    const ModuleEnv<F>& env) {
    if (X.alg != Y.alg) throw std::invalid_argument("hom_space: modules over different algebras");
    std::size_t dx = X.dim, dy = Y.dim;
    std::size_t vars = dx * dy;
    if (vars == 0) return {};
    const auto& gens = env.generators();
    Matrix<F> cons(gens.size() * vars, vars);
    std::size_t row = 0;
    for (const auto& g : gens) {
        Matrix<F> ax = act(X, g), ay = act(Y, g);
        // (ay H - H ax)(i,j) = 0; unknown H is dy x dx, index (r,c) -> r*dx+c
        for (std::size_t i = 0; i < dy; ++i)
            for (std::size_t j = 0; j < dx; ++j) {
                for (std::size_t r = 0; r < dy; ++r)
                    if (!ay.at(i, r).is_zero()) cons.at(row, r * dx + j) += ay.at(i, r);
                for (std::size_t c = 0; c < dx; ++c)
                    if (!ax.at(c, j).is_zero()) cons.at(row, i * dx + c) -= ax.at(c, j);
                ++row;
            }
    }
    Matrix<F> ker = cons.nullspace();
    std::vector<ModuleMap<F>> basis;
    for (std::size_t t = 0; t < ker.rows(); ++t)
        basis.push_back(ModuleMap<F>{Matrix<F>(dy, dx, ker.row(t))});
    return basis;
}

template <ScalarField F>
long hom_dim(const Module<F>& X, const Module<F>& Y, const ModuleEnv<F>& env) {
    return static_cast<long>(hom_space(X, Y, env).size());
}

// ---- radical, top, socle ------------------------------------------------------

template <ScalarField F>
Subspace<F> radical_subspace(const Module<F>& X, const ModuleEnv<F>& env) {
    Matrix<F> rows(0, X.dim);
    for (std::size_t t = 0; t < env.rad().dim(); ++t)
        rows = rows.vstack(act(X, env.rad().basis_vector(t)).transpose());
    return Subspace<F>::from_span(X.dim, rows);
}

template <ScalarField F>
std::pair<Module<F>, ModuleMap<F>> radical_of_module(const Module<F>& X, const ModuleEnv<F>& env) {
    return submodule(X, radical_subspace(X, env), "rad(" + X.name + ")");
}

template <ScalarField F>
std::pair<Module<F>, ModuleMap<F>> top_of_module(const Module<F>& X, const ModuleEnv<F>& env) {
    return quotient_module(X, radical_subspace(X, env), "top(" + X.name + ")");
}

template <ScalarField F>
std::pair<Module<F>, ModuleMap<F>> socle_of_module(const Module<F>& X, const ModuleEnv<F>& env) {
    Matrix<F> stacked(0, X.dim);
    for (std::size_t t = 0; t < env.rad().dim(); ++t)
        stacked = stacked.vstack(act(X, env.rad().basis_vector(t)));
    Subspace<F> soc = env.rad().dim() == 0 ? Subspace<F>::full(X.dim)
                                           : Subspace<F>::from_span(X.dim, stacked.nullspace());
    return submodule(X, soc, "soc(" + X.name + ")");
}

// ---- projective covers and syzygies -------------------------------------------

template <ScalarField F>
struct Cover {
    Module<F> proj;                        // P
    ModuleMap<F> map;                      // P -> X surjective, kernel in rad P
    std::vector<std::size_t> multiplicities; // copies of A e_i per idempotent
    std::vector<std::size_t> block_idem;   // per block: idempotent index
    std::vector<std::size_t> block_offset; // per block: offset in P, plus total
};

template <ScalarField F>
Cover<F> projective_cover(const Module<F>& X, const ModuleEnv<F>& env) {
    env.require_split();
    const Algebra<F>& A = env.algebra();
    const auto& idems = env.idempotents();

    Subspace<F> radX = radical_subspace(X, env);
    std::vector<bool> is_pivot(X.dim, false);
    for (std::size_t c : radX.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < X.dim; ++c)
        if (!is_pivot[c]) keep.push_back(c);
    std::size_t top_dim = keep.size();
    auto top_class = [&](const std::vector<F>& v) {
        std::vector<F> red = radX.reduce(v);
        std::vector<F> out(top_dim);
        for (std::size_t t = 0; t < top_dim; ++t) out[t] = red[keep[t]];
        return out;
    };

    // pick generators: images of e_i whose top classes are independent
    std::vector<std::size_t> multiplicities(idems.size(), 0);
    std::vector<std::pair<std::size_t, std::vector<F>>> chosen; // (idem idx, v in e_i X)
    Matrix<F> selected(0, top_dim);
    for (std::size_t i = 0; i < idems.size(); ++i) {
        Matrix<F> ei = act(X, idems[i]);
        for (std::size_t c = 0; c < X.dim; ++c) {
            std::vector<F> v = ei.col(c);
            Matrix<F> trial(1, top_dim, top_class(v));
            Matrix<F> grown = selected.vstack(trial);
            if (grown.rank() > selected.rows()) {
                selected = grown;
                selected.rref();
                chosen.emplace_back(i, std::move(v));
                ++multiplicities[i];
            }
        }
    }
    if (selected.rows() != top_dim)
        throw std::logic_error("projective_cover: idempotent images do not span the top");

    std::vector<const Module<F>*> parts;
    std::vector<std::size_t> block_idem;
    for (const auto& [i, v] : chosen) {
        parts.push_back(&env.projective(i).first);
        block_idem.push_back(i);
    }
    DirectSum<F> P = parts.empty() ? DirectSum<F>{zero_module(A), {0}}
                                   : direct_sum(A, parts, "P(" + X.name + ")");

    Matrix<F> cover(X.dim, P.module.dim);
    for (std::size_t b = 0; b < chosen.size(); ++b) {
        const Subspace<F>& basis = env.projective(block_idem[b]).second;
        for (std::size_t c = 0; c < basis.dim(); ++c) {
            std::vector<F> img = act(X, basis.basis_vector(c)).apply(chosen[b].second);
            for (std::size_t r = 0; r < X.dim; ++r)
                cover.at(r, P.offsets[b] + c) = img[r];
        }
    }
    return {std::move(P.module), ModuleMap<F>{std::move(cover)}, std::move(multiplicities),
            std::move(block_idem), std::move(P.offsets)};
}

template <ScalarField F>
bool is_projective(const Module<F>& X, const ModuleEnv<F>& env) {
    if (X.dim == 0) return true;
    Cover<F> c = projective_cover(X, env);
    return c.proj.dim == X.dim;
}

/// Omega^1(X) as a submodule of the cover, with its inclusion.
template <ScalarField F>
std::pair<Module<F>, ModuleMap<F>> syzygy_step(const Cover<F>& cover, const std::string& name) {
    Subspace<F> ker = Subspace<F>::from_span(cover.proj.dim, cover.map.mat.nullspace());
    return submodule(cover.proj, ker, name);
}

/// Omega^1(X), ..., Omega^steps(X).
template <ScalarField F>
std::vector<Module<F>> syzygies(const Module<F>& X, std::size_t steps, const ModuleEnv<F>& env) {
    std::vector<Module<F>> out;
    Module<F> cur = X;
    for (std::size_t s = 1; s <= steps; ++s) {
        if (cur.dim == 0) {
            out.push_back(zero_module(env.algebra()));
            continue;
        }
        Cover<F> c = projective_cover(cur, env);
        cur = syzygy_step(c, "O^" + std::to_string(s) + "(" + X.name + ")").first;
        out.push_back(cur);
    }
    return out;
}

// ---- duality, hulls, coresolutions --------------------------------------------

/// D(X) = Hom_k(X, k) over the opposite algebra; action matrices transpose.
template <ScalarField F>
Module<F> dual_module(const Module<F>& X, const ModuleEnv<F>& env) {
    const Algebra<F>& opp = env.opposite().algebra();
    Module<F> d{&opp, X.dim, {}, "D(" + X.name + ")"};
    for (std::size_t i = 0; i < X.alg->dim(); ++i) d.action.push_back(X.action[i].transpose());
    return d;
}

/// Rebinds a module over the double opposite back to the original algebra.
template <ScalarField F>
Module<F> rebind(Module<F> X, const Algebra<F>& target) {
    if (X.alg->dim() != target.dim())
        throw std::invalid_argument("rebind: algebra dimension mismatch");
    X.alg = &target;
    return X;
}

template <ScalarField F>
struct Hull {
    Module<F> inj;                          // I(X)
    ModuleMap<F> emb;                       // X -> I(X), socle-essential
    std::vector<std::size_t> support;       // injective D(e_i A) multiplicities
};

/// I(X) = D(projective cover of D(X)); the embedding is the dual of the cover.
template <ScalarField F>
Hull<F> injective_hull(const Module<F>& X, const ModuleEnv<F>& env) {
    ModuleEnv<F>& openv = env.opposite();
    Module<F> dx = dual_module(X, env);
    Cover<F> c = projective_cover(dx, openv);
    Module<F> inj = rebind(dual_module(c.proj, openv), env.algebra());
    inj.name = "I(" + X.name + ")";
    return {std::move(inj), ModuleMap<F>{c.map.mat.transpose()}, c.multiplicities};
}

template <ScalarField F>
struct Coresolution {
    std::vector<Module<F>> terms;                  // I_0, I_1, ...
    std::vector<std::vector<std::size_t>> supports; // injective supports per term
    std::vector<bool> term_projective;
};

template <ScalarField F>
Coresolution<F> minimal_injective_coresolution(const Module<F>& X, std::size_t depth,
                                               const ModuleEnv<F>& env) {
    Coresolution<F> out;
    Module<F> cur = X;
    for (std::size_t t = 0; t < depth; ++t) {
        if (cur.dim == 0) {
            out.terms.push_back(zero_module(env.algebra()));
            out.supports.emplace_back();
            out.term_projective.push_back(true);
            continue;
        }
        Hull<F> h = injective_hull(cur, env);
        out.term_projective.push_back(is_projective(h.inj, env));
        Subspace<F> image =
            Subspace<F>::from_span(h.inj.dim, h.emb.mat.transpose());
        Module<F> next = quotient_module(h.inj, image, "cosyz").first;
        out.terms.push_back(std::move(h.inj));
        out.supports.push_back(std::move(h.support));
        cur = std::move(next);
    }
    return out;
}

struct DominantDim {
    std::size_t value = 0;
    bool at_least = false; // true means ">= value" (cap reached)
};

/// Number of leading projective terms of the minimal injective coresolution
/// of the regular module, capped.
template <ScalarField F>
DominantDim dominant_dimension(const ModuleEnv<F>& env, std::size_t cap) {
    Module<F> cur = regular_module(env.algebra());
    for (std::size_t t = 0; t < cap; ++t) {
        if (cur.dim == 0) return {cap, true}; // coresolution ended: all further terms are 0
        Hull<F> h = injective_hull(cur, env);
        if (!is_projective(h.inj, env)) return {t, false};
        Subspace<F> image = Subspace<F>::from_span(h.inj.dim, h.emb.mat.transpose());
        cur = quotient_module(h.inj, image, "cosyz").first;
    }
    return {cap, true};
}

// ---- isomorphism testing --------------------------------------------------------

template <ScalarField F>
struct IsoResult {
    bool isomorphic = false;
    bool decided = true;
    std::optional<Matrix<F>> certificate;
    std::string justification;
};

/// Searches for an invertible intertwiner as a linear combination of the hom
/// basis over the deterministic grid {0,...,dim}^r (the determinant has
/// degree <= dim, so vanishing on the whole grid certifies that no invertible
/// combination exists). Cheap certificates (dimension or hom-dimension
/// obstructions) are tried first.
template <ScalarField F>
IsoResult<F> is_isomorphic(const Module<F>& X, const Module<F>& Y, const ModuleEnv<F>& env,
                           std::size_t budget = 200000) {
    if (X.alg != Y.alg) throw std::invalid_argument("is_isomorphic: different algebras");
    if (X.dim != Y.dim)
        return {false, true, std::nullopt,
                "dimension mismatch (" + std::to_string(X.dim) + " vs " + std::to_string(Y.dim) + ")"};
    if (X.dim == 0) return {true, true, Matrix<F>(0, 0), "both zero"};

    std::vector<ModuleMap<F>> homs = hom_space(X, Y, env);
    std::size_t r = homs.size();
    if (r == 0) return {false, true, std::nullopt, "Hom(X,Y) = 0"};

    std::size_t d = X.dim;
    std::size_t max_rank = 0;
    auto try_combo = [&](const std::vector<F>& coeffs) -> std::optional<Matrix<F>> {
        Matrix<F> m(d, d);
        for (std::size_t t = 0; t < r; ++t) {
            if (coeffs[t].is_zero()) continue;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    const F& v = homs[t].mat.at(i, j);
                    if (!v.is_zero()) m.at(i, j) += coeffs[t] * v;
                }
        }
        std::size_t rk = m.rank();
        max_rank = std::max(max_rank, rk);
        if (rk == d) return m;
        return std::nullopt;
    };

    // single basis maps, then a few spread-out deterministic combinations
    for (std::size_t t = 0; t < r; ++t) {
        std::vector<F> coeffs(r, F::zero());
        coeffs[t] = F::one();
        if (auto m = try_combo(coeffs))
            return {true, true, std::move(*m), "invertible hom basis element"};
    }
    {
        std::vector<F> ones(r, F::one());
        std::vector<F> ramp(r), geom(r);
        F acc = F::one();
        F two = F::one() + F::one();
        F gacc = F::one();
        for (std::size_t t = 0; t < r; ++t) {
            ramp[t] = acc;
            acc += F::one();
            geom[t] = gacc;
            gacc = gacc * two;
        }
        for (const auto& cand : {ones, ramp, geom})
            if (auto m = try_combo(cand))
                return {true, true, std::move(*m), "invertible combination"};
    }

    double grid_points = 1;
    for (std::size_t t = 0; t < r; ++t) grid_points *= static_cast<double>(d + 1);
    if (grid_points <= static_cast<double>(budget)) {
        std::vector<std::size_t> idx(r, 0);
        std::vector<F> values(d + 1, F::zero());
        for (std::size_t v = 1; v <= d; ++v) values[v] = values[v - 1] + F::one();
        while (true) {
            std::vector<F> coeffs(r);
            for (std::size_t t = 0; t < r; ++t) coeffs[t] = values[idx[t]];
            if (auto m = try_combo(coeffs))
                return {true, true, std::move(*m), "invertible combination"};
            std::size_t p = 0;
            while (p < r && idx[p] == d) idx[p++] = 0;
            if (p == r) break;
            ++idx[p];
        }
        return {false, true, std::nullopt,
                "no invertible combination; max rank over the hom space is " +
                    std::to_string(max_rank) + " < " + std::to_string(d)};
    }

    // grid too large: fall back to hom-dimension obstructions
    long hxx = hom_dim(X, X, env), hxy = static_cast<long>(r);
    long hyy = hom_dim(Y, Y, env), hyx = hom_dim(Y, X, env);
    if (hxx != hxy || hxx != hyx || hxx != hyy)
        return {false, true, std::nullopt,
                "hom-dimension obstruction: dims (XX,XY,YX,YY) = (" + std::to_string(hxx) + "," +
                    std::to_string(hxy) + "," + std::to_string(hyx) + "," + std::to_string(hyy) + ")"};
    return {false, false, std::nullopt, "undecided: grid search budget exceeded"};
}

// ---- minimal Wedderburn projectives ----------------------------------------------

/// Indices i with Ae_i a summand of the projective module W.
template <ScalarField F>
std::vector<std::size_t> projective_support(const Module<F>& W, const ModuleEnv<F>& env) {
    Cover<F> c = projective_cover(W, env);
    if (c.proj.dim != W.dim)
        throw std::invalid_argument("projective_support: module is not projective");
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < c.multiplicities.size(); ++i)
        if (c.multiplicities[i] > 0) support.push_back(i);
    return support;
}

/// add(nu(W)) = add(I_0 + I_1) for the minimal injective copresentation of
/// the regular module: nu sends Ae_i to D(e_iA), so supports decide it.
template <ScalarField F>
bool minimal_wedderburn_check(const Module<F>& W, const ModuleEnv<F>& env) {
    std::vector<std::size_t> w_supp = projective_support(W, env);
    Coresolution<F> cores = minimal_injective_coresolution(regular_module(env.algebra()), 2, env);
    std::vector<bool> in_i01(env.idempotents().size(), false);
    for (std::size_t t = 0; t < cores.supports.size(); ++t)
        for (std::size_t i = 0; i < cores.supports[t].size(); ++i)
            if (cores.supports[t][i] > 0) in_i01[i] = true;
    std::vector<bool> in_w(env.idempotents().size(), false);
    for (std::size_t i : w_supp) in_w[i] = true;
    return in_w == in_i01;
}

// ---- D-split sequences -------------------------------------------------------------

template <ScalarField F>
bool is_exact_sequence(const Module<F>& X, const Module<F>& M, const Module<F>& Y,
                       const ModuleMap<F>& f, const ModuleMap<F>& g) {
    if (f.mat.cols() != X.dim || f.mat.rows() != M.dim) return false;
    if (g.mat.cols() != M.dim || g.mat.rows() != Y.dim) return false;
    if (M.dim != X.dim + Y.dim) return false;
    if (f.mat.rank() != X.dim) return false;               // f injective
    if (g.mat.rank() != Y.dim) return false;               // g surjective
    return (g.mat * f.mat).is_zero();                      // im f = ker g by dimensions
}

/// Definitional check: 0 -> X -f-> M -g-> Y -> 0 is add(D)-split when M lies
/// in add(D) and Hom(D', g), Hom(f, D') are surjective for every atom D'.
/// `m_parts` is M's declared summand decomposition for the add-membership test.
template <ScalarField F>
bool d_split_check(const Module<F>& X, const Module<F>& M, const Module<F>& Y,
                   const ModuleMap<F>& f, const ModuleMap<F>& g,
                   const std::vector<const Module<F>*>& atoms,
                   const std::vector<const Module<F>*>& m_parts, const ModuleEnv<F>& env) {
    if (!is_exact_sequence(X, M, Y, f, g))
        throw std::invalid_argument("d_split_check: sequence is not exact");
    for (const Module<F>* part : m_parts) {
        bool found = false;
        for (const Module<F>* atom : atoms)
            if (is_isomorphic(*part, *atom, env).isomorphic) { found = true; break; }
        if (!found) throw std::invalid_argument("d_split_check: M is not in add(D)");
    }

    auto coords_in = [&](const std::vector<ModuleMap<F>>& basis, const Matrix<F>& m) {
        Matrix<F> rows(basis.size(), m.rows() * m.cols());
        for (std::size_t t = 0; t < basis.size(); ++t)
            rows.set_row(t, basis[t].mat.flat());
        Subspace<F> space = Subspace<F>::from_span(m.rows() * m.cols(), rows);
        return space.coordinates(m.flat());
    };

    for (const Module<F>* D : atoms) {
        // post-composition with g: Hom(D', M) -> Hom(D', Y)
        std::vector<ModuleMap<F>> hm = hom_space(*D, M, env);
        std::vector<ModuleMap<F>> hy = hom_space(*D, Y, env);
        Matrix<F> img(hm.size(), hy.size() == 0 ? 0 : D->dim * Y.dim);
        if (!hy.empty()) {
            for (std::size_t t = 0; t < hm.size(); ++t)
                img.set_row(t, (g.mat * hm[t].mat).flat());
            if (Subspace<F>::from_span(D->dim * Y.dim, img).dim() != hy.size()) return false;
        }
        // pre-composition with f: Hom(M, D') -> Hom(X, D')
        std::vector<ModuleMap<F>> hmd = hom_space(M, *D, env);
        std::vector<ModuleMap<F>> hxd = hom_space(X, *D, env);
        if (!hxd.empty()) {
            Matrix<F> img2(hmd.size(), X.dim * D->dim);
            for (std::size_t t = 0; t < hmd.size(); ++t)
                img2.set_row(t, (hmd[t].mat * f.mat).flat());
            if (Subspace<F>::from_span(X.dim * D->dim, img2).dim() != hxd.size()) return false;
        }
    }
    return true;
}

} // namespace fdalg
