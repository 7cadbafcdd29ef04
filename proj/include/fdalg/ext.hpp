// Minimal projective resolutions, Ext spaces with canonical coset
// representatives, chain lifting, Yoneda products, admissible sets and the
// Phi-Auslander-Yoneda algebra builder.

#pragma once

#include "fdalg/module.hpp"

#include <map>
#include <set>

namespace fdalg {

// ---- admissible sets ---------------------------------------------------------

/// 0 in S, and for p,q,r in S with p+q+r in S: p+q in S iff q+r in S.
inline bool is_admissible(const std::vector<std::size_t>& set) {
    std::set<std::size_t> s(set.begin(), set.end());
    if (!s.count(0)) return false;
    for (std::size_t p : s)
        for (std::size_t q : s)
            for (std::size_t r : s) {
                if (!s.count(p + q + r)) continue;
                if (s.count(p + q) != s.count(q + r)) return false;
            }
    return true;
}

class AdmissibleSet {
public:
    explicit AdmissibleSet(std::vector<std::size_t> elems) {
        std::set<std::size_t> s(elems.begin(), elems.end());
        elems_.assign(s.begin(), s.end());
        if (!is_admissible(elems_))
            throw std::invalid_argument("AdmissibleSet: set is not admissible");
    }
    const std::vector<std::size_t>& elements() const { return elems_; }
    bool contains(std::size_t v) const {
        return std::binary_search(elems_.begin(), elems_.end(), v);
    }
    std::size_t max() const { return elems_.back(); }

private:
    std::vector<std::size_t> elems_;
};

// ---- resolutions ---------------------------------------------------------------

/// Minimal projective resolution of a module, extended lazily. Stage i holds
/// the cover P^i -> Omega^i and the kernel Omega^{i+1} as a subspace of P^i.
template <ScalarField F>
class Resolution {
public:
    Resolution(Module<F> X, const ModuleEnv<F>& env) : env_(&env) {
        syzygies_.push_back(std::move(X));
    }

    const ModuleEnv<F>& env() const { return *env_; }

    const Module<F>& syzygy(std::size_t i) {
        extend_to(i);
        return syzygies_[i];
    }
    const Cover<F>& cover(std::size_t i) {
        extend_to(i + 1);
        return covers_[i];
    }
    /// Omega^{i+1} as a subspace of P^i (kernel of the cover of Omega^i).
    const Subspace<F>& kernel(std::size_t i) {
        extend_to(i + 1);
        return kernels_[i];
    }

    void extend_to(std::size_t depth) {
        while (syzygies_.size() <= depth) {
            std::size_t i = covers_.size();
            covers_.push_back(projective_cover(syzygies_[i], *env_));
            Subspace<F> ker =
                Subspace<F>::from_span(covers_[i].proj.dim, covers_[i].map.mat.nullspace());
            auto [mod, incl] = submodule(covers_[i].proj, ker, "O^" + std::to_string(i + 1));
            kernels_.push_back(std::move(ker));
            syzygies_.push_back(std::move(mod));
        }
    }

private:
    const ModuleEnv<F>* env_;
    std::vector<Module<F>> syzygies_;
    std::vector<Cover<F>> covers_;
    std::vector<Subspace<F>> kernels_;
};

/// Basis of Hom(P, Y) for a cover object P = sum of A e_i copies, using
/// Hom(A e, Y) = e Y. No linear solving involved.
template <ScalarField F>
std::vector<ModuleMap<F>> hom_from_cover(const Cover<F>& c, const Module<F>& Y,
                                         const ModuleEnv<F>& env) {
    std::vector<ModuleMap<F>> basis;
    for (std::size_t b = 0; b < c.block_idem.size(); ++b) {
        const auto& e = env.idempotents()[c.block_idem[b]];
        const Subspace<F>& block_basis = env.projective(c.block_idem[b]).second;
        Subspace<F> eY = Subspace<F>::from_span(Y.dim, act(Y, e).transpose());
        for (std::size_t v = 0; v < eY.dim(); ++v) {
            Matrix<F> m(Y.dim, c.proj.dim);
            std::vector<F> vec = eY.basis_vector(v);
            for (std::size_t col = 0; col < block_basis.dim(); ++col) {
                std::vector<F> img = act(Y, block_basis.basis_vector(col)).apply(vec);
                for (std::size_t r = 0; r < Y.dim; ++r)
                    m.at(r, c.block_offset[b] + col) = img[r];
            }
            basis.push_back(ModuleMap<F>{std::move(m)});
        }
    }
    return basis;
}

// ---- Ext spaces -----------------------------------------------------------------

/// Ext^i(X, Y) presented on Hom(Omega^i X, Y): the factoring subspace is the
/// image of restriction from Hom(P^{i-1}, Y); representatives are the echelon
/// complement. All data lives in the row-major vectorization of maps.
template <ScalarField F>
struct ExtSpace {
    std::size_t degree = 0;
    std::size_t source_dim = 0, target_dim = 0;
    std::vector<ModuleMap<F>> ambient;
    Subspace<F> ambient_space{0};
    Subspace<F> factoring{0};
    Matrix<F> reps;
    Subspace<F> rep_space{0};

    std::size_t dim() const { return reps.rows(); }

    /// Canonical coordinates of the class of a map in Hom(Omega^i X, Y).
    std::vector<F> class_of(const Matrix<F>& map) const {
        std::vector<F> red = factoring.reduce(map.flat());
        auto coords = rep_space.coordinates(red);
        if (!coords) throw std::logic_error("ExtSpace: map is not in the ambient hom space");
        return *coords;
    }
    Matrix<F> representative(const std::vector<F>& coords) const {
        return Matrix<F>(target_dim, source_dim, rep_space.from_coordinates(coords));
    }
    /// Representative map of the k-th basis class.
    Matrix<F> rep_matrix(std::size_t k) const {
        return Matrix<F>(target_dim, source_dim, reps.row(k));
    }
};

template <ScalarField F>
ExtSpace<F> ext_space(Resolution<F>& res, const Module<F>& Y, std::size_t i) {
    const ModuleEnv<F>& env = res.env();
    const Module<F>& omega = res.syzygy(i);
    ExtSpace<F> e;
    e.degree = i;
    e.source_dim = omega.dim;
    e.target_dim = Y.dim;
    e.ambient = hom_space(omega, Y, env);
    std::size_t vlen = omega.dim * Y.dim;
    Matrix<F> rows(e.ambient.size(), vlen);
    for (std::size_t t = 0; t < e.ambient.size(); ++t) rows.set_row(t, e.ambient[t].mat.flat());
    e.ambient_space = Subspace<F>::from_span(vlen, rows);

    if (i == 0) {
        e.factoring = Subspace<F>(vlen);
    } else {
        std::vector<ModuleMap<F>> free_homs = hom_from_cover(res.cover(i - 1), Y, env);
        Matrix<F> incl = res.kernel(i - 1).basis().transpose(); // Omega^i -> P^{i-1}
        Matrix<F> frows(free_homs.size(), vlen);
        for (std::size_t t = 0; t < free_homs.size(); ++t)
            frows.set_row(t, (free_homs[t].mat * incl).flat());
        e.factoring = Subspace<F>::from_span(vlen, frows);
    }
    e.reps = e.factoring.complement_in(e.ambient_space);
    e.rep_space = Subspace<F>::from_span(vlen, e.reps);
    return e;
}

template <ScalarField F>
std::size_t ext_dim(Resolution<F>& res, const Module<F>& Y, std::size_t i) {
    return ext_space(res, Y, i).dim();
}

// ---- chain lifting ----------------------------------------------------------------

/// One chain-lift step: given f : Omega^i X -> Omega^s Y, produce
/// Omega(f) : Omega^{i+1} X -> Omega^{s+1} Y. When `alternate` is non-null and
/// the lift is not unique, a second, different lift is stored there.
template <ScalarField F>
Matrix<F> lift_once(Resolution<F>& res_x, std::size_t i, Resolution<F>& res_y, std::size_t s,
                    const Matrix<F>& f, Matrix<F>* alternate = nullptr) {
    const ModuleEnv<F>& env = res_x.env();
    const Cover<F>& cx = res_x.cover(i);
    const Cover<F>& cy = res_y.cover(s);

    // psi : P^i_X -> P^s_Y with cover_Y psi = f cover_X
    std::vector<ModuleMap<F>> free_homs = hom_from_cover(cx, cy.proj, env);
    Matrix<F> rhs = f * cx.map.mat; // Omega^s Y-dim x P^i_X-dim
    std::size_t vlen = rhs.rows() * rhs.cols();
    Matrix<F> sys(vlen, free_homs.size());
    for (std::size_t t = 0; t < free_homs.size(); ++t) {
        std::vector<F> col = (cy.map.mat * free_homs[t].mat).flat();
        for (std::size_t r = 0; r < vlen; ++r) sys.at(r, t) = col[r];
    }
    auto sol = sys.solve(rhs.flat());
    if (!sol) throw std::logic_error("lift_once: no chain lift (broken resolution)");
    auto assemble = [&](const std::vector<F>& coeffs) {
        Matrix<F> psi(cy.proj.dim, cx.proj.dim);
        for (std::size_t t = 0; t < coeffs.size(); ++t)
            if (!coeffs[t].is_zero()) psi = psi + coeffs[t] * free_homs[t].mat;
        return psi;
    };
    Matrix<F> psi = assemble(*sol);

    // restrict to the kernels: Omega^{i+1} X -> Omega^{s+1} Y
    auto restrict_psi = [&](const Matrix<F>& p) {
        Matrix<F> inclx = res_x.kernel(i).basis().transpose();
        Matrix<F> composed = p * inclx;
        const Subspace<F>& kery = res_y.kernel(s);
        Matrix<F> out(kery.dim(), composed.cols());
        for (std::size_t c = 0; c < composed.cols(); ++c) {
            auto coords = kery.coordinates(composed.col(c));
            if (!coords) throw std::logic_error("lift_once: lift does not map kernel to kernel");
            for (std::size_t r = 0; r < kery.dim(); ++r) out.at(r, c) = (*coords)[r];
        }
        return out;
    };

    if (alternate) {
        Matrix<F> null = sys.nullspace();
        if (null.rows() > 0) {
            std::vector<F> coeffs = *sol;
            for (std::size_t t = 0; t < coeffs.size(); ++t) coeffs[t] += null.at(0, t);
            *alternate = restrict_psi(assemble(coeffs));
        } else {
            *alternate = restrict_psi(psi);
        }
    }
    return restrict_psi(psi);
}

/// Omega^j(f) for f : Omega^i X -> Y; resolutions must extend to i+j resp. j.
template <ScalarField F>
Matrix<F> lift_map(Resolution<F>& res_x, std::size_t i, Resolution<F>& res_y,
                   const Matrix<F>& f, std::size_t j) {
    Matrix<F> cur = f;
    for (std::size_t s = 0; s < j; ++s) cur = lift_once(res_x, i + s, res_y, s, cur);
    return cur;
}

/// Yoneda product of classes a in Ext^i(X,Y) and b in Ext^j(Y,Z), as the
/// class of (Omega^j a-representative followed by b-representative).
template <ScalarField F>
std::vector<F> yoneda_product(Resolution<F>& res_x, std::size_t i, const Matrix<F>& f,
                              Resolution<F>& res_y, std::size_t j, const Matrix<F>& g,
                              const ExtSpace<F>& target) {
    Matrix<F> lifted = lift_map(res_x, i, res_y, f, j);
    return target.class_of(g * lifted);
}

// ---- Phi-Auslander-Yoneda algebra ------------------------------------------------

struct YonedaBasisInfo {
    std::size_t s, t;    // summand pair
    std::size_t degree;
    std::size_t index;   // within Ext^degree(X_s, X_t)
};

template <ScalarField F>
struct YonedaAlgebraBuild {
    Algebra<F> algebra;
    std::vector<YonedaBasisInfo> basis_info;
    std::vector<std::vector<std::vector<std::size_t>>> block_dims; // [deg index][s][t]
    std::vector<std::size_t> degrees; // sorted Phi
};

/// E^Phi(X) for X given by its summand list: basis is the union of canonical
/// Ext^i(X_s, X_t) representatives over i in Phi, multiplication is the
/// degreewise Yoneda composition, zero when the total degree leaves Phi.
/// Idempotents come from the degree-0 identity classes of the summands.
template <ScalarField F>
YonedaAlgebraBuild<F> build_phi_yoneda_algebra(const std::vector<const Module<F>*>& parts,
                                               const AdmissibleSet& phi, const ModuleEnv<F>& env,
                                               const std::string& name) {
    std::size_t np = parts.size();
    std::size_t maxdeg = phi.max();

    std::vector<Resolution<F>> res;
    res.reserve(np);
    for (std::size_t s = 0; s < np; ++s) res.emplace_back(*parts[s], env);
    for (auto& r : res) r.extend_to(2 * maxdeg);

    // ext[s][t][deg in Phi-order]
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, ExtSpace<F>> ext;
    for (std::size_t s = 0; s < np; ++s)
        for (std::size_t t = 0; t < np; ++t)
            for (std::size_t deg : phi.elements())
                ext.emplace(std::make_tuple(s, t, deg), ext_space(res[s], *parts[t], deg));

    std::vector<YonedaBasisInfo> info;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> offset;
    std::vector<std::string> labels;
    std::size_t dim = 0;
    for (std::size_t deg : phi.elements())
        for (std::size_t s = 0; s < np; ++s)
            for (std::size_t t = 0; t < np; ++t) {
                offset[{s, t, deg}] = dim;
                std::size_t d = ext.at({s, t, deg}).dim();
                for (std::size_t k = 0; k < d; ++k) {
                    info.push_back({s, t, deg, k});
                    labels.push_back("(" + std::to_string(s) + "," + std::to_string(t) + "," +
                                     std::to_string(deg) + "," + std::to_string(k) + ")");
                }
                dim += d;
            }

    // memoized lifts: Omega^v of representative #a
    std::map<std::pair<std::size_t, std::size_t>, Matrix<F>> lift_cache;
    auto lifted_rep = [&](std::size_t a, std::size_t v) -> const Matrix<F>& {
        auto key = std::make_pair(a, v);
        auto it = lift_cache.find(key);
        if (it != lift_cache.end()) return it->second;
        const YonedaBasisInfo& ia = info[a];
        Matrix<F> rep = ext.at({ia.s, ia.t, ia.degree}).rep_matrix(ia.index);
        Matrix<F> l = lift_map(res[ia.s], ia.degree, res[ia.t], rep, v);
        return lift_cache.emplace(key, std::move(l)).first->second;
    };

    std::vector<StructureTriple<F>> triples;
    for (std::size_t a = 0; a < dim; ++a) {
        const YonedaBasisInfo& ia = info[a];
        for (std::size_t b = 0; b < dim; ++b) {
            const YonedaBasisInfo& ib = info[b];
            if (ia.t != ib.s) continue;
            std::size_t total = ia.degree + ib.degree;
            if (!phi.contains(total)) continue;
            const ExtSpace<F>& target = ext.at({ia.s, ib.t, total});
            if (target.dim() == 0) continue;
            const Matrix<F>& lifted = lifted_rep(a, ib.degree);
            Matrix<F> grep = ext.at({ib.s, ib.t, ib.degree}).rep_matrix(ib.index);
            std::vector<F> coords = target.class_of(grep * lifted);
            std::size_t off = offset[{ia.s, ib.t, total}];
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (!coords[k].is_zero()) triples.push_back({a, b, off + k, coords[k]});
        }
    }

    std::vector<F> unit(dim, F::zero());
    std::vector<std::vector<F>> idems;
    for (std::size_t s = 0; s < np; ++s) {
        const ExtSpace<F>& e0 = ext.at({s, s, 0});
        std::vector<F> coords = e0.class_of(Matrix<F>::identity(parts[s]->dim));
        std::vector<F> e(dim, F::zero());
        std::size_t off = offset[{s, s, 0}];
        for (std::size_t k = 0; k < coords.size(); ++k) {
            e[off + k] = coords[k];
            unit[off + k] += coords[k];
        }
        idems.push_back(std::move(e));
    }

    Algebra<F> out(name, dim, std::move(labels), std::move(unit), triples, std::move(idems),
                   std::nullopt, env.algebra().parameter());
    require_sound(out);

    std::vector<std::vector<std::vector<std::size_t>>> block_dims;
    for (std::size_t deg : phi.elements()) {
        std::vector<std::vector<std::size_t>> layer(np, std::vector<std::size_t>(np, 0));
        for (std::size_t s = 0; s < np; ++s)
            for (std::size_t t = 0; t < np; ++t) layer[s][t] = ext.at({s, t, deg}).dim();
        block_dims.push_back(std::move(layer));
    }
    return {std::move(out), std::move(info), std::move(block_dims), phi.elements()};
}

// ---- Mueller dominant-dimension criterion ------------------------------------------

/// dom.dim End(Y) = s + 2 where s is the length of the vanishing prefix of
/// Ext^i(Y, Y), for Y a generator-cogenerator. Returns {cap + 2, at_least}
/// when the whole prefix up to cap vanishes.
template <ScalarField F>
DominantDim muller_dominant_dimension(const std::vector<const Module<F>*>& parts,
                                      const ModuleEnv<F>& env, std::size_t cap) {
    const Algebra<F>& A = env.algebra();
    const auto& idems = env.idempotents();

    // generator: every A e_i is a summand of Y
    for (std::size_t i = 0; i < idems.size(); ++i) {
        bool found = false;
        for (const Module<F>* p : parts)
            if (is_isomorphic(env.projective(i).first, *p, env).isomorphic) { found = true; break; }
        if (!found)
            throw std::invalid_argument("muller_dominant_dimension: Y is not a generator");
    }
    // cogenerator: every D(e_i A) is a summand of Y
    ModuleEnv<F>& openv = env.opposite();
    for (std::size_t i = 0; i < idems.size(); ++i) {
        Subspace<F> eia = Subspace<F>::from_span(
            A.dim(), A.left_mult_matrix(idems[i]).transpose());
        Module<F> right = submodule(regular_module(openv.algebra()), eia, "eA").first;
        Module<F> inj = rebind(dual_module(right, openv), A);
        bool found = false;
        for (const Module<F>* p : parts)
            if (is_isomorphic(inj, *p, env).isomorphic) { found = true; break; }
        if (!found)
            throw std::invalid_argument("muller_dominant_dimension: Y is not a cogenerator");
    }

    std::vector<Resolution<F>> res;
    for (const Module<F>* p : parts) res.emplace_back(*p, env);
    for (std::size_t i = 1; i <= cap; ++i) {
        std::size_t total = 0;
        for (std::size_t s = 0; s < parts.size(); ++s)
            for (std::size_t t = 0; t < parts.size(); ++t)
                total += ext_dim(res[s], *parts[t], i);
        if (total != 0) return {i + 1, false}; // s = i-1, dom.dim = s + 2
    }
    return {cap + 2, true};
}

} // namespace fdalg
