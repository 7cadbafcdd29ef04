// Finite-dimensional associative algebras as structure constants over an
// exact field, with the ring-theoretic computations that work at this level:
// multiplication matrices, audits, trace-form radical, Cartan matrix, corner
// algebras, symmetric-form search, opposite and quotient algebras.

#pragma once

#include "fdalg/subspace.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fdalg {

template <ScalarField F>
struct StructureTriple {
    std::size_t i, j, k;
    F c;
};

template <ScalarField F>
class Algebra {
public:
    Algebra(std::string name, std::size_t dim, std::vector<std::string> labels,
            std::vector<F> unit, const std::vector<StructureTriple<F>>& triples,
            std::optional<std::vector<std::vector<F>>> idempotents = std::nullopt,
            std::optional<std::vector<int>> grading = std::nullopt,
            F q = F::zero())
        : name_(std::move(name)), dim_(dim), labels_(std::move(labels)),
          unit_(std::move(unit)), prod_(dim * dim),
          idempotents_(std::move(idempotents)), grading_(std::move(grading)),
          q_(std::move(q)) {
        if (labels_.size() != dim_ || unit_.size() != dim_)
            throw std::invalid_argument("Algebra: inconsistent dimensions");
        std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, F>> acc;
        for (const auto& t : triples) {
            if (t.i >= dim_ || t.j >= dim_ || t.k >= dim_)
                throw std::invalid_argument("Algebra: triple index out of range");
            auto& slot = acc[{t.i, t.j}][t.k];
            slot = slot + t.c;
        }
        for (auto& [ij, ks] : acc) {
            auto& row = prod_[ij.first * dim_ + ij.second];
            for (auto& [k, c] : ks)
                if (!c.is_zero()) row.emplace_back(k, c);
        }
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<F>& unit() const { return unit_; }
    const std::optional<std::vector<std::vector<F>>>& idempotents() const { return idempotents_; }
    const std::optional<std::vector<int>>& grading() const { return grading_; }
    const F& parameter() const { return q_; }

    const std::vector<std::pair<std::size_t, F>>& basis_product(std::size_t i, std::size_t j) const {
        return prod_[i * dim_ + j];
    }

    /// Sorted sparse triples, canonical for serialization.
    std::vector<StructureTriple<F>> triples() const {
        std::vector<StructureTriple<F>> out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : basis_product(i, j))
                    out.push_back({i, j, k, c});
        return out;
    }

    std::vector<F> basis_element(std::size_t i) const {
        std::vector<F> v(dim_, F::zero());
        v[i] = F::one();
        return v;
    }

    std::vector<F> multiply(const std::vector<F>& x, const std::vector<F>& y) const {
        std::vector<F> r(dim_, F::zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                F f = x[i] * y[j];
                for (const auto& [k, c] : basis_product(i, j)) r[k] += f * c;
            }
        }
        return r;
    }

    /// Matrix of b -> a*b in the algebra basis.
    Matrix<F> left_mult_matrix(const std::vector<F>& a) const {
        Matrix<F> m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : basis_product(i, j)) m.at(k, j) += a[i] * c;
        }
        return m;
    }

    /// Matrix of b -> b*a in the algebra basis.
    Matrix<F> right_mult_matrix(const std::vector<F>& a) const {
        Matrix<F> m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (a[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                for (const auto& [k, c] : basis_product(i, j)) m.at(k, i) += a[j] * c;
        }
        return m;
    }

    bool is_idempotent(const std::vector<F>& e) const { return multiply(e, e) == e; }

private:
    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<F> unit_;
    std::vector<std::vector<std::pair<std::size_t, F>>> prod_;
    std::optional<std::vector<std::vector<F>>> idempotents_;
    std::optional<std::vector<int>> grading_;
    F q_;
};

/// Element with an algebra reference, for call sites that want operators.
template <ScalarField F>
struct Element {
    const Algebra<F>* alg;
    std::vector<F> c;

    friend Element operator*(const Element& x, const Element& y) {
        if (x.alg != y.alg) throw std::invalid_argument("Element: mismatched algebras");
        return {x.alg, x.alg->multiply(x.c, y.c)};
    }
    friend Element operator+(const Element& x, const Element& y) {
        if (x.alg != y.alg) throw std::invalid_argument("Element: mismatched algebras");
        std::vector<F> r(x.c.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.c[i] + y.c[i];
        return {x.alg, std::move(r)};
    }
    friend Element operator*(const F& s, const Element& x) {
        std::vector<F> r(x.c.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * x.c[i];
        return {x.alg, std::move(r)};
    }
    friend bool operator==(const Element& x, const Element& y) {
        return x.alg == y.alg && x.c == y.c;
    }
    bool is_zero() const {
        for (const F& v : c)
            if (!v.is_zero()) return false;
        return true;
    }
};

// ---- audits ----------------------------------------------------------------

/// All violated algebra invariants, empty if the algebra is sound.
/// Associativity is checked on every basis triple.
template <ScalarField F>
std::vector<std::string> audit_algebra(const Algebra<F>& A) {
    std::vector<std::string> issues;
    std::size_t n = A.dim();

    for (std::size_t i = 0; i < n; ++i) {
        if (A.multiply(A.unit(), A.basis_element(i)) != A.basis_element(i))
            issues.push_back("unit law fails on the left at basis " + std::to_string(i));
        if (A.multiply(A.basis_element(i), A.unit()) != A.basis_element(i))
            issues.push_back("unit law fails on the right at basis " + std::to_string(i));
    }

    std::vector<F> scratch(n, F::zero());
    for (std::size_t i = 0; i < n && issues.size() < 8; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& pij = A.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                // (b_i b_j) b_k - b_i (b_j b_k) accumulated sparsely
                for (const auto& [t, c] : pij)
                    for (const auto& [u, d] : A.basis_product(t, k)) scratch[u] += c * d;
                for (const auto& [s, c] : A.basis_product(j, k))
                    for (const auto& [u, d] : A.basis_product(i, s)) scratch[u] -= c * d;
                bool bad = false;
                for (std::size_t u = 0; u < n; ++u) {
                    if (!scratch[u].is_zero()) bad = true;
                    scratch[u] = F::zero();
                }
                if (bad) {
                    issues.push_back("associativity fails at triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
                    if (issues.size() >= 8) break;
                }
            }
        }

    if (A.idempotents()) {
        const auto& es = *A.idempotents();
        std::vector<F> sum(n, F::zero());
        for (std::size_t a = 0; a < es.size(); ++a) {
            if (!A.is_idempotent(es[a]))
                issues.push_back("idempotent " + std::to_string(a) + " does not square to itself");
            for (std::size_t i = 0; i < n; ++i) sum[i] += es[a][i];
            for (std::size_t b = 0; b < es.size(); ++b) {
                if (a == b) continue;
                std::vector<F> p = A.multiply(es[a], es[b]);
                for (const F& v : p)
                    if (!v.is_zero()) {
                        issues.push_back("idempotents " + std::to_string(a) + "," +
                                         std::to_string(b) + " are not orthogonal");
                        break;
                    }
            }
        }
        if (sum != A.unit()) issues.push_back("idempotents do not sum to the unit");
    }

    if (A.grading()) {
        const auto& deg = *A.grading();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& [k, c] : A.basis_product(i, j))
                    if (!c.is_zero() && deg[k] != deg[i] + deg[j])
                        issues.push_back("grading violated at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
    }

    return issues;
}

template <ScalarField F>
void require_sound(const Algebra<F>& A) {
    std::vector<std::string> issues = audit_algebra(A);
    if (!issues.empty())
        throw std::logic_error("algebra '" + A.name() + "' failed audit: " + issues.front());
}

// ---- radical and friends ---------------------------------------------------

/// Jacobson radical via the trace form of the regular representation
/// (characteristic zero): rad A = { x : trace(L_x L_y) = 0 for all y }.
template <ScalarField F>
Subspace<F> radical(const Algebra<F>& A) {
    std::size_t n = A.dim();
    std::vector<Matrix<F>> L(n);
    for (std::size_t i = 0; i < n; ++i) L[i] = A.left_mult_matrix(A.basis_element(i));
    Matrix<F> gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            F t = F::zero();
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    const F& a = L[i].at(r, s);
                    if (a.is_zero()) continue;
                    const F& b = L[j].at(s, r);
                    if (!b.is_zero()) t += a * b;
                }
            gram.at(i, j) = t;
            gram.at(j, i) = std::move(t);
        }
    return Subspace<F>::from_span(n, gram.nullspace());
}

/// Span of all pairwise products of two subspaces (e.g. rad^2 from rad).
template <ScalarField F>
Subspace<F> product_span(const Algebra<F>& A, const Subspace<F>& U, const Subspace<F>& V) {
    Matrix<F> rows(U.dim() * V.dim(), A.dim());
    std::size_t r = 0;
    for (std::size_t i = 0; i < U.dim(); ++i)
        for (std::size_t j = 0; j < V.dim(); ++j)
            rows.set_row(r++, A.multiply(U.basis_vector(i), V.basis_vector(j)));
    return Subspace<F>::from_span(A.dim(), rows);
}

template <ScalarField F>
bool is_two_sided_ideal(const Algebra<F>& A, const Subspace<F>& U) {
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < U.dim(); ++j) {
            if (!U.contains(A.multiply(A.basis_element(i), U.basis_vector(j)))) return false;
            if (!U.contains(A.multiply(U.basis_vector(j), A.basis_element(i)))) return false;
        }
    return true;
}

/// Least t with U^t = 0, or nullopt if U is not nilpotent within dim steps.
template <ScalarField F>
std::optional<std::size_t> nilpotency_index(const Algebra<F>& A, const Subspace<F>& U) {
    Subspace<F> power = U;
    for (std::size_t t = 1; t <= A.dim() + 1; ++t) {
        if (power.dim() == 0) return t;
        power = product_span(A, power, U);
    }
    return std::nullopt;
}

template <ScalarField F>
bool is_local(const Algebra<F>& A) {
    return radical(A).dim() + 1 == A.dim();
}

/// Quotient by a two-sided ideal. The quotient basis is the set of standard
/// coordinates away from the ideal's pivot columns.
template <ScalarField F>
Algebra<F> quotient_algebra(const Algebra<F>& A, const Subspace<F>& ideal, const std::string& name) {
    std::size_t n = A.dim();
    std::vector<bool> in_ideal(n, false);
    for (std::size_t c : ideal.pivots()) in_ideal[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < n; ++c)
        if (!in_ideal[c]) keep.push_back(c);
    std::size_t m = keep.size();
    auto project = [&](const std::vector<F>& v) {
        std::vector<F> red = ideal.reduce(v);
        std::vector<F> out(m);
        for (std::size_t t = 0; t < m; ++t) out[t] = red[keep[t]];
        return out;
    };
    std::vector<StructureTriple<F>> triples;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<F> p = project(A.multiply(A.basis_element(keep[a]), A.basis_element(keep[b])));
            for (std::size_t k = 0; k < m; ++k)
                if (!p[k].is_zero()) triples.push_back({a, b, k, p[k]});
        }
    std::vector<std::string> labels(m);
    for (std::size_t t = 0; t < m; ++t) labels[t] = A.labels()[keep[t]] + "~";
    return Algebra<F>(name, m, std::move(labels), project(A.unit()), triples,
                      std::nullopt, std::nullopt, A.parameter());
}

// ---- Cartan matrix ---------------------------------------------------------

template <ScalarField F>
Subspace<F> sandwich_span(const Algebra<F>& A, const std::vector<F>& e,
                          const std::vector<F>& f) {
    Matrix<F> rows(A.dim(), A.dim());
    for (std::size_t t = 0; t < A.dim(); ++t)
        rows.set_row(t, A.multiply(e, A.multiply(A.basis_element(t), f)));
    return Subspace<F>::from_span(A.dim(), rows);
}

/// entry (i,j) = dim e_i A e_j = dim Hom(P_i, P_j) for P_t = A e_t.
template <ScalarField F>
std::vector<std::vector<long>> cartan_matrix(const Algebra<F>& A) {
    if (!A.idempotents())
        throw std::invalid_argument("cartan_matrix: algebra has no idempotent decomposition");
    const auto& es = *A.idempotents();
    std::vector<std::vector<long>> cartan(es.size(), std::vector<long>(es.size(), 0));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j)
            cartan[i][j] = static_cast<long>(sandwich_span(A, es[i], es[j]).dim());
    return cartan;
}

// ---- corner algebra --------------------------------------------------------

template <ScalarField F>
Algebra<F> corner_algebra(const Algebra<F>& A, const std::vector<F>& e, const std::string& name) {
    if (!A.is_idempotent(e)) throw std::invalid_argument("corner_algebra: e is not idempotent");
    Subspace<F> corner = sandwich_span(A, e, e);
    std::size_t m = corner.dim();
    std::vector<StructureTriple<F>> triples;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<F> p = A.multiply(corner.basis_vector(a), corner.basis_vector(b));
            auto coords = corner.coordinates(p);
            if (!coords) throw std::logic_error("corner_algebra: product left the corner");
            for (std::size_t k = 0; k < m; ++k)
                if (!(*coords)[k].is_zero()) triples.push_back({a, b, k, (*coords)[k]});
        }
    auto ucoords = corner.coordinates(e);
    if (!ucoords) throw std::logic_error("corner_algebra: e not inside eAe");
    std::vector<std::string> labels(m);
    for (std::size_t t = 0; t < m; ++t) labels[t] = "c" + std::to_string(t);
    return Algebra<F>(name, m, std::move(labels), *ucoords, triples,
                      std::vector<std::vector<F>>{*ucoords}, std::nullopt, A.parameter());
}

// ---- opposite --------------------------------------------------------------

template <ScalarField F>
Algebra<F> opposite_algebra(const Algebra<F>& A) {
    std::vector<StructureTriple<F>> triples;
    for (const auto& t : A.triples()) triples.push_back({t.j, t.i, t.k, t.c});
    return Algebra<F>(A.name() + "^op", A.dim(), A.labels(), A.unit(), triples,
                      A.idempotents(), A.grading(), A.parameter());
}

// ---- symmetric form search -------------------------------------------------

template <ScalarField F>
struct SymmetricFormResult {
    std::optional<std::vector<F>> functional; // values on the basis
    std::size_t candidates_tested = 0;
    bool search_exhausted = false; // family fully enumerated without success
};

/// Looks for a linear functional l with l(ab) = l(ba) and nondegenerate Gram
/// matrix (a,b) -> l(ab). The symmetry constraints cut out a linear family;
/// candidate combinations are enumerated over a deterministic grid, 0/1
/// vectors by popcount first. A nonzero determinant certifies success; absence
/// within the budget is reported, with `search_exhausted` set when the whole
/// grid of size (dim+1)^family was covered.
template <ScalarField F>
SymmetricFormResult<F> symmetric_form_search(const Algebra<F>& A, std::size_t budget = 20000) {
    std::size_t n = A.dim();
    SymmetricFormResult<F> res;

    std::vector<std::vector<F>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<F> row(n, F::zero());
            for (const auto& [k, c] : A.basis_product(i, j)) row[k] += c;
            for (const auto& [k, c] : A.basis_product(j, i)) row[k] -= c;
            bool nz = false;
            for (const F& v : row) nz = nz || !v.is_zero();
            if (nz) rows.push_back(std::move(row));
        }
    Matrix<F> cons(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) cons.set_row(r, rows[r]);
    Matrix<F> family = cons.nullspace();
    std::size_t s = family.rows();
    if (s == 0) {
        res.search_exhausted = true;
        return res;
    }

    auto gram_det = [&](const std::vector<F>& lambda) {
        Matrix<F> gram(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                F g = F::zero();
                for (const auto& [k, c] : A.basis_product(i, j)) g += c * lambda[k];
                gram.at(i, j) = std::move(g);
            }
        return gram.det();
    };
    auto try_candidate = [&](const std::vector<F>& coeffs) -> bool {
        std::vector<F> lambda(n, F::zero());
        for (std::size_t t = 0; t < s; ++t) {
            if (coeffs[t].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) lambda[k] += coeffs[t] * family.at(t, k);
        }
        ++res.candidates_tested;
        if (!gram_det(lambda).is_zero()) {
            res.functional = std::move(lambda);
            return true;
        }
        return false;
    };

    // 0/1 combinations by increasing popcount
    if (s <= 20) {
        std::vector<std::size_t> order((std::size_t(1) << s) - 1);
        for (std::size_t m = 1; m < (std::size_t(1) << s); ++m) order[m - 1] = m;
        std::stable_sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
            return __builtin_popcountll(a) < __builtin_popcountll(b);
        });
        for (std::size_t mask : order) {
            if (res.candidates_tested >= budget) return res;
            std::vector<F> coeffs(s, F::zero());
            for (std::size_t t = 0; t < s; ++t)
                if (mask & (std::size_t(1) << t)) coeffs[t] = F::one();
            if (try_candidate(coeffs)) return res;
        }
    }

    // full grid {0..n}^s, lexicographic
    std::vector<std::size_t> idx(s, 0);
    while (true) {
        if (res.candidates_tested >= budget) return res;
        std::vector<F> coeffs(s);
        for (std::size_t t = 0; t < s; ++t) {
            coeffs[t] = F::zero();
            for (std::size_t u = 0; u < idx[t]; ++u) coeffs[t] = coeffs[t] + F::one();
        }
        if (try_candidate(coeffs)) return res;
        std::size_t p = 0;
        while (p < s && idx[p] == n) idx[p++] = 0;
        if (p == s) break;
        ++idx[p];
    }
    res.search_exhausted = true;
    return res;
}

/// entry (i,j) = dim e_i (rad/rad^2) e_j: the number of quiver arrows i -> j
/// in the split basic case.
template <ScalarField F>
std::vector<std::vector<long>> arrow_count_matrix(const Algebra<F>& A) {
    if (!A.idempotents())
        throw std::invalid_argument("arrow_count_matrix: algebra has no idempotents");
    const auto& es = *A.idempotents();
    Subspace<F> rad = radical(A);
    Subspace<F> rad2 = product_span(A, rad, rad);
    auto block_dim = [&](const Subspace<F>& U, const std::vector<F>& e, const std::vector<F>& f) {
        Matrix<F> rows(U.dim(), A.dim());
        for (std::size_t t = 0; t < U.dim(); ++t)
            rows.set_row(t, A.multiply(e, A.multiply(U.basis_vector(t), f)));
        return Subspace<F>::from_span(A.dim(), rows).dim();
    };
    std::vector<std::vector<long>> counts(es.size(), std::vector<long>(es.size(), 0));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j)
            counts[i][j] = static_cast<long>(block_dim(rad, es[i], es[j])) -
                           static_cast<long>(block_dim(rad2, es[i], es[j]));
    return counts;
}

// ---- generating sets -------------------------------------------------------

/// Small generating set: the idempotents (or the unit) together with a lift
/// of rad/rad^2. Verified by closure; falls back to the full basis.
template <ScalarField F>
std::vector<std::vector<F>> generating_set(const Algebra<F>& A) {
    std::vector<std::vector<F>> gens;
    if (A.idempotents())
        for (const auto& e : *A.idempotents()) gens.push_back(e);
    else
        gens.push_back(A.unit());
    Subspace<F> rad = radical(A);
    Subspace<F> rad2 = product_span(A, rad, rad);
    Matrix<F> arrows = rad2.complement_in(rad);
    for (std::size_t r = 0; r < arrows.rows(); ++r) gens.push_back(arrows.row(r));

    // closure check
    Matrix<F> span(gens.size() + 1, A.dim());
    span.set_row(0, A.unit());
    for (std::size_t g = 0; g < gens.size(); ++g) span.set_row(g + 1, gens[g]);
    Subspace<F> S = Subspace<F>::from_span(A.dim(), span);
    while (S.dim() < A.dim()) {
        Matrix<F> next(S.dim() * gens.size(), A.dim());
        std::size_t r = 0;
        for (std::size_t i = 0; i < S.dim(); ++i)
            for (const auto& g : gens) next.set_row(r++, A.multiply(S.basis_vector(i), g));
        Subspace<F> grown = S.sum_with(Subspace<F>::from_span(A.dim(), next));
        if (grown.dim() == S.dim()) break;
        S = grown;
    }
    if (S.dim() != A.dim()) {
        gens.clear();
        for (std::size_t i = 0; i < A.dim(); ++i) gens.push_back(A.basis_element(i));
    }
    return gens;
}

} // namespace fdalg
