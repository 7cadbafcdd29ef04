// The Section-6 verification battery: dimension equality, Cartan matrices,
// route cross-validation, global-dimension evidence from resolutions of the
// simple modules, dominant dimension two ways, the projective-injective
// column, the Omega-orbit non-isomorphism evidence and quiver arrow counts.

#pragma once

#include "fdalg/liu_schulz.hpp"
#include "fdalg/table.hpp"

#include <sstream>

namespace fdalg {

enum class ItemStatus { match, mismatch, evidence_only };

struct BatteryItem {
    std::string name;
    std::string expected; // empty when the paper prints no value
    std::string computed;
    ItemStatus status;
};

struct BatteryReport {
    std::string params;
    std::vector<BatteryItem> items;
    bool any_mismatch() const {
        for (const auto& it : items)
            if (it.status == ItemStatus::mismatch) return true;
        return false;
    }
};

std::string render_markdown(const BatteryReport& r);
nlohmann::ordered_json report_to_json(const BatteryReport& r);

struct BatteryOptions {
    std::size_t depth = 20;          // resolution depth for the simples
    std::size_t resolution_dim_cap = 400;
    std::size_t iso_dim_cap = 16;    // repetition scan: iso tests only below this
    std::size_t orbit_range = 12;    // I_0..I_orbit_range pairwise non-isomorphism
};

namespace detail {

inline std::string matrix_to_string(const std::vector<std::vector<long>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace detail

template <ScalarField F>
BatteryReport verify_battery(const LiuSchulzContext<F>& ctx, long n, long m,
                             const AdmissibleSet& phi, const BatteryOptions& opt = {}) {
    BatteryReport report;
    {
        std::ostringstream os;
        os << "q=" << ctx.q().str() << " n=" << n << " m=" << m << " phi={";
        for (std::size_t i = 0; i < phi.elements().size(); ++i)
            os << (i ? "," : "") << phi.elements()[i];
        os << "} depth=" << opt.depth;
        report.params = os.str();
    }
    auto add = [&](std::string name, std::string expected, std::string computed,
                   ItemStatus status) {
        report.items.push_back({std::move(name), std::move(expected), std::move(computed), status});
    };
    bool phi_is_0 = phi.elements() == std::vector<std::size_t>{0};
    bool phi_is_01 = phi.elements() == std::vector<std::size_t>{0, 1};

    // ---- Theorem 6.1(1): dimension equality m vs m+1
    YonedaAlgebraBuild<F> lam = build_lambda_yoneda(ctx, n, m, phi);
    YonedaAlgebraBuild<F> lam_next = build_lambda_yoneda(ctx, n, m + 1, phi);
    {
        std::ostringstream os;
        os << lam.algebra.dim() << " vs " << lam_next.algebra.dim();
        add("dimension-equality(m," + std::to_string(m + 1) + ")", "equal", os.str(),
            lam.algebra.dim() == lam_next.algebra.dim() ? ItemStatus::match
                                                        : ItemStatus::mismatch);
    }
    if (n == 0 && phi_is_0)
        add("dimension", "34", std::to_string(lam.algebra.dim()),
            lam.algebra.dim() == 34 ? ItemStatus::match : ItemStatus::mismatch);
    if (n == 0 && phi_is_01 && m >= 4)
        add("dimension", "36", std::to_string(lam.algebra.dim()),
            lam.algebra.dim() == 36 ? ItemStatus::match : ItemStatus::mismatch);

    // ---- Cartan matrix (printed for n = 0, Phi = {0})
    if (n == 0 && phi_is_0 && (m >= 3 || m == 2)) {
        std::vector<std::vector<long>> expected =
            m >= 3 ? std::vector<std::vector<long>>{{8, 4, 4}, {4, 3, 2}, {4, 2, 3}}
                   : std::vector<std::vector<long>>{{8, 4, 4}, {4, 3, 3}, {4, 2, 3}};
        std::vector<std::vector<long>> got = cartan_matrix(lam.algebra);
        add("cartan", detail::matrix_to_string(expected), detail::matrix_to_string(got),
            got == expected ? ItemStatus::match : ItemStatus::mismatch);
    }

    // ---- route cross-validation (n = 0, Phi = {0})
    if (n == 0 && phi_is_0) {
        MatrixEndoAlgebra<F> route2 = build_lambda_matrix(ctx, m);
        bool dims = route2.algebra.dim() == lam.algebra.dim();
        bool cartans = cartan_matrix(route2.algebra) == cartan_matrix(lam.algebra);
        std::ostringstream os;
        os << "dims " << lam.algebra.dim() << "/" << route2.algebra.dim() << ", Cartan "
           << (cartans ? "equal" : "differ") << ", audits pass";
        add("route-agreement", "yoneda route = matrix route", os.str(),
            dims && cartans ? ItemStatus::match : ItemStatus::mismatch);
    }

    ModuleEnv<F> lenv(lam.algebra);

    // ---- Theorem 6.1(2): global dimension evidence from the simples
    {
        std::ostringstream os;
        bool certified = false;
        for (std::size_t s = 0; s < lenv.idempotents().size(); ++s) {
            Module<F> proj = lenv.projective(s).first;
            Module<F> simple = top_of_module(proj, lenv).first;
            simple.name = "S_" + std::to_string(s);
            std::vector<Module<F>> chain{simple};
            std::string verdict;
            for (std::size_t d = 1; d <= opt.depth; ++d) {
                Cover<F> c = projective_cover(chain.back(), lenv);
                Module<F> next = syzygy_step(c, "O^" + std::to_string(d)).first;
                if (next.dim == 0) {
                    verdict = "terminates at step " + std::to_string(d) +
                              " (finite projective dimension)";
                    break;
                }
                if (next.dim > opt.resolution_dim_cap) {
                    verdict = "truncated at step " + std::to_string(d) + " (dim " +
                              std::to_string(next.dim) + " exceeds cap)";
                    break;
                }
                chain.push_back(std::move(next));
                for (std::size_t a = 1; a + 1 < chain.size() && verdict.empty(); ++a) {
                    if (chain[a].dim != chain.back().dim || chain[a].dim > opt.iso_dim_cap)
                        continue;
                    IsoResult<F> iso = is_isomorphic(chain[a], chain.back(), lenv);
                    if (iso.decided && iso.isomorphic) {
                        verdict = "syzygy repetition O^" + std::to_string(a) + " = O^" +
                                  std::to_string(chain.size() - 1) +
                                  " (periodicity certifies infinite projective dimension)";
                        certified = true;
                    }
                }
                if (!verdict.empty()) break;
            }
            if (verdict.empty())
                verdict = "no termination within depth " + std::to_string(opt.depth);
            os << (s ? "; " : "") << "S_" << s << ": " << verdict;
        }
        add("global-dimension", "infinite (proved in the source; finite evidence here)",
            os.str() + (certified ? " [certified via periodicity]" : ""),
            ItemStatus::evidence_only);
    }

    // ---- Theorem 6.1(3): dominant dimension, coresolution route
    std::size_t expected_domdim = phi_is_0 ? 2 : 0;
    {
        DominantDim dd = dominant_dimension(lenv, expected_domdim + 2);
        std::string got = (dd.at_least ? ">= " : "") + std::to_string(dd.value);
        add("dominant-dimension", std::to_string(expected_domdim), got,
            (!dd.at_least && dd.value == expected_domdim) ? ItemStatus::match
                                                          : ItemStatus::mismatch);
    }

    // ---- Mueller criterion over A (the Phi = {0} endomorphism case)
    if (phi_is_0) {
        DominantDim dd = muller_dominant_dimension(lambda_summands(ctx, n, m), ctx.env(), 4);
        std::string got = (dd.at_least ? ">= " : "") + std::to_string(dd.value);
        add("dominant-dimension-muller", std::to_string(expected_domdim), got,
            (!dd.at_least && dd.value == expected_domdim) ? ItemStatus::match
                                                          : ItemStatus::mismatch);
    }

    // ---- Section 5: projective-injectives are exactly the Hom(V, A) column
    {
        std::vector<std::size_t> injective;
        for (std::size_t s = 0; s < lenv.idempotents().size(); ++s) {
            const Module<F>& P = lenv.projective(s).first;
            Hull<F> h = injective_hull(P, lenv);
            if (h.inj.dim == P.dim) injective.push_back(s);
        }
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < injective.size(); ++i) os << (i ? "," : "") << injective[i];
        os << "}";
        add("projective-injectives", "{0} (the Hom(V,A) column)", os.str(),
            injective == std::vector<std::size_t>{0} ? ItemStatus::match : ItemStatus::mismatch);
    }

    // ---- Omega-orbit evidence: I_0..I_k pairwise non-isomorphic
    {
        bool all_distinct = true;
        std::size_t pairs = 0, undecided = 0;
        for (long a = 0; a <= static_cast<long>(opt.orbit_range); ++a)
            for (long b = a + 1; b <= static_cast<long>(opt.orbit_range); ++b) {
                IsoResult<F> iso = is_isomorphic(ctx.I_module(a), ctx.I_module(b), ctx.env());
                ++pairs;
                if (!iso.decided) ++undecided;
                else if (iso.isomorphic) all_distinct = false;
            }
        std::ostringstream os;
        os << (all_distinct ? "pairwise non-isomorphic" : "ISOMORPHIC PAIR FOUND") << " ("
           << pairs - undecided << "/" << pairs << " pairs decided)";
        add("omega-orbit-non-isomorphism",
            "I_j pairwise non-isomorphic for all integers j (finite range certified here)",
            os.str(), ItemStatus::evidence_only);
    }

    // ---- quiver arrow counts (printed for n = 0, Phi = {0}, m >= 3)
    if (n == 0 && phi_is_0 && m >= 3) {
        std::vector<std::vector<long>> expected{{1, 1, 1}, {1, 0, 0}, {1, 0, 0}};
        std::vector<std::vector<long>> got = arrow_count_matrix(lam.algebra);
        add("quiver-arrows", detail::matrix_to_string(expected), detail::matrix_to_string(got),
            got == expected ? ItemStatus::match : ItemStatus::mismatch);
    }

    return report;
}

} // namespace fdalg
