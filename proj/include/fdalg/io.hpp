// JSON serialization of algebras and modules. Keys and triple order are
// deterministic; all scalars travel as exact strings.

#pragma once

#include "fdalg/module.hpp"

#include <nlohmann/json.hpp>

namespace fdalg {

using json = nlohmann::ordered_json;

template <ScalarField F>
json algebra_to_json(const Algebra<F>& A) {
    json j;
    j["name"] = A.name();
    j["dim"] = A.dim();
    j["basis"] = A.labels();
    json unit = json::array();
    for (const F& c : A.unit()) unit.push_back(c.str());
    j["unit"] = std::move(unit);
    json mult = json::array();
    for (const auto& t : A.triples()) // triples() is sorted lexicographically in (i,j,k)
        mult.push_back(json::array({t.i, t.j, t.k, t.c.str()}));
    j["mult"] = std::move(mult);
    if (A.idempotents()) {
        json idems = json::array();
        for (const auto& e : *A.idempotents()) {
            json row = json::array();
            for (const F& c : e) row.push_back(c.str());
            idems.push_back(std::move(row));
        }
        j["idempotents"] = std::move(idems);
    }
    if (A.grading()) j["grading"] = *A.grading();
    j["scalar"] = {{"kind", scalar_traits<F>::kind}, {"q", A.parameter().str()}};
    return j;
}

template <ScalarField F>
Algebra<F> algebra_from_json(const json& j) {
    if (j.at("scalar").at("kind").get<std::string>() != scalar_traits<F>::kind)
        throw std::invalid_argument("algebra_from_json: scalar backend mismatch (file has '" +
                                    j.at("scalar").at("kind").get<std::string>() + "')");
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    std::vector<F> unit;
    for (const auto& s : j.at("unit")) unit.push_back(F::parse(s.get<std::string>()));
    std::vector<StructureTriple<F>> triples;
    for (const auto& t : j.at("mult"))
        triples.push_back({t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(),
                           t.at(2).get<std::size_t>(), F::parse(t.at(3).get<std::string>())});
    std::optional<std::vector<std::vector<F>>> idems;
    if (j.contains("idempotents")) {
        idems.emplace();
        for (const auto& row : j.at("idempotents")) {
            std::vector<F> e;
            for (const auto& s : row) e.push_back(F::parse(s.get<std::string>()));
            idems->push_back(std::move(e));
        }
    }
    std::optional<std::vector<int>> grading;
    if (j.contains("grading")) grading = j.at("grading").get<std::vector<int>>();
    return Algebra<F>(j.at("name").get<std::string>(), dim, std::move(labels), std::move(unit),
                      triples, std::move(idems), std::move(grading),
                      F::parse(j.at("scalar").at("q").get<std::string>()));
}

template <ScalarField F>
json module_to_json(const Module<F>& X) {
    json j;
    j["algebra"] = X.alg->name();
    j["dim"] = X.dim;
    json action = json::array();
    for (const Matrix<F>& m : X.action) {
        json rows = json::array();
        for (const F& c : m.flat()) rows.push_back(c.str());
        action.push_back(std::move(rows));
    }
    j["action"] = std::move(action);
    return j;
}

template <ScalarField F>
Module<F> module_from_json(const json& j, const Algebra<F>& A) {
    if (j.at("algebra").get<std::string>() != A.name())
        throw std::invalid_argument("module_from_json: algebra name mismatch");
    Module<F> X{&A, j.at("dim").get<std::size_t>(), {}, "module"};
    for (const auto& rows : j.at("action")) {
        std::vector<F> flat;
        for (const auto& s : rows) flat.push_back(F::parse(s.get<std::string>()));
        X.action.push_back(Matrix<F>(X.dim, X.dim, std::move(flat)));
    }
    if (X.action.size() != A.dim())
        throw std::invalid_argument("module_from_json: wrong number of action matrices");
    return X;
}

} // namespace fdalg
