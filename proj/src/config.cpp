#include "ctx/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctx/bounds.hpp"

namespace ctx {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError("config error at " + path + ": " + msg);
}

Complex parse_component(const json& j, const std::string& path) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    fail(path, "component must be a number or [re, im]");
}

WitnessKind parse_kind(const std::string& s, const std::string& path) {
    if (s == "sum_projectors") return WitnessKind::SumProjectors;
    if (s == "sum_pair_products") return WitnessKind::SumPairProducts;
    if (s == "dichotomic_quadratic") return WitnessKind::DichotomicQuadratic;
    if (s == "pauli_square") return WitnessKind::PauliSquare;
    fail(path, "unknown witness kind '" + s + "'");
}

}  // namespace

ConstructionConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config error at $: top level must be an object");

    ConstructionConfig cfg;
    if (!j.contains("name") || !j["name"].is_string()) fail("$.name", "required string");
    cfg.name = j["name"].get<std::string>();
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        fail("$.dimension", "required integer");
    cfg.dimension = j["dimension"].get<int>();
    if (cfg.dimension < 2 || cfg.dimension > 9) fail("$.dimension", "must be in [2, 9]");

    if (j.contains("witness")) {
        const json& w = j["witness"];
        if (!w.is_object() || !w.contains("kind") || !w["kind"].is_string())
            fail("$.witness", "must be an object with a string 'kind'");
        cfg.witness_kind = parse_kind(w["kind"].get<std::string>(), "$.witness.kind");
        if (w.contains("parameters")) {
            const json& p = w["parameters"];
            if (!p.is_object()) fail("$.witness.parameters", "must be an object");
            if (p.contains("pairs")) {
                if (p["pairs"].is_string()) {
                    if (p["pairs"].get<std::string>() != "non_adjacent_ordered")
                        fail("$.witness.parameters.pairs", "string form must be 'non_adjacent_ordered'");
                } else if (p["pairs"].is_array()) {
                    for (size_t k = 0; k < p["pairs"].size(); ++k) {
                        const json& pr = p["pairs"][k];
                        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
                            !pr[1].is_number_integer())
                            fail("$.witness.parameters.pairs[" + std::to_string(k) + "]",
                                 "must be [i, j]");
                        cfg.witness_pairs.push_back({pr[0].get<int>(), pr[1].get<int>()});
                    }
                } else {
                    fail("$.witness.parameters.pairs", "must be a string or array");
                }
            }
            if (p.contains("members")) {
                if (!p["members"].is_array()) fail("$.witness.parameters.members", "must be an array");
                for (const auto& m : p["members"]) cfg.witness_members.push_back(m.get<int>());
            }
            if (p.contains("operators")) {
                if (!p["operators"].is_array())
                    fail("$.witness.parameters.operators", "must be an array of Pauli strings");
                for (const auto& m : p["operators"]) cfg.pauli_operators.push_back(m.get<std::string>());
            }
        }
    }

    if (cfg.witness_kind == WitnessKind::PauliSquare) {
        if (cfg.pauli_operators.size() != 9)
            fail("$.witness.parameters.operators", "pauli_square needs the nine grid operators");
    } else {
        if (!j.contains("rays") || !j["rays"].is_array() || j["rays"].empty())
            fail("$.rays", "required non-empty array");
        for (size_t r = 0; r < j["rays"].size(); ++r) {
            const json& ray = j["rays"][r];
            std::string path = "$.rays[" + std::to_string(r) + "]";
            if (!ray.is_array() || static_cast<int>(ray.size()) != cfg.dimension)
                fail(path, "must be an array of length 'dimension'");
            std::vector<Complex> v;
            double norm2 = 0;
            for (size_t c = 0; c < ray.size(); ++c) {
                Complex z = parse_component(ray[c], path + "[" + std::to_string(c) + "]");
                norm2 += std::norm(z);
                v.push_back(z);
            }
            if (norm2 == 0) fail(path, "ray must be nonzero");
            cfg.rays.push_back(v);
        }
    }

    if (j.contains("adjacency") && !(j["adjacency"].is_string() && j["adjacency"] == "auto")) {
        const json& a = j["adjacency"];
        size_t n = cfg.rays.size();
        if (!a.is_array() || a.size() != n) fail("$.adjacency", "must be 'auto' or an NxN matrix");
        cfg.adjacency_auto = false;
        cfg.adjacency.assign(n, std::vector<bool>(n, false));
        for (size_t r = 0; r < n; ++r) {
            if (!a[r].is_array() || a[r].size() != n)
                fail("$.adjacency[" + std::to_string(r) + "]", "row length mismatch");
            for (size_t c = 0; c < n; ++c) {
                int x = a[r][c].get<int>();
                if (x != 0 && x != 1)
                    fail("$.adjacency[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                         "entries must be 0/1");
                cfg.adjacency[r][c] = (x == 1);
            }
        }
        for (size_t r = 0; r < n; ++r) {
            if (cfg.adjacency[r][r]) fail("$.adjacency", "diagonal must be zero");
            for (size_t c = 0; c < n; ++c)
                if (cfg.adjacency[r][c] != cfg.adjacency[c][r]) fail("$.adjacency", "must be symmetric");
        }
    }

    if (j.contains("classical_bound")) {
        if (j["classical_bound"].is_string()) {
            if (j["classical_bound"].get<std::string>() != "enumerate")
                fail("$.classical_bound", "string form must be 'enumerate'");
        } else if (j["classical_bound"].is_number()) {
            cfg.classical_bound_enumerate = false;
            cfg.classical_bound_value = j["classical_bound"].get<double>();
        } else {
            fail("$.classical_bound", "must be 'enumerate' or a number");
        }
    }

    if (j.contains("states")) {
        if (j["states"].is_string()) {
            if (j["states"].get<std::string>() != "stabilizer_all")
                fail("$.states", "string form must be 'stabilizer_all'");
        } else if (j["states"].is_array()) {
            cfg.states_stabilizer_all = false;
            for (size_t s = 0; s < j["states"].size(); ++s) {
                const json& st = j["states"][s];
                std::string path = "$.states[" + std::to_string(s) + "]";
                if (!st.is_array() || static_cast<int>(st.size()) != cfg.dimension)
                    fail(path, "must be an amplitude list of length 'dimension'");
                std::vector<Complex> v;
                for (size_t c = 0; c < st.size(); ++c)
                    v.push_back(parse_component(st[c], path + "[" + std::to_string(c) + "]"));
                cfg.explicit_states.push_back(v);
            }
        } else {
            fail("$.states", "must be 'stabilizer_all' or an array");
        }
    }
    return cfg;
}

ConstructionConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

WitnessConstruction build_from_config(const ConstructionConfig& cfg) {
    if (cfg.witness_kind == WitnessKind::PauliSquare) {
        WitnessConstruction pm = build_peres_mermin();
        pm.name = cfg.name;
        return pm;
    }
    WitnessConstruction c;
    c.name = cfg.name;
    c.dimension = cfg.dimension;
    for (size_t r = 0; r < cfg.rays.size(); ++r) {
        c.operator_labels.push_back("P" + std::to_string(r + 1));
        c.operators.push_back(projector_from_ray(cfg.rays[r]));
    }

    size_t n = cfg.rays.size();
    c.graph.labels = c.operator_labels;
    c.graph.adjacency.assign(n, std::vector<bool>(n, false));
    // edge iff the normalized rays are orthogonal (projector product vanishes)
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            DenseOperator prod = c.operators[i] * c.operators[j];
            double nrm = 0;
            for (const auto& x : prod.a) nrm = std::max(nrm, std::abs(x));
            c.graph.adjacency[i][j] = nrm < tol().orthogonal;
        }
    if (!cfg.adjacency_auto) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (cfg.adjacency[i][j] != c.graph.adjacency[i][j])
                    throw ValidationError(
                        "config error at $.adjacency[" + std::to_string(i) + "][" + std::to_string(j) +
                        "]: does not match numerical orthogonality of the rays");
    }
    for (const auto& clique : maximal_cliques(c.graph.adjacency))
        if (static_cast<int>(clique.size()) == cfg.dimension) c.graph.basis_cliques.push_back(clique);

    switch (cfg.witness_kind) {
        case WitnessKind::SumPairProducts: {
            if (!cfg.witness_pairs.empty()) {
                for (const auto& p : cfg.witness_pairs) {
                    if (p[0] < 0 || p[1] < 0 || p[0] >= static_cast<int>(n) || p[1] >= static_cast<int>(n))
                        throw ValidationError("config error at $.witness.parameters.pairs: index out of range");
                    c.products.push_back(p);
                }
            } else {
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j)
                        if (i != j && !c.graph.adjacency[i][j])
                            c.products.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
            break;
        }
        case WitnessKind::SumProjectors: {
            std::vector<int> members = cfg.witness_members;
            if (members.empty())
                for (size_t i = 0; i < n; ++i) members.push_back(static_cast<int>(i));
            for (int a : members)
                for (int b : members) c.products.push_back({a, b});  // squared sum
            break;
        }
        case WitnessKind::DichotomicQuadratic:
            break;  // no symbol products; quadratic functional handled by the report
        case WitnessKind::PauliSquare:
            break;
    }

    if (cfg.classical_bound_enumerate) {
        AssignmentProblem p;
        p.variables = c.operator_labels;
        if (cfg.witness_kind == WitnessKind::DichotomicQuadratic) {
            p.domain = AssignmentDomain::PlusMinus1;
            p.linear_weights.assign(n, 1.0);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (c.graph.adjacency[i][j])
                        p.quadratic_terms.push_back({static_cast<int>(i), static_cast<int>(j), -0.25});
            c.classical_bound = max_objective(p).max_value;
        } else if (cfg.witness_kind == WitnessKind::SumPairProducts) {
            p.domain = AssignmentDomain::Binary01;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (c.graph.adjacency[i][j])
                        p.exclusivity_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            c.classical_bound = pair_objective_max(p, c.product_pairs());
        } else {
            p.domain = AssignmentDomain::Binary01;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (c.graph.adjacency[i][j])
                        p.exclusivity_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            p.basis_cliques = c.graph.basis_cliques;
            std::vector<int> members = cfg.witness_members;
            if (members.empty())
                for (size_t i = 0; i < n; ++i) members.push_back(static_cast<int>(i));
            p.linear_weights.assign(n, 0.0);
            for (int m : members) p.linear_weights[static_cast<size_t>(m)] = 1.0;
            c.classical_bound = max_objective(p).max_value;
        }
    } else {
        c.classical_bound = cfg.classical_bound_value;
    }

    if (cfg.states_stabilizer_all) {
        if (cfg.dimension != 3)
            throw ValidationError("config error at $.states: 'stabilizer_all' requires dimension 3");
        c.state_family = stabilizer_states_qutrit();
    } else {
        for (size_t s = 0; s < cfg.explicit_states.size(); ++s) {
            StateVector v(cfg.dimension);
            v.amp = cfg.explicit_states[s];
            c.state_family.push_back({"state" + std::to_string(s + 1), v.normalized()});
        }
    }
    return c;
}

std::string export_config(const WitnessConstruction& c, WitnessKind kind) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["dimension"] = c.dimension;
    if (kind == WitnessKind::PauliSquare) {
        j["witness"] = {{"kind", "pauli_square"},
                        {"parameters", {{"operators", c.operator_labels}}}};
        j["classical_bound"] = 0;
        return j.dump(2);
    }
    // recover rays from the rank-1 projectors (first nonzero column, normalized)
    nlohmann::ordered_json rays = nlohmann::ordered_json::array();
    for (const auto& P : c.operators) {
        int col = 0;
        double best = -1;
        for (int cidx = 0; cidx < P.dim; ++cidx) {
            double mag = std::abs(P.at(cidx, cidx));
            if (mag > best) { best = mag; col = cidx; }
        }
        double scale = 1.0 / std::sqrt(P.at(col, col).real());
        nlohmann::ordered_json ray = nlohmann::ordered_json::array();
        for (int r = 0; r < P.dim; ++r) {
            Complex z = P.at(r, col) * scale;
            ray.push_back({z.real(), z.imag()});
        }
        rays.push_back(ray);
    }
    j["rays"] = rays;
    j["adjacency"] = "auto";
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (kind == WitnessKind::SumPairProducts) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (const auto& p : c.products) pairs.push_back(p);
        params["pairs"] = pairs;
        j["witness"] = {{"kind", "sum_pair_products"}, {"parameters", params}};
    } else if (kind == WitnessKind::SumProjectors) {
        j["witness"] = {{"kind", "sum_projectors"}, {"parameters", params}};
    } else {
        j["witness"] = {{"kind", "dichotomic_quadratic"}, {"parameters", params}};
    }
    j["classical_bound"] = c.classical_bound;
    if (c.dimension == 3 && c.state_family.size() == 12)
        j["states"] = "stabilizer_all";
    else if (!c.state_family.empty()) {
        nlohmann::ordered_json states = nlohmann::ordered_json::array();
        for (const auto& ls : c.state_family) {
            nlohmann::ordered_json st = nlohmann::ordered_json::array();
            for (const auto& a : ls.state.amp) st.push_back({a.real(), a.imag()});
            states.push_back(st);
        }
        j["states"] = states;
    }
    return j.dump(2);
}

}  // namespace ctx
