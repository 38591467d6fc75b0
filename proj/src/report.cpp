#include "ctx/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ctx/bounds.hpp"
#include "ctx/hbar.hpp"
#include "ctx/kcsb_reference.hpp"
#include "ctx/qubit_weyl.hpp"

namespace ctx {

using nlohmann::ordered_json;

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
    char ref[64];
    std::snprintf(ref, sizeof ref, "%.12g", x);
    for (int p = 1; p <= 12; ++p) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", p, x);
        char chk[64];
        std::snprintf(chk, sizeof chk, "%.12g", std::strtod(buf, nullptr));
        if (std::strcmp(ref, chk) == 0) return buf;
    }
    return ref;
}

namespace {

void write_json(const ordered_json& j, std::string& out, int indent) {
    auto pad = [&](int lvl) { out.append(static_cast<size_t>(2 * lvl), ' '); };
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                pad(indent + 1);
                out += ordered_json(it.key()).dump();
                out += ": ";
                write_json(it.value(), out, indent + 1);
                if (k + 1 < j.size()) out += ",";
                out += "\n";
            }
            pad(indent);
            out += "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            bool flat = true;
            for (const auto& e : j)
                if (e.is_object() || e.is_array()) flat = false;
            out += flat ? "[" : "[\n";
            size_t k = 0;
            for (const auto& e : j) {
                if (!flat) pad(indent + 1);
                write_json(e, out, indent + 1);
                if (k + 1 < j.size()) out += flat ? ", " : ",";
                if (!flat) out += "\n";
                ++k;
            }
            if (!flat) pad(indent);
            out += "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string verdict_string(bool contextual) {
    return contextual ? "contextual" : "not-contextual-under-this-witness";
}

ordered_json report_record(const ContextualityReport& r) {
    ordered_json rec;
    rec["state"] = r.state_label;
    rec["exact"] = r.exact_expectation;
    rec["h0"] = r.h0_contribution;
    rec["correction"] = r.correction_contribution;
    rec["classical_bound"] = r.classical_bound;
    rec["verdict"] = verdict_string(r.contextual);
    rec["h0_exceeds_bound"] = r.h0_exceeds_bound;
    rec["correction_exceeds_bound"] = r.correction_exceeds_bound;
    if (std::abs(r.exact_expectation - r.h0_contribution - r.correction_contribution) > 1e-10)
        throw ToleranceError("report row '" + r.state_label + "': h0 + correction != exact");
    return rec;
}

double snap_zero(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

ordered_json grid_json(const WeylSymbolOdd& W) {
    ordered_json rows = ordered_json::array();
    for (int xp = 0; xp < W.side(); ++xp) {
        ordered_json row = ordered_json::array();
        for (int xq = 0; xq < W.side(); ++xq) {
            Complex z = W.at_flat(xp, xq);
            if (std::abs(z.imag()) > 1e-12)
                row.push_back(ordered_json::array({snap_zero(z.real()), z.imag()}));
            else
                row.push_back(snap_zero(z.real()));
        }
        rows.push_back(row);
    }
    return rows;
}

// (monomial mask, re, im) triples in ascending mask order
ordered_json grassmann_json(const GrassmannPoly& g) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : g.terms)
        terms.push_back(ordered_json::array({m, c.real(), c.imag()}));
    return terms;
}

ordered_json bound_certificate(const std::string& name, const BoundResult& b) {
    ordered_json c;
    c["name"] = name;
    c["max"] = b.max_value;
    c["feasible_count"] = b.feasible_count;
    if (!b.argmax.empty()) c["argmax_witness"] = b.argmax.front();
    c["argmax_count"] = b.argmax.size();
    return c;
}

AssignmentProblem pentagon_problem() {
    AssignmentProblem p;
    for (int i = 1; i <= 5; ++i) p.variables.push_back("Pi" + std::to_string(i));
    p.domain = AssignmentDomain::Binary01;
    for (int i = 0; i < 5; ++i) p.exclusivity_edges.emplace_back(i, (i + 1) % 5);
    return p;
}

AssignmentProblem yu_oh_quadratic_problem(const WitnessConstruction& c) {
    AssignmentProblem p;
    p.variables = c.operator_labels;
    p.domain = AssignmentDomain::PlusMinus1;
    p.linear_weights.assign(13, 1.0);
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j)
            if (c.graph.edge(i, j)) p.quadratic_terms.push_back({i, j, -0.25});
    return p;
}

AssignmentProblem yu_oh_hsum_problem(const WitnessConstruction& c) {
    AssignmentProblem p;
    p.variables = c.operator_labels;
    p.domain = AssignmentDomain::Binary01;
    for (int i = 0; i < 13; ++i)
        for (int j = i + 1; j < 13; ++j)
            if (c.graph.edge(i, j)) p.exclusivity_edges.emplace_back(i, j);
    p.basis_cliques = c.graph.basis_cliques;
    p.linear_weights.assign(13, 0.0);
    for (int h : yu_oh_h_indices()) p.linear_weights[static_cast<size_t>(h)] = 1.0;
    return p;
}

AssignmentProblem peres_mermin_problem() {
    AssignmentProblem p;
    WitnessConstruction pm = build_peres_mermin();
    p.variables = pm.operator_labels;
    p.domain = AssignmentDomain::PlusMinus1;
    for (size_t k = 0; k < pm.products.size(); ++k)
        p.product_constraints.push_back({pm.products[k], k == 5 ? -1 : +1});
    return p;
}

ordered_json construction_header(const WitnessConstruction& c) {
    ordered_json h;
    h["name"] = c.name;
    h["dimension"] = c.dimension;
    h["operators"] = c.operator_labels;
    ordered_json adj = ordered_json::array();
    for (const auto& row : c.graph.adjacency) {
        ordered_json r = ordered_json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        adj.push_back(r);
    }
    h["adjacency"] = adj;
    if (!c.graph.basis_cliques.empty()) h["basis_cliques"] = c.graph.basis_cliques;
    return h;
}

ordered_json metadata() {
    ordered_json m;
    m["tool"] = "ctx";
    m["format_version"] = 1;
    return m;
}

ReportDocument kcsb_report() {
    WitnessConstruction c = build_kcsb();
    HbarSplitOdd split = witness_split(c.operators, c.product_pairs(), 3, 1);

    ReportDocument doc;
    doc.payload["metadata"] = metadata();
    doc.payload["construction"] = construction_header(c);
    doc.payload["construction"]["appendix_grids_matched"] = c.appendix_grids_matched;
    doc.payload["construction"]["seed_relabeling"] = c.kcsb_relabeling;
    doc.payload["construction"]["classical_bound"] = c.classical_bound;
    doc.payload["construction"]["quantum_bound"] = c.quantum_bound;

    auto table = kcsb_ref::expectation_table();
    ordered_json reports = ordered_json::array();
    for (size_t s = 0; s < c.state_family.size(); ++s) {
        ContextualityReport r = contextuality_report(c.state_family[s].state, c.state_family[s].label,
                                                     split, c.classical_bound);
        if (std::abs(r.exact_expectation - table[s].exact) > tol().golden ||
            std::abs(r.h0_contribution - table[s].h0) > tol().golden)
            throw ToleranceError("kcsb report: golden expectation mismatch for " + r.state_label);
        ordered_json rec = report_record(r);
        rec["exact_closed_form"] = table[s].exact_form;
        rec["h0_closed_form"] = table[s].h0_form;
        reports.push_back(rec);
    }
    doc.payload["reports"] = reports;

    EigResult eig = eig_hermitian([&] {
        DenseOperator s(3);
        for (const auto& p : c.operators) s += p;
        return s;
    }());
    ordered_json idents;
    idents["sigma_gamma_eigenvalues"] = eig.values;
    idents["sigma_gamma_quantum_bound"] = *c.sum_quantum_bound;
    idents["sigma_gamma2_quantum_bound"] = c.quantum_bound;
    doc.payload["identities"] = idents;

    AssignmentProblem pent = pentagon_problem();
    AssignmentProblem lin = pent;
    lin.linear_weights.assign(5, 1.0);
    ordered_json bounds = ordered_json::array();
    bounds.push_back(bound_certificate("pentagon_sum", max_objective(lin)));
    AssignmentProblem pairp = pent;
    for (auto [i, j] : c.product_pairs()) pairp.quadratic_terms.push_back({i, j, 1.0});
    bounds.push_back(bound_certificate("pentagon_pair_products", max_objective(pairp)));
    doc.payload["bound_certificates"] = bounds;

    ordered_json grids;
    for (size_t k = 0; k < c.operators.size(); ++k)
        grids[c.operator_labels[k]] = grid_json(wigner_state(c.operators[k], 3, 1));
    doc.payload["weyl_grids"] = grids;
    return doc;
}

ReportDocument yu_oh_report() {
    WitnessConstruction c = build_yu_oh();
    HbarSplitOdd split = witness_split(c.operators, c.product_pairs(), 3, 1);

    ReportDocument doc;
    doc.payload["metadata"] = metadata();
    doc.payload["construction"] = construction_header(c);
    doc.payload["construction"]["classical_bound"] = c.classical_bound;
    doc.payload["construction"]["quantum_bound"] = c.quantum_bound;

    ordered_json reports = ordered_json::array();
    for (const auto& ls : c.state_family) {
        ContextualityReport r = contextuality_report(ls.state, ls.label, split, c.classical_bound);
        reports.push_back(report_record(r));
    }
    doc.payload["reports"] = reports;

    // operator identities: the quadratic functional, the h-sum, its square
    DenseOperator quad(3);
    for (int i = 0; i < 13; ++i) {
        DenseOperator Ai = DenseOperator::identity(3) - 2.0 * c.operators[static_cast<size_t>(i)];
        quad += Ai;
        for (int j = 0; j < 13; ++j)
            if (c.graph.edge(i, j)) {
                DenseOperator Aj = DenseOperator::identity(3) - 2.0 * c.operators[static_cast<size_t>(j)];
                quad -= 0.25 * (Ai * Aj);
            }
    }
    DenseOperator hsum(3);
    for (int h : yu_oh_h_indices()) hsum += c.operators[static_cast<size_t>(h)];

    auto scalar_of = [](const DenseOperator& A, const char* what) {
        Complex lambda = A.trace() / static_cast<double>(A.dim);
        DenseOperator diff = A - lambda * DenseOperator::identity(A.dim);
        if (diff.max_abs_diff(DenseOperator::zero(A.dim)) > 1e-10)
            throw ToleranceError(std::string("yu-oh identity is not a scalar multiple of I: ") + what);
        return lambda.real();
    };
    ordered_json idents;
    idents["quadratic_functional_scalar"] = scalar_of(quad, "quadratic");
    idents["h_sum_scalar"] = scalar_of(hsum, "h_sum");
    idents["h_sum_squared_scalar"] = scalar_of(hsum * hsum, "h_sum_squared");
    doc.payload["identities"] = idents;

    ordered_json bounds = ordered_json::array();
    bounds.push_back(bound_certificate("dichotomic_quadratic", max_objective(yu_oh_quadratic_problem(c))));
    bounds.push_back(bound_certificate("h_sum", max_objective(yu_oh_hsum_problem(c))));
    doc.payload["bound_certificates"] = bounds;
    return doc;
}

ReportDocument peres_mermin_report() {
    WitnessConstruction c = build_peres_mermin();
    static const QubitWeylConvention conv = QubitWeylConvention::fit();

    ReportDocument doc;
    doc.payload["metadata"] = metadata();
    doc.payload["construction"] = construction_header(c);

    const char* names[6] = {"row1", "row2", "row3", "col1", "col2", "col3"};
    ordered_json contexts = ordered_json::array();
    for (size_t k = 0; k < c.products.size(); ++k) {
        const auto& ctxk = c.products[k];
        DenseOperator prod = DenseOperator::identity(4);
        std::vector<GrassmannPoly> symbols;
        for (int idx : ctxk) {
            prod = prod * c.operators[static_cast<size_t>(idx)];
            symbols.push_back(qubit_weyl(c.operators[static_cast<size_t>(idx)], conv));
        }
        // the ordered product is +-identity; its sign is the context verdict
        Complex lead = prod.at(0, 0);
        DenseOperator expect = lead * DenseOperator::identity(4);
        if (prod.max_abs_diff(expect) > 1e-12 || std::abs(std::abs(lead) - 1.0) > 1e-12)
            throw ToleranceError("peres-mermin context product is not +-identity");
        GrassmannPoly h0 = h0_product(symbols);
        GrassmannPoly exact = groenewold_product(
            groenewold_product(symbols[0], symbols[1], conv), symbols[2], conv);

        ordered_json rec;
        rec["context"] = names[k];
        ordered_json ops = ordered_json::array();
        for (int idx : ctxk) ops.push_back(c.operator_labels[static_cast<size_t>(idx)]);
        rec["operators"] = ops;
        rec["product_sign"] = static_cast<int>(std::round(lead.real()));
        rec["h0_symbol_identically_zero"] = h0.is_zero();
        rec["exact_symbol_constant"] = exact.coeff(0).real();
        rec["exact_symbol_terms"] = grassmann_json(exact);
        rec["requires_higher_than_h0"] = true;  // zero classical part for every state
        contexts.push_back(rec);
    }
    doc.payload["contexts"] = contexts;

    ordered_json bounds = ordered_json::array();
    AssignmentProblem pm = peres_mermin_problem();
    ordered_json cert;
    cert["name"] = "row_column_sign_assignments";
    cert["satisfying_count"] = count_satisfying(pm);
    bounds.push_back(cert);
    doc.payload["bound_certificates"] = bounds;
    return doc;
}

ReportDocument config_report(const std::string& path) {
    ConstructionConfig cfg = load_config_file(path);
    if (cfg.witness_kind == WitnessKind::PauliSquare) return peres_mermin_report();
    WitnessConstruction c = build_from_config(cfg);

    ReportDocument doc;
    doc.payload["metadata"] = metadata();
    doc.payload["construction"] = construction_header(c);
    doc.payload["construction"]["classical_bound"] = c.classical_bound;

    if (cfg.witness_kind == WitnessKind::DichotomicQuadratic) {
        DenseOperator quad(c.dimension);
        int n = static_cast<int>(c.operators.size());
        for (int i = 0; i < n; ++i) {
            DenseOperator Ai = DenseOperator::identity(c.dimension) - 2.0 * c.operators[static_cast<size_t>(i)];
            quad += Ai;
            for (int j = 0; j < n; ++j)
                if (c.graph.edge(i, j)) {
                    DenseOperator Aj =
                        DenseOperator::identity(c.dimension) - 2.0 * c.operators[static_cast<size_t>(j)];
                    quad -= 0.25 * (Ai * Aj);
                }
        }
        ordered_json reports = ordered_json::array();
        for (const auto& ls : c.state_family) {
            ordered_json rec;
            rec["state"] = ls.label;
            double ex = expectation_trace(quad, ls.state).real();
            rec["exact"] = ex;
            rec["classical_bound"] = c.classical_bound;
            rec["verdict"] = verdict_string(ex > c.classical_bound + tol().verdict);
            reports.push_back(rec);
        }
        doc.payload["reports"] = reports;
        return doc;
    }

    if (c.dimension % 2 == 0)
        throw ValidationError("config error at $.dimension: symbol decomposition requires odd dimension");
    if (c.products.empty())
        throw ValidationError("config error at $.witness: no products to decompose");
    HbarSplitOdd split = witness_split(c.operators, c.product_pairs(), c.dimension, 1);
    ordered_json reports = ordered_json::array();
    for (const auto& ls : c.state_family)
        reports.push_back(report_record(contextuality_report(ls.state, ls.label, split, c.classical_bound)));
    doc.payload["reports"] = reports;
    return doc;
}

}  // namespace

ReportDocument run_report(const std::string& target) {
    if (target == "kcsb") return kcsb_report();
    if (target == "yu-oh") return yu_oh_report();
    if (target == "peres-mermin") return peres_mermin_report();
    return config_report(target);
}

ReportDocument run_bounds(const std::string& target) {
    ReportDocument doc;
    doc.payload["metadata"] = metadata();
    ordered_json bounds = ordered_json::array();
    if (target == "kcsb") {
        WitnessConstruction c = build_kcsb();
        AssignmentProblem pent = pentagon_problem();
        AssignmentProblem lin = pent;
        lin.linear_weights.assign(5, 1.0);
        bounds.push_back(bound_certificate("pentagon_sum", max_objective(lin)));
        AssignmentProblem pairp = pent;
        for (auto [i, j] : c.product_pairs()) pairp.quadratic_terms.push_back({i, j, 1.0});
        bounds.push_back(bound_certificate("pentagon_pair_products", max_objective(pairp)));
    } else if (target == "yu-oh") {
        WitnessConstruction c = build_yu_oh();
        bounds.push_back(bound_certificate("dichotomic_quadratic", max_objective(yu_oh_quadratic_problem(c))));
        bounds.push_back(bound_certificate("h_sum", max_objective(yu_oh_hsum_problem(c))));
    } else if (target == "peres-mermin") {
        ordered_json cert;
        cert["name"] = "row_column_sign_assignments";
        cert["satisfying_count"] = count_satisfying(peres_mermin_problem());
        bounds.push_back(cert);
    } else {
        ConstructionConfig cfg = load_config_file(target);
        WitnessConstruction c = build_from_config(cfg);
        ordered_json cert;
        cert["name"] = "enumerated_classical_bound";
        cert["max"] = c.classical_bound;
        bounds.push_back(cert);
    }
    doc.payload["bound_certificates"] = bounds;
    return doc;
}

std::string render_json(const ReportDocument& doc) {
    std::string out;
    write_json(doc.payload, out, 0);
    out += "\n";
    return out;
}

std::string render_csv(const ReportDocument& doc) {
    std::ostringstream os;
    if (doc.payload.contains("reports")) {
        os << "state,exact,h0,correction,classical_bound,verdict,h0_exceeds_bound,correction_exceeds_bound\n";
        for (const auto& r : doc.payload["reports"]) {
            os << r["state"].get<std::string>() << ",";
            os << (r.contains("exact") ? format_number(r["exact"].get<double>()) : "") << ",";
            os << (r.contains("h0") ? format_number(r["h0"].get<double>()) : "") << ",";
            os << (r.contains("correction") ? format_number(r["correction"].get<double>()) : "") << ",";
            os << format_number(r["classical_bound"].get<double>()) << ",";
            os << r["verdict"].get<std::string>() << ",";
            os << (r.contains("h0_exceeds_bound") && r["h0_exceeds_bound"].get<bool>() ? "1" : "0") << ",";
            os << (r.contains("correction_exceeds_bound") && r["correction_exceeds_bound"].get<bool>() ? "1" : "0")
               << "\n";
        }
    } else if (doc.payload.contains("contexts")) {
        os << "context,operators,product_sign,h0_symbol_identically_zero\n";
        for (const auto& r : doc.payload["contexts"]) {
            std::string ops;
            for (const auto& o : r["operators"]) ops += o.get<std::string>() + " ";
            if (!ops.empty()) ops.pop_back();
            os << r["context"].get<std::string>() << "," << ops << ","
               << r["product_sign"].get<int>() << ","
               << (r["h0_symbol_identically_zero"].get<bool>() ? "1" : "0") << "\n";
        }
    } else {
        throw Error("csv rendering: document has no tabular section");
    }
    return os.str();
}

std::string render_table(const ReportDocument& doc) {
    std::ostringstream os;
    if (doc.payload.contains("construction"))
        os << "construction: " << doc.payload["construction"]["name"].get<std::string>() << "\n";
    if (doc.payload.contains("identities")) {
        for (auto it = doc.payload["identities"].begin(); it != doc.payload["identities"].end(); ++it) {
            os << it.key() << " = ";
            if (it.value().is_array()) {
                for (const auto& v : it.value()) os << format_number(v.get<double>()) << " ";
            } else {
                os << format_number(it.value().get<double>());
            }
            os << "\n";
        }
    }
    if (doc.payload.contains("reports")) {
        os << "\n";
        char line[256];
        std::snprintf(line, sizeof line, "%-24s %16s %16s %16s  %s\n", "state", "exact", "h0",
                      "correction", "verdict");
        os << line;
        for (const auto& r : doc.payload["reports"]) {
            std::snprintf(line, sizeof line, "%-24s %16s %16s %16s  %s\n",
                          r["state"].get<std::string>().c_str(),
                          r.contains("exact") ? format_number(r["exact"].get<double>()).c_str() : "-",
                          r.contains("h0") ? format_number(r["h0"].get<double>()).c_str() : "-",
                          r.contains("correction") ? format_number(r["correction"].get<double>()).c_str() : "-",
                          r["verdict"].get<std::string>().c_str());
            os << line;
        }
    }
    if (doc.payload.contains("contexts")) {
        os << "\n";
        for (const auto& r : doc.payload["contexts"]) {
            os << r["context"].get<std::string>() << ": product_sign="
               << r["product_sign"].get<int>()
               << " h0_zero=" << (r["h0_symbol_identically_zero"].get<bool>() ? "yes" : "no") << "\n";
        }
    }
    if (doc.payload.contains("bound_certificates")) {
        os << "\n";
        for (const auto& b : doc.payload["bound_certificates"]) {
            os << "bound " << b["name"].get<std::string>();
            if (b.contains("max")) os << ": max = " << format_number(b["max"].get<double>());
            if (b.contains("satisfying_count"))
                os << ": satisfying assignments = " << b["satisfying_count"].get<uint64_t>();
            os << "\n";
        }
    }
    return os.str();
}

WeylGrid dump_weyl(const std::string& spec, int d, SymbolNorm norm) {
    if (d % 2 == 0) throw ValidationError("weyl dump requires odd dimension");
    WeylGrid g;
    g.label = spec;
    auto state_grid = [&](const DenseOperator& rho) { g.symbol = wigner_state(rho, d, 1); };
    auto obs_grid = [&](const DenseOperator& A) { g.symbol = weyl_observable(A, d, 1); };

    auto kcsb_label = [&](const std::string& s) -> bool {
        if (s.rfind("Pi", 0) == 0 && s.size() == 3 && s[2] >= '1' && s[2] <= '5') {
            WitnessConstruction c = build_kcsb();
            const DenseOperator& P = c.operators[static_cast<size_t>(s[2] - '1')];
            norm == SymbolNorm::State ? state_grid(P) : obs_grid(P);
            return true;
        }
        if (s.rfind("phi", 0) == 0 && s.size() == 4 && s[3] >= '1' && s[3] <= '3') {
            auto states = stabilizer_states_qutrit();
            DenseOperator rho = outer(states[static_cast<size_t>(s[3] - '1')].state,
                                      states[static_cast<size_t>(s[3] - '1')].state);
            norm == SymbolNorm::State ? state_grid(rho) : obs_grid(rho);
            return true;
        }
        if (s == "SigmaGamma" || s == "SigmaGamma2") {
            WitnessConstruction c = build_kcsb();
            DenseOperator A(3);
            if (s == "SigmaGamma") {
                for (const auto& p : c.operators) A += p;
            } else {
                for (auto [i, j] : c.product_pairs())
                    A += c.operators[static_cast<size_t>(i)] * c.operators[static_cast<size_t>(j)];
            }
            obs_grid(A);
            return true;
        }
        return false;
    };

    if (spec == "identity") {
        obs_grid(DenseOperator::identity(d));
        return g;
    }
    if (d == 3 && kcsb_label(spec)) return g;
    if (d == 3) {
        WitnessConstruction yo = build_yu_oh();
        for (size_t k = 0; k < yo.operator_labels.size(); ++k)
            if (yo.operator_labels[k] == spec) {
                norm == SymbolNorm::State ? state_grid(yo.operators[k]) : obs_grid(yo.operators[k]);
                return g;
            }
    }
    // otherwise: a JSON matrix file [[..row..], ...] with [re,im] entries
    std::ifstream in(spec);
    if (!in) throw ValidationError("weyl dump: unresolvable operator spec '" + spec + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("weyl dump: matrix file is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        throw ValidationError("weyl dump: matrix must be a dxd array");
    DenseOperator A(d);
    for (int r = 0; r < d; ++r) {
        if (!j[static_cast<size_t>(r)].is_array() || static_cast<int>(j[static_cast<size_t>(r)].size()) != d)
            throw ValidationError("weyl dump: matrix row length mismatch");
        for (int c = 0; c < d; ++c) {
            const auto& e = j[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (e.is_number())
                A.at(r, c) = e.get<double>();
            else if (e.is_array() && e.size() == 2)
                A.at(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
            else
                throw ValidationError("weyl dump: entries must be numbers or [re, im]");
        }
    }
    norm == SymbolNorm::State ? state_grid(A) : obs_grid(A);
    return g;
}

std::string render_grid(const WeylGrid& grid) {
    std::ostringstream os;
    os << "W[" << grid.label << "]  (rows x_p, columns x_q, "
       << (grid.symbol.norm == SymbolNorm::State ? "state" : "observable") << " normalization)\n";
    int side = grid.symbol.side();
    for (int xp = 0; xp < side; ++xp) {
        for (int xq = 0; xq < side; ++xq) {
            Complex z = grid.symbol.at_flat(xp, xq);
            std::string cell = std::abs(z.imag()) > 1e-12
                                   ? format_number(snap_zero(z.real())) + (z.imag() >= 0 ? "+" : "") +
                                         format_number(z.imag()) + "i"
                                   : format_number(snap_zero(z.real()));
            char buf[64];
            std::snprintf(buf, sizeof buf, "%20s", cell.c_str());
            os << buf;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ctx
