// JSON construction configs: user-defined ray families with a witness
// kind, optional explicit adjacency, classical bounds by value or by
// enumeration, and a state family. Built-in constructions export to the
// same schema so both share one report path.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctx/constructions.hpp"

namespace ctx {

class ValidationError : public Error {
  public:
    using Error::Error;
};

enum class WitnessKind { SumProjectors, SumPairProducts, DichotomicQuadratic, PauliSquare };

struct ConstructionConfig {
    std::string name;
    int dimension = 0;
    std::vector<std::vector<Complex>> rays;

    bool adjacency_auto = true;
    std::vector<std::vector<bool>> adjacency;  // when not auto

    WitnessKind witness_kind = WitnessKind::SumPairProducts;
    // sum_pair_products: explicit ordered pairs, or empty = all ordered
    // non-adjacent pairs; sum_projectors: optional member subset
    std::vector<std::vector<int>> witness_pairs;
    std::vector<int> witness_members;
    std::vector<std::string> pauli_operators;  // pauli_square only

    bool classical_bound_enumerate = true;
    double classical_bound_value = 0;

    bool states_stabilizer_all = true;
    std::vector<std::vector<Complex>> explicit_states;
};

// Parse + validate a config JSON text; diagnostics carry field paths.
ConstructionConfig parse_config(const std::string& json_text);
ConstructionConfig load_config_file(const std::string& path);

// Instantiate the configured construction (projectors, graph, products,
// bounds, states). The classical bound is enumerated here when requested.
WitnessConstruction build_from_config(const ConstructionConfig& cfg);

// Render a built-in (or any) construction in the config schema.
std::string export_config(const WitnessConstruction& c, WitnessKind kind);

}  // namespace ctx
