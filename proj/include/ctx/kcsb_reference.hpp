// Reference values the KCSB basis convention is calibrated against: the
// three-column expectation table over the twelve stabilizer states and the
// 3x3 symbol grids of the five projectors and twelve states (rows x_p,
// columns x_q, state normalization).
#pragma once

#include <array>
#include <cmath>

namespace ctx::kcsb_ref {

inline const double s5 = std::sqrt(5.0);

struct TableRow {
    double exact;
    double h0;
    const char* exact_form;
    const char* h0_form;
    double correction() const { return exact - h0; }
};

// Row order matches stabilizer_states_qutrit(): phi1..phi3, then the nine
// phased superpositions.
inline std::array<TableRow, 12> expectation_table() {
    const double ex_sup = 5 - 5 * s5 / 3;
    const char* fsup = "5-5*sqrt(5)/3";
    return {{
        {5 - 2 * s5, (25 - 9 * s5) / 12, "5-2*sqrt(5)", "(25-9*sqrt(5))/12"},
        {5 - 2 * s5, (25 - 9 * s5) / 12, "5-2*sqrt(5)", "(25-9*sqrt(5))/12"},
        {5 - s5, (5 - s5) / 6, "5-sqrt(5)", "(5-sqrt(5))/6"},
        {ex_sup, 43.0 / 18 - 5 * s5 / 6, fsup, "43/18-5*sqrt(5)/6"},   // (1,1,1)
        {ex_sup, (47 - 15 * s5) / 36, fsup, "(47-15*sqrt(5))/36"},     // (1,w,w2)
        {ex_sup, (47 - 15 * s5) / 36, fsup, "(47-15*sqrt(5))/36"},     // (1,w2,w)
        {ex_sup, (65 - 21 * s5) / 36, fsup, "(65-21*sqrt(5))/36"},     // (1,w2,w2)
        {ex_sup, (25 - 9 * s5) / 18, fsup, "(25-9*sqrt(5))/18"},       // (w2,w2,1)
        {ex_sup, (65 - 21 * s5) / 36, fsup, "(65-21*sqrt(5))/36"},     // (w2,1,w2)
        {ex_sup, (25 - 9 * s5) / 18, fsup, "(25-9*sqrt(5))/18"},       // (w,w,1)
        {ex_sup, (65 - 21 * s5) / 36, fsup, "(65-21*sqrt(5))/36"},     // (1,w,w)
        {ex_sup, (65 - 21 * s5) / 36, fsup, "(65-21*sqrt(5))/36"},     // (w,1,w)
    }};
}

using Grid = std::array<std::array<double, 3>, 3>;

inline std::array<Grid, 5> projector_grids() {
    using std::sqrt;
    const double a1 = sqrt(5 * (3 * s5 - 5));
    const double a2 = sqrt(5 * (s5 + 1));
    const double a3 = sqrt(10 - 2 * s5);
    const double a4 = sqrt(10 * (s5 - 2));
    const double a5 = sqrt(5 - 2 * s5);
    const double q54 = std::pow(5.0, 0.75) * sqrt(2.0);

    Grid p1{{{(s5 + 4 * a1 + 5) / 60, (-5 * s5 - 4 * a2 + 15) / 60, (s5 - 5 * sqrt(2 / (s5 + 5))) / 15},
             {(s5 - 2 * a1 + 5) / 60, (-5 * s5 + 2 * a2 + 15) / 60, (a3 + 4) / (12 * s5)},
             {(s5 - 2 * a1 + 5) / 60, (-5 * s5 + 2 * a2 + 15) / 60, (a3 + 4) / (12 * s5)}}};
    Grid p2{{{(5 - s5) / 15, 2.0 / 3 * sqrt(1 / s5 - 0.2), 1 / (3 * s5)},
             {(5 - s5) / 15, -1.0 / 3 * sqrt(1 / s5 - 0.2), 1 / (3 * s5)},
             {(5 - s5) / 15, -1.0 / 3 * sqrt(1 / s5 - 0.2), 1 / (3 * s5)}}};
    Grid p3{{{(s5 - 4 * a1 + 5) / 60, (-5 * s5 - 4 * a2 + 15) / 60, (a3 + 2) / (6 * s5)},
             {(s5 + 2 * a1 + 5) / 60, (-5 * s5 + 2 * a2 + 15) / 60, 1 / (3 * s5) - 1 / (3 * sqrt(2 * (s5 + 5)))},
             {(s5 + 2 * a1 + 5) / 60, (-5 * s5 + 2 * a2 + 15) / 60, 1 / (3 * s5) - 1 / (3 * sqrt(2 * (s5 + 5)))}}};
    Grid p4{{{(2 * q54 - 2 * s5 + 5) / 30, (2 * a4 + 5) / 30, (sqrt(1 - 2 / s5) + 1 / s5) / 3},
             {(-q54 - 2 * s5 + 5) / 30, (5 - a4) / 30, -(a5 - 2) / (6 * s5)},
             {(-q54 - 2 * s5 + 5) / 30, (5 - a4) / 30, -(a5 - 2) / (6 * s5)}}};
    Grid p5{{{(-2 * q54 - 2 * s5 + 5) / 30, (2 * a4 + 5) / 30, -(a5 - 1) / (3 * s5)},
             {(q54 - 2 * s5 + 5) / 30, (5 - a4) / 30, (a5 + 2) / (6 * s5)},
             {(q54 - 2 * s5 + 5) / 30, (5 - a4) / 30, (a5 + 2) / (6 * s5)}}};
    return {p1, p2, p3, p4, p5};
}

inline Grid state_grid_from_support(std::initializer_list<std::pair<int, int>> pts) {
    Grid g{};
    for (auto [xp, xq] : pts) g[static_cast<size_t>(xp)][static_cast<size_t>(xq)] = 1.0 / 3;
    return g;
}

// Twelve state grids in the stabilizer_states_qutrit() order, as published.
// The 4th grid as published duplicates the 6th (the x_p = 2 row); that is
// impossible for orthogonal states, whose rank-1 supports must differ. The
// companion function below carries the forced correction (x_p = 0, the
// zero-momentum row) used by the construction's self-check.
inline std::array<Grid, 12> state_grids_published() {
    return {
        state_grid_from_support({{0, 0}, {1, 0}, {2, 0}}),
        state_grid_from_support({{0, 1}, {1, 1}, {2, 1}}),
        state_grid_from_support({{0, 2}, {1, 2}, {2, 2}}),
        state_grid_from_support({{2, 0}, {2, 1}, {2, 2}}),  // published; see note
        state_grid_from_support({{1, 0}, {1, 1}, {1, 2}}),
        state_grid_from_support({{2, 0}, {2, 1}, {2, 2}}),
        state_grid_from_support({{0, 0}, {1, 1}, {2, 2}}),
        state_grid_from_support({{0, 2}, {1, 0}, {2, 1}}),
        state_grid_from_support({{0, 1}, {1, 2}, {2, 0}}),
        state_grid_from_support({{0, 2}, {1, 1}, {2, 0}}),
        state_grid_from_support({{0, 0}, {1, 2}, {2, 1}}),
        state_grid_from_support({{0, 1}, {1, 0}, {2, 2}}),
    };
}

inline std::array<Grid, 12> state_grids_consistent() {
    auto g = state_grids_published();
    g[3] = state_grid_from_support({{0, 0}, {0, 1}, {0, 2}});
    return g;
}

}  // namespace ctx::kcsb_ref
