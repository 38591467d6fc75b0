#include "ctx/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace ctx {

namespace {

int value_of_bit(AssignmentDomain dom, int bit) {
    return dom == AssignmentDomain::Binary01 ? bit : (bit ? 1 : -1);
}

bool feasible(const AssignmentProblem& p, uint32_t mask) {
    for (auto [i, j] : p.exclusivity_edges)
        if (((mask >> i) & 1u) && ((mask >> j) & 1u)) return false;
    for (const auto& clique : p.basis_cliques) {
        int ones = 0;
        for (int v : clique) ones += (mask >> v) & 1u;
        if (ones != 1) return false;
    }
    for (const auto& pc : p.product_constraints) {
        int prod = 1;
        for (int v : pc.members) prod *= value_of_bit(p.domain, (mask >> v) & 1u);
        if (prod != pc.required_sign) return false;
    }
    return true;
}

double objective(const AssignmentProblem& p, uint32_t mask) {
    double val = 0;
    if (!p.linear_weights.empty())
        for (int v = 0; v < p.num_vars(); ++v)
            val += p.linear_weights[static_cast<size_t>(v)] * value_of_bit(p.domain, (mask >> v) & 1u);
    for (const auto& t : p.quadratic_terms)
        val += t.c * value_of_bit(p.domain, (mask >> t.i) & 1u) * value_of_bit(p.domain, (mask >> t.j) & 1u);
    return val;
}

std::vector<int> assignment_of(const AssignmentProblem& p, uint32_t mask) {
    std::vector<int> a(static_cast<size_t>(p.num_vars()));
    for (int v = 0; v < p.num_vars(); ++v) a[static_cast<size_t>(v)] = value_of_bit(p.domain, (mask >> v) & 1u);
    return a;
}

int thread_count() {
    if (const char* env = std::getenv("CTX_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

struct ChunkResult {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<uint32_t> argmax_masks;
    uint64_t feasible = 0;
};

ChunkResult sweep(const AssignmentProblem& p, uint64_t lo, uint64_t hi) {
    ChunkResult r;
    for (uint64_t m = lo; m < hi; ++m) {
        auto mask = static_cast<uint32_t>(m);
        if (!feasible(p, mask)) continue;
        ++r.feasible;
        double v = objective(p, mask);
        if (v > r.best + 1e-12) {
            r.best = v;
            r.argmax_masks.assign(1, mask);
        } else if (v > r.best - 1e-12) {
            r.argmax_masks.push_back(mask);
        }
    }
    return r;
}

void check_size(const AssignmentProblem& p) {
    if (p.num_vars() > 24) throw Error("assignment enumeration space exceeds 2^24");
    if (p.num_vars() == 0) throw Error("assignment problem has no variables");
}

}  // namespace

BoundResult max_objective(const AssignmentProblem& p) {
    check_size(p);
    uint64_t total = 1ull << p.num_vars();
    int threads = std::min<int>(thread_count(), 16);

    std::vector<ChunkResult> chunks(static_cast<size_t>(threads));
    if (threads == 1) {
        chunks[0] = sweep(p, 0, total);
    } else {
        std::vector<std::thread> pool;
        uint64_t step = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                uint64_t lo = t * step, hi = std::min<uint64_t>(total, lo + step);
                chunks[static_cast<size_t>(t)] = sweep(p, lo, std::max(lo, hi));
            });
        for (auto& th : pool) th.join();
    }

    // deterministic reduction in chunk order
    BoundResult res;
    std::vector<uint32_t> masks;
    for (const auto& c : chunks) {
        res.feasible_count += c.feasible;
        if (c.argmax_masks.empty()) continue;
        if (c.best > res.max_value + 1e-12) {
            res.max_value = c.best;
            masks = c.argmax_masks;
        } else if (c.best > res.max_value - 1e-12) {
            masks.insert(masks.end(), c.argmax_masks.begin(), c.argmax_masks.end());
        }
    }
    for (uint32_t m : masks) res.argmax.push_back(assignment_of(p, m));
    std::sort(res.argmax.begin(), res.argmax.end());
    return res;
}

uint64_t count_satisfying(const AssignmentProblem& p) {
    check_size(p);
    uint64_t total = 1ull << p.num_vars(), count = 0;
    for (uint64_t m = 0; m < total; ++m)
        if (feasible(p, static_cast<uint32_t>(m))) ++count;
    return count;
}

double pair_objective_max(const AssignmentProblem& pentagon,
                          const std::vector<std::pair<int, int>>& ordered_pairs) {
    AssignmentProblem p = pentagon;
    p.linear_weights.clear();
    p.quadratic_terms.clear();
    for (auto [i, j] : ordered_pairs) p.quadratic_terms.push_back({i, j, 1.0});
    return max_objective(p).max_value;
}

}  // namespace ctx
