#pragma once

#include <functional>
#include <utility>

#include "hodge/grading.hpp"
#include "hodge/store.hpp"

namespace hodge {

struct SearchProblem {
    ModuleSpec spec;
    HalfInt target_m;         // (dim V_C - 1)/2
    bool canonicalize = true; // false: also generate the orientation where mu* tops out
};

SearchProblem make_search_problem(ModuleSpec spec, bool canonicalize = true);

struct FilterOutcome {
    bool pass = true;
    std::string lemma; // violated constraint id when !pass
    /// (0-based node, forced value) restrictions handed to the enumerator.
    std::vector<std::pair<int, i64>> pinned;
};

/// Necessary-condition filters for type A problems: rank parity, the
/// symmetric-power divisibility constraints, the even-wedge mod-4 constraint,
/// and the forced n_i = 1 pin for self-dual single-support weights.
FilterOutcome type_a_filters(const RootSystem& rs, const Weight& mu, Pairing pairing);

/// Streams every integer vector n >= (1,...,1) with mu(T) = target_m (and,
/// for a ComplexPair with canonicalize = false, also those with
/// mu*(T) = target_m).  Pure linear-constraint enumeration, ascending
/// lexicographic order per orientation; the callback returns false to stop.
void enumerate_gradings(const SearchProblem& p,
                        const std::function<bool(const GradingElement&)>& yield);

struct Solution {
    LieType type;
    std::string label;
    Weight mu;
    GradingElement n;
    Structure structure = Structure::Real;
    HalfInt m; // top eigenvalue, (dim V_C - 1)/2

    friend bool operator<(const Solution& a, const Solution& b)
    {
        if (a.mu.dynkin != b.mu.dynkin)
            return a.mu.dynkin < b.mu.dynkin;
        return a.n < b.n;
    }
    friend bool operator==(const Solution& a, const Solution& b)
    {
        return a.mu.dynkin == b.mu.dynkin && a.n == b.n;
    }
};

struct SearchOptions {
    bool dedupe = false;      // collapse duality-automorphism images
    bool canonicalize = true; // report only the orientation with mu achieving m
    Limits limits;
    int threads = 1;
    WeightStore* store = nullptr; // optional shared cache
};

/// Runs filters, enumerates candidate gradings with weight-level pruning,
/// applies is_principal, and returns all solutions sorted by (mu, n).
std::vector<Solution> search_principal(std::shared_ptr<const RootSystem> rs,
                                       const std::vector<MFCatalogEntry>& targets,
                                       const SearchOptions& opts = {});

} // namespace hodge
