#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hodge/root_system.hpp"

namespace hodge {

/// Tunable ceilings shared by the library entry points.
struct Limits {
    i64 dim_ceiling = 100000;
    int sym_degree_ceiling = 64;
    int rank_ceiling = kDefaultRankCeiling;
};

/// Dimension of the irreducible module with highest weight mu, by the Weyl
/// dimension formula.  Exact; throws resource_error if the value does not
/// fit in 64 bits.
i64 weyl_dim(const RootSystem& rs, const Weight& mu);

struct WeightEntry {
    std::vector<i64> lowering; // lambda = mu - sum lowering[i] * sigma_i
    std::vector<i64> dynkin;
    i64 mult = 0;

    i64 level() const
    {
        i64 s = 0;
        for (i64 k : lowering)
            s += k;
        return s;
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<i64>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (i64 x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// The full weight multiset of an irreducible highest-weight module,
/// entries ordered by lowering depth then lexicographically.
class WeightSystem {
public:
    WeightSystem(Weight highest, std::vector<WeightEntry> entries);

    const Weight& highest() const { return highest_; }
    const std::vector<WeightEntry>& entries() const { return entries_; }

    i64 dimension() const { return dimension_; } // sum of multiplicities
    std::size_t distinct_weights() const { return entries_.size(); }

    bool contains(const std::vector<i64>& dynkin) const;
    i64 multiplicity(const std::vector<i64>& dynkin) const; // 0 if absent

private:
    Weight highest_;
    std::vector<WeightEntry> entries_;
    std::unordered_map<std::vector<i64>, std::size_t, VecHash> index_;
    i64 dimension_ = 0;
};

/// Computes the weight system of the irreducible module with dominant
/// highest weight mu: the weight set by saturation under simple-root
/// lowering, multiplicities by Freudenthal's recursion.
WeightSystem weight_system(const RootSystem& rs, const Weight& mu, const Limits& limits = {});

bool is_weight_multiplicity_free(const WeightSystem& ws);

struct MFCatalogEntry {
    LieType lie_type;
    Weight highest_weight;
    std::string label; // "standard", "spin", "wedge:k", "sym:a", "sym*:a", "fund:k"
    bool self_dual = false;
};

/// The irreducible weight-multiplicity-free modules of the given algebra.
/// For type A the symmetric powers are truncated at limits.sym_degree_ceiling.
std::vector<MFCatalogEntry> mf_catalog(const RootSystem& rs, const Limits& limits = {});

enum class SpinKind { BSpin, DLast, DSecondLast };

/// Closed-form parameterization of the spin weight lowerings, independent of
/// the Freudenthal path.  Returns the lowering vectors (lambda^1..lambda^r),
/// sorted; |result| = 2^r for BSpin, 2^(r-1) for either D kind.
std::vector<std::vector<i64>> spin_weight_oracle(LieType t, SpinKind which);

/// Canonical text serialization: header line, then one line per weight in
/// lexicographic dynkin order, "d1 d2 ... dr : mult".
std::string to_cache_text(const LieType& t, const WeightSystem& ws);
WeightSystem from_cache_text(const RootSystem& rs, const std::string& text);

} // namespace hodge
