#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodge/half_int.hpp"
#include "hodge/weight_system.hpp"

namespace hodge {

/// Integer vector (n_1,...,n_r); n_i is the value of the i-th simple root on
/// the grading element.
struct GradingElement {
    std::vector<i64> n;

    friend bool operator==(const GradingElement&, const GradingElement&) = default;
    friend bool operator<(const GradingElement& a, const GradingElement& b) { return a.n < b.n; }

    std::string to_string() const;
};

/// How the complexified module is assembled from the irreducible U.
///   SelfDualSingle: V_C = U             (requires U self-dual)
///   ComplexPair:    V_C = U + U*        (U not self-dual, or the quaternionic
///                                        doubling of a self-dual U)
enum class Pairing { SelfDualSingle, ComplexPair };

class ModuleSpec {
public:
    static ModuleSpec make(std::shared_ptr<const RootSystem> rs, Weight mu, Pairing pairing);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    const Weight& mu() const { return mu_; }
    Pairing pairing() const { return pairing_; }

    Weight mu_dual() const { return rs_->dual_weight(mu_); }
    bool mu_self_dual() const { return rs_->is_self_dual(mu_); }

    /// dim V_C = dim U (single) or 2 dim U (pair).
    i64 complex_dimension(const Limits& limits = {}) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    Weight mu_;
    Pairing pairing_;
};

/// lambda evaluated on the grading element: sum of root_coords * n, an exact
/// half-integer for integral weights.
HalfInt eigenvalue(const RootSystem& rs, const Weight& lambda, const GradingElement& g);

/// n'_i = 2 where n_i is even, 0 where odd.
GradingElement t_compact(const GradingElement& g);

enum class Structure { Real, Quaternionic, Complex };
std::string to_string(Structure s);

/// Complex iff mu is not self-dual; otherwise decided by the parity of
/// mu evaluated on t_compact(g), which is integral for self-dual mu.
Structure rcq_structure(const ModuleSpec& spec, const GradingElement& g);

/// Eigenvalue multiset of V_C under the grading element, with the dimension
/// pattern h_l read off at integer steps from the top eigenvalue m down to -m.
struct EigenReport {
    std::map<HalfInt, i64> multiset;
    HalfInt m;
    std::vector<i64> hodge_numbers;
    bool uniform_spacing = true; // false if some eigenvalue is off the m - Z grid
    i64 dim = 0;                 // dim V_C
};

EigenReport eigen_report(const ModuleSpec& spec, const GradingElement& g,
                         const WeightSystem& ws_of_u);
EigenReport eigen_report(const ModuleSpec& spec, const GradingElement& g,
                         const Limits& limits = {});

enum class Reason {
    NonPositiveN,
    GapInEigenvalues,
    MultiplicityAboveOne,
    WrongM,
    QuaternionicSelfDual,
    SharedWeightWithDual,
};
std::string to_string(Reason r);

struct Verdict {
    bool principal = false;
    std::optional<Reason> reason;
    std::string detail;

    static Verdict yes() { return Verdict{true, std::nullopt, {}}; }
    static Verdict no(Reason r, std::string detail = {})
    {
        return Verdict{false, r, std::move(detail)};
    }
};

/// The principal test: all n_i >= 1, every h_l = 1 with m = (dim V_C - 1)/2,
/// and the structure gate (self-dual single must be real; a complex pair must
/// share no weight with its dual).  The first failed clause names the reason.
Verdict is_principal(const ModuleSpec& spec, const GradingElement& g,
                     const WeightSystem& ws_of_u);
Verdict is_principal(const ModuleSpec& spec, const GradingElement& g, const Limits& limits = {});

} // namespace hodge
