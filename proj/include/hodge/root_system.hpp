#pragma once

#include <memory>
#include <vector>

#include "hodge/lie_type.hpp"
#include "hodge/rational.hpp"

namespace hodge {

/// A weight carried in two exact bases.  `dynkin` holds the integer
/// coefficients on the fundamental weights; `root_coords` the rational
/// coefficients on the simple roots.  The two are kept consistent by
/// construction (root_coords = cartan_inv * dynkin); identity and hashing
/// use the dynkin coordinates only.
struct Weight {
    std::vector<i64> dynkin;
    RatVec root_coords;

    bool is_dominant() const
    {
        for (i64 d : dynkin)
            if (d < 0)
                return false;
        return true;
    }

    bool is_zero() const
    {
        for (i64 d : dynkin)
            if (d != 0)
                return false;
        return true;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.dynkin == b.dynkin; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.dynkin < b.dynkin; }
};

/// Exact structural data for one simple complex Lie algebra in Bourbaki
/// numbering: Cartan matrix, its rational inverse, the positive roots in
/// simple-root coordinates, the Weyl vector, and the duality involution
/// mu -> mu* on the nodes.
class RootSystem {
public:
    static RootSystem build(LieType t, int rank_ceiling = kDefaultRankCeiling);
    static std::shared_ptr<const RootSystem> build_shared(LieType t,
                                                          int rank_ceiling = kDefaultRankCeiling);

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank; }

    /// Cartan matrix in the orientation where dynkin = cartan * root_coords;
    /// column k of cartan_inv is the k-th fundamental weight in root coordinates.
    const std::vector<std::vector<i64>>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rat>>& cartan_inv() const { return cartan_inv_; }

    /// Positive roots as integer vectors in simple-root coordinates,
    /// ordered by height then lexicographically.
    const std::vector<std::vector<i64>>& positive_roots() const { return positive_roots_; }

    /// rho (half the sum of the positive roots) in root coordinates.
    const RatVec& weyl_vector() const { return weyl_vector_; }

    /// Node involution realizing mu -> mu* (0-based permutation).
    const std::vector<int>& duality() const { return duality_; }

    /// Symmetrizing factors d_i with (sigma_i, sigma_j) = d_j * cartan[j][i];
    /// short roots are normalized to squared length 2.
    const std::vector<i64>& symmetrizer() const { return symmetrizer_; }

    Weight weight_from_dynkin(std::vector<i64> dynkin) const;
    Weight zero_weight() const;

    /// k is 1-based.
    Weight fundamental_weight(int k) const;

    Weight dual_weight(const Weight& w) const;
    bool is_self_dual(const Weight& w) const;

    /// Dynkin coordinates of an integer root-lattice vector.
    std::vector<i64> dynkin_of_root(const std::vector<i64>& root_coords) const;

    /// Invariant symmetric form on the weight space, both arguments in
    /// root coordinates.
    Rat form(const RatVec& a, const RatVec& b) const;

private:
    LieType type_;
    std::vector<std::vector<i64>> cartan_;
    std::vector<std::vector<Rat>> cartan_inv_;
    std::vector<std::vector<i64>> positive_roots_;
    RatVec weyl_vector_;
    std::vector<int> duality_;
    std::vector<i64> symmetrizer_;
};

} // namespace hodge
