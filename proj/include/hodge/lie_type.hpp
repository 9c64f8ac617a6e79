#pragma once

#include <string>

#include "hodge/errors.hpp"

namespace hodge {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple complex Lie algebra: a family letter plus the rank.
struct LieType {
    Family family;
    int rank;

    /// Validates the family/rank combination (A: r >= 1, B/C: r >= 2,
    /// D: r >= 3, E: r in {6,7,8}, F: r = 4, G: r = 2).
    static LieType make(Family f, int rank);

    std::string name() const;

    friend bool operator==(const LieType&, const LieType&) = default;
};

Family parse_family(const std::string& s);

/// Default supported rank ceiling; configurable at call sites.
inline constexpr int kDefaultRankCeiling = 12;

} // namespace hodge
