#include "hodge/lie_type.hpp"

#include <cctype>

namespace hodge {

LieType LieType::make(Family f, int rank)
{
    auto bad = [&](const std::string& need) {
        throw config_error("invalid rank " + std::to_string(rank) + " for family " +
                           std::string(1, static_cast<char>(f)) + " (" + need + ")");
    };
    switch (f) {
    case Family::A:
        if (rank < 1) bad("rank >= 1");
        break;
    case Family::B:
    case Family::C:
        if (rank < 2) bad("rank >= 2");
        break;
    case Family::D:
        if (rank < 3) bad("rank >= 3");
        break;
    case Family::E:
        if (rank < 6 || rank > 8) bad("rank in {6,7,8}");
        break;
    case Family::F:
        if (rank != 4) bad("rank = 4");
        break;
    case Family::G:
        if (rank != 2) bad("rank = 2");
        break;
    }
    return LieType{f, rank};
}

std::string LieType::name() const
{
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Family parse_family(const std::string& s)
{
    if (s.size() == 1) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: break;
        }
    }
    throw config_error("unknown family '" + s + "' (expected one of A B C D E F G)");
}

} // namespace hodge
