#include "hodge/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hodge {

namespace {

// Undirected Dynkin diagram edges plus, for the two-root-length families,
// the asymmetric entries of the Cartan matrix.  The matrix is oriented so
// that dynkin = cartan * root_coords, i.e. cartan[i][j] = 2(s_i,s_j)/(s_i,s_i).
std::vector<std::vector<i64>> build_cartan(const LieType& t)
{
    const int r = t.rank;
    std::vector<std::vector<i64>> c(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i)
        c[i][i] = 2;

    auto edge = [&](int i, int j) { // 1-based simple edge
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };

    switch (t.family) {
    case Family::A:
        for (int i = 1; i < r; ++i)
            edge(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < r; ++i)
            edge(i, i + 1);
        c[r - 1][r - 2] = -2; // short last node
        break;
    case Family::C:
        for (int i = 1; i < r; ++i)
            edge(i, i + 1);
        c[r - 2][r - 1] = -2; // long last node
        break;
    case Family::D:
        for (int i = 1; i + 1 < r; ++i)
            edge(i, i + 1);
        edge(r - 2, r);
        break;
    case Family::E:
        edge(1, 3);
        edge(3, 4);
        edge(2, 4);
        edge(4, 5);
        edge(5, 6);
        if (r >= 7) edge(6, 7);
        if (r >= 8) edge(7, 8);
        break;
    case Family::F:
        edge(1, 2);
        edge(2, 3);
        edge(3, 4);
        c[2][1] = -2; // nodes 3,4 short
        break;
    case Family::G:
        edge(1, 2);
        c[0][1] = -3; // node 1 short
        break;
    }
    return c;
}

std::vector<i64> build_symmetrizer(const LieType& t)
{
    const int r = t.rank;
    std::vector<i64> d(r, 1);
    switch (t.family) {
    case Family::B:
        std::fill(d.begin(), d.end() - 1, 2);
        break;
    case Family::C:
        d[r - 1] = 2;
        break;
    case Family::F:
        d[0] = d[1] = 2;
        break;
    case Family::G:
        d[1] = 3;
        break;
    default:
        break;
    }
    return d;
}

std::vector<int> build_duality(const LieType& t)
{
    const int r = t.rank;
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    switch (t.family) {
    case Family::A:
        for (int i = 0; i < r; ++i)
            p[i] = r - 1 - i;
        break;
    case Family::D:
        if (r % 2 == 1)
            std::swap(p[r - 2], p[r - 1]);
        break;
    case Family::E:
        if (r == 6) {
            std::swap(p[0], p[5]);
            std::swap(p[2], p[4]);
        }
        break;
    default:
        break; // B, C, G2, F4, E7, E8 are self-dual
    }
    return p;
}

// Exact Gauss-Jordan inverse.  Cartan matrices are well conditioned for
// this: every pivot stays a small rational.
std::vector<std::vector<Rat>> invert(const std::vector<std::vector<i64>>& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = Rat(m[i][j]);
        a[i][n + i] = Rat(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw std::logic_error("singular Cartan matrix");
        std::swap(a[col], a[pivot]);
        Rat inv = Rat(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j)
            a[col][j] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            Rat f = a[row][col];
            for (int j = 0; j < 2 * n; ++j)
                a[row][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[i][j] = a[i][n + j];
    return out;
}

// Closure of the simple roots under root strings, by height.  For a root
// a != s_i the s_i-string through a is unbroken, so a + s_i is a root iff
// (down steps) - <a, s_i^vee> < 0.
std::vector<std::vector<i64>> build_positive_roots(const std::vector<std::vector<i64>>& cartan)
{
    const int r = static_cast<int>(cartan.size());
    std::set<std::vector<i64>> seen;
    std::vector<std::vector<i64>> by_height;

    std::vector<std::vector<i64>> current;
    for (int i = 0; i < r; ++i) {
        std::vector<i64> e(r, 0);
        e[i] = 1;
        current.push_back(e);
        seen.insert(e);
    }

    std::vector<std::vector<i64>> all;
    while (!current.empty()) {
        std::sort(current.begin(), current.end());
        for (auto& a : current)
            all.push_back(a);
        std::vector<std::vector<i64>> next;
        for (const auto& a : current) {
            for (int i = 0; i < r; ++i) {
                std::vector<i64> simple(r, 0);
                simple[i] = 1;
                if (a == simple)
                    continue;
                // p = steps down the string that remain roots
                int p = 0;
                std::vector<i64> down = a;
                for (;;) {
                    down[i] -= 1;
                    if (!seen.count(down))
                        break;
                    ++p;
                }
                i64 pairing = 0;
                for (int j = 0; j < r; ++j)
                    pairing += cartan[i][j] * a[j];
                if (p - pairing >= 1) {
                    std::vector<i64> up = a;
                    up[i] += 1;
                    if (seen.insert(up).second)
                        next.push_back(up);
                }
            }
        }
        current = std::move(next);
    }
    return all;
}

} // namespace

RootSystem RootSystem::build(LieType t, int rank_ceiling)
{
    t = LieType::make(t.family, t.rank); // re-validate
    if (t.rank > rank_ceiling)
        throw resource_error("rank " + std::to_string(t.rank) + " exceeds rank ceiling " +
                             std::to_string(rank_ceiling));

    RootSystem rs;
    rs.type_ = t;
    rs.cartan_ = build_cartan(t);
    rs.cartan_inv_ = invert(rs.cartan_);
    rs.symmetrizer_ = build_symmetrizer(t);
    rs.duality_ = build_duality(t);
    rs.positive_roots_ = build_positive_roots(rs.cartan_);

    const int r = t.rank;
    rs.weyl_vector_.assign(r, Rat(0));
    for (const auto& root : rs.positive_roots_)
        for (int i = 0; i < r; ++i)
            rs.weyl_vector_[i] += Rat(root[i], 2);
    return rs;
}

std::shared_ptr<const RootSystem> RootSystem::build_shared(LieType t, int rank_ceiling)
{
    return std::make_shared<const RootSystem>(build(t, rank_ceiling));
}

Weight RootSystem::weight_from_dynkin(std::vector<i64> dynkin) const
{
    const int r = rank();
    if (static_cast<int>(dynkin.size()) != r)
        throw config_error("weight has " + std::to_string(dynkin.size()) +
                           " coordinates, expected " + std::to_string(r));
    Weight w;
    w.root_coords.assign(r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            w.root_coords[i] += cartan_inv_[i][j] * Rat(dynkin[j]);
    w.dynkin = std::move(dynkin);
    return w;
}

Weight RootSystem::zero_weight() const
{
    return weight_from_dynkin(std::vector<i64>(rank(), 0));
}

Weight RootSystem::fundamental_weight(int k) const
{
    if (k < 1 || k > rank())
        throw config_error("fundamental weight index " + std::to_string(k) +
                           " out of range 1.." + std::to_string(rank()));
    std::vector<i64> d(rank(), 0);
    d[k - 1] = 1;
    return weight_from_dynkin(std::move(d));
}

Weight RootSystem::dual_weight(const Weight& w) const
{
    std::vector<i64> d(rank());
    for (int i = 0; i < rank(); ++i)
        d[duality_[i]] = w.dynkin[i];
    return weight_from_dynkin(std::move(d));
}

bool RootSystem::is_self_dual(const Weight& w) const
{
    for (int i = 0; i < rank(); ++i)
        if (w.dynkin[i] != w.dynkin[duality_[i]])
            return false;
    return true;
}

std::vector<i64> RootSystem::dynkin_of_root(const std::vector<i64>& root_coords) const
{
    const int r = rank();
    std::vector<i64> d(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            d[i] += cartan_[i][j] * root_coords[j];
    return d;
}

Rat RootSystem::form(const RatVec& a, const RatVec& b) const
{
    // (s_i, s_j) = d_j * cartan[j][i], symmetric by construction.
    const int r = rank();
    Rat s;
    for (int i = 0; i < r; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < r; ++j) {
            if (b[j].is_zero())
                continue;
            s += a[i] * b[j] * Rat(symmetrizer_[j] * cartan_[j][i]);
        }
    }
    return s;
}

} // namespace hodge
