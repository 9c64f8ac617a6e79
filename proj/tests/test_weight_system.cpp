#include <doctest.h>

#include <algorithm>
#include <set>

#include "hodge/weight_system.hpp"

using namespace hodge;

namespace {

std::set<std::vector<i64>> lowering_set(const WeightSystem& ws)
{
    std::set<std::vector<i64>> out;
    for (const auto& e : ws.entries())
        out.insert(e.lowering);
    return out;
}

WeightSystem ws_of(Family f, int r, std::vector<i64> dynkin, const Limits& limits = {})
{
    RootSystem rs = RootSystem::build(LieType::make(f, r));
    return weight_system(rs, rs.weight_from_dynkin(std::move(dynkin)), limits);
}

} // namespace

TEST_CASE("weyl dimension formula on known modules")
{
    RootSystem c3 = RootSystem::build(LieType::make(Family::C, 3));
    CHECK(weyl_dim(c3, c3.fundamental_weight(3)) == 14);
    CHECK(weyl_dim(c3, c3.fundamental_weight(1)) == 6);
    CHECK(weyl_dim(c3, c3.zero_weight()) == 1);

    for (int r = 2; r <= 10; ++r) {
        RootSystem b = RootSystem::build(LieType::make(Family::B, r));
        CHECK(weyl_dim(b, b.fundamental_weight(r)) == i64(1) << r);
        CHECK(weyl_dim(b, b.fundamental_weight(1)) == 2 * r + 1);
    }
    for (int r = 4; r <= 10; ++r) {
        RootSystem d = RootSystem::build(LieType::make(Family::D, r));
        CHECK(weyl_dim(d, d.fundamental_weight(r)) == i64(1) << (r - 1));
        CHECK(weyl_dim(d, d.fundamental_weight(r - 1)) == i64(1) << (r - 1));
        CHECK(weyl_dim(d, d.fundamental_weight(1)) == 2 * r);
    }

    RootSystem e6 = RootSystem::build(LieType::make(Family::E, 6));
    CHECK(weyl_dim(e6, e6.fundamental_weight(1)) == 27);
    RootSystem e7 = RootSystem::build(LieType::make(Family::E, 7));
    CHECK(weyl_dim(e7, e7.fundamental_weight(7)) == 56);
    RootSystem g2 = RootSystem::build(LieType::make(Family::G, 2));
    CHECK(weyl_dim(g2, g2.fundamental_weight(1)) == 7);

    RootSystem a2 = RootSystem::build(LieType::make(Family::A, 2));
    CHECK(weyl_dim(a2, a2.weight_from_dynkin({1, 1})) == 8);

    // binomial coefficients for wedge and sym powers
    RootSystem a5 = RootSystem::build(LieType::make(Family::A, 5));
    CHECK(weyl_dim(a5, a5.fundamental_weight(3)) == 20);
    CHECK(weyl_dim(a5, a5.weight_from_dynkin({5, 0, 0, 0, 0})) == 252);
}

TEST_CASE("weyl dimension of Sym^64 C^13 equals the binomial coefficient")
{
    RootSystem a12 = RootSystem::build(LieType::make(Family::A, 12));
    std::vector<i64> sym64(12, 0);
    sym64[0] = 64;
    // C(76,12) computed independently by the multiplicative rule
    i128 binom = 1;
    for (int i = 1; i <= 12; ++i) {
        binom *= 64 + i;
        binom /= i;
    }
    CHECK(weyl_dim(a12, a12.weight_from_dynkin(sym64)) == static_cast<i64>(binom));

    RootSystem a1 = RootSystem::build(LieType::make(Family::A, 1));
    CHECK_THROWS_AS(weyl_dim(a1, a1.weight_from_dynkin({-1})), config_error);
}

TEST_CASE("weight system: wedge square of C^4")
{
    WeightSystem ws = ws_of(Family::A, 3, {0, 1, 0});
    CHECK(ws.dimension() == 6);
    CHECK(is_weight_multiplicity_free(ws));
    std::set<std::vector<i64>> expected = {{0, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                           {0, 1, 1}, {1, 1, 1}, {1, 2, 1}};
    CHECK(lowering_set(ws) == expected);
}

TEST_CASE("weight system: the 14-dimensional C3 module")
{
    WeightSystem ws = ws_of(Family::C, 3, {0, 0, 1});
    CHECK(ws.dimension() == 14);
    CHECK(is_weight_multiplicity_free(ws));
    std::set<std::vector<i64>> expected = {
        {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 2, 2}, {1, 1, 1}, {1, 2, 1},
        {1, 2, 2}, {1, 3, 2}, {2, 2, 1}, {2, 2, 2}, {2, 3, 2}, {2, 4, 2}, {2, 4, 3}};
    CHECK(lowering_set(ws) == expected);
}

TEST_CASE("weight system: the 7-dimensional G2 module")
{
    WeightSystem ws = ws_of(Family::G, 2, {1, 0});
    CHECK(ws.dimension() == 7);
    std::set<std::vector<i64>> expected = {{0, 0}, {1, 0}, {1, 1}, {2, 1},
                                           {3, 1}, {3, 2}, {4, 2}};
    CHECK(lowering_set(ws) == expected);
}

TEST_CASE("weight system: spin modules match the tabulated lowerings")
{
    SUBCASE("rank 2")
    {
        WeightSystem ws = ws_of(Family::B, 2, {0, 1});
        std::set<std::vector<i64>> expected = {{0, 0}, {0, 1}, {1, 1}, {1, 2}};
        CHECK(lowering_set(ws) == expected);
    }
    SUBCASE("rank 3")
    {
        WeightSystem ws = ws_of(Family::B, 3, {0, 0, 1});
        std::set<std::vector<i64>> expected = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 2},
                                               {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 2, 3}};
        CHECK(lowering_set(ws) == expected);
    }
    SUBCASE("rank 4")
    {
        WeightSystem ws = ws_of(Family::B, 4, {0, 0, 0, 1});
        std::set<std::vector<i64>> expected = {
            {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 1, 2}, {0, 1, 1, 1}, {0, 1, 1, 2},
            {0, 1, 2, 2}, {0, 1, 2, 3}, {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2},
            {1, 1, 2, 3}, {1, 2, 2, 3}, {1, 2, 3, 3}, {1, 2, 3, 4}};
        CHECK(lowering_set(ws) == expected);
    }
    SUBCASE("rank 5")
    {
        WeightSystem ws = ws_of(Family::B, 5, {0, 0, 0, 0, 1});
        std::set<std::vector<i64>> expected = {
            {0,0,0,0,0}, {0,0,0,0,1}, {0,0,0,1,1}, {0,0,0,1,2},
            {0,0,1,1,1}, {0,0,1,1,2}, {0,0,1,2,2}, {0,0,1,2,3},
            {0,1,1,1,1}, {0,1,1,1,2}, {0,1,1,2,2}, {0,1,2,2,2},
            {0,1,1,2,3}, {0,1,2,2,3}, {0,1,2,3,3}, {0,1,2,3,4},
            {1,1,1,1,1}, {1,1,1,1,2}, {1,1,1,2,2}, {1,1,1,2,3},
            {1,1,2,2,2}, {1,1,2,2,3}, {1,2,2,2,2}, {1,2,2,2,3},
            {1,1,2,3,3}, {1,2,2,3,3}, {1,1,2,3,4}, {1,2,3,3,3},
            {1,2,2,3,4}, {1,2,3,3,4}, {1,2,3,4,4}, {1,2,3,4,5}};
        CHECK(lowering_set(ws) == expected);
        CHECK(ws.dimension() == 32);
    }
}

TEST_CASE("weight system: 56-dimensional E7 module, shallow weights")
{
    WeightSystem ws = ws_of(Family::E, 7, {0, 0, 0, 0, 0, 0, 1});
    CHECK(ws.dimension() == 56);
    CHECK(is_weight_multiplicity_free(ws));

    auto lows = lowering_set(ws);
    auto level = [](const std::vector<i64>& v) {
        i64 s = 0;
        for (i64 x : v)
            s += x;
        return s;
    };
    std::set<std::vector<i64>> depth_le4, depth5, depth6, first_zero_deep;
    for (const auto& v : lows) {
        i64 l = level(v);
        if (l <= 4)
            depth_le4.insert(v);
        if (l == 5)
            depth5.insert(v);
        if (l == 6)
            depth6.insert(v);
        if (l > 6 && v[0] == 0)
            first_zero_deep.insert(v);
    }
    CHECK(depth_le4 == std::set<std::vector<i64>>{{0, 0, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0, 1},
                                                  {0, 0, 0, 0, 0, 1, 1},
                                                  {0, 0, 0, 0, 1, 1, 1},
                                                  {0, 0, 0, 1, 1, 1, 1}});
    CHECK(depth5 == std::set<std::vector<i64>>{{0, 1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 1, 1}});
    CHECK(depth6 == std::set<std::vector<i64>>{{0, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 1, 1, 1}});
    CHECK(first_zero_deep == std::set<std::vector<i64>>{{0, 1, 1, 2, 1, 1, 1},
                                                        {0, 1, 1, 2, 2, 1, 1},
                                                        {0, 1, 1, 2, 2, 2, 1},
                                                        {0, 1, 1, 2, 2, 2, 2}});
}

TEST_CASE("multiplicities: adjoint modules are not multiplicity-free")
{
    WeightSystem adj = ws_of(Family::A, 2, {1, 1});
    CHECK(adj.dimension() == 8);
    CHECK(adj.distinct_weights() == 7);
    CHECK(adj.multiplicity({0, 0}) == 2);
    CHECK_FALSE(is_weight_multiplicity_free(adj));

    // G2 adjoint: 14 = 12 roots + 2-dimensional zero space
    WeightSystem g2adj = ws_of(Family::G, 2, {0, 1});
    CHECK(g2adj.dimension() == 14);
    CHECK(g2adj.multiplicity({0, 0}) == 2);

    // the trivial module is multiplicity-free
    WeightSystem triv = ws_of(Family::B, 3, {0, 0, 0});
    CHECK(triv.dimension() == 1);
    CHECK(is_weight_multiplicity_free(triv));
}

TEST_CASE("weight system invariants: sum rules")
{
    for (auto [f, r, dyn] :
         std::vector<std::tuple<Family, int, std::vector<i64>>>{
             {Family::A, 3, {0, 1, 0}},
             {Family::A, 2, {1, 1}},
             {Family::B, 4, {0, 0, 0, 1}},
             {Family::C, 3, {0, 0, 1}},
             {Family::D, 5, {0, 0, 0, 0, 1}},
             {Family::G, 2, {1, 0}},
             {Family::A, 1, {7}},
             {Family::F, 4, {1, 0, 0, 0}}}) {
        RootSystem rs = RootSystem::build(LieType::make(f, r));
        Weight mu = rs.weight_from_dynkin(dyn);
        WeightSystem ws = weight_system(rs, mu);
        CAPTURE(rs.type().name());

        CHECK(ws.dimension() == weyl_dim(rs, mu));
        CHECK(ws.multiplicity(mu.dynkin) == 1);

        std::vector<i64> sum(r, 0);
        for (const auto& e : ws.entries())
            for (int i = 0; i < r; ++i)
                sum[i] += e.mult * e.dynkin[i];
        CHECK(sum == std::vector<i64>(r, 0));

        // every weight is below mu in the lowering cone
        for (const auto& e : ws.entries())
            for (i64 k : e.lowering)
                CHECK(k >= 0);
    }
}

TEST_CASE("dimension ceiling produces a resource error")
{
    Limits tight;
    tight.dim_ceiling = 10;
    RootSystem c3 = RootSystem::build(LieType::make(Family::C, 3));
    CHECK_THROWS_AS(weight_system(c3, c3.fundamental_weight(3), tight), resource_error);
    CHECK_THROWS_AS(weight_system(c3, c3.weight_from_dynkin({-1, 0, 0})), config_error);
}

TEST_CASE("catalog per family")
{
    Limits limits;
    limits.sym_degree_ceiling = 6;

    auto labels = [&](Family f, int r) {
        RootSystem rs = RootSystem::build(LieType::make(f, r));
        std::vector<std::string> out;
        for (const auto& e : mf_catalog(rs, limits))
            out.push_back(e.label);
        return out;
    };

    CHECK(labels(Family::F, 4).empty());
    CHECK(labels(Family::E, 8).empty());
    CHECK(labels(Family::C, 4) == std::vector<std::string>{"standard"});
    CHECK(labels(Family::C, 3) == std::vector<std::string>{"standard", "wedge:3"});
    CHECK(labels(Family::C, 2) == std::vector<std::string>{"standard", "wedge:2"});
    CHECK(labels(Family::B, 5) == std::vector<std::string>{"standard", "spin"});
    CHECK(labels(Family::D, 6) == std::vector<std::string>{"standard", "spin-", "spin"});
    CHECK(labels(Family::E, 6) == std::vector<std::string>{"fund:1", "fund:6"});
    CHECK(labels(Family::E, 7) == std::vector<std::string>{"fund:7"});
    CHECK(labels(Family::G, 2) == std::vector<std::string>{"standard"});

    // A1: one sym family
    CHECK(labels(Family::A, 1) ==
          std::vector<std::string>{"sym:1", "sym:2", "sym:3", "sym:4", "sym:5", "sym:6"});

    // A3: wedges + syms; self-duality flags
    RootSystem a3 = RootSystem::build(LieType::make(Family::A, 3));
    auto cat = mf_catalog(a3, limits);
    CHECK(cat.size() == 3 + 2 * 5);
    for (const auto& e : cat) {
        if (e.label == "wedge:2")
            CHECK(e.self_dual);
        else
            CHECK_FALSE(e.self_dual);
    }

    // every entry is weight multiplicity-free (small sample here; the full
    // sweep lives in the acceptance suite)
    RootSystem d5 = RootSystem::build(LieType::make(Family::D, 5));
    for (const auto& e : mf_catalog(d5, limits))
        CHECK(is_weight_multiplicity_free(weight_system(d5, e.highest_weight)));
}

TEST_CASE("spin weight oracle")
{
    SUBCASE("rank 2 and 3 tabulated values")
    {
        auto b2 = spin_weight_oracle(LieType::make(Family::B, 2), SpinKind::BSpin);
        CHECK(b2 == std::vector<std::vector<i64>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});
        auto b3 = spin_weight_oracle(LieType::make(Family::B, 3), SpinKind::BSpin);
        CHECK(b3 == std::vector<std::vector<i64>>{{0, 0, 0},
                                                  {0, 0, 1},
                                                  {0, 1, 1},
                                                  {0, 1, 2},
                                                  {1, 1, 1},
                                                  {1, 1, 2},
                                                  {1, 2, 2},
                                                  {1, 2, 3}});
    }
    SUBCASE("counts are powers of two")
    {
        for (int r = 2; r <= 10; ++r)
            CHECK(spin_weight_oracle(LieType::make(Family::B, r), SpinKind::BSpin).size() ==
                  std::size_t(1) << r);
        for (int r = 4; r <= 10; ++r) {
            CHECK(spin_weight_oracle(LieType::make(Family::D, r), SpinKind::DLast).size() ==
                  std::size_t(1) << (r - 1));
            CHECK(spin_weight_oracle(LieType::make(Family::D, r), SpinKind::DSecondLast).size() ==
                  std::size_t(1) << (r - 1));
        }
    }
    SUBCASE("D5 oracle agrees with the Freudenthal path")
    {
        auto oracle = spin_weight_oracle(LieType::make(Family::D, 5), SpinKind::DLast);
        std::set<std::vector<i64>> oracle_set(oracle.begin(), oracle.end());
        CHECK(oracle_set.count({0, 0, 0, 0, 0}) == 1);
        CHECK(oracle_set.count({0, 0, 0, 0, 1}) == 1);
        CHECK(oracle_set.size() == 16);
        WeightSystem ws = ws_of(Family::D, 5, {0, 0, 0, 0, 1});
        CHECK(lowering_set(ws) == oracle_set);

        auto dual = spin_weight_oracle(LieType::make(Family::D, 5), SpinKind::DSecondLast);
        WeightSystem ws2 = ws_of(Family::D, 5, {0, 0, 0, 1, 0});
        CHECK(lowering_set(ws2) == std::set<std::vector<i64>>(dual.begin(), dual.end()));
    }
    SUBCASE("wrong family is rejected")
    {
        CHECK_THROWS_AS(spin_weight_oracle(LieType::make(Family::C, 3), SpinKind::BSpin),
                        config_error);
        CHECK_THROWS_AS(spin_weight_oracle(LieType::make(Family::B, 3), SpinKind::DLast),
                        config_error);
    }
}

TEST_CASE("negation symmetry matches self-duality")
{
    // self-dual: the weight set is closed under negation
    for (auto [f, r, dyn] : std::vector<std::tuple<Family, int, std::vector<i64>>>{
             {Family::B, 3, {0, 0, 1}}, {Family::C, 3, {0, 0, 1}}, {Family::A, 3, {0, 1, 0}}}) {
        WeightSystem ws = ws_of(f, r, dyn);
        for (const auto& e : ws.entries()) {
            std::vector<i64> neg(e.dynkin.size());
            for (std::size_t i = 0; i < neg.size(); ++i)
                neg[i] = -e.dynkin[i];
            CHECK(ws.multiplicity(neg) == e.mult);
        }
    }
    // dual pair: weights of the dual are exactly the negatives
    RootSystem a3 = RootSystem::build(LieType::make(Family::A, 3));
    WeightSystem u = weight_system(a3, a3.fundamental_weight(1));
    WeightSystem ustar = weight_system(a3, a3.fundamental_weight(3));
    std::set<std::vector<i64>> negated;
    for (const auto& e : u.entries()) {
        std::vector<i64> neg(e.dynkin.size());
        for (std::size_t i = 0; i < neg.size(); ++i)
            neg[i] = -e.dynkin[i];
        negated.insert(neg);
    }
    std::set<std::vector<i64>> dual_set;
    for (const auto& e : ustar.entries())
        dual_set.insert(e.dynkin);
    CHECK(negated == dual_set);
}
