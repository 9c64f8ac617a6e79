#include <doctest.h>

#include "hodge/grading.hpp"

using namespace hodge;

namespace {

std::shared_ptr<const RootSystem> shared(Family f, int r)
{
    return RootSystem::build_shared(LieType::make(f, r));
}

ModuleSpec spec_of(std::shared_ptr<const RootSystem> rs, std::vector<i64> dyn, Pairing p)
{
    Weight mu = rs->weight_from_dynkin(std::move(dyn));
    return ModuleSpec::make(std::move(rs), std::move(mu), p);
}

} // namespace

TEST_CASE("eigenvalues of weights on grading elements")
{
    auto c3 = shared(Family::C, 3);
    CHECK(eigenvalue(*c3, c3->fundamental_weight(3), {{3, 1, 1}}) == HalfInt(13));

    auto b5 = shared(Family::B, 5);
    CHECK(eigenvalue(*b5, b5->fundamental_weight(5), {{8, 4, 2, 1, 1}}) == HalfInt(31));

    CHECK(eigenvalue(*b5, b5->zero_weight(), {{9, 9, 9, 9, 9}}) == HalfInt(0));

    // linearity: doubling the grading doubles every eigenvalue
    auto d5 = shared(Family::D, 5);
    for (std::vector<i64> dyn : {std::vector<i64>{0, 0, 0, 0, 1}, std::vector<i64>{1, 0, 1, 0, 0},
                                 std::vector<i64>{2, 1, 0, 0, 3}}) {
        Weight w = d5->weight_from_dynkin(dyn);
        GradingElement g{{3, 1, 4, 1, 5}};
        GradingElement g2{{6, 2, 8, 2, 10}};
        CHECK(eigenvalue(*d5, w, g2).twice == 2 * eigenvalue(*d5, w, g).twice);
    }
}

TEST_CASE("module spec invariants")
{
    auto a3 = shared(Family::A, 3);
    CHECK_THROWS_AS(
        ModuleSpec::make(a3, a3->fundamental_weight(1), Pairing::SelfDualSingle), config_error);
    // quaternionic doubling of a self-dual weight stays constructible
    ModuleSpec doubled = spec_of(a3, {0, 1, 0}, Pairing::ComplexPair);
    CHECK(doubled.complex_dimension() == 12);
    ModuleSpec single = spec_of(a3, {0, 1, 0}, Pairing::SelfDualSingle);
    CHECK(single.complex_dimension() == 6);
}

TEST_CASE("t_compact keeps exactly the even-valued nodes, doubled")
{
    CHECK(t_compact({{4, 2, 1, 1}}).n == std::vector<i64>{2, 2, 0, 0});
    CHECK(t_compact({{1, 1, 1, 1, 1}}).n == std::vector<i64>{0, 0, 0, 0, 0});
    CHECK(t_compact({{8, 4, 2, 1, 1}}).n == std::vector<i64>{2, 2, 2, 0, 0});
}

TEST_CASE("real / quaternionic / complex trichotomy")
{
    auto b4 = shared(Family::B, 4);
    CHECK(rcq_structure(spec_of(b4, {0, 0, 0, 1}, Pairing::SelfDualSingle), {{4, 2, 1, 1}}) ==
          Structure::Quaternionic);

    auto b5 = shared(Family::B, 5);
    CHECK(rcq_structure(spec_of(b5, {0, 0, 0, 0, 1}, Pairing::SelfDualSingle),
                        {{8, 4, 2, 1, 1}}) == Structure::Real);

    auto b3 = shared(Family::B, 3);
    CHECK(rcq_structure(spec_of(b3, {0, 0, 1}, Pairing::SelfDualSingle), {{2, 1, 1}}) ==
          Structure::Quaternionic);

    auto b2 = shared(Family::B, 2);
    CHECK(rcq_structure(spec_of(b2, {0, 1}, Pairing::SelfDualSingle), {{1, 1}}) ==
          Structure::Real);

    auto a2 = shared(Family::A, 2);
    CHECK(rcq_structure(spec_of(a2, {1, 0}, Pairing::ComplexPair), {{5, 3}}) ==
          Structure::Complex);
}

TEST_CASE("eigen reports")
{
    SUBCASE("rank-2 spin, unit grading")
    {
        auto b2 = shared(Family::B, 2);
        EigenReport rep = eigen_report(spec_of(b2, {0, 1}, Pairing::SelfDualSingle), {{1, 1}});
        CHECK(rep.m == HalfInt(3));
        CHECK(rep.hodge_numbers == std::vector<i64>{1, 1, 1, 1});
        CHECK(rep.uniform_spacing);
        CHECK(rep.dim == 4);
    }
    SUBCASE("sl2 standard")
    {
        auto a1 = shared(Family::A, 1);
        EigenReport rep = eigen_report(spec_of(a1, {1}, Pairing::SelfDualSingle), {{1}});
        CHECK(rep.m == HalfInt(1));
        CHECK(rep.hodge_numbers == std::vector<i64>{1, 1});
    }
    SUBCASE("doubled standard module of so(2r) has all-2 pattern")
    {
        for (int r : {4, 5, 7}) {
            auto d = shared(Family::D, r);
            std::vector<i64> std_dyn(r, 0);
            std_dyn[0] = 1;
            ModuleSpec doubled = spec_of(d, std_dyn, Pairing::ComplexPair);
            for (int variant = 0; variant < 2; ++variant) {
                GradingElement g{std::vector<i64>(r, 1)};
                g.n[variant ? r - 2 : r - 1] = 2;
                EigenReport rep = eigen_report(doubled, g);
                CHECK(rep.hodge_numbers == std::vector<i64>(2 * r, 2));
                CHECK(rep.m == HalfInt(2 * r - 1));
                CHECK(rcq_structure(doubled, g) == Structure::Quaternionic);
            }
        }
    }
    SUBCASE("doubled wedge-square of C^4 has all-2 pattern")
    {
        auto a3 = shared(Family::A, 3);
        ModuleSpec doubled = spec_of(a3, {0, 1, 0}, Pairing::ComplexPair);
        for (auto n : {std::vector<i64>{1, 1, 2}, std::vector<i64>{2, 1, 1}}) {
            EigenReport rep = eigen_report(doubled, {n});
            CHECK(rep.hodge_numbers == std::vector<i64>(6, 2));
        }
    }
    SUBCASE("complex pair counts both multiplicities")
    {
        auto a3 = shared(Family::A, 3);
        ModuleSpec pair = spec_of(a3, {1, 0, 0}, Pairing::ComplexPair);
        GradingElement g{{3, 2, 1}};
        EigenReport rep = eigen_report(pair, g);
        WeightSystem u = weight_system(*a3, a3->fundamental_weight(1));
        for (const auto& [l, h] : rep.multiset) {
            i64 from_u = 0;
            for (const auto& e : u.entries()) {
                HalfInt v = eigenvalue(*a3, a3->weight_from_dynkin(e.dynkin), g);
                if (v == l)
                    from_u += e.mult;
                if (-v == l)
                    from_u += e.mult;
            }
            CHECK(from_u == h);
        }
    }
    SUBCASE("self-dual multiset is symmetric under negation for any grading")
    {
        auto c3 = shared(Family::C, 3);
        ModuleSpec s = spec_of(c3, {0, 0, 1}, Pairing::SelfDualSingle);
        for (auto n : {std::vector<i64>{1, 1, 1}, std::vector<i64>{2, 5, 1},
                       std::vector<i64>{3, 1, 1}}) {
            EigenReport rep = eigen_report(s, {n});
            for (const auto& [l, h] : rep.multiset)
                CHECK(rep.multiset.at(-l) == h);
        }
    }
}

TEST_CASE("principal verdicts")
{
    SUBCASE("the 7-dimensional G2 module with unit grading")
    {
        auto g2 = shared(Family::G, 2);
        Verdict v = is_principal(spec_of(g2, {1, 0}, Pairing::SelfDualSingle), {{1, 1}});
        CHECK(v.principal);
    }
    SUBCASE("symplectic standard representations with unit grading")
    {
        for (int r = 2; r <= 6; ++r) {
            auto c = shared(Family::C, r);
            std::vector<i64> dyn(r, 0);
            dyn[0] = 1;
            Verdict v = is_principal(spec_of(c, dyn, Pairing::SelfDualSingle),
                                     {std::vector<i64>(r, 1)});
            CHECK(v.principal);
        }
    }
    SUBCASE("the 14-dimensional C3 module needs n = (3,1,1)")
    {
        auto c3 = shared(Family::C, 3);
        ModuleSpec s = spec_of(c3, {0, 0, 1}, Pairing::SelfDualSingle);
        CHECK(is_principal(s, {{3, 1, 1}}).principal);
        // n = (1,2,1) hits the right top value but skips the slot two below it
        Verdict v = is_principal(s, {{1, 2, 1}});
        CHECK_FALSE(v.principal);
        CHECK(v.reason == Reason::GapInEigenvalues);
    }
    SUBCASE("duplicate top eigenvalue")
    {
        auto a3 = shared(Family::A, 3);
        // mu and mu* both top out at 7/2, so the top slot is hit twice
        Verdict v = is_principal(spec_of(a3, {1, 0, 0}, Pairing::ComplexPair), {{2, 3, 2}});
        CHECK_FALSE(v.principal);
        CHECK(v.reason == Reason::MultiplicityAboveOne);
    }
    SUBCASE("wedge-square of C^4 fails the structure gate")
    {
        auto a3 = shared(Family::A, 3);
        ModuleSpec s = spec_of(a3, {0, 1, 0}, Pairing::SelfDualSingle);
        for (auto n : {std::vector<i64>{1, 1, 2}, std::vector<i64>{2, 1, 1}}) {
            Verdict v = is_principal(s, {n});
            CHECK_FALSE(v.principal);
            CHECK(v.reason == Reason::QuaternionicSelfDual);
        }
    }
    SUBCASE("spin gradings: parity decides")
    {
        auto b5 = shared(Family::B, 5);
        CHECK(is_principal(spec_of(b5, {0, 0, 0, 0, 1}, Pairing::SelfDualSingle),
                           {{8, 4, 2, 1, 1}})
                  .principal);
        auto b6 = shared(Family::B, 6);
        CHECK(is_principal(spec_of(b6, {0, 0, 0, 0, 0, 1}, Pairing::SelfDualSingle),
                           {{16, 8, 4, 2, 1, 1}})
                  .principal);
        auto b4 = shared(Family::B, 4);
        Verdict v = is_principal(spec_of(b4, {0, 0, 0, 1}, Pairing::SelfDualSingle),
                                 {{4, 2, 1, 1}});
        CHECK_FALSE(v.principal);
        CHECK(v.reason == Reason::QuaternionicSelfDual);
    }
    SUBCASE("non-positive entries are rejected first")
    {
        auto g2 = shared(Family::G, 2);
        Verdict v = is_principal(spec_of(g2, {1, 0}, Pairing::SelfDualSingle), {{0, 3}});
        CHECK(v.reason == Reason::NonPositiveN);
    }
    SUBCASE("wrong top eigenvalue")
    {
        auto a3 = shared(Family::A, 3);
        Verdict v = is_principal(spec_of(a3, {1, 0, 0}, Pairing::ComplexPair), {{1, 1, 1}});
        CHECK(v.reason == Reason::WrongM);
    }
    SUBCASE("gap in the eigenvalue ladder")
    {
        auto a5 = shared(Family::A, 5);
        Verdict v = is_principal(spec_of(a5, {1, 0, 0, 0, 0}, Pairing::ComplexPair),
                                 {{3, 3, 1, 1, 1}});
        CHECK_FALSE(v.principal);
        CHECK(v.reason == Reason::GapInEigenvalues);
    }
    SUBCASE("complex pair standard: both mirror gradings are principal verdicts")
    {
        auto a3 = shared(Family::A, 3);
        ModuleSpec s = spec_of(a3, {1, 0, 0}, Pairing::ComplexPair);
        CHECK(is_principal(s, {{3, 2, 1}}).principal);
        CHECK(is_principal(s, {{1, 2, 3}}).principal); // mirror orientation
        CHECK(rcq_structure(s, {{3, 2, 1}}) == Structure::Complex);
    }
    SUBCASE("principal implies consecutive drops by every n_i")
    {
        auto c3 = shared(Family::C, 3);
        GradingElement g{{3, 1, 1}};
        WeightSystem ws = weight_system(*c3, c3->fundamental_weight(3));
        for (int i = 0; i < 3; ++i) {
            bool found = false;
            for (const auto& e : ws.entries()) {
                std::vector<i64> next = e.lowering;
                next[i] += 1;
                for (const auto& e2 : ws.entries())
                    if (e2.lowering == next)
                        found = true;
            }
            CHECK(found); // lambda and lambda - sigma_i both occur
        }
    }
}

TEST_CASE("the highest weight tops every eigenvalue for nonnegative gradings")
{
    for (auto [f, r, dyn] : std::vector<std::tuple<Family, int, std::vector<i64>>>{
             {Family::C, 3, {0, 0, 1}},
             {Family::B, 4, {0, 0, 0, 1}},
             {Family::G, 2, {1, 0}},
             {Family::A, 4, {0, 1, 0, 0}}}) {
        auto rs = shared(f, r);
        Weight mu = rs->weight_from_dynkin(dyn);
        WeightSystem ws = weight_system(*rs, mu);
        // a few fixed nonnegative gradings, including zero entries; compare
        // as exact rationals since arbitrary gradings may leave (1/2)Z
        for (auto base : {0, 1, 3}) {
            GradingElement g;
            for (int i = 0; i < r; ++i)
                g.n.push_back((i * 7 + base) % 4); // deterministic pattern in {0..3}
            Rat top = dot(mu.root_coords, g.n);
            for (const auto& e : ws.entries())
                CHECK(dot(rs->weight_from_dynkin(e.dynkin).root_coords, g.n) <= top);
        }
    }
}

TEST_CASE("a yes verdict implies the advertised postconditions")
{
    for (auto [f, r, dyn, n] : std::vector<std::tuple<Family, int, std::vector<i64>,
                                                      std::vector<i64>>>{
             {Family::C, 3, {0, 0, 1}, {3, 1, 1}},
             {Family::B, 5, {0, 0, 0, 0, 1}, {8, 4, 2, 1, 1}},
             {Family::G, 2, {1, 0}, {1, 1}}}) {
        auto rs = shared(f, r);
        ModuleSpec s = spec_of(rs, dyn, Pairing::SelfDualSingle);
        GradingElement g{n};
        REQUIRE(is_principal(s, g).principal);
        CHECK(rcq_structure(s, g) == Structure::Real);
        EigenReport rep = eigen_report(s, g);
        CHECK(rep.m == HalfInt(rep.dim - 1));
        CHECK(rep.multiset.size() == static_cast<std::size_t>(rep.dim));
        for (const auto& [l, h] : rep.multiset)
            CHECK(h == 1);
    }
}
