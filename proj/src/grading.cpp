#include "hodge/grading.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

std::string GradingElement::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < n.size(); ++i)
        os << (i ? "," : "") << n[i];
    os << ')';
    return os.str();
}

ModuleSpec ModuleSpec::make(std::shared_ptr<const RootSystem> rs, Weight mu, Pairing pairing)
{
    if (!rs)
        throw config_error("ModuleSpec requires a root system");
    if (!mu.is_dominant())
        throw config_error("ModuleSpec requires a dominant highest weight");
    if (pairing == Pairing::SelfDualSingle && !rs->is_self_dual(mu))
        throw config_error("SelfDualSingle pairing requires a self-dual highest weight");
    // ComplexPair with self-dual mu is allowed: the quaternionic doubling
    // V_C = U + U* with U ~ U* stays representable for reporting.
    ModuleSpec s;
    s.rs_ = std::move(rs);
    s.mu_ = std::move(mu);
    s.pairing_ = pairing;
    return s;
}

i64 ModuleSpec::complex_dimension(const Limits&) const
{
    i64 d = weyl_dim(*rs_, mu_);
    return pairing_ == Pairing::SelfDualSingle ? d : 2 * d;
}

HalfInt eigenvalue(const RootSystem& rs, const Weight& lambda, const GradingElement& g)
{
    if (g.n.size() != static_cast<std::size_t>(rs.rank()))
        throw config_error("grading element has wrong rank");
    Rat v = dot(lambda.root_coords, g.n);
    return HalfInt::from_rat(v); // throws if outside (1/2)Z
}

GradingElement t_compact(const GradingElement& g)
{
    GradingElement out;
    out.n.reserve(g.n.size());
    for (i64 v : g.n)
        out.n.push_back(v % 2 == 0 ? 2 : 0);
    return out;
}

std::string to_string(Structure s)
{
    switch (s) {
    case Structure::Real: return "real";
    case Structure::Quaternionic: return "quaternionic";
    case Structure::Complex: return "complex";
    }
    return "?";
}

std::string to_string(Reason r)
{
    switch (r) {
    case Reason::NonPositiveN: return "NonPositiveN";
    case Reason::GapInEigenvalues: return "GapInEigenvalues";
    case Reason::MultiplicityAboveOne: return "MultiplicityAboveOne";
    case Reason::WrongM: return "WrongM";
    case Reason::QuaternionicSelfDual: return "QuaternionicSelfDual";
    case Reason::SharedWeightWithDual: return "SharedWeightWithDual";
    }
    return "?";
}

Structure rcq_structure(const ModuleSpec& spec, const GradingElement& g)
{
    if (!spec.mu_self_dual())
        return Structure::Complex;
    HalfInt v = eigenvalue(spec.rs(), spec.mu(), t_compact(g));
    if (!v.is_integer())
        throw std::logic_error("self-dual highest weight evaluated non-integrally on t_compact");
    return v.is_even_integer() ? Structure::Real : Structure::Quaternionic;
}

EigenReport eigen_report(const ModuleSpec& spec, const GradingElement& g,
                         const WeightSystem& ws)
{
    EigenReport rep;
    HalfInt top = eigenvalue(spec.rs(), spec.mu(), g);
    for (const auto& e : ws.entries()) {
        // lambda(T) = mu(T) - sum lowering_i * n_i
        i64 drop = 0;
        for (std::size_t i = 0; i < e.lowering.size(); ++i)
            drop += e.lowering[i] * g.n[i];
        HalfInt v(top.twice - 2 * drop);
        rep.multiset[v] += e.mult;
        if (spec.pairing() == Pairing::ComplexPair)
            rep.multiset[-v] += e.mult;
    }
    rep.dim = spec.pairing() == Pairing::ComplexPair ? 2 * ws.dimension() : ws.dimension();
    rep.m = rep.multiset.rbegin()->first;

    i64 accounted = 0;
    for (HalfInt l = rep.m;; l = l - HalfInt::whole(1)) {
        auto it = rep.multiset.find(l);
        i64 h = it == rep.multiset.end() ? 0 : it->second;
        rep.hodge_numbers.push_back(h);
        accounted += h;
        if (l == -rep.m || l < -rep.m)
            break;
    }
    rep.uniform_spacing = accounted == rep.dim;
    return rep;
}

EigenReport eigen_report(const ModuleSpec& spec, const GradingElement& g, const Limits& limits)
{
    WeightSystem ws = weight_system(spec.rs(), spec.mu(), limits);
    return eigen_report(spec, g, ws);
}

namespace {

// Clause (iii) for complex pairs: Lambda(U) and -Lambda(U) must be disjoint.
bool shares_weight_with_dual(const RootSystem&, const WeightSystem& ws)
{
    for (const auto& e : ws.entries()) {
        std::vector<i64> neg(e.dynkin.size());
        for (std::size_t i = 0; i < neg.size(); ++i)
            neg[i] = -e.dynkin[i];
        if (ws.contains(neg))
            return true;
    }
    return false;
}

} // namespace

Verdict is_principal(const ModuleSpec& spec, const GradingElement& g, const WeightSystem& ws)
{
    for (i64 v : g.n)
        if (v < 1)
            return Verdict::no(Reason::NonPositiveN,
                               "grading element " + g.to_string() + " has an entry < 1");

    EigenReport rep = eigen_report(spec, g, ws);
    HalfInt target(rep.dim - 1); // (dim V_C - 1)/2 in doubled units
    if (rep.m != target)
        return Verdict::no(Reason::WrongM, "top eigenvalue " + rep.m.to_string() +
                                               ", expected " + target.to_string());
    if (!rep.uniform_spacing)
        return Verdict::no(Reason::GapInEigenvalues,
                           "eigenvalues do not lie on the integer grid below m");
    for (std::size_t i = 0; i < rep.hodge_numbers.size(); ++i) {
        if (rep.hodge_numbers[i] == 0)
            return Verdict::no(Reason::GapInEigenvalues,
                               "no eigenvalue at " + (rep.m - HalfInt::whole(i)).to_string());
        if (rep.hodge_numbers[i] > 1)
            return Verdict::no(Reason::MultiplicityAboveOne,
                               "eigenvalue " + (rep.m - HalfInt::whole(i)).to_string() +
                                   " has multiplicity " +
                                   std::to_string(rep.hodge_numbers[i]));
    }

    if (spec.pairing() == Pairing::SelfDualSingle) {
        Structure s = rcq_structure(spec, g);
        if (s != Structure::Real)
            return Verdict::no(Reason::QuaternionicSelfDual,
                               "self-dual module is " + to_string(s) + " under this grading");
    } else {
        // implied by the multiplicity check, but verified independently
        if (shares_weight_with_dual(spec.rs(), ws))
            return Verdict::no(Reason::SharedWeightWithDual,
                               "module shares a weight with its dual");
    }
    return Verdict::yes();
}

Verdict is_principal(const ModuleSpec& spec, const GradingElement& g, const Limits& limits)
{
    WeightSystem ws = weight_system(spec.rs(), spec.mu(), limits);
    return is_principal(spec, g, ws);
}

} // namespace hodge
