#include "hodge/tables.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace hodge {

namespace {

using Json = nlohmann::ordered_json;

std::vector<i64> ones(int r) { return std::vector<i64>(r, 1); }

std::vector<i64> fund(int r, int k) // 1-based
{
    std::vector<i64> d(r, 0);
    d[k - 1] = 1;
    return d;
}

// (2^(r-2), ..., 4, 2, 1, 1)
std::vector<i64> b_spin_grading(int r)
{
    std::vector<i64> n(r, 1);
    for (int i = 0; i < r - 2; ++i)
        n[i] = i64(1) << (r - 2 - i);
    return n;
}

// (2^(r-3), ..., 2, 1, 1, 1)
std::vector<i64> d_even_spin_grading(int r)
{
    std::vector<i64> n(r, 1);
    for (int i = 0; i < r - 3; ++i)
        n[i] = i64(1) << (r - 3 - i);
    return n;
}

// (2^(r-2), ..., 4, 2, a, b) with (a,b) = (1,3) for the last node, (3,1) for
// the second-to-last.
std::vector<i64> d_odd_spin_grading(int r, bool last_node)
{
    std::vector<i64> n(r, 1);
    for (int i = 0; i < r - 2; ++i)
        n[i] = i64(1) << (r - 2 - i);
    n[r - 2] = last_node ? 1 : 3;
    n[r - 1] = last_node ? 3 : 1;
    return n;
}

std::vector<i64> reversed(std::vector<i64> v)
{
    std::reverse(v.begin(), v.end());
    return v;
}

} // namespace

std::vector<TableCase> golden_tables(const Limits& limits)
{
    std::vector<TableCase> cases;
    const int R = limits.rank_ceiling;

    auto search_case = [&](std::string id, std::string sub, Family f, int rank,
                           std::vector<std::vector<i64>> selection,
                           std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expected,
                           bool typo = false) {
        TableCase c;
        c.table_id = std::move(id);
        c.subcase = std::move(sub);
        c.kind = TableCase::Kind::SearchSet;
        c.type = LieType::make(f, rank);
        c.selection = std::move(selection);
        c.expected = std::move(expected);
        c.paper_typo = typo;
        cases.push_back(std::move(c));
    };

    // --- symplectic algebras ---------------------------------------------
    for (int r = 2; r <= R; ++r) {
        std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expected{
            {fund(r, 1), ones(r)}};
        if (r == 2)
            expected.push_back({fund(2, 2), {1, 1}});
        if (r == 3)
            expected.push_back({fund(3, 3), {3, 1, 1}});
        search_case("T:C(a)", "r=" + std::to_string(r), Family::C, r, {}, std::move(expected));
    }
    search_case("T:C(b)", "r=2", Family::C, 2, {fund(2, 2)}, {{fund(2, 2), {1, 1}}});
    search_case("T:C(c)", "r=3", Family::C, 3, {fund(3, 3)}, {{fund(3, 3), {3, 1, 1}}},
                /*typo=*/true);

    // --- odd orthogonal algebras ------------------------------------------
    for (int r = 2; r <= R; ++r)
        search_case("T:B(a)", "r=" + std::to_string(r), Family::B, r, {fund(r, 1)},
                    {{fund(r, 1), ones(r)}});
    for (int r = 2; r <= R; ++r) {
        std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expected;
        if ((r - 2) * (r - 1) % 4 == 0)
            expected.push_back({fund(r, r), b_spin_grading(r)});
        search_case("T:B(b)", "r=" + std::to_string(r), Family::B, r, {fund(r, r)},
                    std::move(expected));
    }
    {
        const Structure labels[4] = {Structure::Real, Structure::Quaternionic,
                                     Structure::Quaternionic, Structure::Real};
        for (int r = 2; r <= 5; ++r) {
            TableCase c;
            c.table_id = "eg:spinodd";
            c.subcase = "r=" + std::to_string(r);
            c.kind = TableCase::Kind::StructureLabel;
            c.type = LieType::make(Family::B, r);
            c.mu = fund(r, r);
            c.grading = b_spin_grading(r);
            c.expected_structure = labels[r - 2];
            cases.push_back(std::move(c));
        }
    }

    // --- even orthogonal algebras ------------------------------------------
    for (int r = 4; r <= R; ++r)
        search_case("T:D(std)", "r=" + std::to_string(r), Family::D, r, {fund(r, 1)}, {});
    for (int r = 4; r <= R; r += 2) {
        std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expected;
        if ((r - 3) * (r - 2) % 4 == 0) {
            expected.push_back({fund(r, r - 1), d_even_spin_grading(r)});
            expected.push_back({fund(r, r), d_even_spin_grading(r)});
        }
        search_case("T:D(a)", "r=" + std::to_string(r), Family::D, r,
                    {fund(r, r - 1), fund(r, r)}, std::move(expected));
    }
    for (int r = 5; r <= R; r += 2)
        search_case("T:D(b)", "r=" + std::to_string(r), Family::D, r,
                    {fund(r, r - 1), fund(r, r)},
                    {{fund(r, r - 1), d_odd_spin_grading(r, false)},
                     {fund(r, r), d_odd_spin_grading(r, true)}});
    for (int r = 4; r <= R; ++r) {
        for (int variant = 0; variant < 2; ++variant) {
            TableCase c;
            c.table_id = "E:Dstd";
            c.subcase = "r=" + std::to_string(r) + (variant ? " n=(1..1,2,1)" : " n=(1..1,1,2)");
            c.kind = TableCase::Kind::ReportH;
            c.type = LieType::make(Family::D, r);
            c.mu = fund(r, 1);
            c.grading = ones(r);
            c.grading[variant ? r - 2 : r - 1] = 2;
            c.doubled = true;
            c.expected_h.assign(2 * r, 2);
            c.expected_structure = Structure::Quaternionic;
            c.expected_reason = Reason::QuaternionicSelfDual;
            cases.push_back(std::move(c));
        }
    }

    // --- exceptional algebras ----------------------------------------------
    search_case("T:E(e6)", "e6", Family::E, 6, {fund(6, 1), fund(6, 6)}, {});
    search_case("T:E(e7)", "e7", Family::E, 7, {fund(7, 7)}, {});
    search_case("T:G2", "g2", Family::G, 2, {}, {{fund(2, 1), {1, 1}}});
    for (int r : {8, 4}) {
        TableCase c;
        c.table_id = "C:E8F4";
        c.subcase = r == 8 ? "e8" : "f4";
        c.kind = TableCase::Kind::CatalogEmpty;
        c.type = LieType::make(r == 8 ? Family::E : Family::F, r);
        cases.push_back(std::move(c));
    }

    // --- special linear algebras ------------------------------------------
    {
        std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expected;
        for (int a = 1; a <= limits.sym_degree_ceiling; ++a)
            expected.push_back({{a}, {1}});
        search_case("P:rank1", "sym:*", Family::A, 1, {}, std::move(expected));
    }
    search_case("P:rank3", "catalog", Family::A, 3, {},
                {{fund(3, 1), {3, 2, 1}}, {fund(3, 3), {1, 2, 3}}});
    for (int variant = 0; variant < 2; ++variant) {
        TableCase c;
        c.table_id = "E:ext5";
        c.subcase = variant ? "n=(2,1,1)" : "n=(1,1,2)";
        c.kind = TableCase::Kind::ReportH;
        c.type = LieType::make(Family::A, 3);
        c.mu = fund(3, 2);
        c.grading = variant ? std::vector<i64>{2, 1, 1} : std::vector<i64>{1, 1, 2};
        c.doubled = true;
        c.expected_h.assign(6, 2);
        c.expected_structure = Structure::Quaternionic;
        c.expected_reason = Reason::QuaternionicSelfDual;
        cases.push_back(std::move(c));
    }
    search_case("P:rank5", "catalog", Family::A, 5, {},
                {{fund(5, 1), {2, 4, 1, 1, 2}},
                 {fund(5, 3), {3, 2, 1, 1, 7}},
                 {fund(5, 3), {7, 1, 1, 2, 3}},
                 {fund(5, 5), {2, 1, 1, 4, 2}}});

    const std::vector<std::vector<i64>> rank7 = {
        {1, 5, 1, 3, 1, 1, 1},
        {2, 3, 2, 2, 2, 1, 2},
        {3, 1, 3, 2, 1, 3, 1},
        {3, 2, 1, 2, 3, 2, 1},
    };
    const std::vector<std::vector<i64>> rank9 = {
        {1, 2, 6, 2, 1, 1, 1, 1, 2}, {1, 3, 4, 2, 2, 1, 1, 2, 1},
        {1, 4, 2, 3, 1, 2, 2, 1, 1}, {2, 1, 5, 2, 2, 1, 1, 1, 3},
        {2, 2, 3, 3, 1, 2, 1, 2, 2}, {2, 3, 1, 4, 1, 1, 3, 1, 2},
        {2, 4, 1, 1, 1, 5, 1, 1, 2}, {3, 1, 2, 4, 1, 1, 2, 3, 1},
        {3, 2, 2, 1, 1, 4, 2, 2, 1}, {4, 1, 1, 2, 1, 3, 4, 1, 1},
    };
    auto aeg = [&](const std::string& id, int r, const std::vector<std::vector<i64>>& tuples) {
        std::vector<std::pair<std::vector<i64>, std::vector<i64>>> expect_std, expect_dual;
        for (const auto& t : tuples) {
            expect_std.push_back({fund(r, 1), t});
            expect_dual.push_back({fund(r, r), reversed(t)});
        }
        search_case(id, "mu=w1", Family::A, r, {fund(r, 1)}, std::move(expect_std));
        search_case(id, "mu=w" + std::to_string(r) + " (dual)", Family::A, r, {fund(r, r)},
                    std::move(expect_dual));
    };
    aeg("S:Aeg-rank7", 7, rank7);
    aeg("S:Aeg-rank9", 9, rank9);

    return cases;
}

std::vector<std::string> golden_table_ids(const Limits& limits)
{
    std::vector<std::string> ids;
    for (const auto& c : golden_tables(limits))
        if (std::find(ids.begin(), ids.end(), c.table_id) == ids.end())
            ids.push_back(c.table_id);
    return ids;
}

namespace {

std::string render_vec(const std::vector<i64>& v, char open = '(', char close = ')')
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << close;
    return os.str();
}

std::string render_solution(const std::vector<i64>& mu, const std::vector<i64>& n)
{
    return "mu=" + render_vec(mu, '[', ']') + " n=" + render_vec(n);
}

CaseResult run_search_case(const TableCase& c, const SearchOptions& opts, WeightStore& store)
{
    CaseResult res;
    res.table_id = c.table_id;
    res.subcase = c.subcase;
    res.paper_typo = c.paper_typo;

    auto rs = RootSystem::build_shared(c.type, opts.limits.rank_ceiling);
    std::vector<MFCatalogEntry> targets;
    if (c.selection.empty()) {
        targets = mf_catalog(*rs, opts.limits);
    } else {
        auto catalog = mf_catalog(*rs, opts.limits);
        for (const auto& dyn : c.selection) {
            auto it = std::find_if(catalog.begin(), catalog.end(), [&](const MFCatalogEntry& e) {
                return e.highest_weight.dynkin == dyn;
            });
            if (it != catalog.end()) {
                targets.push_back(*it);
            } else {
                MFCatalogEntry e;
                e.lie_type = c.type;
                e.highest_weight = rs->weight_from_dynkin(dyn);
                e.label = "mu";
                e.self_dual = rs->is_self_dual(e.highest_weight);
                targets.push_back(std::move(e));
            }
        }
    }

    SearchOptions entry_opts = opts;
    entry_opts.store = &store;
    entry_opts.threads = 1; // parallelism lives at the case level
    auto found = search_principal(rs, targets, entry_opts);

    std::set<std::pair<std::vector<i64>, std::vector<i64>>> found_set, expected_set;
    for (const auto& s : found)
        found_set.insert({s.mu.dynkin, s.n.n});
    for (const auto& e : c.expected)
        expected_set.insert(e);

    for (const auto& f : found_set)
        res.found.push_back(render_solution(f.first, f.second));
    for (const auto& e : expected_set)
        res.expected.push_back(render_solution(e.first, e.second));
    for (const auto& e : expected_set)
        if (!found_set.count(e))
            res.missing.push_back(render_solution(e.first, e.second));
    for (const auto& f : found_set)
        if (!expected_set.count(f))
            res.extra.push_back(render_solution(f.first, f.second));
    res.pass = res.missing.empty() && res.extra.empty();
    if (!res.pass)
        res.message = std::to_string(res.missing.size()) + " missing, " +
                      std::to_string(res.extra.size()) + " extra";
    return res;
}

CaseResult run_report_case(const TableCase& c, const SearchOptions& opts, WeightStore& store)
{
    CaseResult res;
    res.table_id = c.table_id;
    res.subcase = c.subcase;
    res.paper_typo = c.paper_typo;

    auto rs = RootSystem::build_shared(c.type, opts.limits.rank_ceiling);
    Weight mu = rs->weight_from_dynkin(c.mu);
    GradingElement g{c.grading};
    auto ws = store.get(rs, mu);

    bool self_dual = rs->is_self_dual(mu);
    Pairing report_pairing = (c.doubled || !self_dual) ? Pairing::ComplexPair
                                                       : Pairing::SelfDualSingle;
    ModuleSpec report_spec = ModuleSpec::make(rs, mu, report_pairing);

    res.pass = true;
    if (c.kind == TableCase::Kind::ReportH) {
        EigenReport rep = eigen_report(report_spec, g, *ws);
        std::ostringstream fs, es;
        fs << "h=" << render_vec(rep.hodge_numbers);
        es << "h=" << render_vec(c.expected_h);
        res.found.push_back(fs.str());
        res.expected.push_back(es.str());
        if (rep.hodge_numbers != c.expected_h || !rep.uniform_spacing)
            res.pass = false;

        if (c.expected_reason) {
            // the plain (undoubled) spec must fail the principal test for
            // exactly the expected reason
            Pairing plain = self_dual ? Pairing::SelfDualSingle : Pairing::ComplexPair;
            Verdict v = is_principal(ModuleSpec::make(rs, mu, plain), g, *ws);
            std::string got = v.principal ? "principal" : to_string(*v.reason);
            res.found.push_back("verdict=" + got);
            res.expected.push_back("verdict=" + to_string(*c.expected_reason));
            if (v.principal || v.reason != *c.expected_reason)
                res.pass = false;
        }
    }
    if (c.expected_structure) {
        Structure s = rcq_structure(report_spec, g);
        res.found.push_back("structure=" + to_string(s));
        res.expected.push_back("structure=" + to_string(*c.expected_structure));
        if (s != *c.expected_structure)
            res.pass = false;
    }
    if (!res.pass)
        res.message = "report mismatch";
    return res;
}

CaseResult run_catalog_case(const TableCase& c, const SearchOptions& opts)
{
    CaseResult res;
    res.table_id = c.table_id;
    res.subcase = c.subcase;

    auto rs = RootSystem::build_shared(c.type, opts.limits.rank_ceiling);
    auto catalog = mf_catalog(*rs, opts.limits);
    res.expected.push_back("catalog empty");
    if (catalog.empty()) {
        res.found.push_back("catalog empty");
        res.pass = true;
    } else {
        for (const auto& e : catalog)
            res.found.push_back(e.label);
        res.pass = false;
        res.message = "catalog is not empty";
    }
    return res;
}

CaseResult run_case(const TableCase& c, const SearchOptions& opts, WeightStore& store)
{
    switch (c.kind) {
    case TableCase::Kind::SearchSet:
        return run_search_case(c, opts, store);
    case TableCase::Kind::ReportH:
    case TableCase::Kind::StructureLabel:
        return run_report_case(c, opts, store);
    case TableCase::Kind::CatalogEmpty:
        return run_catalog_case(c, opts);
    }
    throw std::logic_error("unknown table kind");
}

} // namespace

VerifyReport verify_tables(const std::vector<std::string>& scopes, const SearchOptions& opts)
{
    auto cases = golden_tables(opts.limits);

    std::vector<const TableCase*> selected;
    bool all = scopes.empty();
    for (const auto& s : scopes)
        if (s == "all")
            all = true;
    if (all) {
        for (const auto& c : cases)
            selected.push_back(&c);
    } else {
        for (const auto& s : scopes) {
            bool matched = false;
            for (const auto& c : cases)
                if (c.table_id == s || c.table_id.rfind(s, 0) == 0) {
                    selected.push_back(&c);
                    matched = true;
                }
            if (!matched)
                throw config_error("unknown table id '" + s + "'");
        }
    }

    std::unique_ptr<WeightStore> local_store;
    WeightStore* store = opts.store;
    if (!store) {
        local_store = std::make_unique<WeightStore>(opts.limits);
        store = local_store.get();
    }

    VerifyReport report;
    report.cases.resize(selected.size());

    int threads = opts.threads;
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(selected.size())));

    if (threads <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            report.cases[i] = run_case(*selected[i], opts, *store);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= selected.size())
                    return;
                report.cases[i] = run_case(*selected[i], opts, *store);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return report;
}

std::string render_report_text(const VerifyReport& report)
{
    // group subcases per table id, preserving order
    std::vector<std::string> ids;
    std::map<std::string, std::vector<const CaseResult*>> grouped;
    for (const auto& c : report.cases) {
        if (!grouped.count(c.table_id))
            ids.push_back(c.table_id);
        grouped[c.table_id].push_back(&c);
    }

    std::ostringstream os;
    std::size_t pass_tables = 0;
    for (const auto& id : ids) {
        const auto& group = grouped[id];
        bool pass = std::all_of(group.begin(), group.end(),
                                [](const CaseResult* c) { return c->pass; });
        bool typo = std::any_of(group.begin(), group.end(),
                                [](const CaseResult* c) { return c->paper_typo; });
        os << (pass ? "PASS" : "FAIL") << ' ' << id << " [" << group.size()
           << (group.size() == 1 ? " case]" : " cases]");
        if (typo)
            os << " (paper_typo)";
        os << '\n';
        if (pass)
            ++pass_tables;
        for (const CaseResult* c : group) {
            if (c->pass)
                continue;
            os << "  FAIL " << c->subcase << ": " << c->message << '\n';
            for (const auto& m : c->missing)
                os << "    missing  " << m << '\n';
            for (const auto& e : c->extra)
                os << "    extra    " << e << '\n';
            if (c->missing.empty() && c->extra.empty()) {
                for (const auto& f : c->found)
                    os << "    found    " << f << '\n';
                for (const auto& e : c->expected)
                    os << "    expected " << e << '\n';
            }
        }
    }
    os << pass_tables << '/' << ids.size() << " tables pass, " << report.cases.size()
       << " cases total\n";
    return os.str();
}

std::string render_report_json(const VerifyReport& report)
{
    Json tables = Json::array();
    for (const auto& c : report.cases) {
        Json t;
        t["id"] = c.table_id;
        t["subcase"] = c.subcase;
        t["status"] = c.pass ? "PASS" : "FAIL";
        if (c.paper_typo)
            t["paper_typo"] = true;
        t["found"] = c.found;
        t["expected"] = c.expected;
        t["missing"] = c.missing;
        t["extra"] = c.extra;
        tables.push_back(std::move(t));
    }
    Json root;
    root["tables"] = std::move(tables);
    std::size_t fails = 0;
    for (const auto& c : report.cases)
        if (!c.pass)
            ++fails;
    root["case_count"] = report.cases.size();
    root["fail_count"] = fails;
    return root.dump(2) + "\n";
}

} // namespace hodge
