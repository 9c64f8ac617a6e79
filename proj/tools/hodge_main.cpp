// Command-line front end: catalog listing, weight-system dumps,
// principal-grading search, reference-table verification, cache maintenance.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hodge/render.hpp"
#include "hodge/tables.hpp"

using namespace hodge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GlobalConfig {
    int rank_ceiling = kDefaultRankCeiling;
    i64 dim_ceiling = 100000;
    int sym_ceiling = 64;
    std::string format = "text";
    std::string cache_dir;
    int threads = 1;

    Limits limits() const
    {
        Limits l;
        l.rank_ceiling = rank_ceiling;
        l.dim_ceiling = dim_ceiling;
        l.sym_degree_ceiling = sym_ceiling;
        return l;
    }

    SearchOptions search_options(WeightStore* store) const
    {
        SearchOptions o;
        o.limits = limits();
        o.threads = threads;
        o.store = store;
        return o;
    }

    std::unique_ptr<WeightStore> make_store() const
    {
        if (cache_dir.empty())
            return std::make_unique<WeightStore>(limits());
        return std::make_unique<WeightStore>(limits(), std::filesystem::path(cache_dir));
    }
};

std::vector<i64> parse_csv_ints(const std::string& s)
{
    std::vector<i64> out;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ',')) {
        if (token.empty())
            continue; // tolerate trailing commas
        out.push_back(std::stoll(token));
    }
    return out;
}

// Resolve a --mu argument to one or more dominant weights.  Named aliases:
// standard, spin (both spin nodes for type D), spin+, spin-, sym:<a>,
// sym*:<a>, wedge:<k>, fund:<k>; otherwise comma-separated dynkin labels.
std::vector<std::vector<i64>> parse_mu_selection(const RootSystem& rs, const std::string& spec)
{
    const int r = rs.rank();
    auto fund = [&](int k) {
        std::vector<i64> d(r, 0);
        d[k - 1] = 1;
        return d;
    };
    auto check_index = [&](int k, const std::string& what) {
        if (k < 1 || k > r)
            throw config_error(what + " index " + std::to_string(k) + " out of range 1.." +
                               std::to_string(r));
        return k;
    };

    if (spec == "standard")
        return {fund(1)};
    if (spec == "spin") {
        switch (rs.type().family) {
        case Family::B: return {fund(r)};
        case Family::D: return {fund(r - 1), fund(r)};
        default:
            throw config_error("alias 'spin' applies to families B and D only");
        }
    }
    if (spec == "spin+" || spec == "spin-") {
        if (rs.type().family != Family::D)
            throw config_error("aliases 'spin+'/'spin-' apply to family D only");
        return {fund(spec == "spin+" ? r : r - 1)};
    }
    auto with_prefix = [&](const std::string& prefix) -> std::optional<i64> {
        if (spec.rfind(prefix, 0) != 0)
            return std::nullopt;
        return std::stoll(spec.substr(prefix.size()));
    };
    if (auto a = with_prefix("sym:")) {
        if (*a < 1)
            throw config_error("sym degree must be positive");
        std::vector<i64> d(r, 0);
        d[0] = *a;
        return {d};
    }
    if (auto a = with_prefix("sym*:")) {
        if (*a < 1)
            throw config_error("sym degree must be positive");
        std::vector<i64> d(r, 0);
        d[r - 1] = *a;
        return {d};
    }
    if (auto k = with_prefix("wedge:"))
        return {fund(check_index(static_cast<int>(*k), "wedge"))};
    if (auto k = with_prefix("fund:"))
        return {fund(check_index(static_cast<int>(*k), "fundamental weight"))};

    std::vector<i64> d = parse_csv_ints(spec);
    if (static_cast<int>(d.size()) != r)
        throw config_error("--mu needs " + std::to_string(r) + " comma-separated labels, got " +
                           std::to_string(d.size()));
    return {d};
}

std::vector<MFCatalogEntry> targets_for(const RootSystem& rs,
                                        const std::vector<std::vector<i64>>& selection,
                                        const Limits& limits)
{
    auto catalog = mf_catalog(rs, limits);
    std::vector<MFCatalogEntry> targets;
    for (const auto& dyn : selection) {
        auto it = std::find_if(catalog.begin(), catalog.end(), [&](const MFCatalogEntry& e) {
            return e.highest_weight.dynkin == dyn;
        });
        if (it != catalog.end()) {
            targets.push_back(*it);
            continue;
        }
        MFCatalogEntry e;
        e.lie_type = rs.type();
        e.highest_weight = rs.weight_from_dynkin(dyn);
        e.label = "mu";
        e.self_dual = rs.is_self_dual(e.highest_weight);
        targets.push_back(std::move(e));
    }
    return targets;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact weight systems and principal grading-element classification"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global options after the subcommand name

    GlobalConfig cfg;
    app.set_config("--config", "", "read options from an INI file");
    app.add_option("--rank-ceiling", cfg.rank_ceiling, "largest supported rank")
        ->envname("HG_RANK_CEILING")
        ->check(CLI::PositiveNumber);
    app.add_option("--dim-ceiling", cfg.dim_ceiling, "largest module dimension to expand")
        ->envname("HG_DIM_CEILING")
        ->check(CLI::PositiveNumber);
    app.add_option("--sym-ceiling", cfg.sym_ceiling, "largest symmetric-power degree (type A)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format: text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--cache-dir", cfg.cache_dir, "weight-system cache directory")
        ->envname("HG_CACHE_DIR");
    app.add_option("--threads", cfg.threads, "worker threads (0 = auto)")
        ->envname("HG_THREADS");

    std::string family_arg, rank_unused;
    int rank_arg = 0;
    std::string mu_arg, scope_arg = "all";
    bool dedupe = false, both_orientations = false;
    std::string pairing_arg = "auto";

    auto* list_cmd = app.add_subcommand("list-mf", "list the weight multiplicity-free catalog");
    list_cmd->add_option("family", family_arg)->required();
    list_cmd->add_option("rank", rank_arg)->required();

    auto* weights_cmd = app.add_subcommand("weights", "print a weight system");
    weights_cmd->add_option("family", family_arg)->required();
    weights_cmd->add_option("rank", rank_arg)->required();
    weights_cmd->add_option("--mu", mu_arg, "highest weight (labels or alias)")->required();

    auto* search_cmd = app.add_subcommand("search", "search for principal grading elements");
    search_cmd->add_option("family", family_arg)->required();
    search_cmd->add_option("rank", rank_arg)->required();
    search_cmd->add_option("--mu", mu_arg, "restrict to one highest weight (default: catalog)");
    search_cmd->add_option("--pairing", pairing_arg, "auto, single or pair")
        ->check(CLI::IsMember({"auto", "single", "pair"}));
    search_cmd->add_flag("--dedupe", dedupe, "collapse duality-automorphism images");
    search_cmd->add_flag("--both-orientations", both_orientations,
                         "also report gradings where the dual weight tops out");

    auto* verify_cmd = app.add_subcommand("verify", "recompute the reference tables");
    verify_cmd->add_option("--scope", scope_arg, "all, or comma-separated table id prefixes");

    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the on-disk cache");
    auto* cache_inspect = cache_cmd->add_subcommand("inspect", "list cached weight systems");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "remove cached weight systems");
    cache_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*list_cmd) {
            auto rs = RootSystem::build_shared(
                LieType::make(parse_family(family_arg), rank_arg), cfg.rank_ceiling);
            std::cout << render_catalog(*rs, mf_catalog(*rs, cfg.limits()),
                                        parse_format(cfg.format));
        } else if (*weights_cmd) {
            auto rs = RootSystem::build_shared(
                LieType::make(parse_family(family_arg), rank_arg), cfg.rank_ceiling);
            auto selection = parse_mu_selection(*rs, mu_arg);
            auto store = cfg.make_store();
            for (const auto& dyn : selection) {
                Weight mu = rs->weight_from_dynkin(dyn);
                if (!mu.is_dominant())
                    throw config_error("--mu must be dominant (no negative labels)");
                auto ws = store->get(rs, mu);
                std::cout << render_weights(rs->type(), *ws, parse_format(cfg.format));
            }
        } else if (*search_cmd) {
            auto rs = RootSystem::build_shared(
                LieType::make(parse_family(family_arg), rank_arg), cfg.rank_ceiling);
            std::vector<MFCatalogEntry> targets;
            if (mu_arg.empty())
                targets = mf_catalog(*rs, cfg.limits());
            else
                targets = targets_for(*rs, parse_mu_selection(*rs, mu_arg), cfg.limits());
            if (pairing_arg != "auto") {
                for (auto& t : targets) {
                    bool self_dual = rs->is_self_dual(t.highest_weight);
                    if (pairing_arg == "single" && !self_dual)
                        throw config_error("--pairing single requires a self-dual weight");
                    // "pair" on a self-dual weight is the quaternionic doubling:
                    // never principal, reported as an empty search
                    t.self_dual = pairing_arg == "single";
                }
            }
            auto store = cfg.make_store();
            SearchOptions opts = cfg.search_options(store.get());
            opts.dedupe = dedupe;
            opts.canonicalize = !both_orientations;
            auto sols = search_principal(rs, targets, opts);
            std::cout << render_solutions(rs->type(), sols, parse_format(cfg.format));
        } else if (*verify_cmd) {
            std::vector<std::string> scopes;
            std::string token;
            std::istringstream is(scope_arg);
            while (std::getline(is, token, ','))
                if (!token.empty())
                    scopes.push_back(token);
            auto store = cfg.make_store();
            SearchOptions opts = cfg.search_options(store.get());
            VerifyReport report = verify_tables(scopes, opts);
            if (parse_format(cfg.format) == OutputFormat::Json)
                std::cout << render_report_json(report);
            else
                std::cout << render_report_text(report);
            return report.all_pass() ? kExitOk : kExitVerifyFail;
        } else if (*cache_cmd) {
            auto store = cfg.make_store();
            if (cfg.cache_dir.empty())
                throw config_error("cache commands need --cache-dir or HG_CACHE_DIR");
            if (*cache_inspect) {
                for (const auto& name : store->disk_entries())
                    std::cout << name << '\n';
            } else if (*cache_clear) {
                std::cout << "removed " << store->clear_disk() << " cached weight systems\n";
            }
        }
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
