#include "hodge/render.hpp"

#include <sstream>

#include <json.hpp>

namespace hodge {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s)
{
    if (s == "text")
        return OutputFormat::Text;
    if (s == "json")
        return OutputFormat::Json;
    if (s == "tsv")
        return OutputFormat::Tsv;
    throw config_error("unknown output format '" + s + "' (expected text, json or tsv)");
}

namespace {

std::string vec_str(const std::vector<i64>& v, char open, char close)
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << close;
    return os.str();
}

std::string tsv_vec(const std::vector<i64>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

std::string render_catalog(const RootSystem& rs, const std::vector<MFCatalogEntry>& entries,
                           OutputFormat fmt)
{
    if (fmt == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& e : entries) {
            Json j;
            j["label"] = e.label;
            j["mu"] = e.highest_weight.dynkin;
            j["dim"] = weyl_dim(rs, e.highest_weight);
            j["self_dual"] = e.self_dual;
            arr.push_back(std::move(j));
        }
        Json root;
        root["type"] = rs.type().name();
        root["entries"] = std::move(arr);
        return root.dump(2) + "\n";
    }

    std::ostringstream os;
    if (fmt == OutputFormat::Tsv) {
        os << "label\tmu\tdim\tself_dual\n";
        for (const auto& e : entries)
            os << e.label << '\t' << tsv_vec(e.highest_weight.dynkin) << '\t'
               << weyl_dim(rs, e.highest_weight) << '\t' << (e.self_dual ? 1 : 0) << '\n';
        return os.str();
    }

    os << "weight multiplicity-free catalog for " << rs.type().name() << ":\n";
    if (entries.empty())
        os << "  (empty)\n";
    for (const auto& e : entries)
        os << "  " << e.label << "  mu=" << vec_str(e.highest_weight.dynkin, '[', ']')
           << "  dim=" << weyl_dim(rs, e.highest_weight)
           << (e.self_dual ? "  self-dual" : "  dual pair") << '\n';
    return os.str();
}

std::string render_weights(const LieType& t, const WeightSystem& ws, OutputFormat fmt)
{
    if (fmt == OutputFormat::Json) {
        Json root;
        root["type"] = std::string(1, static_cast<char>(t.family));
        root["rank"] = t.rank;
        root["mu"] = ws.highest().dynkin;
        root["dim"] = ws.dimension();
        Json arr = Json::array();
        for (const auto& e : ws.entries()) {
            Json j;
            j["lowering"] = e.lowering;
            j["dynkin"] = e.dynkin;
            j["mult"] = e.mult;
            arr.push_back(std::move(j));
        }
        root["entries"] = std::move(arr);
        return root.dump(2) + "\n";
    }

    std::ostringstream os;
    if (fmt == OutputFormat::Tsv) {
        os << "lowering\tdynkin\tmult\n";
        for (const auto& e : ws.entries())
            os << tsv_vec(e.lowering) << '\t' << tsv_vec(e.dynkin) << '\t' << e.mult << '\n';
        return os.str();
    }

    os << "weight system " << t.name() << " mu=" << vec_str(ws.highest().dynkin, '[', ']')
       << " dim=" << ws.dimension() << " distinct=" << ws.distinct_weights() << '\n';
    for (const auto& e : ws.entries())
        os << "  " << vec_str(e.lowering, '(', ')') << "  " << vec_str(e.dynkin, '[', ']')
           << "  x" << e.mult << '\n';
    return os.str();
}

WeightSystem parse_weights_json(const RootSystem& rs, const std::string& json_text)
{
    Json root = Json::parse(json_text);
    if (root.at("type").get<std::string>() != std::string(1, static_cast<char>(rs.type().family)) ||
        root.at("rank").get<int>() != rs.rank())
        throw config_error("weight-system JSON does not match requested type");
    Weight mu = rs.weight_from_dynkin(root.at("mu").get<std::vector<i64>>());
    std::vector<WeightEntry> entries;
    for (const auto& j : root.at("entries")) {
        WeightEntry e;
        e.lowering = j.at("lowering").get<std::vector<i64>>();
        e.dynkin = j.at("dynkin").get<std::vector<i64>>();
        e.mult = j.at("mult").get<i64>();
        entries.push_back(std::move(e));
    }
    return WeightSystem(std::move(mu), std::move(entries));
}

std::string render_solutions(const LieType& t, const std::vector<Solution>& sols,
                             OutputFormat fmt)
{
    if (fmt == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& s : sols) {
            Json j;
            j["label"] = s.label;
            j["mu"] = s.mu.dynkin;
            j["n"] = s.n.n;
            j["m"] = {{"twice", s.m.twice}};
            j["structure"] = to_string(s.structure);
            arr.push_back(std::move(j));
        }
        Json root;
        root["type"] = t.name();
        root["solutions"] = std::move(arr);
        return root.dump(2) + "\n";
    }

    std::ostringstream os;
    if (fmt == OutputFormat::Tsv) {
        os << "label\tmu\tn\tm\tstructure\n";
        for (const auto& s : sols)
            os << s.label << '\t' << tsv_vec(s.mu.dynkin) << '\t' << tsv_vec(s.n.n) << '\t'
               << s.m.to_string() << '\t' << to_string(s.structure) << '\n';
        return os.str();
    }

    os << "principal gradings for " << t.name() << ": " << sols.size() << " solution"
       << (sols.size() == 1 ? "" : "s") << '\n';
    for (const auto& s : sols)
        os << "  " << s.label << "  mu=" << vec_str(s.mu.dynkin, '[', ']')
           << "  n=" << vec_str(s.n.n, '(', ')') << "  m=" << s.m.to_string() << "  "
           << to_string(s.structure) << '\n';
    return os.str();
}

} // namespace hodge
