#include "hodge/store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

namespace hodge {

namespace fs = std::filesystem;

WeightStore::WeightStore(Limits limits, std::optional<fs::path> dir)
    : limits_(limits), dir_(std::move(dir))
{
    if (dir_)
        fs::create_directories(*dir_);
}

std::string WeightStore::key_of(const LieType& t, const Weight& mu)
{
    std::ostringstream os;
    os << t.name() << '_';
    for (std::size_t i = 0; i < mu.dynkin.size(); ++i)
        os << (i ? "-" : "") << mu.dynkin[i];
    return os.str();
}

std::shared_ptr<const WeightSystem> WeightStore::get(std::shared_ptr<const RootSystem> rs,
                                                     const Weight& mu)
{
    const std::string key = key_of(rs->type(), mu);
    {
        std::shared_lock lock(mutex_);
        auto it = mem_.find(key);
        if (it != mem_.end())
            return it->second;
    }

    std::shared_ptr<const WeightSystem> ws;
    if (dir_) {
        fs::path file = *dir_ / (key + ".ws");
        if (fs::exists(file)) {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            ws = std::make_shared<const WeightSystem>(from_cache_text(*rs, buf.str()));
        }
    }
    if (!ws)
        ws = std::make_shared<const WeightSystem>(weight_system(*rs, mu, limits_));

    if (dir_) {
        fs::path file = *dir_ / (key + ".ws");
        if (!fs::exists(file)) {
            fs::path tmp = *dir_ / (key + ".ws.tmp");
            std::ofstream out(tmp);
            out << to_cache_text(rs->type(), *ws);
            out.close();
            std::error_code ec;
            fs::rename(tmp, file, ec); // best effort
        }
    }

    std::unique_lock lock(mutex_);
    auto [it, inserted] = mem_.emplace(key, std::move(ws));
    return it->second;
}

std::vector<std::string> WeightStore::disk_entries() const
{
    std::vector<std::string> out;
    if (!dir_ || !fs::exists(*dir_))
        return out;
    for (const auto& e : fs::directory_iterator(*dir_))
        if (e.path().extension() == ".ws")
            out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t WeightStore::clear_disk()
{
    std::size_t removed = 0;
    if (!dir_ || !fs::exists(*dir_))
        return removed;
    for (const auto& e : fs::directory_iterator(*dir_))
        if (e.path().extension() == ".ws") {
            std::error_code ec;
            if (fs::remove(e.path(), ec))
                ++removed;
        }
    return removed;
}

} // namespace hodge
