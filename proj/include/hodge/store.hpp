#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hodge/weight_system.hpp"

namespace hodge {

/// Weight-system cache: always memoizes in memory (safe for concurrent
/// readers, single-writer inserts), optionally backed by a directory of
/// canonical text files keyed by (family, rank, dynkin vector).
class WeightStore {
public:
    explicit WeightStore(Limits limits = {},
                         std::optional<std::filesystem::path> dir = std::nullopt);

    const Limits& limits() const { return limits_; }

    std::shared_ptr<const WeightSystem> get(std::shared_ptr<const RootSystem> rs,
                                            const Weight& mu);

    static std::string key_of(const LieType& t, const Weight& mu);

    /// Cached files in the backing directory (empty if none configured).
    std::vector<std::string> disk_entries() const;
    std::size_t clear_disk();

private:
    Limits limits_;
    std::optional<std::filesystem::path> dir_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const WeightSystem>> mem_;
};

} // namespace hodge
