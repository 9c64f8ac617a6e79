#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Invalid type/rank combination, malformed input, or unsupported request.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured ceiling (rank, dimension, degree) was exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hodge
