#pragma once

#include "hodge/search.hpp"

namespace hodge {

enum class OutputFormat { Text, Json, Tsv };

OutputFormat parse_format(const std::string& s);

std::string render_catalog(const RootSystem& rs, const std::vector<MFCatalogEntry>& entries,
                           OutputFormat fmt);

std::string render_weights(const LieType& t, const WeightSystem& ws, OutputFormat fmt);

/// Inverse of render_weights(..., Json): parsing then re-rendering is
/// byte-identical.
WeightSystem parse_weights_json(const RootSystem& rs, const std::string& json_text);

std::string render_solutions(const LieType& t, const std::vector<Solution>& sols,
                             OutputFormat fmt);

} // namespace hodge
