#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fusion/suites.hpp"

namespace fusion {

inline constexpr int certificate_version = 1;

nlohmann::json to_json(const Entry& e);
// {version, config, entries} with entries sorted by name; a fixed config and
// seed give byte-identical output as long as timing is off.
nlohmann::json certificate(const nlohmann::json& config, std::vector<Entry> entries);
std::string dump_certificate(const nlohmann::json& cert);

// FNV-1a over the sorted (row, col, value) triples.
std::string operator_hash(const SparseOperator& a);
nlohmann::json operator_json(const SparseOperator& a);

}  // namespace fusion
