#pragma once

// cattable-v1 interchange format.

#include "exkat/cattable.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace exkat {

nlohmann::ordered_json table_to_json(const CatTable& t);
/// Rejects unknown keys, a field other than "Q" and malformed entries.
CatTable table_from_json(const nlohmann::json& j);

std::string dump_table(const CatTable& t, int indent = 1);
CatTable load_table_file(const std::string& path);
void save_table_file(const CatTable& t, const std::string& path);

Rational parse_rational(const nlohmann::json& v);
std::string rational_string(const Rational& q);

/// FNV-1a 64 over the compact canonical serialization.
std::uint64_t table_digest(const CatTable& t);
std::string hex64(std::uint64_t v);

} // namespace exkat
