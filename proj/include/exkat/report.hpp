#pragma once

// report-v1: per-check records with a status and witness data, summary
// counts, tool version, seed and input digests.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exkat {

enum class Status { Pass, Fail, NotRefuted, Unsupported };
const char* to_string(Status s);

struct CheckRecord {
    std::string id;
    std::string anchor;
    Status status = Status::Pass;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> inputs; ///< label, digest
    std::vector<CheckRecord> checks;

    std::size_t count(Status s) const;
    /// 1 if anything failed, else 2 if anything was unsupported, else 0.
    int exit_code() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

const char* tool_version();

} // namespace exkat
