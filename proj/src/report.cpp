#include "exkat/report.hpp"

#include <sstream>

namespace exkat {

const char* to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotRefuted: return "not-refuted";
    case Status::Unsupported: return "unsupported";
    }
    return "?";
}

const char* tool_version() { return EXKAT_VERSION; }

std::size_t Report::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
}

int Report::exit_code() const {
    if (count(Status::Fail)) return 1;
    if (count(Status::Unsupported)) return 2;
    return 0;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "report-v1";
    j["tool"] = "exkat";
    j["version"] = tool_version();
    j["command"] = command;
    j["seed"] = seed;
    auto& in = j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& [label, digest] : inputs) in.push_back({{"label", label}, {"digest", digest}});
    auto& cs = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        cs.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"witness", c.witness}});
    j["summary"] = {{"total", checks.size()},
                    {"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"not-refuted", count(Status::NotRefuted)},
                    {"unsupported", count(Status::Unsupported)}};
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "exkat " << tool_version() << "  " << command << "  seed " << seed << "\n";
    for (const auto& [label, digest] : inputs) os << "input " << label << " " << digest << "\n";
    for (const auto& c : checks) {
        os << to_string(c.status) << "  " << c.id << "  (" << c.anchor << ")";
        if (!c.witness.empty()) os << "  " << c.witness.dump();
        os << "\n";
    }
    os << "total " << checks.size() << ", pass " << count(Status::Pass) << ", fail " << count(Status::Fail)
       << ", not-refuted " << count(Status::NotRefuted) << ", unsupported " << count(Status::Unsupported) << "\n";
    return os.str();
}

} // namespace exkat
