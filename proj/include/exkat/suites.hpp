#pragma once

// Verification suites over (table, subcategory) pairs, dispatched to a
// worker pool and assembled in input order.

#include "exkat/report.hpp"
#include "exkat/relstruct.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exkat {

struct Subject {
    std::string table_label;
    const CatTable* table = nullptr;
    Subcat x;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs fn(i) for i < n on `jobs` threads (0 = available parallelism).
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// One record per subject, or per distinct table for the engine suite.
std::vector<CheckRecord> run_suite(const std::string& suite, const std::vector<Subject>& subjects, unsigned jobs,
                                   std::uint64_t seed);

/// Three times the order of the suspension permutation: every rotation of a
/// triangle up to the sign of its third map.
int rotation_period(const CatTable& t);

/// Randomized Smith-form round trips; returns the number of failures.
std::size_t snf_property_failures(std::uint64_t seed, std::size_t samples, std::string* witness = nullptr);

} // namespace exkat
