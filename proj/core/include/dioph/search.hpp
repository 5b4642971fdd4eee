#pragma once

/**
 * @file search.hpp
 * @brief Bounded exhaustive search over the case equations and the master
 * equation.
 *
 * Results come back canonical, deduplicated and sorted, so the output is the
 * same for any worker count.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dioph/equation.hpp"

namespace dioph {

struct SearchConfig {
    /// nullopt searches the master equation.
    std::optional<CaseId> case_id;
    /// Inclusive upper bound on every exponent.
    std::uint64_t bound = 12;
    std::size_t workers = 1;
};

/// Every binding of cfg.case_id with all variables <= bound whose instance
/// holds, reduced to its canonical_instance and sorted.
std::vector<CaseInstance> search_case(const SearchConfig& cfg);

struct MasterSolution {
    ExponentTuple tuple; // normalized, then canonical_form
    CaseInstance instance;
    friend auto operator<=>(const MasterSolution&, const MasterSolution&) = default;
};

/// Every holding tuple with entries <= bound, normalized, canonicalized,
/// deduplicated and classified, sorted by tuple.
std::vector<MasterSolution> search_master(const SearchConfig& cfg);

} // namespace dioph
