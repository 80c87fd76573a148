#ifndef FORESTCOL_ENGINE_HPP
#define FORESTCOL_ENGINE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forestcol/coloring.hpp"
#include "forestcol/graph.hpp"
#include "forestcol/solver.hpp"

namespace forestcol {

/// Raised when a proof-guaranteed step fails at runtime (a surgery whose
/// hypothesis guard trips, a base case with no coloring, a case-5/7
/// candidate pair where neither passes). Indicates a bug or bypassed
/// preconditions, never a property of valid input.
struct EngineInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CaseRecord {
    int case_id{0};                 // 1..7
    int depth{0};
    std::int64_t recursion_size{0}; // n + e of the graph the case fired on
    int flips{0};                   // repair moves applied while extending
    std::string detail;
};

struct CaseTrace {
    std::vector<CaseRecord> records;

    bool contains_case(int id) const {
        for (const CaseRecord& r : records)
            if (r.case_id == id) return true;
        return false;
    }
};

struct EngineOptions {
    /// Re-verify child colorings, guard every recursion with
    /// check_hypothesis, and check the case-2 bridge property. Throws
    /// EngineInvariantError on any failure. Costly; meant for tests.
    bool paranoid{false};
};

enum class ColorStatus { ok, hypothesis_violation, regime_violation };

struct ColorResult {
    ColorStatus status{ColorStatus::ok};
    Coloring coloring;
    CaseTrace trace;
    std::optional<SubsetResult> witness;  // set on hypothesis_violation

    bool ok() const { return status == ColorStatus::ok; }
};

/// The recursive algorithm: dispatches cases 1..7 in order, first match
/// fires, recurses on a strictly smaller surgered graph and extends the
/// returned coloring. Requires d2 >= 2*d1 + 2 and the potential hypothesis;
/// violations are reported in the result, not thrown.
ColorResult color(const WeightedMultigraph& g, const EngineOptions& opts = {});

}  // namespace forestcol

#endif
