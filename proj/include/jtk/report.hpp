#pragma once
// report.hpp -- check bookkeeping and serialization: residual size
// summaries, per-check results with descriptive anchors, whole-suite
// reports, and exact JSON round-trips for matrices and series (all
// rationals as "num/den" strings, so nothing is lost to floating point).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jtk/pmatrix.hpp"
#include "jtk/wseries.hpp"

namespace jtk {

using json = nlohmann::ordered_json;

// Size summary of a residual matrix.
struct ResidualSummary {
    int max_h_degree = -1;   // -1 for the zero matrix
    int nonzero_entries = 0;
};

ResidualSummary summarize_residual(const PolyMatrix& m);

struct CheckResult {
    std::string id;
    std::string anchor;   // which claim this check certifies, in words
    bool pass = false;
    std::string detail;
    std::optional<PolyMatrix> residual;
};

struct CheckReport {
    std::string suite;
    std::string map;
    std::vector<int> spins;   // the two_j values exercised
    std::vector<CheckResult> checks;

    bool verdict() const;   // true iff every check passed
};

// Exact matrix serialization: {"rows", "cols", "entries"} where
// entries[i][j] lists the nonzero terms of the entry as [power,
// "num/den"] pairs in ascending power order.
json matrix_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

// Exact series serialization: {"order", "coeffs"} with one string per
// degree 0..order-1.
json series_json(const WSeries& s);
WSeries series_from_json(const json& j);

json report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);

} // namespace jtk
