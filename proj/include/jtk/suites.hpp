#pragma once
// suites.hpp -- named verification suites assembled from the library's
// check operations.  Every suite runs strictly serially and
// deterministically, producing a CheckReport whose check order is the
// execution order.

#include <array>
#include <string>
#include <vector>

#include "jtk/maps.hpp"
#include "jtk/report.hpp"

namespace jtk {

struct SuiteOptions {
    MapSpec map;
    std::vector<int> singles;                  // two_j values
    std::vector<std::array<int, 2>> pairs;     // two_j pairs, first <= second
    std::vector<std::array<int, 3>> triples;   // two_j triples, ascending
    int order = 8;                             // series order for scalar checks
    // Development hook (not exposed on the command line): zero out the
    // twist's companion series to confirm the gates catch it.
    bool sabotage_zero_mu = false;
};

SuiteOptions default_suite_options(const MapSpec& map);

// The individual suite names, in canonical execution order ("all" runs
// them all and is accepted by run_suite but not listed here).
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

CheckReport run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace jtk
