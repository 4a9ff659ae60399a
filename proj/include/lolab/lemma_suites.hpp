#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lolab {

struct SuiteResult {
    std::string name;
    std::uint64_t trials{0};
    std::uint64_t violations{0};
    double worst_margin{0.0};  // most negative slack seen (<= 0 when clean)
};

/// Seeded randomized checks of the geometric lemmas:
/// circle_order, refinement, obtuse_chord, three_point_set, kite_exists,
/// geometry_claim, trig_identity, plus a small iterate_identity sample.
std::vector<SuiteResult> run_lemma_suites(std::uint64_t trials, std::uint64_t seed);

}  // namespace lolab
