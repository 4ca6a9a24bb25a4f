#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "charvar/pushoff.hpp"

namespace charvar {

/* A generated push-off instance together with what the generator knows about
 * it; used by property tests and the demo CLI. */
struct GeneratedProblem {
    std::string label;
    PushoffProblem problem;
    bool expect_cleared = true;
    bool already_clear = false; // f misses the obstacle from the start
};

/* Deterministic pseudo-random suite of admissible push-off problems drawn
 * from six shapes: coned-wheel 3-balls, suspension spheres, edge obstacles
 * forcing multi-step reachability, collapsed edges with vertex images,
 * 1-dimensional circle instances, and disjoint unions with an untouched
 * component.  The same seed always yields the same suite. */
std::vector<GeneratedProblem> generate_problem_suite(std::uint64_t seed, int count);

} // namespace charvar
