#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catk/vec.hpp"

namespace catk {

struct SuiteFailure {
    std::int64_t trial = 0;
    double margin = 0.0;
    std::string detail;
};

// Result of one randomized inequality driver. A leaf suite passes iff
// worst_margin >= -tolerance; a composite suite (tolerance 0) reports the
// minimum slack of its components as its worst margin.
struct SuiteReport {
    std::string name;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double worst_margin = 0.0;
    bool pass = false;
    std::vector<SuiteFailure> failures; // capped at 10 entries
    double elapsed_seconds = 0.0;
    std::vector<SuiteReport> components;
};

// sin^2(d(x1,x3)/2) against the convex split over x3 in [x2, x4];
// margin = RHS - LHS, tolerance 1e-10.
SuiteReport check_lemma_3_1(std::int64_t trials, std::uint64_t seed);

// dist(D, E) <= (sin((1-t)M)/sin M) dist(A, B) for the t-scaled triangle;
// margin = RHS - LHS, tolerance 1e-10.
SuiteReport check_lemma_3_2(std::int64_t trials, std::uint64_t seed);

// The refined four-point bound with the max{cos..., 0} middle term;
// margin = RHS - LHS, tolerance 1e-10.
SuiteReport check_lemma_3_3(std::int64_t trials, std::uint64_t seed);

// Composite: |h| <= 1 on sphere caps and on rescaled glued quadruples,
// the decomposition identity, the partition additivity identity, and the
// small-arc limit formula.
SuiteReport check_h_suite(std::int64_t trials, std::uint64_t seed);

SuiteReport run_suite(const std::string& name, std::int64_t trials, std::uint64_t seed);

std::vector<std::string> suite_names();

namespace detail {

// Sign mutation hooks for the self-test that a broken inequality is caught.
enum class Mutation { none, flipped };

SuiteReport lemma_3_1_impl(std::int64_t trials, std::uint64_t seed, Mutation m);
SuiteReport lemma_3_2_impl(std::int64_t trials, std::uint64_t seed, Mutation m);
SuiteReport lemma_3_3_impl(std::int64_t trials, std::uint64_t seed, Mutation m);

} // namespace detail

} // namespace catk
