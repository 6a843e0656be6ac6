#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mk {

// A stated precondition does not hold; `clause` names which one.
struct HypothesisViolation : std::runtime_error {
    std::string clause;
    explicit HypothesisViolation(const std::string& c)
        : std::runtime_error("hypothesis violation: " + c), clause(c) {}
};

// A step the underlying argument guarantees has failed on a
// hypothesis-satisfying input. Carries the claim id and an instance dump
// (serialized graph + context) so the event can be reproduced.
struct InternalAssertionFailed : std::runtime_error {
    std::string claim;
    std::string dump;
    InternalAssertionFailed(const std::string& claim_, const std::string& dump_)
        : std::runtime_error("internal assertion failed: " + claim_), claim(claim_), dump(dump_) {}
};

struct NoFatHammock : std::runtime_error {
    NoFatHammock() : std::runtime_error("every minimum-order disconnector is trivial") {}
};

struct NotNearlyLong : std::runtime_error {
    // two vertex-disjoint short cycles, when such a certificate exists
    std::vector<std::vector<int>> witness_cycles;
    explicit NotNearlyLong(std::vector<std::vector<int>> w)
        : std::runtime_error("graph is not nearly k-long"), witness_cycles(std::move(w)) {}
};

struct NotAJump : std::runtime_error {
    NotAJump() : std::runtime_error("path ends are cofacial") {}
};

struct NoCase : std::runtime_error {
    NoCase() : std::runtime_error("no classification case verified") {}
};

struct InconsistentTrichotomy : std::runtime_error {
    InconsistentTrichotomy() : std::runtime_error("no trichotomy branch verified") {}
};

}  // namespace mk
