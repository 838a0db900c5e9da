#pragma once

// Published All-z failure cases at 7 and 8 digits: five with random bases and
// eight with perfect-square bases.

#include "allz/numtheory.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace allz {

struct FailureFixture {
    int digits;
    Nat n;
    Nat a;
    Nat expected_r;
    std::vector<Nat> expected_fail_factors;
    bool expects_fallback;
};

std::span<const FailureFixture> failure_fixtures();

struct FixtureCheck {
    const FailureFixture* fixture = nullptr;
    Nat computed_r = 0;
    std::vector<Nat> computed_fail_factors;
    bool computed_fallback = false;
    bool failed_as_expected = false;
    bool passed = false;
    std::string detail;
};

/// Recomputes the order with the oracle and replays all_z on one row.
FixtureCheck check_fixture(const FailureFixture& fixture);

}  // namespace allz
