#include "allz/paper_fixtures.hpp"

#include "allz/period_oracle.hpp"
#include "allz/strategies.hpp"

#include <exception>
#include <sstream>

namespace allz {

namespace {

const std::vector<FailureFixture> kFixtures = {
    // random a
    {7, 2540107, 1316667, 27, {3}, false},
    {7, 3622301, 3622300, 2, {2}, false},
    {7, 3825407, 3012304, 46, {2, 23}, false},
    {7, 4436533, 1986154, 108, {2, 3}, false},
    {8, 53948449, 25036489, 8, {2}, false},
    // perfect-square a
    {7, 1148743, 87025, 21, {3, 7}, true},
    {7, 1279903, 49729, 39, {3, 13}, true},
    {7, 1406371, 36, 15, {3, 5}, true},
    {7, 1406371, 1296, 15, {3, 5}, true},
    {7, 1406371, 46656, 5, {5}, true},
    {7, 1619953, 248004, 24, {2, 3}, true},
    {7, 1896283, 91204, 51, {3, 17}, true},
    {8, 10995631, 30976, 15, {3, 5}, true},
};

std::string join(const std::vector<Nat>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    return out.str();
}

}  // namespace

std::span<const FailureFixture> failure_fixtures() { return kFixtures; }

FixtureCheck check_fixture(const FailureFixture& fixture) {
    FixtureCheck check;
    check.fixture = &fixture;
    try {
        const PeriodRecord period = multiplicative_order(fixture.a, fixture.n);
        check.computed_r = period.order;
        const FactorOutcome outcome = all_z(fixture.n, fixture.a, period);
        check.failed_as_expected = !outcome.succeeded();
        for (const auto& attempt : outcome.attempts) {
            if (attempt.kind == AttemptKind::divisor && !attempt.found())
                check.computed_fail_factors.push_back(*attempt.divisor_z);
            if (attempt.kind == AttemptKind::fallback) check.computed_fallback = true;
        }
    } catch (const std::exception& e) {
        check.detail = e.what();
        return check;
    }
    std::ostringstream why;
    if (check.computed_r != fixture.expected_r)
        why << "order " << check.computed_r << " != " << fixture.expected_r << "; ";
    if (!check.failed_as_expected) why << "all_z found a factor; ";
    if (check.computed_fail_factors != fixture.expected_fail_factors)
        why << "fail factors {" << join(check.computed_fail_factors) << "} != {"
            << join(fixture.expected_fail_factors) << "}; ";
    if (check.computed_fallback != fixture.expects_fallback) why << "fallback mismatch; ";
    check.detail = why.str();
    check.passed = check.detail.empty();
    return check;
}

}  // namespace allz
