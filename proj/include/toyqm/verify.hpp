#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace toyqm::verify {

struct CheckFailure {
    std::string check;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> info;

    bool passed() const { return failures.empty(); }
};

struct Report {
    std::vector<SuiteResult> suites;

    bool all_passed() const {
        for (const auto& s : suites)
            if (!s.passed()) return false;
        return true;
    }
};

struct Options {
    /// Expected pairing values, rows <a|..<f| by columns |a>..|f>.
    /// Injectable so a corrupted table demonstrably fails the run.
    std::array<std::array<int, 6>, 6> pairing_golden = {{
        {1, 0, 1, 1, 1, 1},
        {0, 1, 1, -1, 2, -2},
        {-2, -2, 1, 0, -1, 2},
        {-2, 2, 0, 1, 2, -1},
        {-2, -1, 2, -1, 1, 0},
        {-2, 1, -1, 2, 0, 1},
    }};

    std::int64_t mc_trials = 100000;
    std::uint64_t mc_seed = 7;
    int random_sequences = 10000;
    std::uint64_t random_seed = 99;
};

/// Runs every suite; never throws on check failures (they are recorded).
Report run_all(const Options& options = {});

void print(const Report& report, std::ostream& out);

} // namespace toyqm::verify
