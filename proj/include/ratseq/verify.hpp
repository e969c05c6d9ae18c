#pragma once

#include "ratseq/enumerate.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ratseq {

/// First failing instance of a suite, captured with enough context to replay
/// it by hand.
struct Counterexample {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::int64_t checked = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

/// Scan bounds per suite. The defaults are the full desk-scale profile; the
/// quick profile trims everything to fit comfortably in CI.
struct SuiteBounds {
    int sb_max_order = 16;
    int cw_max_depth = 16;
    std::int64_t farey_max_order = 300;
    std::int64_t stern_max_index = std::int64_t{1} << 12;
    std::int64_t hyperbinary_max = 4096;
    std::int64_t coeff_max_index = std::int64_t{1} << 20;
    std::int64_t mediant_window = 50;
    std::int64_t path_max = 200;

    static SuiteBounds quick();
    static SuiteBounds full();
};

/// Kernel seams consulted by the suites. production() wires the real
/// implementations; tests substitute tampered kernels to prove the harness
/// actually catches a broken one.
struct SuiteHooks {
    std::function<SbRow(int)> sb_row;
    std::function<std::vector<Fraction>(int)> cw_row;
    std::function<Fraction(const Fraction&, const Fraction&)> mediant;

    static SuiteHooks production();
};

/// Suite identifiers in their fixed execution order.
const std::vector<std::string>& suite_names();

/// Runs one suite by name. Scans in index order and captures the first
/// counterexample; an exception escaping a kernel is reported as a failure,
/// not rethrown. Unknown names throw std::invalid_argument.
VerificationReport run_suite(const std::string& name, const SuiteBounds& bounds,
                             const SuiteHooks& hooks = SuiteHooks::production());

enum class Profile { quick, full };

SuiteBounds bounds_for(Profile profile);

/// Runs every suite under the profile's bounds. Individual failures are
/// reported, never thrown.
std::vector<VerificationReport> run_all(Profile profile,
                                        const SuiteHooks& hooks = SuiteHooks::production());

/// One line per report: suite, checked, passed, and the counterexample
/// fields when present.
std::string format_report(const VerificationReport& report);

} // namespace ratseq
