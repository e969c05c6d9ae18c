#include "ratseq/cli.hpp"

#include "ratseq/enumerate.hpp"
#include "ratseq/paths.hpp"
#include "ratseq/stern.hpp"
#include "ratseq/totient.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string_view>

namespace ratseq::cli {

namespace {

enum class Format { plain, csv, jsonl };

Format parse_format(const std::string& name) {
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "jsonl") {
        return Format::jsonl;
    }
    return Format::plain;
}

/// Streams enumeration records in the chosen format. The csv header and
/// jsonl keys are a stable machine-readable contract.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format, bool with_coeff)
        : out_(out), format_(format), with_coeff_(with_coeff) {
        if (format_ == Format::csv) {
            out_ << (with_coeff_ ? "index,num,den,coeff\n" : "index,num,den\n");
        }
    }

    void record(std::int64_t index, const Fraction& f, std::optional<std::int64_t> coeff) {
        switch (format_) {
        case Format::plain:
            out_ << f.str() << '\n';
            break;
        case Format::csv:
            out_ << index << ',' << f.num << ',' << f.den;
            if (with_coeff_) {
                out_ << ',';
                if (coeff) {
                    out_ << *coeff;
                }
            }
            out_ << '\n';
            break;
        case Format::jsonl:
            out_ << "{\"index\":" << index << ",\"num\":" << f.num << ",\"den\":" << f.den;
            if (with_coeff_ && coeff) {
                out_ << ",\"coeff\":" << *coeff;
            }
            out_ << "}\n";
            break;
        }
    }

private:
    std::ostream& out_;
    Format format_;
    bool with_coeff_;
};

int cmd_enumerate(const std::string& scheme, std::int64_t size, Format format, bool with_coeff,
                  const RowLimits& limits, std::ostream& out) {
    RecordWriter writer(out, format, with_coeff);
    if (scheme == "sb") {
        if (size > static_cast<std::int64_t>(std::numeric_limits<int>::max())) {
            throw limit_error("sb order out of range");
        }
        const SbRow row = sb_row(static_cast<int>(size), limits);
        for (std::size_t j = 0; j < row.entries.size(); ++j) {
            std::optional<std::int64_t> coeff;
            if (j >= 2) {
                coeff = row.coeffs[j - 2];
            }
            writer.record(static_cast<std::int64_t>(j), row.entries[j], coeff);
        }
    } else if (scheme == "cw") {
        if (size > static_cast<std::int64_t>(std::numeric_limits<int>::max())) {
            throw limit_error("cw order out of range");
        }
        const auto row = cw_row(static_cast<int>(size), limits);
        for (std::size_t t = 0; t < row.size(); ++t) {
            std::optional<std::int64_t> coeff;
            if (t >= 1) {
                coeff = step_coeff(static_cast<std::int64_t>(t));
            }
            writer.record(static_cast<std::int64_t>(t), row[t], coeff);
        }
    } else if (scheme == "cw-inf") {
        if (size < 0) {
            throw std::invalid_argument("cw-inf count must be non-negative");
        }
        CwStream stream;
        for (std::int64_t t = 0; t < size; ++t) {
            const Fraction f = stream.next();
            writer.record(t, f, stream.last_coeff());
        }
    } else { // farey
        FareyStream stream(size);
        while (!stream.done()) {
            const std::int64_t index = stream.emitted();
            const Fraction f = stream.next();
            writer.record(index, f, stream.last_coeff());
        }
    }
    return kExitOk;
}

std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(text) + "'");
    }
    return value;
}

int cmd_stern(const std::string& range, std::ostream& out) {
    std::int64_t first = 0;
    std::int64_t last = 0;
    const auto dots = range.find("..");
    if (dots != std::string::npos) {
        first = parse_int(std::string_view(range).substr(0, dots), "range start");
        last = parse_int(std::string_view(range).substr(dots + 2), "range end");
        if (first > last) {
            throw std::invalid_argument("empty range: " + range);
        }
    } else {
        first = last = parse_int(range, "index");
    }
    for (std::int64_t i = first; i <= last; ++i) {
        out << stern(i) << '\n';
    }
    return kExitOk;
}

int cmd_path(const std::string& text, const std::string& scheme, std::ostream& out,
             std::ostream& err) {
    const Fraction f = Fraction::parse(text);
    if (!f.is_finite() || f.num < 1) {
        err << "error: " << f.str() << " has no tree position (finite positive only)\n";
        return kExitUsage;
    }
    if (!f.is_reduced()) {
        err << "error: " << f.str() << " is not reduced\n";
        return kExitUsage;
    }
    if (scheme == "sb") {
        out << sb_path(f).str() << '\n';
    } else if (scheme == "cw") {
        out << cw_path(f).str() << '\n';
    } else {
        const PathString sb = sb_path(f);
        const PathString cw = cw_path(f);
        out << sb.str() << '\n';
        out << cw.str() << '\n';
        out << "reverse-match: " << (sb == cw.reversed() ? "true" : "false") << '\n';
    }
    return kExitOk;
}

std::uint64_t fnv1a(std::uint64_t hash, std::int64_t value) {
    auto v = static_cast<std::uint64_t>(value);
    for (int byte = 0; byte < 8; ++byte) {
        hash ^= (v >> (8 * byte)) & 0xffU;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

constexpr std::uint64_t kFnvSeed = 0xcbf29ce484222325ULL;

std::uint64_t checksum(const std::vector<Fraction>& fractions) {
    std::uint64_t hash = kFnvSeed;
    for (const Fraction& f : fractions) {
        hash = fnv1a(hash, f.num);
        hash = fnv1a(hash, f.den);
    }
    return hash;
}

int cmd_bench(const std::string& scheme, std::int64_t size, int reps, const RowLimits& limits,
              std::ostream& out) {
    using clock = std::chrono::steady_clock;
    double best_ms = 0.0;
    std::int64_t terms = 0;
    std::uint64_t result_checksum = 0;
    std::size_t state_bytes = 0;
    std::string oracle_checksum;
    std::string oracle_match;

    for (int rep = 0; rep < reps; ++rep) {
        const auto start = clock::now();
        if (scheme == "sb") {
            if (size > static_cast<std::int64_t>(std::numeric_limits<int>::max())) {
                throw limit_error("sb order out of range");
            }
            const SbRow row = sb_row(static_cast<int>(size), limits);
            terms = static_cast<std::int64_t>(row.entries.size());
            result_checksum = checksum(row.entries);
            state_bytes = 2 * sizeof(RecurrenceState);
        } else if (scheme == "cw-inf") {
            CwStream stream;
            std::uint64_t hash = kFnvSeed;
            for (std::int64_t t = 0; t < size; ++t) {
                const Fraction f = stream.next();
                hash = fnv1a(fnv1a(hash, f.num), f.den);
            }
            terms = size;
            result_checksum = hash;
            state_bytes = sizeof(CwStream);
        } else { // farey
            FareyStream stream(size);
            std::uint64_t hash = kFnvSeed;
            while (!stream.done()) {
                const Fraction f = stream.next();
                hash = fnv1a(fnv1a(hash, f.num), f.den);
            }
            terms = stream.emitted();
            result_checksum = hash;
            state_bytes = sizeof(FareyStream);
        }
        const std::chrono::duration<double, std::milli> elapsed = clock::now() - start;
        if (rep == 0 || elapsed.count() < best_ms) {
            best_ms = elapsed.count();
        }
    }

    if (scheme == "sb") {
        const SbRow oracle = sb_row_topdown(static_cast<int>(size), limits);
        const std::uint64_t oracle_hash = checksum(oracle.entries);
        oracle_checksum = std::to_string(oracle_hash);
        oracle_match = oracle_hash == result_checksum ? "true" : "false";
    }

    const double seconds = best_ms / 1000.0;
    const auto terms_per_sec =
        seconds > 0.0 ? static_cast<std::int64_t>(static_cast<double>(terms) / seconds)
                      : terms;
    char best_ms_text[64];
    std::snprintf(best_ms_text, sizeof best_ms_text, "%.3f", best_ms);

    out << "scheme,size,reps,terms,best_ms,terms_per_sec,state_bytes,checksum,"
           "oracle_checksum,oracle_match\n";
    out << scheme << ',' << size << ',' << reps << ',' << terms << ',' << best_ms_text << ','
        << terms_per_sec << ',' << state_bytes << ',' << result_checksum << ','
        << oracle_checksum << ',' << oracle_match << '\n';
    return kExitOk;
}

} // namespace

int verify_and_print(Profile profile, const std::optional<std::string>& suite,
                     std::ostream& out, const SuiteHooks& hooks) {
    std::vector<VerificationReport> reports;
    if (suite) {
        reports.push_back(run_suite(*suite, bounds_for(profile), hooks));
    } else {
        reports = run_all(profile, hooks);
    }
    bool all_passed = true;
    for (const auto& report : reports) {
        out << format_report(report) << '\n';
        all_passed = all_passed && report.passed;
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerates the positive rationals in Stern-Brocot, Calkin-Wilf, and "
                 "Farey order with left-to-right three-term recurrences."};
    app.name("ratseq");
    app.require_subcommand(1);

    // enumerate
    std::string enum_scheme;
    std::int64_t enum_size = 0;
    std::string enum_format = "plain";
    bool enum_coeffs = false;
    int enum_max_order = RowLimits{}.max_order;
    auto* enumerate = app.add_subcommand("enumerate", "Emit one sequence, one fraction per line");
    enumerate->add_option("scheme", enum_scheme, "sb | cw | cw-inf | farey")
        ->required()
        ->check(CLI::IsMember({"sb", "cw", "cw-inf", "farey"}));
    enumerate->add_option("size", enum_size, "order for sb/cw/farey, term count for cw-inf")
        ->required();
    enumerate->add_option("--format", enum_format, "plain | csv | jsonl")
        ->check(CLI::IsMember({"plain", "csv", "jsonl"}))
        ->capture_default_str();
    enumerate->add_flag("--coeffs", enum_coeffs,
                        "include the recurrence coefficient in csv/jsonl records");
    enumerate->add_option("--max-order", enum_max_order, "raise the row materialization limit");

    // stern
    std::string stern_range;
    auto* stern_cmd = app.add_subcommand("stern", "Print Stern diatomic values");
    stern_cmd->add_option("range", stern_range, "index i >= -1, or inclusive range a..b")
        ->required();
    stern_cmd->positionals_at_end();

    // path
    std::string path_fraction;
    std::string path_scheme = "both";
    auto* path_cmd = app.add_subcommand("path", "Print tree path strings for a fraction");
    path_cmd->add_option("fraction", path_fraction, "reduced positive fraction p/q")->required();
    path_cmd->add_option("--scheme", path_scheme, "sb | cw | both")
        ->check(CLI::IsMember({"sb", "cw", "both"}))
        ->capture_default_str();

    // verify
    std::string verify_profile = "quick";
    std::string verify_suite;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    verify_cmd->add_option("--profile", verify_profile, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify_cmd->add_option("--suite", verify_suite, "run a single suite by name");

    // bench
    std::string bench_scheme;
    std::int64_t bench_size = 0;
    int bench_reps = 3;
    int bench_max_order = RowLimits{}.max_order;
    auto* bench_cmd = app.add_subcommand("bench", "Time a kernel and report CSV");
    bench_cmd->add_option("scheme", bench_scheme, "sb | cw-inf | farey")
        ->required()
        ->check(CLI::IsMember({"sb", "cw-inf", "farey"}));
    bench_cmd->add_option("--size", bench_size, "order for sb/farey, term count for cw-inf")
        ->required();
    bench_cmd->add_option("--reps", bench_reps, "repetitions; the best time is reported")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--max-order", bench_max_order, "raise the row materialization limit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(enumerate)) {
            RowLimits limits;
            limits.max_order = enum_max_order;
            return cmd_enumerate(enum_scheme, enum_size, parse_format(enum_format), enum_coeffs,
                                 limits, out);
        }
        if (app.got_subcommand(stern_cmd)) {
            return cmd_stern(stern_range, out);
        }
        if (app.got_subcommand(path_cmd)) {
            return cmd_path(path_fraction, path_scheme, out, err);
        }
        if (app.got_subcommand(verify_cmd)) {
            const Profile profile =
                verify_profile == "full" ? Profile::full : Profile::quick;
            std::optional<std::string> suite;
            if (!verify_suite.empty()) {
                suite = verify_suite;
            }
            return verify_and_print(profile, suite, out);
        }
        if (app.got_subcommand(bench_cmd)) {
            RowLimits limits;
            limits.max_order = bench_max_order;
            return cmd_bench(bench_scheme, bench_size, bench_reps, limits, out);
        }
    } catch (const limit_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace ratseq::cli
