#include "ratseq/verify.hpp"

#include "ratseq/paths.hpp"
#include "ratseq/stern.hpp"
#include "ratseq/totient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace ratseq {

namespace {

// Packs a fraction into one key for set membership. Every value handled by
// the suites is far below 2^31, so the packing is injective here.
std::uint64_t pack(const Fraction& f) {
    return (static_cast<std::uint64_t>(f.num) << 32) | static_cast<std::uint64_t>(f.den);
}

struct SuiteRun {
    VerificationReport report;

    explicit SuiteRun(std::string name) { report.suite = std::move(name); }

    void fail(std::string inputs, std::string expected, std::string actual) {
        report.passed = false;
        report.counterexample =
            Counterexample{std::move(inputs), std::move(expected), std::move(actual)};
    }

    bool failed() const { return !report.passed; }
};

std::string istr(std::int64_t v) { return std::to_string(v); }

// --- rational-core suites ---------------------------------------------------

VerificationReport suite_k_identity(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("k-identity");
    for (std::int64_t i = 1; i <= bounds.coeff_max_index; ++i) {
        ++run.report.checked;
        const std::int64_t direct = step_coeff(i);
        const std::int64_t doubled = step_coeff_doubling(i);
        if (direct != doubled) {
            run.fail("i=" + istr(i), istr(doubled), istr(direct));
            break;
        }
    }
    return run.report;
}

VerificationReport suite_stern_recurrences(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("stern-recurrences");
    for (std::int64_t j = 1; j <= bounds.stern_max_index && !run.failed(); ++j) {
        ++run.report.checked;
        if (stern(2 * j - 1) != stern(j - 1)) {
            run.fail("i=2j-1, j=" + istr(j), istr(stern(j - 1)), istr(stern(2 * j - 1)));
        } else if (stern(2 * j) != stern(j - 1) + stern(j)) {
            run.fail("i=2j, j=" + istr(j), istr(stern(j - 1) + stern(j)), istr(stern(2 * j)));
        }
    }
    for (std::int64_t i = 1; i <= bounds.stern_max_index && !run.failed(); ++i) {
        ++run.report.checked;
        const std::int64_t threeterm = step_coeff(i) * stern(i - 1) - stern(i - 2);
        if (stern(i) != threeterm) {
            run.fail("i=" + istr(i), istr(threeterm), istr(stern(i)));
        }
    }
    return run.report;
}

VerificationReport suite_stern_hyperbinary(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("stern-hyperbinary");
    const auto table = hyperbinary_table(bounds.hyperbinary_max);
    for (std::int64_t m = 0; m <= bounds.hyperbinary_max; ++m) {
        ++run.report.checked;
        if (stern(m) != table[static_cast<std::size_t>(m)]) {
            run.fail("m=" + istr(m), istr(table[static_cast<std::size_t>(m)]), istr(stern(m)));
            break;
        }
    }
    return run.report;
}

VerificationReport suite_mediant_laws(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("mediant-laws");
    const std::int64_t w = bounds.mediant_window;
    // Every adjacent pair lo < hi with all four parts <= w, including the
    // infinite upper endpoint c/0.
    for (std::int64_t a = 0; a <= w && !run.failed(); ++a) {
        for (std::int64_t b = 1; b <= w && !run.failed(); ++b) {
            for (std::int64_t c = 1; c <= w && !run.failed(); ++c) {
                for (std::int64_t d = 0; d <= w; ++d) {
                    if (b * c - a * d != 1) {
                        continue;
                    }
                    const Fraction lo(a, b);
                    const Fraction hi(c, d);
                    if (!value_less(lo, hi)) {
                        continue;
                    }
                    ++run.report.checked;
                    const std::string inputs = "lo=" + lo.str() + " hi=" + hi.str();
                    const Fraction mid = hooks.mediant(lo, hi);
                    if (!value_less(lo, mid) || !value_less(mid, hi)) {
                        run.fail(inputs, "mediant strictly between", mid.str());
                        break;
                    }
                    if (!is_adjacent(lo, mid) || !is_adjacent(mid, hi)) {
                        run.fail(inputs, "mediant adjacent to both sides", mid.str());
                        break;
                    }
                    if (!mid.is_reduced()) {
                        run.fail(inputs, "reduced mediant", mid.str());
                        break;
                    }
                }
            }
        }
    }
    return run.report;
}

// --- enumerator suites ------------------------------------------------------

VerificationReport suite_sb_oracle(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("sb-oracle");
    for (int n = 0; n <= bounds.sb_max_order && !run.failed(); ++n) {
        ++run.report.checked;
        const SbRow lhs = hooks.sb_row(n);
        const SbRow rhs = sb_row_topdown(n);
        const std::size_t expected_size = (std::size_t{1} << n) + 1;
        if (lhs.entries.size() != expected_size || rhs.entries.size() != expected_size) {
            run.fail("n=" + istr(n), istr(static_cast<std::int64_t>(expected_size)) + " entries",
                     istr(static_cast<std::int64_t>(lhs.entries.size())) + " entries");
            break;
        }
        for (std::size_t pos = 0; pos < expected_size; ++pos) {
            if (lhs.entries[pos] != rhs.entries[pos]) {
                // pos - 1 is the recurrence index of the entry.
                run.fail("n=" + istr(n) + " i=" + istr(static_cast<std::int64_t>(pos) - 1),
                         rhs.entries[pos].str(), lhs.entries[pos].str());
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_sb_prefix(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("sb-prefix");
    SbRow previous = hooks.sb_row(0);
    for (int n = 1; n <= bounds.sb_max_order && !run.failed(); ++n) {
        SbRow current = hooks.sb_row(n);
        ++run.report.checked;
        for (std::size_t pos = 0; pos < previous.entries.size(); ++pos) {
            if (current.entries[pos].num != previous.entries[pos].num) {
                run.fail("n=" + istr(n) + " i=" + istr(static_cast<std::int64_t>(pos) - 1),
                         istr(previous.entries[pos].num), istr(current.entries[pos].num));
                break;
            }
        }
        previous = std::move(current);
    }
    return run.report;
}

VerificationReport suite_adjacency_sb(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("adjacency-sb");
    for (int n = 0; n <= bounds.sb_max_order && !run.failed(); ++n) {
        const SbRow row = hooks.sb_row(n);
        for (std::size_t pos = 0; pos + 1 < row.entries.size(); ++pos) {
            ++run.report.checked;
            const Fraction& left = row.entries[pos];
            const Fraction& right = row.entries[pos + 1];
            const std::string inputs =
                "n=" + istr(n) + " left=" + left.str() + " right=" + right.str();
            if (!value_less(left, right)) {
                run.fail(inputs, "strictly increasing", "not increasing");
                break;
            }
            if (!is_adjacent(left, right)) {
                run.fail(inputs, "bc-ad=1", "bc-ad!=1");
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_cw_oracle(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("cw-oracle");
    const auto tree = cw_tree_topdown(bounds.cw_max_depth);
    for (int n = 1; n <= bounds.cw_max_depth && !run.failed(); ++n) {
        const auto row = hooks.cw_row(n);
        const auto& oracle = tree[static_cast<std::size_t>(n) - 1];
        if (row.size() != oracle.size()) {
            run.fail("n=" + istr(n), istr(static_cast<std::int64_t>(oracle.size())) + " entries",
                     istr(static_cast<std::int64_t>(row.size())) + " entries");
            break;
        }
        for (std::size_t t = 0; t < row.size(); ++t) {
            ++run.report.checked;
            if (row[t] != oracle[t]) {
                run.fail("n=" + istr(n) + " t=" + istr(static_cast<std::int64_t>(t)),
                         oracle[t].str(), row[t].str());
                break;
            }
        }
    }
    if (!run.failed()) {
        CwStream stream;
        std::int64_t position = 0;
        for (const auto& row : tree) {
            for (const Fraction& expected : row) {
                ++run.report.checked;
                const Fraction actual = stream.next();
                if (actual != expected) {
                    run.fail("position=" + istr(position), expected.str(), actual.str());
                    break;
                }
                ++position;
            }
            if (run.failed()) {
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_cw_uniqueness(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("cw-uniqueness");
    const std::int64_t total = (std::int64_t{1} << bounds.cw_max_depth) - 1;
    CwStream stream;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(total) * 2);
    for (std::int64_t position = 0; position < total; ++position) {
        ++run.report.checked;
        const Fraction f = stream.next();
        if (!seen.insert(pack(f)).second) {
            run.fail("position=" + istr(position), "first occurrence of " + f.str(),
                     "duplicate");
            return run.report;
        }
    }
    // Completeness: every reduced p/q with p + q <= depth sits in the prefix.
    for (std::int64_t p = 1; p < bounds.cw_max_depth; ++p) {
        for (std::int64_t q = 1; p + q <= bounds.cw_max_depth; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            ++run.report.checked;
            if (!seen.contains(pack(Fraction(p, q)))) {
                run.fail("p/q=" + istr(p) + "/" + istr(q),
                         "present in the first " + istr(total) + " terms", "missing");
                return run.report;
            }
        }
    }
    return run.report;
}

VerificationReport suite_cw_embedding(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("cw-embedding");
    CwStream stream;
    const auto prefix = take(stream, (std::int64_t{1} << bounds.cw_max_depth) - 1);
    for (int n = 1; n <= bounds.cw_max_depth && !run.failed(); ++n) {
        ++run.report.checked;
        const Fraction first(1, n);
        const auto it = std::find(prefix.begin(), prefix.end(), first);
        if (it == prefix.end()) {
            run.fail("n=" + istr(n), first.str() + " in the stream", "missing");
            break;
        }
        const auto start = static_cast<std::int64_t>(it - prefix.begin());
        const std::int64_t expected_start = (std::int64_t{1} << (n - 1)) - 1;
        if (start != expected_start) {
            run.fail("n=" + istr(n), "block start " + istr(expected_start),
                     "block start " + istr(start));
            break;
        }
        const auto row = hooks.cw_row(n);
        for (std::size_t t = 0; t < row.size(); ++t) {
            const Fraction& streamed = prefix[static_cast<std::size_t>(start) + t];
            if (streamed != row[t]) {
                run.fail("n=" + istr(n) + " t=" + istr(static_cast<std::int64_t>(t)),
                         streamed.str(), row[t].str());
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_cw_stern(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("cw-stern");
    const std::int64_t total = (std::int64_t{1} << bounds.cw_max_depth) - 1;
    CwStream stream;
    for (std::int64_t t = 0; t < total; ++t) {
        ++run.report.checked;
        const Fraction f = stream.next();
        const Fraction expected(stern(t), stern(t + 1));
        if (f != expected) {
            run.fail("position=" + istr(t), expected.str(), f.str());
            break;
        }
    }
    return run.report;
}

VerificationReport suite_denominator_reuse(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("denominator-reuse");
    const int max_order = std::min(bounds.cw_max_depth, bounds.sb_max_order);
    for (int n = 1; n <= max_order && !run.failed(); ++n) {
        ++run.report.checked;
        const auto row = hooks.cw_row(n);
        const SbRow sb = hooks.sb_row(n);
        // Denominator chain b_{-1}, b_0, ..., b_{N-1} read off the row.
        std::vector<std::int64_t> chain;
        chain.reserve(row.size() + 1);
        chain.push_back(row.front().num);
        for (const Fraction& f : row) {
            chain.push_back(f.den);
        }
        for (std::size_t j = 0; j < chain.size(); ++j) {
            if (chain[j] != sb.entries[j].den) {
                run.fail("n=" + istr(n) + " j=" + istr(static_cast<std::int64_t>(j)),
                         istr(sb.entries[j].den), istr(chain[j]));
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_farey_oracle(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("farey-oracle");
    const auto phi = totient_sieve(bounds.farey_max_order);
    RowLimits oracle_limits;
    oracle_limits.max_farey_order = std::max<std::int64_t>(oracle_limits.max_farey_order,
                                                           bounds.farey_max_order);
    std::vector<Fraction> filtered{Fraction(0, 1), Fraction(1, 1)};
    std::int64_t expected_count = 1;
    for (std::int64_t n = 1; n <= bounds.farey_max_order && !run.failed(); ++n) {
        ++run.report.checked;
        if (n >= 2) {
            farey_refine(filtered, n);
        }
        expected_count += phi[static_cast<std::size_t>(n)];
        const auto streamed = farey_stream(n);
        const auto brute = farey_bruteforce(n, oracle_limits);
        if (static_cast<std::int64_t>(streamed.size()) != expected_count) {
            run.fail("n=" + istr(n), "count=" + istr(expected_count),
                     "count=" + istr(static_cast<std::int64_t>(streamed.size())));
            break;
        }
        if (brute.size() != streamed.size() || filtered.size() != streamed.size()) {
            run.fail("n=" + istr(n), "all three oracles the same size",
                     "stream=" + istr(static_cast<std::int64_t>(streamed.size())) +
                         " brute=" + istr(static_cast<std::int64_t>(brute.size())) +
                         " filter=" + istr(static_cast<std::int64_t>(filtered.size())));
            break;
        }
        for (std::size_t pos = 0; pos < streamed.size(); ++pos) {
            if (streamed[pos] != brute[pos] || streamed[pos] != filtered[pos]) {
                run.fail("n=" + istr(n) + " pos=" + istr(static_cast<std::int64_t>(pos)),
                         brute[pos].str(), streamed[pos].str() + " (filter " +
                                              filtered[pos].str() + ")");
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_adjacency_farey(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("adjacency-farey");
    for (std::int64_t n = 1; n <= bounds.farey_max_order && !run.failed(); ++n) {
        FareyStream stream(n);
        Fraction previous = stream.next();
        while (!stream.done()) {
            const Fraction current = stream.next();
            ++run.report.checked;
            const std::string inputs =
                "n=" + istr(n) + " left=" + previous.str() + " right=" + current.str();
            if (!value_less(previous, current)) {
                run.fail(inputs, "strictly increasing", "not increasing");
                break;
            }
            if (!is_adjacent(previous, current)) {
                run.fail(inputs, "bc-ad=1", "bc-ad!=1");
                break;
            }
            previous = current;
        }
    }
    return run.report;
}

VerificationReport suite_farey_window(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("farey-window");
    for (std::int64_t n = 1; n <= bounds.farey_max_order && !run.failed(); ++n) {
        FareyStream stream(n);
        Fraction previous = stream.next();
        std::int64_t position = 1;
        while (!stream.done()) {
            const Fraction current = stream.next();
            ++run.report.checked;
            const std::string inputs = "n=" + istr(n) + " pos=" + istr(position);
            if (current.den < 1 || current.den > n) {
                run.fail(inputs, "denominator in [1, " + istr(n) + "]", istr(current.den));
                break;
            }
            if (n - previous.den >= current.den) {
                run.fail(inputs, "denominator > " + istr(n - previous.den), istr(current.den));
                break;
            }
            previous = current;
            ++position;
        }
    }
    return run.report;
}

// --- path suites ------------------------------------------------------------

VerificationReport suite_path_roundtrip(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("path-roundtrip");
    for (std::int64_t p = 1; p <= bounds.path_max && !run.failed(); ++p) {
        for (std::int64_t q = 1; q <= bounds.path_max; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            ++run.report.checked;
            const Fraction f(p, q);
            const Fraction via_sb = sb_fraction_at(sb_path(f));
            if (via_sb != f) {
                run.fail("p/q=" + f.str(), f.str(), "sb round trip " + via_sb.str());
                break;
            }
            const Fraction via_cw = cw_fraction_at(cw_path(f));
            if (via_cw != f) {
                run.fail("p/q=" + f.str(), f.str(), "cw round trip " + via_cw.str());
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_path_reversal(const SuiteBounds& bounds, const SuiteHooks&) {
    SuiteRun run("path-reversal");
    for (std::int64_t p = 1; p <= bounds.path_max && !run.failed(); ++p) {
        for (std::int64_t q = 1; q <= bounds.path_max; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            ++run.report.checked;
            const Fraction f(p, q);
            const PathString sb = sb_path(f);
            const PathString cw = cw_path(f);
            if (sb != cw.reversed()) {
                run.fail("p/q=" + f.str(), "sb path = reverse of cw path",
                         "sb=" + sb.str() + " cw=" + cw.str());
                break;
            }
        }
    }
    return run.report;
}

VerificationReport suite_path_depth(const SuiteBounds& bounds, const SuiteHooks& hooks) {
    SuiteRun run("path-depth");
    for (std::int64_t p = 1; p <= bounds.path_max && !run.failed(); ++p) {
        for (std::int64_t q = 1; q <= bounds.path_max; ++q) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            ++run.report.checked;
            const Fraction f(p, q);
            const auto sb_len = sb_path(f).size();
            const auto cw_len = cw_path(f).size();
            if (sb_len != cw_len) {
                run.fail("p/q=" + f.str(), "equal depths",
                         "sb=" + istr(static_cast<std::int64_t>(sb_len)) +
                             " cw=" + istr(static_cast<std::int64_t>(cw_len)));
                break;
            }
        }
    }
    if (run.failed()) {
        return run.report;
    }
    // Row membership: f sits in the order-n row exactly when n exceeds the
    // path depth. Checked on materializable orders.
    const int max_order = std::min(12, bounds.sb_max_order);
    std::vector<std::unordered_set<std::uint64_t>> interiors;
    interiors.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) {
        const SbRow row = hooks.sb_row(n);
        std::unordered_set<std::uint64_t> interior;
        for (std::size_t pos = 1; pos + 1 < row.entries.size(); ++pos) {
            interior.insert(pack(row.entries[pos]));
        }
        interiors.push_back(std::move(interior));
    }
    const SbRow deepest = hooks.sb_row(max_order);
    for (std::size_t pos = 1; pos + 1 < deepest.entries.size() && !run.failed(); ++pos) {
        ++run.report.checked;
        const Fraction& f = deepest.entries[pos];
        const auto depth = static_cast<std::int64_t>(sb_path(f).size());
        for (int n = 0; n <= max_order; ++n) {
            const bool present = interiors[static_cast<std::size_t>(n)].contains(pack(f));
            const bool expected = n >= depth + 1;
            if (present != expected) {
                run.fail("p/q=" + f.str() + " n=" + istr(n),
                         expected ? "present" : "absent", present ? "present" : "absent");
                break;
            }
        }
    }
    return run.report;
}

using SuiteFn = VerificationReport (*)(const SuiteBounds&, const SuiteHooks&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"k-identity", suite_k_identity},
        {"stern-recurrences", suite_stern_recurrences},
        {"stern-hyperbinary", suite_stern_hyperbinary},
        {"mediant-laws", suite_mediant_laws},
        {"sb-oracle", suite_sb_oracle},
        {"sb-prefix", suite_sb_prefix},
        {"adjacency-sb", suite_adjacency_sb},
        {"cw-oracle", suite_cw_oracle},
        {"cw-uniqueness", suite_cw_uniqueness},
        {"cw-embedding", suite_cw_embedding},
        {"cw-stern", suite_cw_stern},
        {"denominator-reuse", suite_denominator_reuse},
        {"farey-oracle", suite_farey_oracle},
        {"adjacency-farey", suite_adjacency_farey},
        {"farey-window", suite_farey_window},
        {"path-roundtrip", suite_path_roundtrip},
        {"path-reversal", suite_path_reversal},
        {"path-depth", suite_path_depth},
    };
    return suites;
}

} // namespace

SuiteBounds SuiteBounds::quick() {
    SuiteBounds bounds;
    bounds.sb_max_order = 10;
    bounds.cw_max_depth = 10;
    bounds.farey_max_order = 10;
    bounds.stern_max_index = 512;
    bounds.hyperbinary_max = 512;
    bounds.coeff_max_index = std::int64_t{1} << 12;
    bounds.mediant_window = 25;
    bounds.path_max = 50;
    return bounds;
}

SuiteBounds SuiteBounds::full() {
    return SuiteBounds{};
}

SuiteHooks SuiteHooks::production() {
    SuiteHooks hooks;
    hooks.sb_row = [](int order) { return ratseq::sb_row(order); };
    hooks.cw_row = [](int order) { return ratseq::cw_row(order); };
    hooks.mediant = [](const Fraction& lo, const Fraction& hi) {
        return ratseq::mediant(lo, hi);
    };
    return hooks;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        out.reserve(registry().size());
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteBounds& bounds,
                             const SuiteHooks& hooks) {
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) {
            try {
                return fn(bounds, hooks);
            } catch (const std::exception& e) {
                VerificationReport report;
                report.suite = name;
                report.checked = 1;
                report.passed = false;
                report.counterexample =
                    Counterexample{"(suite aborted)", "no exception", e.what()};
                return report;
            }
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

SuiteBounds bounds_for(Profile profile) {
    return profile == Profile::quick ? SuiteBounds::quick() : SuiteBounds::full();
}

std::vector<VerificationReport> run_all(Profile profile, const SuiteHooks& hooks) {
    const SuiteBounds bounds = bounds_for(profile);
    std::vector<VerificationReport> reports;
    reports.reserve(suite_names().size());
    for (const auto& name : suite_names()) {
        reports.push_back(run_suite(name, bounds, hooks));
    }
    return reports;
}

std::string format_report(const VerificationReport& report) {
    std::string line = "suite=" + report.suite + " checked=" + std::to_string(report.checked) +
                       " passed=" + (report.passed ? "true" : "false");
    if (report.counterexample) {
        line += " inputs=\"" + report.counterexample->inputs + "\"";
        line += " expected=\"" + report.counterexample->expected + "\"";
        line += " actual=\"" + report.counterexample->actual + "\"";
    }
    return line;
}

} // namespace ratseq
