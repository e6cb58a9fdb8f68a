#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqlines/bounds.hpp"
#include "eqlines/sdp_model.hpp"
#include "eqlines/sdp_solver.hpp"
#include "eqlines/tables.hpp"

namespace eqlines {

// Per-dimension orchestration: enumerate candidate angles, bound each by
// the SDP (or the 1/3 closed form), and aggregate into the per-dimension
// bound together with table reproduction and diffing.

enum class OutputFormat { csv, json };

struct RunConfig {
    int p = 5;  // truncation degree of the SDP hierarchy
    SolverSettings solver;
    OutputFormat format = OutputFormat::csv;
    int jobs = 1;
    double floor_eps = 1e-6;  // guard when rounding solver output down to an integer
};

/// The SDP solver stopped without an optimality certificate.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

struct AngleBound {
    Rational a;
    double sdp_raw = 0.0;  // solver objective before rounding
    std::int64_t bound = 0;
    BoundMethod method = BoundMethod::sdp;
};

struct BoundReport {
    int n = 0;
    std::vector<AngleBound> entries;  // one per candidate angle, k ascending
    std::int64_t max_bound = 0;
    Rational max_angle;
    std::int64_t gerzon_bound = 0;
    std::int64_t final_bound = 0;
    bool improved_over_gerzon = false;
    std::vector<std::string> errors;  // per-angle failures, empty on full success
};

namespace detail {

inline void validate_config(const RunConfig& cfg) {
    if (cfg.p < 0) throw std::invalid_argument("RunConfig: p must be >= 0");
    if (cfg.jobs < 1) throw std::invalid_argument("RunConfig: jobs must be >= 1");
    if (!(cfg.floor_eps >= 0.0)) throw std::invalid_argument("RunConfig: floor_eps must be >= 0");
}

inline std::int64_t floor_with_guard(double raw, double eps) {
    return static_cast<std::int64_t>(std::floor(raw + eps));
}

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Exceptions are
/// captured per item and rethrown by the caller's collection logic.
template <typename Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    const int workers = std::min(jobs, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// Upper bound on lines at one fixed angle. The SDP value is floored with
/// a small epsilon guard; at angle 1/3 in dimension >= 16 the closed-form
/// 2(n-1) bound is also available and the smaller of the two is returned.
inline AngleBound bound_for_angle(int n, const Rational& a, const RunConfig& cfg = {}) {
    if (n < 15) throw std::invalid_argument("bound_for_angle: requires n >= 15");
    if (!(a > Rational(0)) || !(a < Rational(1)))
        throw std::invalid_argument("bound_for_angle: angle must lie in (0,1)");
    detail::validate_config(cfg);

    AngleBound out;
    out.a = a;
    const LinearMatrixProblem prob = build_equiangular_sdp(n, a, cfg.p);
    const SdpSolution sol = solve(prob, cfg.solver);
    if (sol.status != SolveStatus::Optimal)
        throw SolverError("bound_for_angle: solver returned " +
                          std::string(to_string(sol.status)) + " for n=" + std::to_string(n) +
                          ", a=" + a.to_string());
    out.sdp_raw = sol.primal_obj;
    out.bound = detail::floor_with_guard(out.sdp_raw, cfg.floor_eps);
    out.method = BoundMethod::sdp;
    if (a == Rational(1, 3) && n >= 16) {
        const std::int64_t ls = lemmens_seidel_third(n);
        if (ls <= out.bound) {
            out.bound = ls;
            out.method = BoundMethod::ls_third;
        }
    }
    return out;
}

/// Aggregates bound_for_angle over every candidate angle of dimension n.
/// The angle restriction only constrains sets larger than 2n+1, so the
/// final bound never drops below that.
inline BoundReport bound_for_dimension(int n, const RunConfig& cfg = {}) {
    BoundReport rep;
    rep.n = n;
    rep.gerzon_bound = gerzon(n);
    for (const AngleCandidate& c : candidate_angles(n))
        rep.entries.push_back(bound_for_angle(n, c.a, cfg));
    rep.max_bound = 0;
    for (const AngleBound& e : rep.entries)
        if (e.bound > rep.max_bound) {
            rep.max_bound = e.bound;
            rep.max_angle = e.a;  // entries are k-ascending, so ties keep 1/(2k-1) smallest
        }
    rep.final_bound = std::max<std::int64_t>(2 * static_cast<std::int64_t>(n) + 1, rep.max_bound);
    rep.improved_over_gerzon = rep.final_bound < rep.gerzon_bound;
    return rep;
}

/// bound_for_dimension over a range, with (n, angle) work items solved on
/// cfg.jobs threads. Per-angle failures are recorded in the report's
/// errors list instead of aborting the scan.
inline std::vector<BoundReport> compute_scan(int n_min, int n_max, const RunConfig& cfg = {}) {
    if (n_min < 15) throw std::invalid_argument("compute_scan: requires n_min >= 15");
    if (n_min > n_max) throw std::invalid_argument("compute_scan: empty range");
    detail::validate_config(cfg);

    struct Item {
        int n;
        Rational a;
        AngleBound result;
        std::string error;
    };
    std::vector<Item> items;
    for (int n = n_min; n <= n_max; ++n)
        for (const AngleCandidate& c : candidate_angles(n)) items.push_back({n, c.a, {}, {}});

    detail::parallel_for(static_cast<int>(items.size()), cfg.jobs, [&](int i) {
        Item& it = items[static_cast<std::size_t>(i)];
        try {
            it.result = bound_for_angle(it.n, it.a, cfg);
        } catch (const std::exception& e) {
            it.error = e.what();
        }
    });

    std::vector<BoundReport> reports;
    std::size_t pos = 0;
    for (int n = n_min; n <= n_max; ++n) {
        BoundReport rep;
        rep.n = n;
        rep.gerzon_bound = gerzon(n);
        while (pos < items.size() && items[pos].n == n) {
            if (items[pos].error.empty())
                rep.entries.push_back(items[pos].result);
            else
                rep.errors.push_back(items[pos].error);
            ++pos;
        }
        rep.max_bound = 0;
        for (const AngleBound& e : rep.entries)
            if (e.bound > rep.max_bound) {
                rep.max_bound = e.bound;
                rep.max_angle = e.a;
            }
        rep.final_bound =
            std::max<std::int64_t>(2 * static_cast<std::int64_t>(n) + 1, rep.max_bound);
        rep.improved_over_gerzon = rep.final_bound < rep.gerzon_bound;
        reports.push_back(std::move(rep));
    }
    return reports;
}

namespace detail {

inline std::string format_raw(double raw) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", raw);
    return buf;
}

}  // namespace detail

/// One CSV line per (n, angle) pair, per-n aggregates repeated. Angle rows
/// that failed carry the error message in place of numbers.
inline void write_scan_csv(const std::vector<BoundReport>& reports, std::ostream& out) {
    out << "n,angle,sdp_raw,per_angle_bound,max_bound,max_angle,gerzon,improved,final\n";
    for (const BoundReport& r : reports) {
        const std::string agg = std::to_string(r.max_bound) + "," + r.max_angle.to_string() +
                                "," + std::to_string(r.gerzon_bound) + "," +
                                (r.improved_over_gerzon ? "true" : "false") + "," +
                                std::to_string(r.final_bound);
        for (const AngleBound& e : r.entries)
            out << r.n << "," << e.a.to_string() << "," << detail::format_raw(e.sdp_raw) << ","
                << e.bound << "," << agg << "\n";
        for (const std::string& err : r.errors)
            out << r.n << ",error,\"" << err << "\",," << agg << "\n";
    }
}

inline nlohmann::json report_to_json(const BoundReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const AngleBound& e : r.entries)
        entries.push_back({{"angle", e.a.to_string()},
                           {"sdp_raw", e.sdp_raw},
                           {"bound", e.bound},
                           {"method", to_string(e.method)}});
    return {{"n", r.n},
            {"entries", std::move(entries)},
            {"max_bound", r.max_bound},
            {"max_angle", r.max_angle.to_string()},
            {"gerzon", r.gerzon_bound},
            {"final_bound", r.final_bound},
            {"improved_over_gerzon", r.improved_over_gerzon},
            {"errors", r.errors}};
}

inline void write_scan_json(const std::vector<BoundReport>& reports, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BoundReport& r : reports) arr.push_back(report_to_json(r));
    out << arr.dump(2) << "\n";
}

/// Scans [n_min, n_max] and writes the table to `out` in cfg.format.
inline std::vector<BoundReport> table_scan(int n_min, int n_max, const RunConfig& cfg,
                                           std::ostream& out) {
    std::vector<BoundReport> reports = compute_scan(n_min, n_max, cfg);
    if (cfg.format == OutputFormat::csv)
        write_scan_csv(reports, out);
    else
        write_scan_json(reports, out);
    return reports;
}

struct Table3CellDiff {
    int angle_inverse = 0;  // 0 marks the max column
    std::int64_t computed = 0;
    std::int64_t reference = 0;
    bool pass = false;
};

struct Table3RowDiff {
    int n = 0;
    std::vector<Table3CellDiff> cells;
    int computed_max_angle_inverse = 0;
    int reference_max_angle_inverse = 0;
    bool informational = false;
    bool pass = false;  // every cell within tolerance
};

struct Table3Report {
    std::vector<Table3RowDiff> rows;
    bool all_pass = true;
};

/// Recomputes the requested reference rows (angles 1/5 ... 1/15 plus the
/// max column) and diffs them cell by cell at integer tolerance 1.
inline Table3Report verify_table3(std::vector<int> rows, const RunConfig& cfg = {}) {
    detail::validate_config(cfg);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (int n : rows)
        if (!table3_row(n))
            throw std::invalid_argument("verify_table3: no reference row for n = " +
                                        std::to_string(n));

    const int kAngles = 6;
    std::vector<std::int64_t> computed(rows.size() * kAngles, 0);
    std::vector<std::string> errors(rows.size() * kAngles);
    detail::parallel_for(static_cast<int>(rows.size()) * kAngles, cfg.jobs, [&](int i) {
        const int n = rows[static_cast<std::size_t>(i / kAngles)];
        const int inv = kTable3AngleInverse[i % kAngles];
        try {
            computed[static_cast<std::size_t>(i)] =
                bound_for_angle(n, Rational(1, inv), cfg).bound;
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    });

    Table3Report report;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        const Table3Row ref = *table3_row(rows[ri]);
        Table3RowDiff diff;
        diff.n = ref.n;
        diff.informational = ref.informational;
        diff.pass = true;
        std::int64_t cmax = 0;
        int cmax_inv = 0;
        for (int c = 0; c < kAngles; ++c) {
            const std::size_t idx = ri * static_cast<std::size_t>(kAngles) +
                                    static_cast<std::size_t>(c);
            if (!errors[idx].empty()) throw SolverError(errors[idx]);
            Table3CellDiff cell;
            cell.angle_inverse = kTable3AngleInverse[c];
            cell.computed = computed[idx];
            cell.reference = ref.bound[c];
            cell.pass = std::llabs(cell.computed - cell.reference) <= 1;
            diff.pass = diff.pass && cell.pass;
            diff.cells.push_back(cell);
            if (cell.computed > cmax) {
                cmax = cell.computed;
                cmax_inv = cell.angle_inverse;
            }
        }
        Table3CellDiff maxcell;
        maxcell.angle_inverse = 0;
        maxcell.computed = cmax;
        maxcell.reference = ref.max;
        maxcell.pass = std::llabs(maxcell.computed - maxcell.reference) <= 1;
        diff.pass = diff.pass && maxcell.pass;
        diff.cells.push_back(maxcell);
        diff.computed_max_angle_inverse = cmax_inv;
        diff.reference_max_angle_inverse = ref.max_angle_inverse;
        report.all_pass = report.all_pass && diff.pass;
        report.rows.push_back(std::move(diff));
    }
    return report;
}

inline void write_table3_report(const Table3Report& report, std::ostream& out) {
    for (const Table3RowDiff& row : report.rows) {
        out << "n=" << row.n;
        for (const Table3CellDiff& cell : row.cells) {
            out << "  ";
            if (cell.angle_inverse == 0)
                out << "max";
            else
                out << "1/" << cell.angle_inverse;
            out << "=" << cell.computed;
            if (cell.computed != cell.reference)
                out << "(ref " << cell.reference << (cell.pass ? ")" : ", FAIL)");
        }
        if (row.computed_max_angle_inverse != row.reference_max_angle_inverse)
            out << "  angle=1/" << row.computed_max_angle_inverse << "(ref 1/"
                << row.reference_max_angle_inverse << ")";
        if (row.informational) out << "  [informational]";
        out << (row.pass ? "  ok" : "  FAIL") << "\n";
    }
}

}  // namespace eqlines
