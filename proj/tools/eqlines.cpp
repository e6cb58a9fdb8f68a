#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqlines/eqlines.hpp"

namespace {

using namespace eqlines;

Rational parse_angle(const std::string& s) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("angle", "expected a fraction like 1/5, got '" + s + "'");
    }
}

void print_angle_bound(int n, const AngleBound& ab, OutputFormat fmt, std::ostream& out) {
    if (fmt == OutputFormat::json) {
        nlohmann::json j = {{"n", n},
                            {"angle", ab.a.to_string()},
                            {"sdp_raw", ab.sdp_raw},
                            {"bound", ab.bound},
                            {"method", to_string(ab.method)}};
        out << j.dump(2) << "\n";
    } else {
        out << "n,angle,sdp_raw,bound,method\n"
            << n << "," << ab.a.to_string() << "," << detail::format_raw(ab.sdp_raw) << ","
            << ab.bound << "," << to_string(ab.method) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Upper bounds on equiangular line counts via semidefinite programming"};
    app.require_subcommand(1);

    int n = 0;
    std::string angle_str;
    std::string format = "csv";
    std::string out_path;
    std::string rows_str;
    int from = 0, to = 0;
    RunConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--p", cfg.p, "SDP truncation degree")->check(CLI::NonNegativeNumber);
        if (with_format)
            cmd->add_option("--format", format, "Output format")
                ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* bound = app.add_subcommand("bound", "Bound for one dimension or one angle");
    bound->add_option("--n", n, "Dimension")->required();
    bound->add_option("--angle", angle_str, "Common angle as a fraction, e.g. 1/5");
    add_common(bound, true);

    CLI::App* scan = app.add_subcommand("scan", "Bounds for a range of dimensions");
    scan->add_option("--from", from, "First dimension")->required();
    scan->add_option("--to", to, "Last dimension")->required();
    scan->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--out", out_path, "Write the table to this file instead of stdout");
    add_common(scan, true);

    CLI::App* exp = app.add_subcommand("export-sdpa", "Write one SDP instance in SDPA format");
    exp->add_option("--n", n, "Dimension")->required();
    exp->add_option("--angle", angle_str, "Common angle as a fraction")->required();
    exp->add_option("--out", out_path, "Output path")->required();
    add_common(exp, false);

    CLI::App* known = app.add_subcommand("known", "Published bounds for one dimension");
    known->add_option("--n", n, "Dimension")->required();

    CLI::App* verify = app.add_subcommand("verify-table3", "Recompute reference table rows");
    verify->add_option("--rows", rows_str, "Comma-separated dimensions, e.g. 23,42,43")
        ->required();
    verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

    if (bound->parsed()) {
        if (angle_str.empty()) {
            const BoundReport rep = bound_for_dimension(n, cfg);
            if (cfg.format == OutputFormat::json)
                std::cout << report_to_json(rep).dump(2) << "\n";
            else
                write_scan_csv({rep}, std::cout);
        } else {
            print_angle_bound(n, bound_for_angle(n, parse_angle(angle_str), cfg), cfg.format,
                              std::cout);
        }
        return 0;
    }
    if (scan->parsed()) {
        if (out_path.empty()) {
            table_scan(from, to, cfg, std::cout);
        } else {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("scan: cannot open " + out_path);
            table_scan(from, to, cfg, os);
        }
        return 0;
    }
    if (exp->parsed()) {
        export_sdpa_file(build_equiangular_sdp(n, parse_angle(angle_str), cfg.p), out_path);
        return 0;
    }
    if (known->parsed()) {
        const std::optional<KnownValuesEntry> e = known_values(n);
        if (!e) {
            std::cout << "n=" << n << ": no tabulated values\n";
            return 0;
        }
        std::cout << "n=" << e->n << " lower=" << e->lower << " upper=" << e->upper;
        std::cout << " angle_inverse=";
        if (e->angle_inverse.empty()) std::cout << "-";
        for (std::size_t i = 0; i < e->angle_inverse.size(); ++i)
            std::cout << (i ? ";" : "") << e->angle_inverse[i];
        std::cout << "\n";
        return 0;
    }
    if (verify->parsed()) {
        std::vector<int> rows;
        std::stringstream ss(rows_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                rows.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw CLI::ValidationError("rows", "expected integers, got '" + tok + "'");
            }
        }
        const Table3Report rep = verify_table3(rows, cfg);
        write_table3_report(rep, std::cout);
        std::cout << (rep.all_pass ? "all rows pass\n" : "some cells differ\n");
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const eqlines::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
