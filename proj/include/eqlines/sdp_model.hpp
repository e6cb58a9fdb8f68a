#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eqlines/gegenbauer.hpp"
#include "eqlines/matrices.hpp"
#include "eqlines/rational.hpp"
#include "eqlines/threepoint.hpp"

namespace eqlines {

/// One linear matrix inequality A_0 + sum_j x_j A_j >= 0, with exact
/// rational coefficient matrices. Diagonal-kind blocks hold matrices
/// whose off-diagonal entries are all zero.
struct Block {
    enum class Kind { DensePsd, Diagonal };

    Kind kind = Kind::DensePsd;
    int dim = 0;
    std::vector<SymMatrixExact> mats;  // A_0 .. A_num_vars
    std::string label;

    static Block make(Kind kind, int dim, int num_vars, std::string label) {
        Block b;
        b.kind = kind;
        b.dim = dim;
        b.mats.assign(static_cast<std::size_t>(num_vars) + 1, SymMatrixExact(dim));
        b.label = std::move(label);
        return b;
    }

    int num_vars() const { return static_cast<int>(mats.size()) - 1; }

    const SymMatrixExact& mat(int j) const { return mats[static_cast<std::size_t>(j)]; }
    SymMatrixExact& mat(int j) { return mats[static_cast<std::size_t>(j)]; }
};

/// Feasibility-form semidefinite program over exact data:
///   maximize objective_constant + objective_coeffs . x
///   subject to, for every block:  A_0 + sum_j x_j A_j >= 0.
struct LinearMatrixProblem {
    int num_vars = 0;
    Rational objective_constant;
    std::vector<Rational> objective_coeffs;
    std::vector<Block> blocks;
};

/// Builds the semidefinite bound for equiangular line systems with common
/// angle arccos(a) in dimension n, with three-point blocks truncated at
/// degree p. Variables are x_1..x_6 and the optimum of
///   1 + (x_1 + x_2)/3
/// bounds the number of lines. Block layout, in order:
///   1) "moment": a 2x2 block tying the line count to x,
///   2) "S-block k=K": one symmetrized three-point block per k = 0..p,
///   3) "linear": diagonal rows 3 + G_k(a) x_1 + G_k(-a) x_2, k = 0..p,
///   4) "nonneg": x_j >= 0 for all six variables.
inline LinearMatrixProblem build_equiangular_sdp(int n, const Rational& a, int p) {
    if (n < 3) throw std::invalid_argument("build_equiangular_sdp: need n >= 3");
    if (p < 0) throw std::invalid_argument("build_equiangular_sdp: need p >= 0");
    if (a.sign() <= 0 || a >= Rational(1))
        throw std::invalid_argument("build_equiangular_sdp: need 0 < a < 1");

    LinearMatrixProblem prob;
    prob.num_vars = 6;
    prob.objective_constant = Rational(1);
    prob.objective_coeffs = {Rational(1, 3), Rational(1, 3), Rational(0),
                             Rational(0),    Rational(0),    Rational(0)};

    {
        Block b = Block::make(Block::Kind::DensePsd, 2, 6, "moment");
        b.mat(0).set(0, 0, Rational(1));
        b.mat(0).set(1, 1, Rational(1));
        for (int j : {1, 2}) {
            b.mat(j).set(0, 1, Rational(1, 3));
            b.mat(j).set(1, 1, Rational(1, 3));
        }
        for (int j = 3; j <= 6; ++j) b.mat(j).set(1, 1, Rational(1));
        prob.blocks.push_back(std::move(b));
    }

    const Rational one(1);
    for (int k = 0; k <= p; ++k) {
        Block b = Block::make(Block::Kind::DensePsd, p - k + 1, 6,
                              "S-block k=" + std::to_string(k));
        const TriplePoint pts[7] = {
            TriplePoint(one, one, one),  TriplePoint(a, a, one),
            TriplePoint(-a, -a, one),    TriplePoint(a, a, a),
            TriplePoint(a, a, -a),       TriplePoint(a, -a, -a),
            TriplePoint(-a, -a, -a)};
        for (int j = 0; j <= 6; ++j) b.mat(j) = s_matrix(n, p, k, pts[j]).m;
        prob.blocks.push_back(std::move(b));
    }

    {
        Block b = Block::make(Block::Kind::Diagonal, p + 1, 6, "linear");
        for (int k = 0; k <= p; ++k) {
            b.mat(0).set(k, k, Rational(3));
            b.mat(1).set(k, k, gegenbauer_eval(n, k, a));
            b.mat(2).set(k, k, gegenbauer_eval(n, k, -a));
        }
        prob.blocks.push_back(std::move(b));
    }

    {
        Block b = Block::make(Block::Kind::Diagonal, 6, 6, "nonneg");
        for (int j = 1; j <= 6; ++j) b.mat(j).set(j - 1, j - 1, Rational(1));
        prob.blocks.push_back(std::move(b));
    }

    return prob;
}

struct SdpaParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline bool is_standard_objective(const LinearMatrixProblem& p) {
    if (p.num_vars != 6 || p.objective_constant.to_double() != 1.0) return false;
    if (p.objective_coeffs[0].to_double() != 1.0 / 3.0) return false;
    if (p.objective_coeffs[1].to_double() != 1.0 / 3.0) return false;
    for (std::size_t j = 2; j < 6; ++j)
        if (!p.objective_coeffs[j].is_zero()) return false;
    return true;
}

}  // namespace detail

/// Writes the problem in SDPA sparse format. The stored problem maximizes
/// objective_constant + obj.x; SDPA minimizes c.x subject to
/// sum_j x_j F_j - F_0 >= 0, so emit c = -obj, F_0 = -A_0, F_j = A_j.
/// A leading comment records the original objective so import can restore
/// it: with the standard objective, bound = 1 - (reported SDPA minimum).
/// Coefficients are rendered as shortest round-trip decimals (17
/// significant digits).
inline void export_sdpa(const LinearMatrixProblem& prob, std::ostream& os) {
    if (detail::is_standard_objective(prob)) {
        os << "* objective = 1 + (x1+x2)/3 ; maximize\n";
    } else {
        os << "* objective = " << detail::format_double(prob.objective_constant.to_double())
           << " + obj.x ; maximize\n";
    }
    os << prob.num_vars << "\n";
    os << prob.blocks.size() << "\n";
    for (std::size_t b = 0; b < prob.blocks.size(); ++b) {
        if (b) os << " ";
        const int d = prob.blocks[b].dim;
        os << (prob.blocks[b].kind == Block::Kind::Diagonal ? -d : d);
    }
    os << "\n";
    for (int j = 0; j < prob.num_vars; ++j) {
        if (j) os << " ";
        os << detail::format_double(-prob.objective_coeffs[static_cast<std::size_t>(j)].to_double());
    }
    os << "\n";
    for (std::size_t b = 0; b < prob.blocks.size(); ++b) {
        const Block& blk = prob.blocks[b];
        for (int j = 0; j <= prob.num_vars; ++j) {
            const double sign = j == 0 ? -1.0 : 1.0;  // F_0 = -A_0
            for (int r = 0; r < blk.dim; ++r)
                for (int c = r; c < blk.dim; ++c) {
                    const double v = sign * blk.mat(j)(r, c).to_double();
                    if (v == 0.0) continue;
                    os << j << " " << b + 1 << " " << r + 1 << " " << c + 1 << " "
                       << detail::format_double(v) << "\n";
                }
        }
    }
}

inline std::string export_sdpa(const LinearMatrixProblem& prob) {
    std::ostringstream os;
    export_sdpa(prob, os);
    return os.str();
}

inline void export_sdpa_file(const LinearMatrixProblem& prob, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("export_sdpa: cannot open " + path);
    export_sdpa(prob, os);
}

/// Parses SDPA sparse format back into a LinearMatrixProblem, restoring
/// the maximization objective from the leading comment (without the
/// comment, objective_constant = 0). Parsed doubles become exact
/// rationals, so a round trip is exact up to the float rendering of the
/// original coefficients. Errors carry 1-based line numbers.
inline LinearMatrixProblem import_sdpa(std::istream& is) {
    auto fail = [](int line, const std::string& msg) {
        throw SdpaParseError("sdpa line " + std::to_string(line) + ": " + msg);
    };

    std::string line;
    int lineno = 0;
    double constant = 0.0;

    auto next_content_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            std::size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size()) continue;
            if (line[i] == '*' || line[i] == '"') {
                static const std::string tag = "objective = ";
                const auto pos = line.find(tag);
                if (pos != std::string::npos) {
                    std::istringstream cs(line.substr(pos + tag.size()));
                    double v = 0.0;
                    if (cs >> v) constant = v;
                }
                continue;
            }
            return true;
        }
        return false;
    };

    auto clean_numbers = [](std::string s) {
        for (auto& ch : s)
            if (ch == ',' || ch == '(' || ch == ')' || ch == '{' || ch == '}') ch = ' ';
        return s;
    };

    if (!next_content_line()) fail(lineno + 1, "missing variable count");
    int num_vars = 0;
    {
        std::istringstream ss(clean_numbers(line));
        if (!(ss >> num_vars) || num_vars <= 0) fail(lineno, "bad variable count");
    }
    if (!next_content_line()) fail(lineno + 1, "missing block count");
    int num_blocks = 0;
    {
        std::istringstream ss(clean_numbers(line));
        if (!(ss >> num_blocks) || num_blocks <= 0) fail(lineno, "bad block count");
    }
    if (!next_content_line()) fail(lineno + 1, "missing block sizes");
    std::vector<int> sizes;
    {
        std::istringstream ss(clean_numbers(line));
        int v = 0;
        while (ss >> v) {
            if (v == 0) fail(lineno, "zero block size");
            sizes.push_back(v);
        }
        if (static_cast<int>(sizes.size()) != num_blocks)
            fail(lineno, "expected " + std::to_string(num_blocks) + " block sizes, got " +
                             std::to_string(sizes.size()));
    }
    if (!next_content_line()) fail(lineno + 1, "missing objective row");
    std::vector<double> c;
    {
        std::istringstream ss(clean_numbers(line));
        double v = 0.0;
        while (ss >> v) c.push_back(v);
        if (static_cast<int>(c.size()) != num_vars)
            fail(lineno, "expected " + std::to_string(num_vars) +
                             " objective entries, got " + std::to_string(c.size()));
    }

    LinearMatrixProblem prob;
    prob.num_vars = num_vars;
    prob.objective_constant = Rational(mpq_class(constant));
    prob.objective_coeffs.reserve(static_cast<std::size_t>(num_vars));
    for (int j = 0; j < num_vars; ++j)
        prob.objective_coeffs.push_back(Rational(mpq_class(-c[static_cast<std::size_t>(j)])));
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        const int s = sizes[b];
        prob.blocks.push_back(s < 0 ? Block::make(Block::Kind::Diagonal, -s, num_vars,
                                                  "block " + std::to_string(b + 1))
                                    : Block::make(Block::Kind::DensePsd, s, num_vars,
                                                  "block " + std::to_string(b + 1)));
    }

    std::map<std::tuple<int, int, int, int>, int> seen;  // (mat, block, i, j) -> line
    while (next_content_line()) {
        std::istringstream ss(clean_numbers(line));
        int mat = 0, blk = 0, i = 0, j = 0;
        double v = 0.0;
        if (!(ss >> mat >> blk >> i >> j >> v)) fail(lineno, "malformed entry");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing data in entry");
        if (mat < 0 || mat > num_vars) fail(lineno, "matrix index out of range");
        if (blk < 1 || blk > num_blocks) fail(lineno, "block index out of range");
        Block& b = prob.blocks[static_cast<std::size_t>(blk - 1)];
        if (i < 1 || i > b.dim || j < 1 || j > b.dim)
            fail(lineno, "entry index out of range for block " + std::to_string(blk) +
                             " (dim " + std::to_string(b.dim) + ")");
        if (b.kind == Block::Kind::Diagonal && i != j)
            fail(lineno, "off-diagonal entry in diagonal block " + std::to_string(blk));
        if (i > j) std::swap(i, j);
        const auto key = std::make_tuple(mat, blk, i, j);
        if (const auto it = seen.find(key); it != seen.end())
            fail(lineno, "duplicate of entry at line " + std::to_string(it->second));
        seen.emplace(key, lineno);
        const double stored = mat == 0 ? -v : v;  // A_0 = -F_0
        b.mat(mat).set(i - 1, j - 1, Rational(mpq_class(stored)));
    }
    return prob;
}

inline LinearMatrixProblem import_sdpa(const std::string& text) {
    std::istringstream is(text);
    return import_sdpa(is);
}

inline LinearMatrixProblem import_sdpa_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("import_sdpa: cannot open " + path);
    return import_sdpa(is);
}

}  // namespace eqlines
