// Copyright 2026-present the chm6 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// chm: command-line surface over the library. Matrix arguments are a registry
// name, family:x1,x2, identity:d, fourier:d or @path/to/matrix.json.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chm/census.hpp"
#include "chm/core.hpp"
#include "chm/equivalence.hpp"
#include "chm/families.hpp"
#include "chm/json_io.hpp"
#include "chm/mub.hpp"
#include "chm/scan.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kNegative = 1,
    kUnknownName = 2,
    kInvalidMatrix = 3,
    kTimeout = 4,
    kIo = 5,
};

int exit_code_for(chm::ErrorKind kind) {
    switch (kind) {
        case chm::ErrorKind::UnknownName:
            return kUnknownName;
        case chm::ErrorKind::Timeout:
            return kTimeout;
        case chm::ErrorKind::Io:
            return kIo;
        default:
            return kInvalidMatrix;
    }
}

double parse_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw chm::Error(chm::ErrorKind::Parse, "not a number: " + text);
    return v;
}

std::size_t parse_dim(const std::string& text) {
    const double v = parse_double(text);
    if (v < 1 || v > 64 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw chm::Error(chm::ErrorKind::Parse, "invalid dimension: " + text);
    }
    return static_cast<std::size_t>(v);
}

chm::Matrix resolve(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1), std::ios::binary);
        if (!in) throw chm::Error(chm::ErrorKind::Io, "cannot read " + spec.substr(1));
        std::stringstream buf;
        buf << in.rdbuf();
        return chm::io::matrix_from_json(buf.str());
    }
    if (spec.rfind("family:", 0) == 0) {
        const std::string args = spec.substr(7);
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw chm::Error(chm::ErrorKind::Parse, "expected family:x1,x2");
        return chm::family_h(chm::FamilyPoint(parse_double(args.substr(0, comma)), parse_double(args.substr(comma + 1))));
    }
    if (spec.rfind("identity:", 0) == 0) return chm::Matrix::identity(parse_dim(spec.substr(9)));
    if (spec.rfind("fourier:", 0) == 0) return chm::fourier(parse_dim(spec.substr(8)));
    return chm::named(spec).matrix;
}

void emit(const chm::io::Json& j) {
    std::cout << chm::io::dump(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex Hadamard matrix toolkit for dimension six"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol_value = chm::Tolerance::kDefault;
    app.add_option("--tol", tol_value, "absolute tolerance (0 < eps < 1e-3)")->envname("CHM_TOL");

    std::string name, input, second;
    double timeout_s = 120.0;
    int grid = 0;
    std::string out_path, format = "csv";
    unsigned threads = 0;

    auto* show = app.add_subcommand("show", "print a registry matrix as JSON");
    show->add_option("name", name)->required();

    auto* reg = app.add_subcommand("registry", "list registry entries");
    std::string reg_action = "list";
    reg->add_option("action", reg_action)->check(CLI::IsMember({"list"}));

    auto* census = app.add_subcommand("census", "2x2 sub-CHM census");
    census->add_option("matrix", input)->required();
    auto* census3 = app.add_subcommand("census3", "3x3 sub-CHMs");
    census3->add_option("matrix", input)->required();
    auto* h2 = app.add_subcommand("h2", "H2 block structure");
    h2->add_option("matrix", input)->required();
    auto* dephase = app.add_subcommand("dephase", "dephased form");
    dephase->add_option("matrix", input)->required();
    auto* real = app.add_subcommand("real", "real entries and real 3x2 submatrices");
    real->add_option("matrix", input)->required();
    auto* excl = app.add_subcommand("exclusions", "trio exclusion rules");
    excl->add_option("matrix", input)->required();

    auto* equiv = app.add_subcommand("equiv", "complex equivalence witness search");
    equiv->add_option("a", input)->required();
    equiv->add_option("b", second)->required();
    equiv->add_option("--timeout", timeout_s, "seconds before giving up")->check(CLI::PositiveNumber);

    auto* mu = app.add_subcommand("mu", "mutual unbiasedness of two bases");
    mu->add_option("f", input)->required();
    mu->add_option("g", second)->required();

    auto* scan = app.add_subcommand("scan", "census over a parameter grid of the two-parameter family");
    scan->add_option("--grid", grid, "points per axis")->required()->check(CLI::Range(2, 4096));
    scan->add_option("--out", out_path, "output file (stdout when omitted)");
    scan->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--threads", threads, "worker threads (0: all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        const chm::Tolerance tol(tol_value);

        if (*show) {
            emit(chm::io::to_json(chm::named(name).matrix));
            return kOk;
        }
        if (*reg) {
            for (const auto& e : chm::registry()) {
                std::cout << e.name << '\t' << chm::to_string(e.provenance) << '\t' << e.description << '\n';
            }
            return kOk;
        }
        if (*census) {
            emit(chm::io::to_json(chm::census_2x2(resolve(input), tol)));
            return kOk;
        }
        if (*census3) {
            emit(chm::io::to_json(chm::find_3x3_sub_chms(resolve(input), tol)));
            return kOk;
        }
        if (*h2) {
            const auto s = chm::h2_block_structure(resolve(input), tol);
            if (!s) {
                std::cout << "not H2-reducible\n";
                return kNegative;
            }
            emit(chm::io::to_json(*s));
            return kOk;
        }
        if (*dephase) {
            emit(chm::io::to_json(chm::dephase(resolve(input), tol)));
            return kOk;
        }
        if (*real) {
            const chm::Matrix m = resolve(input);
            chm::io::Json j;
            j["realEntries"] = chm::count_real_entries(m, tol);
            j["real3x2"] = chm::io::to_json(chm::real_submatrices_3x2(m, tol));
            emit(j);
            return kOk;
        }
        if (*excl) {
            emit(chm::io::to_json(chm::exclusion_report(resolve(input), tol)));
            return kOk;
        }
        if (*equiv) {
            const chm::Matrix a = resolve(input);
            const chm::Matrix b = resolve(second);
            chm::EquivalenceOptions options;
            options.tol = tol;
            options.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0));
            const auto w = chm::are_equivalent(a, b, options);
            if (!w) {
                std::cout << "inequivalent\n";
                return kNegative;
            }
            emit(chm::io::to_json(*w));
            return kOk;
        }
        if (*mu) {
            const auto v = chm::mu_pair(resolve(input), resolve(second), tol);
            emit(chm::io::to_json(v));
            return v.ok ? kOk : kNegative;
        }
        if (*scan) {
            chm::ScanConfig config;
            config.gridN = grid;
            config.tol = tol;
            config.threads = threads;
            const auto records = chm::run_scan(config);
            const std::string body =
                format == "json" ? chm::io::dump(chm::io::to_json(records)) : chm::io::scan_csv(records);
            const auto s = chm::summarize(records);
            std::ostringstream summary;
            summary << "rows=" << s.rows << " minN=" << s.minN << " maxN=" << s.maxN
                    << " forbidden=" << s.forbiddenCount << '\n';
            if (out_path.empty()) {
                std::cout << body;
                std::cerr << summary.str();
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw chm::Error(chm::ErrorKind::Io, "cannot write " + out_path);
                out << body;
                out.close();
                if (!out) throw chm::Error(chm::ErrorKind::Io, "write failed for " + out_path);
                std::cout << summary.str();
            }
            return kOk;
        }
    } catch (const chm::Error& e) {
        std::cerr << "chm: " << chm::to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kOk;
}
