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

#include "chm/json_io.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace chm::io {

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double round_real(double x) {
    const std::string text = format_real(x);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string dump(const Json& j) {
    return j.dump() + "\n";
}

Json to_json(Complex z) {
    Json j;
    j["re"] = round_real(z.real());
    j["im"] = round_real(z.imag());
    return j;
}

Json to_json(const Matrix& m) {
    Json j;
    j["d"] = m.dim();
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

namespace {

Json phases_json(const std::vector<Complex>& phases) {
    Json out = Json::array();
    for (const auto& z : phases) out.push_back(to_json(z));
    return out;
}

Json pairing_json(const Pairing& p) {
    Json out = Json::array();
    for (const auto& [a, b] : p) out.push_back(Json::array({a, b}));
    return out;
}

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorKind::Parse, "matrix JSON: " + what);
}

double finite_number(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
        parse_fail(std::string("entry needs numeric '") + key + "'");
    }
    const double v = j.at(key).get<double>();
    if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "matrix JSON: non-finite entry");
    return v;
}

Complex complex_from_json(const Json& j) {
    return {finite_number(j, "re"), finite_number(j, "im")};
}

Json parse_text(std::string_view text, const char* what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const EquivalenceWitness& w) {
    Json j;
    j["rowPerm"] = w.rowPerm;
    j["colPerm"] = w.colPerm;
    j["rowPhases"] = phases_json(w.rowPhases);
    j["colPhases"] = phases_json(w.colPhases);
    return j;
}

Json to_json(const SubmatrixLoc& loc) {
    Json j;
    j["rows"] = loc.rows;
    j["cols"] = loc.cols;
    return j;
}

Json to_json(const std::vector<SubmatrixLoc>& locs) {
    Json j;
    j["count"] = locs.size();
    Json arr = Json::array();
    for (const auto& l : locs) arr.push_back(to_json(l));
    j["locations"] = std::move(arr);
    return j;
}

Json to_json(const CensusResult& c) {
    Json j;
    j["count"] = c.count;
    Json arr = Json::array();
    for (const auto& l : c.locations) arr.push_back(to_json(l));
    j["locations"] = std::move(arr);
    return j;
}

Json to_json(const H2Structure& s) {
    Json j;
    j["rowPairing"] = pairing_json(s.rowPairing);
    j["colPairing"] = pairing_json(s.colPairing);
    return j;
}

Json to_json(const std::vector<RealSubmatrixReport>& reports) {
    Json j;
    j["count"] = reports.size();
    Json arr = Json::array();
    for (const auto& r : reports) {
        Json e;
        e["rows"] = r.rows;
        e["cols"] = r.cols;
        e["rank"] = r.rank;
        arr.push_back(std::move(e));
    }
    j["submatrices"] = std::move(arr);
    return j;
}

Json to_json(const MuVerdict& v) {
    Json j;
    j["verdict"] = v.ok ? "MU" : "not MU";
    j["ok"] = v.ok;
    j["maxDeviation"] = round_real(v.maxDeviation);
    return j;
}

Json to_json(const ExclusionReport& r) {
    Json rules = Json::array();
    for (const auto& rule : r.rulesFired) {
        Json e;
        e["id"] = rule.id;
        e["exclusion"] = rule.exclusion;
        Json ev;
        if (rule.realCount) {
            ev["realCount"] = rule.realCount->count;
            ev["threshold"] = rule.realCount->threshold;
            ev["chain"] = "more than 22 real entries forces equivalence to M1 or M2, neither of which lies in a CHM trio";
        }
        if (rule.subChm) {
            ev["location"] = to_json(rule.subChm->location);
            ev["residual"] = round_real(rule.subChm->residual);
        }
        if (rule.d0Witness) {
            ev["witness"] = to_json(rule.d0Witness->witness);
            ev["maxError"] = round_real(rule.d0Witness->maxError);
        }
        if (rule.censusAnomaly) {
            ev["count"] = rule.censusAnomaly->count;
            ev["structure"] = to_json(rule.censusAnomaly->structure);
        }
        e["evidence"] = std::move(ev);
        rules.push_back(std::move(e));
    }
    Json j;
    j["rules"] = std::move(rules);
    j["excluded"] = r.excluded();
    return j;
}

Json to_json(const std::vector<CensusRecord>& records) {
    Json arr = Json::array();
    for (const auto& rec : records) {
        Json e;
        e["x1"] = round_real(rec.x1);
        e["x2"] = round_real(rec.x2);
        e["N"] = rec.N;
        e["gram_residual"] = round_real(rec.gramResidual);
        e["h2_found"] = rec.h2Found;
        e["forbidden"] = rec.forbidden;
        if (rec.limit) e["limit"] = true;
        arr.push_back(std::move(e));
    }
    const ScanSummary s = summarize(records);
    Json j;
    j["records"] = std::move(arr);
    j["summary"] = {{"rows", s.rows}, {"minN", s.minN}, {"maxN", s.maxN}, {"forbidden", s.forbiddenCount}};
    return j;
}

Matrix matrix_from_json_value(const Json& j) {
    if (!j.is_object()) parse_fail("top level must be an object");
    if (!j.contains("d") || !j.at("d").is_number_integer() || j.at("d").get<long long>() <= 0) {
        parse_fail("'d' must be a positive integer");
    }
    const auto d = static_cast<std::size_t>(j.at("d").get<long long>());
    if (!j.contains("entries") || !j.at("entries").is_array()) parse_fail("'entries' must be an array");
    const Json& rows = j.at("entries");
    if (rows.size() != d) throw Error(ErrorKind::NonSquare, "matrix JSON: expected " + std::to_string(d) + " rows");
    std::vector<Complex> entries;
    entries.reserve(d * d);
    for (const auto& row : rows) {
        if (!row.is_array()) parse_fail("each row must be an array");
        if (row.size() != d) throw Error(ErrorKind::NonSquare, "matrix JSON: rows must have d entries");
        for (const auto& z : row) entries.push_back(complex_from_json(z));
    }
    return Matrix(d, std::move(entries));
}

Matrix matrix_from_json(std::string_view text) {
    return matrix_from_json_value(parse_text(text, "matrix JSON"));
}

EquivalenceWitness witness_from_json(std::string_view text) {
    const Json j = parse_text(text, "witness JSON");
    EquivalenceWitness w;
    try {
        w.rowPerm = j.at("rowPerm").get<std::vector<int>>();
        w.colPerm = j.at("colPerm").get<std::vector<int>>();
        for (const auto& z : j.at("rowPhases")) w.rowPhases.push_back(complex_from_json(z));
        for (const auto& z : j.at("colPhases")) w.colPhases.push_back(complex_from_json(z));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("witness JSON: ") + e.what());
    }
    return w;
}

std::string scan_csv(const std::vector<CensusRecord>& records) {
    std::string out = "x1,x2,N,gram_residual,h2_found,forbidden\n";
    for (const auto& r : records) {
        out += format_real(r.x1);
        out += ',';
        out += format_real(r.x2);
        out += ',';
        out += std::to_string(r.N);
        out += ',';
        out += format_real(r.gramResidual);
        out += r.h2Found ? ",true" : ",false";
        out += r.forbidden ? ",true\n" : ",false\n";
    }
    return out;
}

}  // namespace chm::io
