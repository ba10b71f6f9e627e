// Copyright 2026 The distsampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distsampler/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "distsampler/errors.hpp"

namespace distsampler::io {

namespace {

std::vector<double> number_array(const json &j, const char *key, std::size_t expected, bool optional) {
    if (!j.contains(key)) {
        if (optional) return std::vector<double>(expected, 0.0);
        throw Error(ErrorKind::InvalidInput, std::string("invalid input: missing \"") + key + "\"");
    }
    const json &arr = j.at(key);
    if (!arr.is_array() || arr.size() != expected) {
        throw Error(ErrorKind::InvalidInput,
                    std::string("invalid input: \"") + key + "\" must be an array of " + std::to_string(expected));
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const json &v : arr) {
        if (!v.is_number()) throw Error(ErrorKind::InvalidInput, std::string("invalid input: non-numeric \"") + key + "\"");
        out.push_back(v.get<double>());
    }
    return out;
}

std::size_t count_field(const json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
        throw Error(ErrorKind::InvalidInput, std::string("invalid input: \"") + key + "\" must be a nonnegative integer");
    }
    return j.at(key).get<std::size_t>();
}

std::vector<Complex> combine(const std::vector<double> &re, const std::vector<double> &im) {
    std::vector<Complex> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = Complex(re[i], im[i]);
    return out;
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json re = json::array(), im = json::array();
    for (const Complex &z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "invalid input: matrix JSON must be an object");
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const auto re = number_array(j, "re", rows * cols, false);
    const auto im = number_array(j, "im", rows * cols, false);
    return ComplexMatrix(rows, cols, combine(re, im));
}

json overlap_to_json(const ComplexMatrix &s) {
    json m = matrix_to_json(s);
    return json{{"n", s.rows()}, {"re", m["re"]}, {"im", m["im"]}};
}

DistinguishabilityModel overlap_from_json(const json &j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "invalid input: overlap JSON must be an object");
    const std::size_t n = count_field(j, "n");
    const auto re = number_array(j, "re", n * n, false);
    const auto im = number_array(j, "im", n * n, true);
    return DistinguishabilityModel::general(ComplexMatrix(n, n, combine(re, im)));
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, "invalid input: " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

void write_error_scan_csv(std::ostream &os, const std::vector<ErrorScanRow> &rows) {
    os << "x,k,rms_rel_error,trials,mean_abs_rel_error\n";
    os << std::setprecision(17);
    for (const auto &r : rows) {
        os << r.x << ',' << r.k << ',' << r.rms_rel_error << ',' << r.trials << ',' << r.mean_abs_rel_error << '\n';
    }
}

json error_scan_to_json(const std::vector<ErrorScanRow> &rows) {
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back({{"x", r.x},
                       {"k", r.k},
                       {"rms_rel_error", r.rms_rel_error},
                       {"mean_abs_rel_error", r.mean_abs_rel_error},
                       {"trials", r.trials}});
    }
    return out;
}

void write_coefficient_scan_csv(std::ostream &os, const std::vector<CoefficientScanRow> &rows) {
    os << "j,rms_normalized,mean_abs_normalized,reference,trials,high_variance\n";
    os << std::setprecision(17);
    for (const auto &r : rows) {
        os << r.j << ',' << r.rms_normalized << ',' << r.mean_abs_normalized << ',' << r.reference << ','
           << r.trials << ',' << (r.trials < 30 ? 1 : 0) << '\n';
    }
}

json coefficient_scan_to_json(const std::vector<CoefficientScanRow> &rows) {
    json out = json::array();
    for (const auto &r : rows) {
        out.push_back({{"j", r.j},
                       {"rms_normalized", r.rms_normalized},
                       {"mean_abs_normalized", r.mean_abs_normalized},
                       {"reference", r.reference},
                       {"trials", r.trials},
                       {"high_variance", r.trials < 30}});
    }
    return out;
}

}  // namespace distsampler::io
