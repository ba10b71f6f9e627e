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

#ifndef DISTSAMPLER_JSON_IO_HPP
#define DISTSAMPLER_JSON_IO_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "distsampler/distinguishability.hpp"
#include "distsampler/matrix.hpp"
#include "distsampler/scan.hpp"
#include "json.hpp"

namespace distsampler::io {

using nlohmann::json;

/// {"rows":R,"cols":C,"re":[...],"im":[...]}, row-major.
json matrix_to_json(const ComplexMatrix &m);
/// Throws InvalidInput on a malformed document.
ComplexMatrix matrix_from_json(const json &j);

/// {"n":n,"re":[...],"im":[...]}; "im" may be omitted for a real S.
json overlap_to_json(const ComplexMatrix &s);
DistinguishabilityModel overlap_from_json(const json &j);

json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

/// Header: x,k,rms_rel_error,trials. Extra column mean_abs_rel_error appended.
void write_error_scan_csv(std::ostream &os, const std::vector<ErrorScanRow> &rows);
json error_scan_to_json(const std::vector<ErrorScanRow> &rows);

/// Header: j,rms_normalized,mean_abs_normalized,reference,trials,high_variance.
void write_coefficient_scan_csv(std::ostream &os, const std::vector<CoefficientScanRow> &rows);
json coefficient_scan_to_json(const std::vector<CoefficientScanRow> &rows);

}  // namespace distsampler::io

#endif
