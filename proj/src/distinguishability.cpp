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

#include "distsampler/distinguishability.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "distsampler/errors.hpp"

namespace distsampler {

DistinguishabilityModel DistinguishabilityModel::uniform(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::InvalidInput, "invalid input: indistinguishability x must lie in [0, 1]");
    }
    return DistinguishabilityModel(UniformOverlap{x});
}

DistinguishabilityModel DistinguishabilityModel::general(ComplexMatrix s) {
    return DistinguishabilityModel(GeneralOverlap{std::move(s)});
}

std::optional<std::size_t> DistinguishabilityModel::dimension() const {
    if (is_uniform()) return std::nullopt;
    return s().rows();
}

ComplexMatrix DistinguishabilityModel::overlap_matrix(std::size_t n) const {
    if (!is_uniform()) {
        if (s().rows() != n) throw Error(ErrorKind::InvalidInput, "invalid input: overlap matrix dimension mismatch");
        return s();
    }
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = r == c ? 1.0 : x();
    return out;
}

ValidationReport validate_model(const DistinguishabilityModel &model) {
    ValidationReport report;
    auto fail = [&](const std::string &what, double residual) {
        std::ostringstream os;
        os << what << " (residual " << residual << ")";
        report.violations.push_back(os.str());
    };
    if (model.is_uniform()) {
        const double x = model.x();
        if (!(x >= 0.0 && x <= 1.0)) fail("x outside [0, 1]", x);
        return report;
    }
    const ComplexMatrix &s = model.s();
    if (!s.is_square()) {
        report.violations.push_back("S is not square");
        return report;
    }
    const std::size_t n = s.rows();
    double herm = 0.0, diag = 0.0, mag = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        diag = std::max(diag, std::abs(s(r, r) - 1.0));
        for (std::size_t c = 0; c < n; ++c) {
            herm = std::max(herm, std::abs(s(r, c) - std::conj(s(c, r))));
            mag = std::max(mag, std::abs(s(r, c)) - 1.0);
        }
    }
    if (herm > 1e-12) fail("S is not Hermitian", herm);
    if (diag != 0.0) fail("S_ii != 1", diag);
    if (mag > 0.0) fail("|S_ij| > 1", mag + 1.0);
    if (herm <= 1e-12 && n > 0) {
        Eigen::MatrixXcd e(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) e(r, c) = s(r, c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
        const double lowest = solver.eigenvalues().minCoeff();
        if (lowest < -1e-10) fail("S is not positive semidefinite", lowest);
    }
    return report;
}

void require_valid(const DistinguishabilityModel &model) {
    const ValidationReport report = validate_model(model);
    if (report.ok()) return;
    std::string msg = "invalid input: distinguishability model";
    for (const auto &v : report.violations) msg += "; " + v;
    throw Error(ErrorKind::InvalidInput, msg);
}

Complex overlap_weight(const DistinguishabilityModel &model, const Permutation &sigma) {
    if (model.is_uniform()) {
        return std::pow(model.x(), static_cast<double>(sigma.displaced_count()));
    }
    const ComplexMatrix &s = model.s();
    if (s.rows() != sigma.size() || !s.is_square()) {
        throw Error(ErrorKind::InvalidInput, "invalid input: permutation does not match overlap matrix");
    }
    Complex w(1.0, 0.0);
    for (std::size_t j = 0; j < sigma.size(); ++j) w *= s(sigma[j], j);
    return w;
}

}  // namespace distsampler
