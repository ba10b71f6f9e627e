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

#include <gtest/gtest.h>

#include <sstream>

#include "distsampler/errors.hpp"
#include "distsampler/json_io.hpp"

using namespace distsampler;

TEST(MatrixJson, RoundTripIsExact) {
    const ComplexMatrix u = haar_unitary(5, 3);
    const auto j = io::matrix_to_json(u);
    EXPECT_EQ(j["rows"], 5);
    EXPECT_EQ(j["re"].size(), 25u);
    EXPECT_EQ(io::matrix_from_json(io::json::parse(j.dump())), u);
}

TEST(MatrixJson, RejectsMalformedDocuments) {
    EXPECT_THROW(io::matrix_from_json(io::json::parse(R"({"rows":2,"cols":2,"re":[1,2,3],"im":[0,0,0]})")), Error);
    EXPECT_THROW(io::matrix_from_json(io::json::parse(R"({"rows":1,"cols":1,"re":[1]})")), Error);
    EXPECT_THROW(io::matrix_from_json(io::json::parse(R"({"rows":-1,"cols":1,"re":[1],"im":[0]})")), Error);
    EXPECT_THROW(io::matrix_from_json(io::json::parse(R"([1,2])")), Error);
    EXPECT_THROW(io::matrix_from_json(io::json::parse(R"({"rows":1,"cols":1,"re":["a"],"im":[0]})")), Error);
}

TEST(OverlapJson, RealAndComplexForms) {
    const auto real = io::overlap_from_json(io::json::parse(R"({"n":2,"re":[1,0.5,0.5,1]})"));
    EXPECT_FALSE(real.is_uniform());
    EXPECT_EQ(real.s()(0, 1), Complex(0.5, 0.0));
    const auto cplx = io::overlap_from_json(io::json::parse(R"({"n":2,"re":[1,0.3,0.3,1],"im":[0,0.4,-0.4,0]})"));
    EXPECT_EQ(cplx.s()(1, 0), Complex(0.3, -0.4));
    EXPECT_TRUE(validate_model(cplx).ok());
    const auto back = io::overlap_from_json(io::overlap_to_json(cplx.s()));
    EXPECT_EQ(back.s(), cplx.s());
}

TEST(ScanCsv, HeadersMatchSchema) {
    std::ostringstream es;
    io::write_error_scan_csv(es, {ErrorScanRow{0.5, 2, 0.1, 0.05, 10}});
    EXPECT_EQ(es.str().substr(0, es.str().find('\n')), "x,k,rms_rel_error,trials,mean_abs_rel_error");
    EXPECT_NE(es.str().find("0.5,2,0.10000000000000001,10,"), std::string::npos);

    std::ostringstream cs;
    io::write_coefficient_scan_csv(cs, {CoefficientScanRow{2, 0.6, 0.4, 0.5, 1}});
    EXPECT_EQ(cs.str().substr(0, cs.str().find('\n')), "j,rms_normalized,mean_abs_normalized,reference,trials,high_variance");
    EXPECT_NE(cs.str().find(",1,1\n"), std::string::npos);
}
