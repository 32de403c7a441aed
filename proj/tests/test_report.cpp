/*
 * Copyright 2026 The weilcodes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilcodes/bent.hpp"
#include "weilcodes/charsum.hpp"
#include "weilcodes/codes.hpp"
#include "weilcodes/cyclotomic.hpp"
#include "weilcodes/field.hpp"
#include "weilcodes/predict.hpp"
#include "weilcodes/report.hpp"

using namespace weilcodes;
using nlohmann::json;

namespace {

// Canonical form: one line, keys sorted — reparsing and dumping must be the
// identity on the emitted string.
void check_canonical(const std::string& doc) {
  CHECK(doc.find('\n') == std::string::npos);
  CHECK(doc == json::parse(doc).dump());
}

}  // namespace

TEST_CASE("params document is byte-frozen") {
  std::string doc = params_document(validate_params(5, 3, 1));
  CHECK(doc ==
        "{\"e\":2,\"ell\":3,\"ell_k\":3,\"ell_k1\":1,\"exp_n\":4,\"k\":1,\"p\":5,\"q\":25,"
        "\"two_ell_k\":6}");
  check_canonical(doc);
}

TEST_CASE("weil entries agree unless both modes are present and differ") {
  WeilEntry only_brute{"s", 1, 0, CycInt::integer(5, 3), std::nullopt};
  WeilEntry only_closed{"s", 1, 0, std::nullopt, CycInt::integer(5, 3)};
  WeilEntry both_same{"s", 1, 0, CycInt::integer(5, 3), CycInt::integer(5, 3)};
  WeilEntry both_diff{"s", 1, 0, CycInt::integer(5, 3), CycInt::integer(5, 4)};
  CHECK(only_brute.agree());
  CHECK(only_closed.agree());
  CHECK(both_same.agree());
  CHECK_FALSE(both_diff.agree());
  CHECK(all_agree({}));
  CHECK(all_agree({only_brute, both_same}));
  CHECK_FALSE(all_agree({both_same, both_diff}));
}

TEST_CASE("weil document layout") {
  FieldParams pr = validate_params(5, 3, 1);
  std::vector<WeilEntry> entries{
      {"period", 1, -1, CycInt::from_counts(5, std::vector<int64_t>{0, 2, 1, 1, 2}),
       CycInt::from_counts(5, std::vector<int64_t>{0, 2, 1, 1, 2})},
      {"w", 0, -1, std::nullopt, CycInt::integer(5, -24)},
  };
  std::string doc = weil_document(pr, {2, 1, 4, 3, 4, 1}, entries);
  check_canonical(doc);
  json parsed = json::parse(doc);
  CHECK(parsed["agree"] == true);
  CHECK(parsed["params"]["q"] == 25);
  CHECK(parsed["trace_of_xi"] == json::array({2, 1, 4, 3, 4, 1}));
  REQUIRE(parsed["entries"].size() == 2);
  CHECK(parsed["entries"][0]["kind"] == "period");
  CHECK(parsed["entries"][0]["a"] == 1);
  CHECK(parsed["entries"][0]["i_b"] == -1);
  CHECK(parsed["entries"][0]["agree"] == true);
  CHECK(parsed["entries"][0]["brute"] == parsed["entries"][0]["closed"]);
  CHECK(parsed["entries"][1]["closed"]["coeffs"][0] == -24);
  CHECK_FALSE(parsed["entries"][1].contains("brute"));

  entries[0].closed = CycInt::integer(5, 7);
  CHECK(json::parse(weil_document(pr, {2, 1, 4, 3, 4, 1}, entries))["agree"] == false);
}

TEST_CASE("bent document layout") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  BentProfile prof = extract_profile(f, {BentFamily::TraceAlphaKasami, 2});
  std::string doc = bent_document(*f.params(), prof, dual_level_counts(f, prof));
  check_canonical(doc);
  json parsed = json::parse(doc);
  CHECK(parsed["family"] == "alphakasami");
  CHECK(parsed["i"] == 2);
  CHECK(parsed["epsilon"] == 1);
  CHECK(parsed["k_f"] == 2);
  CHECK(parsed["l_f"] == 2);
  CHECK(parsed["dual_levels"] == json::array({9, 4, 4, 4, 4}));
  CHECK(parsed["params"]["p"] == 5);
}

TEST_CASE("construct document layout") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  const FieldParams& pr = *f.params();
  std::string doc = construct_document(CodeSpec::du(pr, 0), 124);
  check_canonical(doc);
  json parsed = json::parse(doc);
  CHECK(parsed["n"] == 124);
  CHECK(parsed["spec"]["type"] == "du");
  CHECK(parsed["spec"]["u"] == 0);

  auto prof = std::make_shared<BentProfile>(extract_profile(f, {BentFamily::TraceKasami, 2}));
  parsed = json::parse(construct_document(CodeSpec::dprime(pr, prof), 144));
  CHECK(parsed["spec"]["type"] == "dprime");
  CHECK(parsed["spec"]["family"] == "kasami");
  CHECK(parsed["spec"]["i"] == 2);
  CHECK(parsed["spec"]["epsilon"] == -1);
}

TEST_CASE("distribution, prediction, and verify documents") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  PartitionTables part = build_partition(f);
  CodeSpec spec = CodeSpec::du(*f.params(), 0);
  WeightDistribution observed = weight_distribution(spec, f, part, Method::Direct);
  GriesmerResult g = griesmer_check(observed.n, observed.dim, observed.d_min, 5);

  std::string doc = distribution_document(spec, observed, g);
  check_canonical(doc);
  json parsed = json::parse(doc);
  CHECK(parsed["n"] == 124);
  CHECK(parsed["d"] == 95);
  CHECK(parsed["dim"] == 4);
  CHECK(parsed["dist"] ==
        json::array({{0, 1}, {95, 96}, {100, 524}, {120, 4}}));
  CHECK(parsed["griesmer"]["bound"] == 119);
  CHECK(parsed["griesmer"]["meets"] == false);
  CHECK(parsed["params"]["p"] == 5);
  CHECK(parsed["spec"]["u"] == 0);

  Prediction pred = predict_distribution(spec);
  doc = prediction_document(spec, pred, g);
  check_canonical(doc);
  parsed = json::parse(doc);
  CHECK(parsed["source"] == "theorem");
  CHECK(parsed["table"] == "du_u0_ell_not1");
  CHECK(parsed["dist"] == json::array({{0, 1}, {95, 96}, {100, 524}, {120, 4}}));

  DistributionDiff diff = diff_distributions(observed, pred.dist);
  CHECK(diff.agree());
  doc = verify_document(spec, observed, pred, g, diff);
  check_canonical(doc);
  parsed = json::parse(doc);
  CHECK(parsed["agree"] == true);
  CHECK(parsed["diff"] == json::array());
  CHECK(parsed["observed"]["dist"] == parsed["predicted"]["dist"]);
  CHECK(parsed["predicted"]["table"] == "du_u0_ell_not1");
  CHECK(parsed["predicted"]["source"] == "theorem");
}

TEST_CASE("csv export is byte-frozen") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  PartitionTables part = build_partition(f);
  WeightDistribution dist =
      weight_distribution(CodeSpec::du(*f.params(), 0), f, part, Method::Closed);
  CHECK(distribution_csv(dist) == "weight,frequency\n0,1\n95,96\n100,524\n120,4\n");
}

TEST_CASE("distribution diff walks both spectra") {
  WeightDistribution a;
  a.dist = {{0, 1}, {95, 96}, {100, 524}, {120, 4}};
  a.n = 124;
  a.dim = 4;
  a.d_min = 95;

  CHECK(diff_distributions(a, a).agree());
  CHECK(diff_distributions(a, a).rows.empty());
  CHECK(diff_distributions(a, a).same_shape);

  WeightDistribution freq_off = a;
  freq_off.dist[95] = 95;
  DistributionDiff diff = diff_distributions(a, freq_off);
  CHECK(diff.same_shape);
  CHECK_FALSE(diff.agree());
  REQUIRE(diff.rows.size() == 1);
  CHECK(diff.rows[0] == std::array<int64_t, 3>{95, 96, 95});

  WeightDistribution moved = a;
  moved.dist.erase(120);
  moved.dist[119] = 4;
  diff = diff_distributions(a, moved);
  REQUIRE(diff.rows.size() == 2);
  CHECK(diff.rows[0] == std::array<int64_t, 3>{119, 0, 4});
  CHECK(diff.rows[1] == std::array<int64_t, 3>{120, 4, 0});

  WeightDistribution resized = a;
  resized.n = 125;
  CHECK_FALSE(diff_distributions(a, resized).same_shape);
  CHECK_FALSE(diff_distributions(a, resized).agree());
}

TEST_CASE("sample document layout") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  PartitionTables part = build_partition(f);
  CodeSpec spec = CodeSpec::du(*f.params(), 0);
  WeightDistribution closed = weight_distribution(spec, f, part, Method::Closed);
  GriesmerResult g = griesmer_check(closed.n, closed.dim, closed.d_min, 5);

  SampleReport report;
  report.seed = 7;
  report.samples = 3;
  report.weights = {100, 95, 100};
  std::string doc = sample_document(spec, report, closed, g);
  check_canonical(doc);
  json parsed = json::parse(doc);
  CHECK(parsed["agree"] == true);
  CHECK(parsed["seed"] == 7);
  CHECK(parsed["samples"] == 3);
  CHECK(parsed["weights"] == json::array({100, 95, 100}));
  CHECK(parsed["mismatches"] == json::array());
  CHECK(parsed["n"] == 124);

  report.mismatches.push_back({3, 5, 100, 101});
  parsed = json::parse(sample_document(spec, report, closed, g));
  CHECK(parsed["agree"] == false);
  REQUIRE(parsed["mismatches"].size() == 1);
  CHECK(parsed["mismatches"][0]["gamma_lg"] == 3);
  CHECK(parsed["mismatches"][0]["delta_lg"] == 5);
  CHECK(parsed["mismatches"][0]["direct"] == 100);
  CHECK(parsed["mismatches"][0]["closed"] == 101);
}
