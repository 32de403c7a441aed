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

#include "weilcodes/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace weilcodes {
namespace {

using nlohmann::json;  // object_t is std::map, so dumped keys come out sorted

json to_json(const FieldParams& params) {
  return json{
      {"e", params.e},           {"ell", params.ell},
      {"ell_k", params.ell_k},   {"ell_k1", params.ell_k1},
      {"exp_n", params.exp_n},   {"k", params.k},
      {"p", params.p},           {"q", params.q},
      {"two_ell_k", params.two_ell_k},
  };
}

json to_json(const CycInt& value) { return json::parse(value.to_json()); }

json to_json(const CodeSpec& spec) {
  if (spec.is_du()) {
    return json{{"type", "du"}, {"u", spec.u()}};
  }
  const BentProfile& prof = spec.profile();
  return json{{"epsilon", prof.epsilon},
              {"family", family_name(prof.candidate.family)},
              {"i", prof.candidate.i},
              {"type", "dprime"}};
}

json dist_rows(const WeightDistribution& dist) {
  json rows = json::array();
  for (const auto& [w, a] : dist.dist) rows.push_back(json::array({w, a}));
  return rows;
}

json to_json(const GriesmerResult& g) {
  return json{{"bound", g.bound}, {"meets", g.meets}};
}

json distribution_body(const CodeSpec& spec, const WeightDistribution& dist,
                       const GriesmerResult& griesmer) {
  return json{{"d", dist.d_min},     {"dim", dist.dim},
              {"dist", dist_rows(dist)}, {"griesmer", to_json(griesmer)},
              {"n", dist.n},         {"params", to_json(spec.params())},
              {"spec", to_json(spec)}};
}

}  // namespace

std::string params_document(const FieldParams& params) { return to_json(params).dump(); }

bool all_agree(const std::vector<WeilEntry>& entries) {
  return std::all_of(entries.begin(), entries.end(),
                     [](const WeilEntry& e) { return e.agree(); });
}

std::string weil_document(const FieldParams& params, const std::vector<int>& trace_of_xi,
                          const std::vector<WeilEntry>& entries) {
  json rows = json::array();
  for (const WeilEntry& e : entries) {
    json row{{"a", e.a}, {"agree", e.agree()}, {"i_b", e.i_b}, {"kind", e.kind}};
    if (e.brute) row["brute"] = to_json(*e.brute);
    if (e.closed) row["closed"] = to_json(*e.closed);
    rows.push_back(std::move(row));
  }
  json doc{{"agree", all_agree(entries)},
           {"entries", std::move(rows)},
           {"params", to_json(params)},
           {"trace_of_xi", trace_of_xi}};
  return doc.dump();
}

std::string bent_document(const FieldParams& params, const BentProfile& profile,
                          const std::vector<int64_t>& dual_levels) {
  json doc{{"dual_levels", dual_levels},
           {"epsilon", profile.epsilon},
           {"family", family_name(profile.candidate.family)},
           {"i", profile.candidate.i},
           {"k_f", profile.k_f},
           {"l_f", profile.l_f},
           {"params", to_json(params)}};
  return doc.dump();
}

std::string construct_document(const CodeSpec& spec, int64_t n) {
  json doc{{"n", n}, {"params", to_json(spec.params())}, {"spec", to_json(spec)}};
  return doc.dump();
}

std::string distribution_document(const CodeSpec& spec, const WeightDistribution& dist,
                                  const GriesmerResult& griesmer) {
  return distribution_body(spec, dist, griesmer).dump();
}

std::string prediction_document(const CodeSpec& spec, const Prediction& pred,
                                const GriesmerResult& griesmer) {
  json doc = distribution_body(spec, pred.dist, griesmer);
  doc["source"] = "theorem";
  doc["table"] = pred.table;
  return doc.dump();
}

std::string distribution_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "weight,frequency\n";
  for (const auto& [w, a] : dist.dist) out << w << ',' << a << '\n';
  return out.str();
}

DistributionDiff diff_distributions(const WeightDistribution& a, const WeightDistribution& b) {
  DistributionDiff diff;
  diff.same_shape = a.n == b.n && a.dim == b.dim;
  auto ia = a.dist.begin();
  auto ib = b.dist.begin();
  while (ia != a.dist.end() || ib != b.dist.end()) {
    if (ib == b.dist.end() || (ia != a.dist.end() && ia->first < ib->first)) {
      diff.rows.push_back({ia->first, ia->second, 0});
      ++ia;
    } else if (ia == a.dist.end() || ib->first < ia->first) {
      diff.rows.push_back({ib->first, 0, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) diff.rows.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return diff;
}

std::string verify_document(const CodeSpec& spec, const WeightDistribution& observed,
                            const Prediction& predicted, const GriesmerResult& griesmer,
                            const DistributionDiff& diff) {
  json diff_rows = json::array();
  for (const auto& row : diff.rows) diff_rows.push_back(json::array({row[0], row[1], row[2]}));
  json doc{{"agree", diff.agree()},
           {"d", observed.d_min},
           {"diff", std::move(diff_rows)},
           {"dim", observed.dim},
           {"n", observed.n},
           {"observed",
            json{{"d", observed.d_min},
                 {"dim", observed.dim},
                 {"dist", dist_rows(observed)},
                 {"n", observed.n}}},
           {"params", to_json(spec.params())},
           {"predicted",
            json{{"d", predicted.dist.d_min},
                 {"dim", predicted.dist.dim},
                 {"dist", dist_rows(predicted.dist)},
                 {"n", predicted.dist.n},
                 {"source", "theorem"},
                 {"table", predicted.table}}},
           {"griesmer", to_json(griesmer)},
           {"spec", to_json(spec)}};
  return doc.dump();
}

std::string sample_document(const CodeSpec& spec, const SampleReport& report,
                            const WeightDistribution& closed_dist,
                            const GriesmerResult& griesmer) {
  json mismatches = json::array();
  for (const SampleMismatch& m : report.mismatches) {
    mismatches.push_back(json{{"closed", m.closed},
                              {"delta_lg", m.delta_lg},
                              {"direct", m.direct},
                              {"gamma_lg", m.gamma_lg}});
  }
  json doc{{"agree", report.mismatches.empty()},
           {"d", closed_dist.d_min},
           {"dim", closed_dist.dim},
           {"griesmer", to_json(griesmer)},
           {"mismatches", std::move(mismatches)},
           {"n", closed_dist.n},
           {"params", to_json(spec.params())},
           {"samples", report.samples},
           {"seed", report.seed},
           {"spec", to_json(spec)},
           {"weights", report.weights}};
  return doc.dump();
}

}  // namespace weilcodes
