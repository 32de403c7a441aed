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

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weilcodes/bent.hpp"
#include "weilcodes/charsum.hpp"
#include "weilcodes/codes.hpp"
#include "weilcodes/field.hpp"
#include "weilcodes/predict.hpp"
#include "weilcodes/report.hpp"

namespace {

using namespace weilcodes;

// Exit codes: 0 success / everything agrees, 1 a verified disagreement or a
// candidate failing certification (a finding, not a crash), 2 usage or
// parameter error, 3 the requested computation is too large for the ceiling.
constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kUsage = 2;
constexpr int kTooLarge = 3;

struct Options {
  int64_t p = 0;
  int64_t ell = 0;
  int64_t k = 0;
  int64_t u = 0;
  bool has_du = false;
  std::string family;
  int64_t i = 0;
  std::string method = "closed";
  int64_t samples = 100;
  uint64_t seed = 0;
  std::string format = "json";
  int64_t ceiling = 100000000;
};

void add_param_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--p", opt.p, "Characteristic p (odd prime)")->required();
  cmd->add_option("--ell", opt.ell, "Auxiliary odd prime ell")->required();
  cmd->add_option("--k", opt.k, "Exponent k of ell^k")->required();
}

void add_spec_flags(CLI::App* cmd, Options& opt) {
  auto* du = cmd->add_option("--du", opt.u, "Trace-level u of the Du construction");
  auto* dp = cmd->add_option("--dprime", opt.family,
                             "Bent family of the Dprime construction "
                             "(square, alphakasami, kasami, coulter)");
  cmd->add_option("--i", opt.i, "Exponent parameter of the bent family")->needs(dp);
  du->excludes(dp);
  dp->excludes(du);
}

void add_method_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--method", opt.method, "Evaluation method")
      ->check(CLI::IsMember({"direct", "closed", "both"}));
}

void add_format_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_ceiling_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--ceiling", opt.ceiling, "Largest q^2 direct enumeration may attempt");
}

bool wants_brute(const Options& opt) { return opt.method != "closed"; }
bool wants_closed(const Options& opt) { return opt.method != "direct"; }

CodeSpec spec_from_options(const Options& opt, const FieldTable& field) {
  if (opt.has_du) return CodeSpec::du(*field.params(), opt.u);
  if (opt.family.empty())
    throw Error("exactly one of --du and --dprime must be given");
  const BentCandidate cand{family_from_name(opt.family), opt.i};
  auto profile = std::make_shared<BentProfile>(extract_profile(field, cand));
  return CodeSpec::dprime(*field.params(), std::move(profile));
}

int run_params(const Options& opt) {
  std::cout << params_document(validate_params(opt.p, opt.ell, opt.k)) << "\n";
  return kOk;
}

int run_weil(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  const FieldTable field = build_field(params);
  const PartitionTables part = build_partition(field);

  // One b = 0 column plus one representative per residue class; the class of
  // alpha^((2L - i) mod 2L) is i.
  std::vector<FieldElement> reps;
  std::vector<int64_t> rep_class;
  reps.push_back(field.zero());
  rep_class.push_back(-1);
  for (int64_t i = 0; i < params.two_ell_k; ++i) {
    reps.push_back(field.from_log((params.two_ell_k - i) % params.two_ell_k));
    rep_class.push_back(i);
  }

  std::vector<WeilEntry> entries;
  // Brute S values are cached so the w rows below can be assembled from them
  // instead of re-enumerating the field once per (u, b) pair.
  std::vector<std::vector<CycInt>> s_brute(params.p);
  for (int64_t a = 0; a < params.p; ++a) {
    const FieldElement ae = field.from_residue(a);
    for (size_t j = 0; j < reps.size(); ++j) {
      WeilEntry e{"s", a, rep_class[j], {}, {}};
      if (wants_brute(opt)) {
        e.brute = weil_sum_bruteforce(field, ae, reps[j]);
        s_brute[a].push_back(*e.brute);
      }
      if (wants_closed(opt)) e.closed = weil_sum_closed(field, part, a, reps[j]);
      entries.push_back(std::move(e));
    }
  }
  for (int64_t a = 0; a < params.p; ++a) {
    WeilEntry e{"period", a, -1, {}, {}};
    if (wants_brute(opt)) e.brute = weil_sum_period(field, field.from_residue(a));
    if (wants_closed(opt)) e.closed = weil_sum_period_closed(params, a);
    entries.push_back(std::move(e));
  }
  for (int64_t u = 0; u < params.p; ++u) {
    for (size_t j = 0; j < reps.size(); ++j) {
      WeilEntry e{"w", u, rep_class[j], {}, {}};
      if (wants_brute(opt)) {
        // zeta^(-uz) S(z, b) accumulated at the coefficient level; the basis
        // coefficients are one valid count vector for the rotated sum.
        std::vector<int64_t> counts(params.p, 0);
        for (int64_t z = 1; z < params.p; ++z) {
          const int64_t shift = (((-u * z) % params.p) + params.p) % params.p;
          const std::vector<int64_t>& c = s_brute[z][j].coeffs();
          for (size_t t = 0; t < c.size(); ++t) counts[(t + shift) % params.p] += c[t];
        }
        e.brute = CycInt::from_counts(params.p, counts);
      }
      if (wants_closed(opt))
        e.closed = CycInt::integer(params.p,
                                   w_sum_closed_value(part, u, reps[j].is_zero(), rep_class[j]));
      entries.push_back(std::move(e));
    }
  }

  std::cout << weil_document(params, part.trace_of_xi, entries) << "\n";
  return all_agree(entries) ? kOk : kFinding;
}

int run_bent(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  if (opt.family.empty()) throw Error("bent requires --dprime naming the family");
  const FieldTable field = build_field(params);
  const BentCandidate cand{family_from_name(opt.family), opt.i};
  const BentProfile profile = extract_profile(field, cand);
  const std::vector<int64_t> levels = dual_level_counts(field, profile);
  std::cout << bent_document(params, profile, levels) << "\n";
  return kOk;
}

int run_construct(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  const FieldTable field = build_field(params);
  const CodeSpec spec = spec_from_options(opt, field);
  const DefiningSet ds = build_defining_set(spec, field, opt.ceiling);
  std::cout << construct_document(spec, ds.n()) << "\n";
  return kOk;
}

void print_distribution(const Options& opt, const CodeSpec& spec,
                        const WeightDistribution& dist) {
  const GriesmerResult g = griesmer_check(dist.n, dist.dim, dist.d_min, spec.params().p);
  if (opt.format == "csv")
    std::cout << distribution_csv(dist);
  else
    std::cout << distribution_document(spec, dist, g) << "\n";
}

WeightDistribution spectrum_by_method(const Options& opt, const CodeSpec& spec,
                                      const FieldTable& field, const PartitionTables& part) {
  if (opt.method == "direct")
    return weight_distribution(spec, field, part, Method::Direct, opt.ceiling);
  WeightDistribution closed = weight_distribution(spec, field, part, Method::Closed, opt.ceiling);
  if (opt.method == "both") {
    const WeightDistribution direct =
        weight_distribution(spec, field, part, Method::Direct, opt.ceiling);
    require_same_distribution(direct, closed);
  }
  return closed;
}

int run_spectrum(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  const FieldTable field = build_field(params);
  const PartitionTables part = build_partition(field);
  const CodeSpec spec = spec_from_options(opt, field);
  print_distribution(opt, spec, spectrum_by_method(opt, spec, field, part));
  return kOk;
}

int run_predict(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  const FieldTable field = build_field(params);
  const CodeSpec spec = spec_from_options(opt, field);
  const Prediction pred = predict_distribution(spec);
  const GriesmerResult g =
      griesmer_check(pred.dist.n, pred.dist.dim, pred.dist.d_min, params.p);
  if (opt.format == "csv")
    std::cout << distribution_csv(pred.dist);
  else
    std::cout << prediction_document(spec, pred, g) << "\n";
  return kOk;
}

int run_verify(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  const FieldTable field = build_field(params);
  const PartitionTables part = build_partition(field);
  const CodeSpec spec = spec_from_options(opt, field);
  const WeightDistribution observed = spectrum_by_method(opt, spec, field, part);
  const Prediction pred = predict_distribution(spec);
  const DistributionDiff diff = diff_distributions(observed, pred.dist);
  const GriesmerResult g =
      griesmer_check(observed.n, observed.dim, observed.d_min, params.p);
  std::cout << verify_document(spec, observed, pred, g, diff) << "\n";
  if (!diff.agree())
    std::cerr << "weilcodes: observed spectrum differs from the predicted one\n";
  return diff.agree() ? kOk : kFinding;
}

int run_sample(const Options& opt) {
  const FieldParams params = validate_params(opt.p, opt.ell, opt.k);
  const FieldTable field = build_field(params);
  const PartitionTables part = build_partition(field);
  const CodeSpec spec = spec_from_options(opt, field);
  const DefiningSet ds = build_defining_set(spec, field, opt.ceiling);
  const WeightDistribution closed =
      weight_distribution(spec, field, part, Method::Closed, opt.ceiling);
  const GriesmerResult g = griesmer_check(closed.n, closed.dim, closed.d_min, params.p);
  const SampleReport report = sample_verify(spec, field, part, ds, opt.samples, opt.seed);
  std::cout << sample_document(spec, report, closed, g) << "\n";
  if (report.mismatches.empty()) return kOk;
  const SampleMismatch& m = report.mismatches.front();
  std::cerr << "weilcodes: direct weight " << m.direct << " != closed weight " << m.closed
            << " at logs (" << m.gamma_lg << ", " << m.delta_lg << ")\n";
  return kFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Few-weight code constructions from binomial character sums"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* params_cmd = app.add_subcommand("params", "Validate (p, ell, k) and print the derived field parameters");
  add_param_flags(params_cmd, opt);

  CLI::App* weil_cmd = app.add_subcommand("weil", "Evaluate the character sums over F_q by brute force and closed form");
  add_param_flags(weil_cmd, opt);
  add_method_flag(weil_cmd, opt);

  CLI::App* bent_cmd = app.add_subcommand("bent", "Certify a bent candidate and print its profile");
  add_param_flags(bent_cmd, opt);
  add_spec_flags(bent_cmd, opt);

  CLI::App* construct_cmd = app.add_subcommand("construct", "Materialize the defining set and print its size");
  add_param_flags(construct_cmd, opt);
  add_spec_flags(construct_cmd, opt);
  add_ceiling_flag(construct_cmd, opt);

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Compute the weight distribution");
  add_param_flags(spectrum_cmd, opt);
  add_spec_flags(spectrum_cmd, opt);
  add_method_flag(spectrum_cmd, opt);
  add_format_flag(spectrum_cmd, opt);
  add_ceiling_flag(spectrum_cmd, opt);

  CLI::App* predict_cmd = app.add_subcommand("predict", "Evaluate the predicted weight distribution");
  add_param_flags(predict_cmd, opt);
  add_spec_flags(predict_cmd, opt);
  add_format_flag(predict_cmd, opt);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Compare the computed spectrum against the prediction");
  add_param_flags(verify_cmd, opt);
  add_spec_flags(verify_cmd, opt);
  add_method_flag(verify_cmd, opt);
  add_ceiling_flag(verify_cmd, opt);

  CLI::App* sample_cmd = app.add_subcommand("sample", "Check random codewords against the closed-form weights");
  add_param_flags(sample_cmd, opt);
  add_spec_flags(sample_cmd, opt);
  add_ceiling_flag(sample_cmd, opt);
  sample_cmd->add_option("--samples", opt.samples, "Number of sampled codewords");
  sample_cmd->add_option("--seed", opt.seed, "Seed of the sampling generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  for (CLI::App* cmd : {construct_cmd, spectrum_cmd, predict_cmd, verify_cmd, sample_cmd})
    opt.has_du = opt.has_du || cmd->count("--du") > 0;

  try {
    if (params_cmd->parsed()) return run_params(opt);
    if (weil_cmd->parsed()) return run_weil(opt);
    if (bent_cmd->parsed()) return run_bent(opt);
    if (construct_cmd->parsed()) return run_construct(opt);
    if (spectrum_cmd->parsed()) return run_spectrum(opt);
    if (predict_cmd->parsed()) return run_predict(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (sample_cmd->parsed()) return run_sample(opt);
    return kUsage;
  } catch (const CeilingExceededError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kTooLarge;
  } catch (const OverflowError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kTooLarge;
  } catch (const NotBentError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const NotWeaklyRegularError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const DualNotQuadraticError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const NotHomogeneousError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const CountMismatchError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const MethodDisagreementError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const VerificationFailedError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const SizeMismatchError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const NonIntegerEntryError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const InternalInconsistencyError& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kFinding;
  } catch (const Error& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "weilcodes: " << e.what() << "\n";
    return kUsage;
  }
}
