// Copyright 2026 The Bicap Authors
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

// bicap: evaluate, transform, validate and cross-check set functions stored
// as JSON. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 2 unreadable input or bad flags, 3 validation
// failure, 4 method or transform not applicable to the model kind,
// 5 2-additive path on a model that is not 2-additive.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicap/errors.hpp"
#include "bicap/integrals.hpp"
#include "bicap/io.hpp"
#include "bicap/random.hpp"
#include "bicap/transforms.hpp"
#include "bicap/validation.hpp"

namespace {

using namespace bicap;

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitKind = 4;
constexpr int kExitNotTwoAdditive = 5;

class KindMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
  return buf;
}

[[noreturn]] void mismatch(const std::string& what, const Model& model) {
  throw KindMismatch(what + " does not apply to a model of kind \"" + model_kind(model) + "\"");
}

template <typename T>
const T& expect(const Model& model, const std::string& what) {
  if (const T* x = std::get_if<T>(&model)) return *x;
  mismatch(what, model);
}

// Structural validation of a model; empty report for kinds without one.
ValidationReport structural_report(const Model& model, double tol) {
  if (const auto* c = std::get_if<Capacity>(&model)) return validate_capacity(*c, tol);
  if (const auto* v = std::get_if<BiCapacity>(&model)) return validate_bicapacity(*v, tol);
  if (const auto* z = std::get_if<BipolarCapacity>(&model)) return validate_bipolar(*z, tol);
  if (const auto* cpt_model = std::get_if<CptModel>(&model)) {
    ValidationReport report = validate_capacity(cpt_model->plus(), tol);
    for (Violation v : validate_capacity(cpt_model->minus(), tol).violations) {
      v.where = "minus part: " + v.where;
      report.violations.push_back(v);
    }
    return report;
  }
  return {};
}

void print_report(const ValidationReport& report, std::ostream& out) {
  for (const Violation& v : report.violations) {
    out << v.kind << ' ' << v.where << ' ' << fmt(v.amount) << '\n';
  }
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("BICAP_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError("BICAP_SEED is not an unsigned integer");
  }
}

struct EvalOptions {
  std::string model_path;
  std::string act_path;
  std::string method;
  std::string form = "auto";
  std::vector<int> sigma;
  bool no_validate = false;
  std::string zero_sign = "positive";
};

int run_eval(const EvalOptions& opt) {
  const Model model = load_model(opt.model_path);
  const Act f = load_act(opt.act_path);
  if (!opt.no_validate) {
    const ValidationReport report = structural_report(model, kDefaultTolerance);
    if (!report.ok()) {
      std::cerr << "model failed validation:\n";
      print_report(report, std::cerr);
      return kExitInvalid;
    }
  }
  const ZeroSign zero_sign =
      opt.zero_sign == "negative" ? ZeroSign::kNegative : ZeroSign::kPositive;
  const std::string& m = opt.method;
  double value = 0;
  if (m == "choquet") {
    const Capacity& c = expect<Capacity>(model, "method choquet");
    if (!f.nonnegative()) {
      std::cerr << "method choquet needs a nonnegative act\n";
      return kExitInvalid;
    }
    value = choquet(c.game(), f);
  } else if (m == "symmetric") {
    value = choquet_symmetric(expect<Capacity>(model, "method symmetric"), f);
  } else if (m == "asymmetric") {
    value = choquet_asymmetric(expect<Capacity>(model, "method asymmetric"), f);
  } else if (m == "cpt") {
    value = cpt(expect<CptModel>(model, "method cpt"), f);
  } else if (m == "bicap") {
    if (const auto* cpt_model = std::get_if<CptModel>(&model)) {
      value = bicap_choquet(cpt_model->bigame(), f, zero_sign);
    } else {
      value = bicap_choquet(expect<BiCapacity>(model, "method bicap"), f, zero_sign);
    }
  } else if (m == "bicap-mobius") {
    if (const auto* v = std::get_if<BiCapacity>(&model)) {
      value = bicap_choquet_mobius(bimobius(v->game()), f);
    } else {
      const auto& rep = expect<MobiusRep>(model, "method bicap-mobius");
      if (!rep.on_pairs()) mismatch("method bicap-mobius on a subset Möbius transform", model);
      value = bicap_choquet_mobius(rep, f);
    }
  } else if (m == "bicap-2add") {
    if (const auto* interaction = std::get_if<InteractionRep>(&model)) {
      if (!interaction->on_pairs()) {
        mismatch("method bicap-2add on a capacity interaction", model);
      }
      const InteractionForm form =
          opt.form == "signed" ? InteractionForm::kSigned : InteractionForm::kPlain;
      value = bicap_choquet_2additive(*interaction, f, form);
    } else {
      MobiusRep rep = std::holds_alternative<BiCapacity>(model)
                          ? bimobius(std::get<BiCapacity>(model).game())
                          : expect<MobiusRep>(model, "method bicap-2add");
      if (!rep.on_pairs()) mismatch("method bicap-2add on a subset Möbius transform", model);
      if (opt.form == "plain" || opt.form == "signed") {
        const InteractionForm form =
            opt.form == "signed" ? InteractionForm::kSigned : InteractionForm::kPlain;
        value = bicap_choquet_2additive(twoadd_I_from_m(rep), f, form);
      } else {
        value = bicap_choquet_2additive(rep, f);
      }
    }
  } else if (m == "bipolar") {
    const auto& z = expect<BipolarCapacity>(model, "method bipolar");
    std::vector<int> sigma;
    for (int c : opt.sigma) sigma.push_back(c - 1);
    const BipolarValue r = bipolar_choquet(z, f, sigma);
    std::cout << fmt(r.total) << ' ' << fmt(r.plus) << ' ' << fmt(r.minus) << '\n';
    return 0;
  }
  std::cout << fmt(value) << '\n';
  return 0;
}

int run_transform(const std::string& model_path, const std::string& to) {
  const Model model = load_model(model_path);
  Json out;
  if (to == "mobius") {
    if (const auto* c = std::get_if<Capacity>(&model)) {
      out = to_json(mobius(*c));
    } else {
      out = to_json(bimobius(expect<BiCapacity>(model, "transform mobius").game()));
    }
  } else if (to == "comobius") {
    out = to_json(comobius(expect<Capacity>(model, "transform comobius")));
  } else if (to == "interaction") {
    if (const auto* c = std::get_if<Capacity>(&model)) {
      out = to_json(interaction(*c));
    } else if (const auto* rep = std::get_if<MobiusRep>(&model)) {
      out = rep->on_pairs() ? to_json(biinteraction(*rep)) : to_json(interaction(zeta(*rep)));
    } else {
      out = to_json(biinteraction(expect<BiCapacity>(model, "transform interaction").game()));
    }
  } else if (to == "2add-I") {
    MobiusRep rep = std::holds_alternative<BiCapacity>(model)
                        ? bimobius(std::get<BiCapacity>(model).game())
                        : expect<MobiusRep>(model, "transform 2add-I");
    if (!rep.on_pairs()) mismatch("transform 2add-I on a subset Möbius transform", model);
    out = to_json(twoadd_I_from_m(rep));
  } else if (to == "2add-m") {
    const auto& rep = expect<InteractionRep>(model, "transform 2add-m");
    if (!rep.on_pairs()) mismatch("transform 2add-m on a capacity interaction", model);
    out = to_json(twoadd_m_from_I(rep));
  } else if (to == "zeta") {
    const auto& rep = expect<MobiusRep>(model, "transform zeta");
    out = rep.on_pairs() ? to_json(BiCapacity(bi_zeta(rep))) : to_json(Capacity(zeta(rep)));
  }
  std::cout << out.dump(1) << '\n';
  return 0;
}

int run_validate(const std::string& model_path, double tol) {
  const Model model = load_model(model_path);
  ValidationReport report;
  if (const auto* rep = std::get_if<MobiusRep>(&model)) {
    if (rep->on_pairs()) {
      report = is_two_additive(*rep, tol) ? check_mobius_validity(*rep, tol)
                                          : validate_bicapacity(BiCapacity(bi_zeta(*rep)), tol);
    } else {
      report = validate_capacity(Capacity(zeta(*rep)), tol);
    }
  } else if (const auto* rep = std::get_if<InteractionRep>(&model)) {
    if (!rep->on_pairs()) mismatch("validate on a capacity interaction", model);
    report = check_interaction_validity(*rep, tol);
  } else if (std::holds_alternative<CoMobiusRep>(model)) {
    mismatch("validate", model);
  } else {
    report = structural_report(model, tol);
    if (const auto* z = std::get_if<BipolarCapacity>(&model)) {
      for (const Violation& v : check_eb(*z, tol).violations) report.violations.push_back(v);
    }
  }
  if (report.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  print_report(report, std::cout);
  return kExitInvalid;
}

int run_reduce(const std::string& model_path, double tol) {
  const Model model = load_model(model_path);
  const auto& z = expect<BipolarCapacity>(model, "reduce");
  const ValidationReport report = check_eb(z, tol);
  if (!report.ok()) {
    std::cerr << "bipolar capacity cannot be reduced:\n";
    print_report(report, std::cerr);
    return kExitInvalid;
  }
  std::cout << to_json(reduce_bipolar(z, tol)).dump(1) << '\n';
  return 0;
}

// Named evaluation paths for one act; all of them must agree.
using PathSet = std::vector<std::pair<std::string, std::function<double(const Act&)>>>;

PathSet crosscheck_paths(const Model& model) {
  PathSet paths;
  auto add_bicap = [&paths](const BiGame& v) {
    const MobiusRep m = bimobius(v);
    paths.emplace_back("definition", [v](const Act& f) { return bicap_choquet(v, f); });
    paths.emplace_back("telescoping",
                       [v](const Act& f) { return bicap_choquet_telescoping(v, f); });
    paths.emplace_back("mobius", [m](const Act& f) { return bicap_choquet_mobius(m, f); });
    if (is_two_additive(m, 1e-9)) {
      const InteractionRep interaction = twoadd_I_from_m(m);
      paths.emplace_back("2add-mobius", [m](const Act& f) { return bicap_choquet_2additive(m, f); });
      paths.emplace_back("2add-plain", [interaction](const Act& f) {
        return bicap_choquet_2additive(interaction, f, InteractionForm::kPlain);
      });
      paths.emplace_back("2add-signed", [interaction](const Act& f) {
        return bicap_choquet_2additive(interaction, f, InteractionForm::kSigned);
      });
    }
  };
  auto add_cpt = [&](const CptModel& cpt_model) {
    add_bicap(cpt_model.bigame());
    paths.emplace_back("cpt", [cpt_model](const Act& f) { return cpt(cpt_model, f); });
    paths.emplace_back("cpt-explicit",
                       [cpt_model](const Act& f) { return cpt_explicit(cpt_model, f); });
    paths.emplace_back("cpt-mobius",
                       [cpt_model](const Act& f) { return cpt_mobius(cpt_model, f); });
    paths.emplace_back("cpt-comobius",
                       [cpt_model](const Act& f) { return cpt_comobius(cpt_model, f); });
    if (is_k_additive(mobius(cpt_model.plus()), 2, 1e-9) &&
        is_k_additive(mobius(cpt_model.minus()), 2, 1e-9)) {
      paths.emplace_back("cpt-2add",
                         [cpt_model](const Act& f) { return cpt_2additive(cpt_model, f); });
    }
  };
  if (const auto* v = std::get_if<BiCapacity>(&model)) {
    add_bicap(v->game());
  } else if (const auto* rep = std::get_if<MobiusRep>(&model)) {
    if (!rep->on_pairs()) mismatch("crosscheck on a subset Möbius transform", model);
    add_bicap(bi_zeta(*rep));
  } else if (const auto* cpt_model = std::get_if<CptModel>(&model)) {
    add_cpt(*cpt_model);
  } else if (const auto* c = std::get_if<Capacity>(&model)) {
    // Asymmetric and symmetric integrals are CPT models with (nu, nubar), (nu, nu).
    const Capacity cap = *c;
    const CptModel asym(cap, conjugate(cap));
    paths.emplace_back("asymmetric", [cap](const Act& f) { return choquet_asymmetric(cap, f); });
    paths.emplace_back("asymmetric-cpt", [asym](const Act& f) { return cpt(asym, f); });
    paths.emplace_back("asymmetric-bicap",
                       [asym](const Act& f) { return bicap_choquet(asym.bigame(), f); });
    PathSet sym;
    const CptModel symm(cap, cap);
    sym.emplace_back("symmetric", [cap](const Act& f) { return choquet_symmetric(cap, f); });
    sym.emplace_back("symmetric-cpt", [symm](const Act& f) { return cpt(symm, f); });
    sym.emplace_back("symmetric-bicap",
                     [symm](const Act& f) { return bicap_choquet(symm.bigame(), f); });
    // Two groups: residuals are taken within each group, so append with a
    // marker the caller understands.
    paths.emplace_back("|", nullptr);
    paths.insert(paths.end(), sym.begin(), sym.end());
  } else if (const auto* z = std::get_if<BipolarCapacity>(&model)) {
    if (check_eb(*z).ok()) {
      const BipolarCapacity zz = *z;
      const BiGame v = reduce_bipolar(zz).game();
      paths.emplace_back("bipolar", [zz](const Act& f) { return bipolar_choquet(zz, f).total; });
      paths.emplace_back("reduced", [v](const Act& f) { return bicap_choquet(v, f); });
    } else {
      mismatch("crosscheck on a bipolar capacity violating the unambiguity condition", model);
    }
  } else {
    mismatch("crosscheck", model);
  }
  return paths;
}

int run_crosscheck(const std::string& model_path, int acts, std::optional<std::uint64_t> seed) {
  const Model model = load_model(model_path);
  const int n = std::visit([](const auto& x) { return x.ground_set().size(); }, model);
  const std::uint64_t base = seed ? *seed : env_seed().value_or(1);
  const PathSet paths = crosscheck_paths(model);

  std::vector<Act> sample;
  for (int k = 0; k < acts; ++k) {
    sample.push_back(k % 4 == 3 ? generate_tied_act(n, base + k) : generate_random_act(n, base + k));
  }
  double worst = 0;
  std::size_t group_start = 0;
  while (group_start < paths.size()) {
    std::size_t group_end = group_start;
    while (group_end < paths.size() && paths[group_end].second) ++group_end;
    for (const Act& f : sample) {
      double lo = INFINITY;
      double hi = -INFINITY;
      for (std::size_t p = group_start; p < group_end; ++p) {
        const double x = paths[p].second(f);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      if (group_end > group_start) worst = std::max(worst, hi - lo);
    }
    group_start = group_end + 1;
  }
  std::cout << "paths";
  for (const auto& [name, fn] : paths) {
    if (fn) std::cout << ' ' << name;
  }
  std::cout << "\nacts " << acts << "\nseed " << base << "\nmax_residual " << fmt(worst) << '\n';
  if (worst > 1e-9) {
    std::cerr << "paths disagree beyond 1e-9\n";
    return kExitInvalid;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Choquet integrals, bi-capacities and their transforms"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an integral of an act");
  eval_cmd->add_option("model", eval.model_path, "Model JSON file")->required();
  eval_cmd->add_option("act", eval.act_path, "Act JSON file")->required();
  eval_cmd->add_option("--method", eval.method, "Integral to compute")
      ->required()
      ->check(CLI::IsMember({"choquet", "symmetric", "asymmetric", "cpt", "bicap", "bicap-mobius",
                             "bicap-2add", "bipolar"}));
  eval_cmd->add_option("--form", eval.form, "Closed form for bicap-2add")
      ->check(CLI::IsMember({"auto", "mobius", "plain", "signed"}));
  eval_cmd->add_option("--sigma", eval.sigma, "Permutation (1-based) for bipolar")->delimiter(',');
  eval_cmd->add_option("--zero-sign", eval.zero_sign, "Side of zero entries for bicap")
      ->check(CLI::IsMember({"positive", "negative"}));
  eval_cmd->add_flag("--no-validate", eval.no_validate, "Skip structural validation");

  std::string transform_path;
  std::string transform_to;
  auto* transform_cmd = app.add_subcommand("transform", "Transform a model");
  transform_cmd->add_option("model", transform_path, "Model JSON file")->required();
  transform_cmd->add_option("--to", transform_to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"mobius", "comobius", "interaction", "2add-I", "2add-m", "zeta"}));

  std::string validate_path;
  double validate_tol = kDefaultTolerance;
  auto* validate_cmd = app.add_subcommand("validate", "Check a model's defining conditions");
  validate_cmd->add_option("model", validate_path, "Model JSON file")->required();
  validate_cmd->add_option("--tol", validate_tol, "Absolute tolerance");

  std::string reduce_path;
  double reduce_tol = kDefaultTolerance;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a bipolar capacity to a bi-capacity");
  reduce_cmd->add_option("model", reduce_path, "Bipolar capacity JSON file")->required();
  reduce_cmd->add_option("--tol", reduce_tol, "Absolute tolerance");

  std::string cross_path;
  int cross_acts = 100;
  std::optional<std::uint64_t> cross_seed;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare every formula path on random acts");
  cross_cmd->add_option("model", cross_path, "Model JSON file")->required();
  cross_cmd->add_option("--acts", cross_acts, "Number of random acts")->check(CLI::PositiveNumber);
  cross_cmd->add_option("--seed", cross_seed, "Seed (default: $BICAP_SEED, else 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*transform_cmd) return run_transform(transform_path, transform_to);
    if (*validate_cmd) return run_validate(validate_path, validate_tol);
    if (*reduce_cmd) return run_reduce(reduce_path, reduce_tol);
    if (*cross_cmd) return run_crosscheck(cross_path, cross_acts, cross_seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const KindMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitKind;
  } catch (const GroundSetMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitKind;
  } catch (const NotTwoAdditiveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotTwoAdditive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
