// frameforge: a workbench for finite Boolean frames. One subcommand per
// library capability; every command emits a deterministic report (text or
// JSON) and encodes its outcome in the exit status:
//   0  command ran, checked property holds (or plain computation succeeded)
//   1  checked property fails (witness in the report)
//   2  usage error, parse error, malformed input
//   3  budget exceeded / inconclusive

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frameforge/cep.hpp"
#include "frameforge/check.hpp"
#include "frameforge/claims.hpp"
#include "frameforge/clone.hpp"
#include "frameforge/congruence.hpp"
#include "frameforge/corpus.hpp"
#include "frameforge/json_io.hpp"
#include "frameforge/structure.hpp"
#include "frameforge/term.hpp"

namespace ff = frameforge;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
  std::vector<std::string> builtin;
  std::vector<std::string> input;
  std::string format = "text";
  std::string out;
  int max_atoms = ff::default_max_atoms();
  std::uint64_t clone_cap = std::uint64_t(1) << 20;
  std::uint64_t eval_budget = std::uint64_t(1) << 26;
  std::uint64_t seed = 0;
  bool timing = false;
};

std::uint64_t env_seed() {
  if (const char* s = std::getenv("FRAMEFORGE_SEED"))
    return std::strtoull(s, nullptr, 10);
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_frames = true) {
  if (with_frames) {
    cmd->add_option("--builtin", opts.builtin,
                    "builtin frame spec (example1, example-sh, cycle:N, "
                    "wheel:N, two:FT)");
    cmd->add_option("--input", opts.input,
                    "frame or Kripke JSON file (repeatable)");
  }
  cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out, "write the report to a file");
  cmd->add_option("--max-atoms", opts.max_atoms, "atom cap for frames");
  cmd->add_option("--clone-cap", opts.clone_cap, "unary clone member cap");
  cmd->add_option("--eval-budget", opts.eval_budget,
                  "exhaustive evaluation budget");
  cmd->add_option("--seed", opts.seed,
                  "seed for sampling and corpora (default FRAMEFORGE_SEED)");
  cmd->add_flag("--timing", opts.timing, "record wall time in the report");
}

std::vector<ff::BooleanFrame> resolve_frames(const CommonOptions& opts,
                                             std::size_t need) {
  std::vector<ff::BooleanFrame> frames;
  for (const auto& spec : opts.builtin)
    frames.push_back(ff::builtin_frame(spec, opts.max_atoms));
  for (const auto& path : opts.input)
    frames.push_back(ff::load_frame_file(path, opts.max_atoms));
  if (frames.size() != need)
    throw ff::Error(ff::Errc::UnknownSpec,
                    "expected " + std::to_string(need) + " frame" +
                        (need == 1 ? "" : "s") + ", got " +
                        std::to_string(frames.size()) +
                        " (use --builtin/--input)");
  return frames;
}

ff::Json params_json(const CommonOptions& opts) {
  ff::Json p = ff::Json::object();
  if (!opts.builtin.empty()) p["builtin"] = opts.builtin;
  if (!opts.input.empty()) p["input"] = opts.input;
  p["seed"] = opts.seed;
  p["max_atoms"] = opts.max_atoms;
  return p;
}

void emit(const ff::Report& report, const CommonOptions& opts) {
  const std::string text = opts.format == "json"
                               ? report.to_json().dump(2) + "\n"
                               : report.to_text();
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out);
    if (!f)
      throw ff::Error(ff::Errc::UnknownSpec,
                      "cannot write to '" + opts.out + "'");
    f << text;
  }
}

ff::Json cep_witness_json(const ff::CepVerdict& v) {
  if (!v.witness) return {};
  ff::Json w = ff::Json::object();
  w["subalgebra"] = v.witness->sub.elements;
  w["generator"] = v.witness->generator;
  return w;
}

ff::Json verdict_witness_json(const ff::Verdict& v) {
  if (!v.counterexample) return {};
  ff::Json w = ff::Json::object();
  w["assignment"] = ff::assignment_to_json(*v.counterexample);
  return w;
}

int run_check(const CommonOptions& opts, const std::string& formula,
              const std::string& property, bool exhaustive,
              ff::Report& report) {
  const auto frame = resolve_frames(opts, 1)[0];
  report.frame = ff::frame_to_json(frame);
  ff::CheckOptions copts;
  copts.eval_budget = opts.eval_budget;
  copts.seed = opts.seed;
  copts.force_exhaustive = exhaustive;

  ff::Verdict verdict;
  std::string name;
  if (!property.empty()) {
    verdict = ff::builtin_property(frame, property, copts);
    name = property;
    report.params["property"] = property;
    report.params["formula"] = ff::to_string(ff::property_formula(property));
  } else {
    const ff::QuasiIdentity q = ff::parse_quasi_identity(formula);
    verdict = ff::check_quasi_identity(frame, q, copts);
    name = "formula";
    report.params["formula"] = ff::to_string(q);
  }
  report.checks.push_back(ff::CheckEntry{name, "", verdict.holds,
                                         ff::check_status_name(verdict.status),
                                         verdict_witness_json(verdict)});
  return verdict.holds ? kExitHolds : kExitFails;
}

int run_cep(const CommonOptions& opts, const std::string& method,
            ff::Report& report) {
  const auto frame = resolve_frames(opts, 1)[0];
  report.frame = ff::frame_to_json(frame);
  report.params["method"] = method;
  ff::StructureLimits limits;
  limits.max_atoms = opts.max_atoms;

  std::vector<ff::CepMethod> methods;
  if (method == "direct") methods = {ff::CepMethod::Direct};
  else if (method == "two-gen") methods = {ff::CepMethod::TwoGenerated};
  else if (method == "pcep") methods = {ff::CepMethod::Pcep};
  else
    methods = {ff::CepMethod::Direct, ff::CepMethod::TwoGenerated,
               ff::CepMethod::Pcep};

  bool all_hold = true;
  bool agree = true;
  bool first = true;
  bool first_verdict = false;
  for (ff::CepMethod m : methods) {
    const ff::CepVerdict v = ff::cep_by_method(frame, m, limits);
    if (first) {
      first_verdict = v.holds;
      first = false;
    } else if (v.holds != first_verdict) {
      agree = false;
    }
    all_hold = all_hold && v.holds;
    report.checks.push_back(
        ff::CheckEntry{std::string("cep-") + ff::cep_method_name(m), "",
                       v.holds, "exhaustive", cep_witness_json(v)});
  }
  if (methods.size() > 1)
    report.checks.push_back(
        ff::CheckEntry{"cep-methods-agree", "", agree, "exhaustive", {}});
  return (all_hold && agree) ? kExitHolds : kExitFails;
}

int run_verify_paper(const CommonOptions& opts, ff::Report& report) {
  const ff::ClaimReport claims = ff::run_all_claims(opts.seed);
  for (const auto& c : claims.claims) {
    ff::Json w = ff::Json::object();
    w["criterion"] = c.criterion;
    w["detail"] = c.detail;
    report.checks.push_back(
        ff::CheckEntry{c.id, c.anchor, c.pass, "exhaustive", w});
  }
  report.open_questions = claims.open_questions;
  return claims.all_pass() ? kExitHolds : kExitFails;
}

int run_corpus(const CommonOptions& opts, const std::string& suite,
               ff::Report& report) {
  const ff::ClaimReport claims = ff::run_all_claims(opts.seed);
  report.params["suite"] = suite;
  bool pass = true;
  for (const auto& c : claims.claims) {
    const bool oracle = c.criterion == 5;
    const bool implication = c.criterion == 6;
    const bool product = c.criterion == 7;
    const bool wanted =
        (suite == "all" && (oracle || implication || product)) ||
        (suite == "oracle" && oracle) ||
        (suite == "implication" && implication) ||
        (suite == "product" && product);
    if (!wanted) continue;
    pass = pass && c.pass;
    ff::Json w = ff::Json::object();
    w["detail"] = c.detail;
    report.checks.push_back(
        ff::CheckEntry{c.id, c.anchor, c.pass, "exhaustive", w});
  }
  return pass ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frameforge: a workbench for finite Boolean frames"};
  app.require_subcommand(1);

  CommonOptions opts;
  opts.seed = env_seed();

  std::string check_formula, check_property;
  bool check_exhaustive = false;
  auto* cmd_check = app.add_subcommand(
      "check", "check an identity, quasi-identity or named property");
  add_common(cmd_check, opts);
  cmd_check->add_option("formula", check_formula, "quasi-identity text");
  cmd_check->add_option("--property", check_property, "named property")
      ->check(CLI::IsMember(ff::property_names()));
  cmd_check->add_flag("--exhaustive", check_exhaustive,
                      "fail instead of sampling when over budget");

  auto* cmd_con = app.add_subcommand("con", "congruence generators");
  add_common(cmd_con, opts);

  auto* cmd_sub = app.add_subcommand("sub", "all subalgebras");
  add_common(cmd_sub, opts);

  std::string cep_method = "all";
  auto* cmd_cep =
      app.add_subcommand("cep", "decide the congruence extension property");
  add_common(cmd_cep, opts);
  cmd_cep->add_option("--method", cep_method, "direct|two-gen|pcep|all")
      ->check(CLI::IsMember({"direct", "two-gen", "pcep", "all"}));

  bool clone_list = false;
  auto* cmd_clone = app.add_subcommand("clone", "unary term clone");
  add_common(cmd_clone, opts);
  cmd_clone->add_option("--cap", opts.clone_cap, "member cap");
  cmd_clone->add_flag("--list", clone_list, "include tables and derivations");

  auto* cmd_ae = app.add_subcommand(
      "additive-equiv", "term equivalence with an additive operation");
  add_common(cmd_ae, opts);

  auto* cmd_hssh = app.add_subcommand("hs-sh", "compare HS and SH classes");
  add_common(cmd_hssh, opts);

  auto* cmd_switch =
      app.add_subcommand("switching", "search the clone for a switching term");
  add_common(cmd_switch, opts);

  auto* cmd_product = app.add_subcommand("product", "direct product");
  add_common(cmd_product, opts);

  ff::Element quotient_gen = 0;
  auto* cmd_quotient =
      app.add_subcommand("quotient", "quotient by a congruential element");
  add_common(cmd_quotient, opts);
  cmd_quotient->add_option("--gen", quotient_gen, "congruence generator")
      ->required();

  auto* cmd_iso = app.add_subcommand("iso", "isomorphism test");
  add_common(cmd_iso, opts);

  int random_atoms = 2, random_count = 1;
  std::string random_constraint = "none";
  auto* cmd_random = app.add_subcommand("random", "seeded random frames");
  add_common(cmd_random, opts, false);
  cmd_random->add_option("--atoms", random_atoms, "atom count")->required();
  cmd_random
      ->add_option("--constraint", random_constraint,
                   "none|normal|additive|star")
      ->check(CLI::IsMember({"none", "normal", "additive", "star"}));
  cmd_random->add_option("--count", random_count, "how many frames");

  bool verify_json = false;
  auto* cmd_verify = app.add_subcommand(
      "verify-paper", "run the built-in claim regression suite");
  add_common(cmd_verify, opts, false);
  cmd_verify->add_flag("--json", verify_json, "shorthand for --format json");

  std::string corpus_suite = "all";
  auto* cmd_corpus =
      app.add_subcommand("corpus", "run the seeded property-test corpus");
  add_common(cmd_corpus, opts, false);
  cmd_corpus
      ->add_option("--suite", corpus_suite, "all|oracle|implication|product")
      ->check(CLI::IsMember({"all", "oracle", "implication", "product"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (verify_json) opts.format = "json";

  ff::Report report;
  const auto started = std::chrono::steady_clock::now();
  int exit_code = kExitHolds;
  try {
    if (app.got_subcommand(cmd_check)) {
      report.command = "check";
      report.params = params_json(opts);
      if (check_formula.empty() == check_property.empty())
        throw ff::Error(ff::Errc::UnknownSpec,
                        "pass exactly one of a formula or --property");
      exit_code = run_check(opts, check_formula, check_property,
                            check_exhaustive, report);
    } else if (app.got_subcommand(cmd_con)) {
      report.command = "con";
      report.params = params_json(opts);
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      const auto gens = ff::congruence_generators(frame);
      ff::Json w = ff::Json::object();
      w["generators"] = gens;
      w["count"] = gens.size();
      if (frame.atoms > 0) w["simple"] = gens.size() == 2;
      report.checks.push_back(
          ff::CheckEntry{"congruence-generators", "", true, "exhaustive", w});
    } else if (app.got_subcommand(cmd_sub)) {
      report.command = "sub";
      report.params = params_json(opts);
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      const auto subs = ff::all_subalgebras(frame);
      ff::Json list = ff::Json::array();
      for (const auto& s : subs) list.push_back(s.elements);
      ff::Json w = ff::Json::object();
      w["count"] = subs.size();
      w["subalgebras"] = list;
      report.checks.push_back(
          ff::CheckEntry{"subalgebras", "", true, "exhaustive", w});
    } else if (app.got_subcommand(cmd_cep)) {
      report.command = "cep";
      report.params = params_json(opts);
      exit_code = run_cep(opts, cep_method, report);
    } else if (app.got_subcommand(cmd_clone)) {
      report.command = "clone";
      report.params = params_json(opts);
      report.params["cap"] = opts.clone_cap;
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      const ff::CloneResult clone = ff::unary_clone(frame, opts.clone_cap);
      ff::Json w = ff::Json::object();
      w["members"] = clone.members.size();
      w["complete"] = clone.complete;
      if (clone_list) {
        ff::Json list = ff::Json::array();
        for (const auto& m : clone.members) {
          ff::Json entry = ff::Json::object();
          entry["table"] = m.table;
          entry["derivation"] = ff::to_string(m.derivation);
          list.push_back(entry);
        }
        w["list"] = list;
      }
      report.checks.push_back(
          ff::CheckEntry{"clone", "", true,
                         clone.complete ? "exhaustive" : "inconclusive", w});
      exit_code = clone.complete ? kExitHolds : kExitBudget;
    } else if (app.got_subcommand(cmd_ae)) {
      report.command = "additive-equiv";
      report.params = params_json(opts);
      report.params["cap"] = opts.clone_cap;
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      const ff::AdditiveEquivalence eq =
          ff::additive_equivalence(frame, opts.clone_cap);
      ff::Json w = ff::Json::object();
      w["status"] = ff::additive_equivalence_status_name(eq.status);
      if (eq.witness_g) {
        w["g"] = eq.witness_g->table;
        w["g_term_over_f"] = ff::to_string(eq.witness_g->derivation);
        w["f_term_over_g"] = ff::to_string(*eq.f_term);
      }
      const bool equivalent =
          eq.status == ff::AdditiveEquivalence::Status::Equivalent;
      const bool inconclusive =
          eq.status == ff::AdditiveEquivalence::Status::Inconclusive;
      report.checks.push_back(
          ff::CheckEntry{"additive-equivalence", "", equivalent,
                         inconclusive ? "inconclusive" : "exhaustive", w});
      exit_code =
          equivalent ? kExitHolds : (inconclusive ? kExitBudget : kExitFails);
    } else if (app.got_subcommand(cmd_hssh)) {
      report.command = "hs-sh";
      report.params = params_json(opts);
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      ff::StructureLimits limits;
      limits.max_atoms = opts.max_atoms;
      const ff::HsShVerdict v = ff::hs_equals_sh(frame, limits);
      ff::Json w = ff::Json::object();
      w["hs_count"] = v.hs.classes.size();
      w["sh_count"] = v.sh.classes.size();
      ff::Json hs_list = ff::Json::array();
      for (const auto& c : v.hs.classes)
        hs_list.push_back(ff::frame_to_json(c));
      w["hs_classes"] = hs_list;
      if (v.witness) {
        w["witness_side"] = v.witness_side;
        w["witness"] = ff::frame_to_json(*v.witness);
      }
      report.checks.push_back(
          ff::CheckEntry{"hs-equals-sh", "", v.equal, "exhaustive", w});
      exit_code = v.equal ? kExitHolds : kExitFails;
    } else if (app.got_subcommand(cmd_switch)) {
      report.command = "switching";
      report.params = params_json(opts);
      report.params["cap"] = opts.clone_cap;
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      const ff::SwitchingSearch s =
          ff::find_switching_term(frame, opts.clone_cap);
      ff::Json w = ff::Json::object();
      w["status"] = ff::switching_status_name(s.status);
      bool discriminator = false;
      if (s.term) {
        w["table"] = s.term->table;
        w["derivation"] = ff::to_string(s.term->derivation);
        discriminator = ff::verify_discriminator(frame, s.term->table);
        w["discriminator_verified"] = discriminator;
      }
      const bool found = s.status == ff::SwitchingSearch::Status::Found;
      report.checks.push_back(ff::CheckEntry{
          "switching-term", "", found && (!s.term || discriminator),
          s.status == ff::SwitchingSearch::Status::Inconclusive
              ? "inconclusive"
              : "exhaustive",
          w});
      exit_code =
          found ? kExitHolds
                : (s.status == ff::SwitchingSearch::Status::Inconclusive
                       ? kExitBudget
                       : kExitFails);
    } else if (app.got_subcommand(cmd_product)) {
      report.command = "product";
      report.params = params_json(opts);
      const auto frames = resolve_frames(opts, 2);
      const auto prod = ff::product_frame(frames[0], frames[1], opts.max_atoms);
      ff::Json w = ff::Json::object();
      w["frame"] = ff::frame_to_json(prod);
      report.checks.push_back(
          ff::CheckEntry{"product", "", true, "exhaustive", w});
    } else if (app.got_subcommand(cmd_quotient)) {
      report.command = "quotient";
      report.params = params_json(opts);
      report.params["gen"] = quotient_gen;
      const auto frame = resolve_frames(opts, 1)[0];
      report.frame = ff::frame_to_json(frame);
      const ff::Quotient q = ff::quotient(frame, quotient_gen);
      ff::Json w = ff::Json::object();
      w["frame"] = ff::frame_to_json(q.frame);
      w["elem_map"] = q.elem_map;
      report.checks.push_back(
          ff::CheckEntry{"quotient", "", true, "exhaustive", w});
    } else if (app.got_subcommand(cmd_iso)) {
      report.command = "iso";
      report.params = params_json(opts);
      const auto frames = resolve_frames(opts, 2);
      const auto witness = ff::is_isomorphic(frames[0], frames[1]);
      ff::Json w;
      if (witness) {
        w = ff::Json::object();
        w["permutation"] = witness->images;
      }
      report.checks.push_back(ff::CheckEntry{
          "isomorphic", "", witness.has_value(), "exhaustive", w});
      exit_code = witness ? kExitHolds : kExitFails;
    } else if (app.got_subcommand(cmd_random)) {
      report.command = "random";
      report.params = params_json(opts);
      report.params["atoms"] = random_atoms;
      report.params["constraint"] = random_constraint;
      report.params["count"] = random_count;
      ff::RandomConstraint c = ff::RandomConstraint::None;
      if (random_constraint == "normal") c = ff::RandomConstraint::Normal;
      else if (random_constraint == "additive")
        c = ff::RandomConstraint::Additive;
      else if (random_constraint == "star") c = ff::RandomConstraint::Star;
      ff::Json list = ff::Json::array();
      for (int i = 0; i < random_count; ++i)
        list.push_back(ff::frame_to_json(
            ff::random_frame(random_atoms,
                             opts.seed + static_cast<std::uint64_t>(i), c,
                             opts.max_atoms)));
      ff::Json w = ff::Json::object();
      w["frames"] = list;
      report.checks.push_back(
          ff::CheckEntry{"random", "", true, "exhaustive", w});
    } else if (app.got_subcommand(cmd_verify)) {
      report.command = "verify-paper";
      report.params = params_json(opts);
      exit_code = run_verify_paper(opts, report);
    } else if (app.got_subcommand(cmd_corpus)) {
      report.command = "corpus";
      report.params = params_json(opts);
      exit_code = run_corpus(opts, corpus_suite, report);
    }
  } catch (const ff::Error& e) {
    std::cerr << "error [" << ff::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    switch (e.code()) {
      case ff::Errc::TooLarge:
      case ff::Errc::BudgetExceeded:
      case ff::Errc::RetryExhausted:
        return kExitBudget;
      default:
        return kExitUsage;
    }
  }

  if (opts.timing)
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  try {
    emit(report, opts);
  } catch (const ff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
