// Command-line front end; talks to the core exclusively through the C API.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reflinv/reflinv.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitSpec = 2;
constexpr int kExitResource = 3;
constexpr int kExitRefuted = 4;
constexpr int kExitInapplicable = 5;

struct GroupHandle {
  rf_group* g = nullptr;
  ~GroupHandle() { rf_group_destroy(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { rf_string_free(s); }
};

[[noreturn]] void fail(rf_status st, const OwnedString& err) {
  std::cerr << "error: " << (err.s ? err.s : "unknown") << "\n";
  switch (st) {
    case RF_ERR_SPEC:
      std::exit(kExitSpec);
    case RF_ERR_RESOURCE:
      std::exit(kExitResource);
    case RF_ERR_INAPPLICABLE:
      std::exit(kExitInapplicable);
    default:
      std::exit(1);
  }
}

// positional group arguments: "cyclic H" | "monomial R P L" | a JSON file path
std::string spec_json_from_args(const std::vector<std::string>& args, long max_order) {
  if (args.empty()) throw CLI::ValidationError("group", "missing group spec");
  Json j;
  if (args[0] == "cyclic") {
    if (args.size() != 2) throw CLI::ValidationError("group", "usage: cyclic H");
    j = Json{{"family", "cyclic"}, {"h", std::stoul(args[1])}};
  } else if (args[0] == "monomial") {
    if (args.size() != 4) throw CLI::ValidationError("group", "usage: monomial R P L");
    j = Json{{"family", "monomial"},
             {"r", std::stoul(args[1])},
             {"p", std::stoul(args[2])},
             {"ell", std::stoul(args[3])}};
  } else {
    std::string path = args[0] == "generic" || args[0] == "spec"
                           ? (args.size() > 1 ? args[1] : std::string())
                           : args[0];
    if (path.empty()) throw CLI::ValidationError("group", "missing spec file path");
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open spec file " << path << "\n";
      std::exit(kExitSpec);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    j = Json::parse(buf.str());
  }
  if (max_order > 0) j["max_order"] = max_order;
  return j.dump();
}

GroupHandle open_group(const std::vector<std::string>& args, long max_order) {
  GroupHandle h;
  OwnedString err;
  rf_status st = rf_group_create(spec_json_from_args(args, max_order).c_str(), &h.g, &err.s);
  if (st != RF_OK) fail(st, err);
  return h;
}

Json group_summary(const GroupHandle& h) {
  OwnedString out, err;
  rf_status st = rf_group_summary(h.g, &out.s, &err.s);
  if (st != RF_OK) fail(st, err);
  return Json::parse(out.s);
}

Json make_report(const std::string& command, const std::vector<std::string>& argv,
                 const Json& summary, const Json& payload, const Json& mode, const Json& seed,
                 long wall_ms) {
  return Json{{"command", command}, {"argv", argv},   {"group", summary}, {"payload", payload},
              {"mode", mode},       {"seed", seed},   {"wall_ms", wall_ms}};
}

void print_fact(const std::string& key, const Json& value) {
  std::cout << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
}

void print_group_human(const Json& s) {
  print_fact("group", s.at("group"));
  print_fact("rank", s.at("rank"));
  print_fact("order", s.at("order"));
  print_fact("num_reflections", s.at("num_reflections"));
  print_fact("num_hyperplanes", s.at("num_hyperplanes"));
  print_fact("degrees", s.at("degrees"));
  print_fact("exponents", s.at("exponents"));
  print_fact("coexponents", s.at("coexponents"));
  print_fact("h", s.at("h"));
  print_fact("is_duality", s.at("is_duality"));
  print_fact("deg_J", s.at("deg_J"));
  print_fact("deg_Q", s.at("deg_Q"));
  const Json& c = s.at("structural_check");
  bool ok = true;
  for (const auto& [k, v] : c.items()) ok = ok && v.get<bool>();
  std::cout << "structural_check = " << (ok ? "ok" : "FAILED") << "\n";
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant theory of finite complex reflection groups"};
  app.require_subcommand(1);
  std::vector<std::string> argv_echo(argv, argv + argc);

  std::vector<std::string> group_args;
  long max_order = -1;
  bool json_out = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("group", group_args,
                    "group spec: 'cyclic H' | 'monomial R P L' | path to a JSON spec file")
        ->expected(-1);
    cmd->add_option("--max-order", max_order, "cap on the group order during closure");
    cmd->add_flag("--json", json_out, "emit the full report as JSON");
  };

  auto* cmd_group = app.add_subcommand("group", "basic numerology of the group");
  add_common(cmd_group);

  auto* cmd_verify = app.add_subcommand("verify", "certify candidate bases (Saito criterion)");
  add_common(cmd_verify);
  std::string theorem = "auto", m_arg = "all", mode = "auto", basis_file;
  unsigned trials = 8;
  std::uint64_t seed = 0;
  cmd_verify->add_option("--theorem", theorem, "auto|main|ranktwo|monomial|generation");
  cmd_verify->add_option("--m", m_arg, "form degree (integer) or 'all'");
  cmd_verify->add_option("--mode", mode, "auto|exact|prob");
  cmd_verify->add_option("--trials", trials, "evaluation count in probabilistic mode");
  cmd_verify->add_option("--seed", seed, "seed for probabilistic evaluation points");
  cmd_verify->add_option("--basis", basis_file, "JSON file with user-supplied basis labels");

  auto* cmd_delta = app.add_subcommand("delta", "degree sums by Molien, Opdam, and closed form");
  add_common(cmd_delta);
  std::string rep = "V";
  long trunc = -1;
  cmd_delta->add_option("--rep", rep, "trivial|V|V*|det^k|wedge(m,V*)|wedge(m,V*)(x)V");
  cmd_delta->add_option("--trunc", trunc, "series truncation (default 2(N+N*)+10)");

  auto* cmd_molien = app.add_subcommand("molien", "Hilbert series of (S (x) U)^W");
  add_common(cmd_molien);
  cmd_molien->add_option("--rep", rep, "representation");
  cmd_molien->add_option("--trunc", trunc, "series truncation");

  auto* cmd_tau = app.add_subcommand("tau", "trivariate series with reciprocity checks");
  add_common(cmd_tau);
  long chi = 0;
  bool has_chi = false;
  cmd_tau->add_option("--trunc", trunc, "series truncation");
  cmd_tau->add_option("--chi", chi, "twist by det^k")->trigger_on_parse();
  cmd_tau->callback([&] { has_chi = cmd_tau->count("--chi") > 0; });

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  GroupHandle h = open_group(group_args, max_order);
  Json summary = group_summary(h);
  int exit_code = kExitOk;
  Json payload, report_mode = nullptr, report_seed = nullptr;
  std::string command;

  if (app.got_subcommand(cmd_group)) {
    command = "group";
    payload = Json::object();
    const Json& c = summary.at("structural_check");
    for (const auto& [k, v] : c.items())
      if (!v.get<bool>()) exit_code = kExitRefuted;
  } else if (app.got_subcommand(cmd_verify)) {
    command = "verify";
    Json opts{{"theorem", theorem}, {"mode", mode}, {"trials", trials}, {"seed", seed}};
    opts["m"] = (m_arg == "all") ? -1 : std::stol(m_arg);
    if (!basis_file.empty()) {
      std::ifstream in(basis_file);
      if (!in) {
        std::cerr << "error: cannot open basis file " << basis_file << "\n";
        return kExitSpec;
      }
      Json bj = Json::parse(std::string(std::istreambuf_iterator<char>(in), {}));
      if (bj.contains("m")) opts["m"] = bj.at("m");
      opts["basis"] = bj.contains("elements") ? bj.at("elements") : bj;
    }
    OwnedString out, err;
    rf_status st = rf_verify(h.g, opts.dump().c_str(), &out.s, &err.s);
    if (st != RF_OK) fail(st, err);
    payload = Json::parse(out.s);
    report_mode = mode;
    report_seed = seed;
    if (!payload.at("all_certified").get<bool>()) exit_code = kExitRefuted;
  } else if (app.got_subcommand(cmd_delta)) {
    command = "delta";
    OwnedString out, err;
    rf_status st = rf_delta(h.g, rep.c_str(), trunc, &out.s, &err.s);
    if (st != RF_OK) fail(st, err);
    payload = Json::parse(out.s);
    if (!payload.at("agree").get<bool>()) exit_code = kExitRefuted;
  } else if (app.got_subcommand(cmd_molien)) {
    command = "molien";
    OwnedString out, err;
    rf_status st = rf_molien(h.g, rep.c_str(), trunc, &out.s, &err.s);
    if (st != RF_OK) fail(st, err);
    payload = Json::parse(out.s);
  } else if (app.got_subcommand(cmd_tau)) {
    command = "tau";
    OwnedString out, err;
    rf_status st = rf_tau(h.g, trunc, has_chi ? 1 : 0, chi, &out.s, &err.s);
    if (st != RF_OK) fail(st, err);
    payload = Json::parse(out.s);
  }

  Json report = make_report(command, argv_echo, summary, payload, report_mode, report_seed,
                            elapsed_ms(t0));

  if (json_out) {
    std::cout << report.dump(2) << "\n";
    return exit_code;
  }

  print_group_human(summary);
  if (command == "verify") {
    print_fact("theorem", payload.at("theorem"));
    for (const auto& r : payload.at("reports")) {
      std::ostringstream line;
      line << "verify m=" << r.at("m").get<int>();
      std::cout << line.str() << " verdict=" << r.at("verdict").get<std::string>()
                << " mode=" << r.at("mode").get<std::string>()
                << " degree_sum=" << r.at("degree_sum").get<long>()
                << " target=" << r.at("target_delta").get<long>()
                << " scalar=" << r.at("scalar").get<std::string>() << "\n";
    }
    print_fact("all_certified", payload.at("all_certified"));
  } else if (command == "delta") {
    print_fact("rep", payload.at("rep"));
    print_fact("delta_molien", payload.at("molien"));
    print_fact("delta_opdam", payload.at("opdam"));
    print_fact("delta_formula", payload.at("formula"));
    print_fact("generator_polynomial", payload.at("generator_polynomial"));
    print_fact("agree", payload.at("agree"));
  } else if (command == "molien") {
    print_fact("rep", payload.at("rep"));
    print_fact("trunc", payload.at("trunc"));
    std::ostringstream cs;
    const auto& arr = payload.at("coefficients");
    for (size_t i = 0; i < arr.size(); ++i) {
      if (i) cs << ",";
      cs << arr[i].get<std::string>();
    }
    std::cout << "coefficients = " << cs.str() << "\n";
  } else if (command == "tau") {
    print_fact("trunc", payload.at("trunc"));
    print_fact("swapped_reciprocity_holds", payload.at("swapped_reciprocity").at("holds"));
    print_fact("swapped_fail_at", payload.at("swapped_reciprocity").at("fail_at"));
    print_fact("literal_reciprocity_holds", payload.at("literal_reciprocity").at("holds"));
    print_fact("literal_fail_at", payload.at("literal_reciprocity").at("fail_at"));
  }
  std::cout << "wall_ms = " << report.at("wall_ms").get<long>() << "\n";
  return exit_code;
}
