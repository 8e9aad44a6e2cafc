#include "bubble/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bubble/k3.hpp"
#include "bubble/random_families.hpp"

namespace bubble::cli {

namespace {

using nlohmann::json;

struct Failure {
  int exit_code;
  json diagnostic;
};

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::InvalidInput, message); }

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) invalid(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) ==
        allowed.end()) {
      invalid("unknown key '" + key + "' in " + what);
    }
  }
}

std::vector<Poly> parse_poly_array(const json& arr, const char* what) {
  if (!arr.is_array()) invalid(std::string(what) + " must be an array of polynomial strings");
  std::vector<Poly> out;
  for (const auto& item : arr) {
    if (!item.is_string()) invalid(std::string(what) + " entries must be strings");
    out.push_back(parse_poly(item.get<std::string>()));
  }
  return out;
}

json poly_array(const std::vector<Poly>& v) {
  json arr = json::array();
  for (const auto& p : v) arr.push_back(p.to_string());
  return arr;
}

json system_json(const AdeType& ade) {
  return {{"family", std::string(1, ade.to_string()[0])}, {"rank", ade.rank}};
}

int option_int(const JobSpec& job, const char* name, int fallback) {
  const auto it = job.options.find(name);
  if (it == job.options.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    invalid(std::string("--") + name + " expects an integer");
  }
}

bool option_flag(const JobSpec& job, const char* name) {
  const auto it = job.options.find(name);
  return it != job.options.end() && it->second != "false";
}

struct ParsedFamily {
  FamilyInput family;
  std::string canonical;
};

ParsedFamily read_family(const json& in, const JobSpec& job) {
  require_keys(in, {"system", "zeta", "gram"}, "family input");
  const json& sys = in.at("system");
  require_keys(sys, {"family", "rank"}, "system");
  const AdeType ade = AdeType::parse(sys.at("family").get<std::string>() +
                                     std::to_string(sys.at("rank").get<int>()));
  RootSystemOptions opts;
  opts.max_a_rank = option_int(job, "max-rank", 24);
  auto system = build_root_system(ade, opts);
  PolyVector zeta = parse_poly_array(in.at("zeta"), "zeta");
  if (zeta.size() != system->rank()) {
    invalid("zeta has " + std::to_string(zeta.size()) + " entries, " + ade.to_string() + " needs " +
            std::to_string(system->rank()));
  }
  if (in.contains("gram") && in.at("gram").get<IntMatrix>() != system->gram()) {
    invalid("supplied gram does not match the Bourbaki-labelled " + ade.to_string() + " form");
  }
  json canon{{"system", system_json(ade)}, {"zeta", poly_array(zeta)}};
  return {FamilyInput{std::move(system), std::move(zeta)}, canon.dump()};
}

struct ParsedBranches {
  ak::BranchConfig config;
  std::string canonical;
};

ParsedBranches read_branches(const json& in, bool recenter) {
  require_keys(in, {"branches"}, "branch input");
  std::vector<Poly> raw = parse_poly_array(in.at("branches"), "branches");
  json canon{{"branches", poly_array(raw)}, {"recenter", recenter}};
  return {ak::BranchConfig::make(std::move(raw), recenter), canon.dump()};
}

DocumentMetadata metadata(const std::string& canonical) {
  return DocumentMetadata{"bubbletree", kVersion, content_digest(canonical)};
}

void reject_dot(const JobSpec& job, const char* command) {
  if (job.format == Format::Dot) invalid(std::string("--format dot is not available for ") + command);
}

std::string path_text(const std::vector<std::size_t>& path) {
  std::string s = "/";
  for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "/" : "") + std::to_string(path[i]);
  return s;
}

std::string indices_text(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

ak::EquivalenceResult equivalence_for(const ak::BranchConfig& config) {
  const auto system = build_root_system(AdeType::make(Family::A, static_cast<int>(config.k())));
  const FamilyInput family = validate_family({system, ak::from_branches(config)});
  return ak::check_equivalence(build_pbt(family), ak::build_dbs_tree(config));
}

RunResult cmd_validate(const JobSpec& job, const json& in) {
  reject_dot(job, "validate");
  const ParsedFamily p = read_family(in, job);
  validate_family(p.family);
  const std::string ade = p.family.system->ade().to_string();
  if (job.format == Format::Json) return {0, json{{"valid", true}, {"system", ade}}.dump(2) + "\n", ""};
  return {0, "valid: " + ade + " family degenerates at t=0 with smooth general fibers\n", ""};
}

RunResult cmd_pbt(const JobSpec& job, const json& in) {
  const ParsedFamily p = read_family(in, job);
  const PBTree tree = build_pbt(validate_family(p.family));
  return {0, render(tree, job.format, metadata(p.canonical)), ""};
}

RunResult cmd_rescale(const JobSpec& job, const json& in) {
  reject_dot(job, "rescale");
  const ParsedFamily p = read_family(in, job);
  const RescaleResult r = odaka_rescale(p.family);
  std::vector<std::string> types;
  for (const auto& t : r.central_fiber) types.push_back(t.to_string());
  if (job.format == Format::Json) {
    return {0,
            json{{"order", r.order}, {"rescaled", poly_array(r.rescaled)}, {"central_fiber", types}}.dump(2) +
                "\n",
            ""};
  }
  std::string out = "k=" + std::to_string(r.order) + "\nrescaled: [";
  for (std::size_t i = 0; i < r.rescaled.size(); ++i) out += (i ? ", " : "") + r.rescaled[i].to_string();
  out += "]\ncentral fiber: ";
  if (types.empty()) out += "none";
  for (std::size_t i = 0; i < types.size(); ++i) out += (i ? "," : "") + types[i];
  return {0, out + "\n", ""};
}

RunResult cmd_dbs(const JobSpec& job, const json& in) {
  const ParsedBranches p = read_branches(in, option_flag(job, "recenter"));
  return {0, render(ak::build_dbs_tree(p.config), job.format, metadata(p.canonical)), ""};
}

RunResult cmd_equiv_suite(const JobSpec& job, int cases) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(option_int(job, "seed", 42)));
  int ok = 0;
  std::string first_failure;
  for (int i = 0; i < cases; ++i) {
    const ak::BranchConfig config = random_branch_config(rng);
    const ak::EquivalenceResult r = equivalence_for(config);
    if (r.isomorphic) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "case " + std::to_string(i) + " branches " + poly_array(config.branches()).dump() +
                      ": " + r.mismatch;
    }
  }
  const int code = ok == cases ? 0 : 2;
  const std::string err =
      first_failure.empty()
          ? ""
          : json{{"code", to_string(ErrorCode::InternalInvariant)}, {"message", first_failure}}.dump() + "\n";
  if (job.format == Format::Json) {
    return {code, json{{"cases", cases}, {"isomorphic", ok}}.dump(2) + "\n", err};
  }
  return {code, std::to_string(ok) + "/" + std::to_string(cases) + " isomorphic\n", err};
}

RunResult cmd_equiv(const JobSpec& job, const json* in) {
  reject_dot(job, "equiv");
  const int cases = option_int(job, "random-suite", 0);
  if (cases > 0) return cmd_equiv_suite(job, cases);
  if (in == nullptr) invalid("equiv needs an input file or --random-suite");
  const ParsedBranches p = read_branches(*in, false);
  const ak::EquivalenceResult r = equivalence_for(p.config);
  const std::string err =
      r.isomorphic ? ""
                   : json{{"code", to_string(ErrorCode::InternalInvariant)}, {"message", r.mismatch}}.dump() + "\n";
  const int code = r.isomorphic ? 0 : 2;
  if (job.format == Format::Json) {
    json matches = json::array();
    for (const auto& m : r.bijection) matches.push_back({{"pbt_path", m.pbt_path}, {"indices", m.indices}});
    json out{{"isomorphic", r.isomorphic}, {"bijection", matches}};
    if (!r.isomorphic) out["mismatch"] = r.mismatch;
    return {code, out.dump(2) + "\n", err};
  }
  if (!r.isomorphic) return {code, "not isomorphic: " + r.mismatch + "\n", err};
  std::string out = "isomorphic\n";
  for (const auto& m : r.bijection) out += path_text(m.pbt_path) + " <-> " + indices_text(m.indices) + "\n";
  return {code, out, err};
}

RunResult cmd_localize(const JobSpec& job, const json& in) {
  reject_dot(job, "localize");
  require_keys(in, {"d", "classes", "period"}, "localization input");
  const k3::PolarizedLattice pol = k3::polarize(in.at("d").get<long>());
  const k3::EmbeddedCartan h = k3::embed_cartan(in.at("classes").get<IntMatrix>(), pol);
  const PolyVector period = parse_poly_array(in.at("period"), "period");
  if (period.size() != k3::kLatticeRank) invalid("period must have 22 entries");
  const PolyVector zeta = k3::localize(period, h);
  if (job.format == Format::Json) {
    return {0, json{{"system", system_json(h.ade)}, {"zeta", poly_array(zeta)}, {"gram", h.gram_check}}.dump(2) + "\n",
            ""};
  }
  std::string out = "ade: " + h.ade.to_string() + "\n";
  for (std::size_t j = 0; j < zeta.size(); ++j) {
    out += "theta_" + std::to_string(j + 1) + " = " + zeta[j].to_string() + "\n";
  }
  return {0, out, ""};
}

json diagnostic(const Error& e) {
  json d{{"code", to_string(e.code())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) d["offset"] = pe->offset();
  if (const auto* fe = dynamic_cast<const FamilyError*>(&e)) {
    if (!fe->diagnostic().roots.empty()) d["roots"] = fe->diagnostic().roots;
  }
  return d;
}

}  // namespace

std::variant<JobSpec, RunResult> parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"Bubbling trees of degenerating ADE and K3 period curves", "bubbletree"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  JobSpec job;
  std::string format = "ascii";
  int seed = 42;
  int suite = 0;
  int max_rank = 24;
  bool recenter = false;

  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {"validate", Command::Validate, "check a family: degenerate at t=0, smooth general fiber"},
      {"pbt", Command::Pbt, "build and render the period bubbling tree"},
      {"dbs", Command::Dbs, "build and render the branch collision tree of an A_k family"},
      {"equiv", Command::Equiv, "compare the two trees for A_k branch data"},
      {"localize", Command::Localize, "project a K3 period curve onto a Cartan sublattice"},
      {"rescale", Command::Rescale, "rescale by the leading power of t and read the central fiber"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("input", job.input_path, "input JSON file, '-' for standard input");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"ascii", "json", "dot"}));
    sub->add_option("--max-rank", max_rank, "largest A_n rank accepted")->check(CLI::PositiveNumber);
    if (e.command == Command::Dbs) sub->add_flag("--recenter", recenter, "subtract the mean branch");
    if (e.command == Command::Equiv) {
      sub->add_option("--seed", seed, "random suite seed");
      sub->add_option("--random-suite", suite, "number of random branch configurations")
          ->check(CLI::NonNegativeNumber);
    }
    subs.emplace_back(sub, e.command);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return RunResult{code == 0 ? 0 : 1, out.str(), err.str()};
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) job.command = command;
  }
  job.format = parse_format(format);
  job.options["max-rank"] = std::to_string(max_rank);
  if (job.command == Command::Dbs && recenter) job.options["recenter"] = "true";
  if (job.command == Command::Equiv) {
    job.options["seed"] = std::to_string(seed);
    job.options["random-suite"] = std::to_string(suite);
  }
  return job;
}

RunResult run(const JobSpec& job, const std::string& input_text) {
  try {
    const bool needs_input = !(job.command == Command::Equiv && option_int(job, "random-suite", 0) > 0);
    json in;
    if (needs_input) in = json::parse(input_text);
    switch (job.command) {
      case Command::Validate: return cmd_validate(job, in);
      case Command::Pbt: return cmd_pbt(job, in);
      case Command::Dbs: return cmd_dbs(job, in);
      case Command::Equiv: return cmd_equiv(job, needs_input ? &in : nullptr);
      case Command::Localize: return cmd_localize(job, in);
      case Command::Rescale: return cmd_rescale(job, in);
    }
    throw Error(ErrorCode::InternalInvariant, "unhandled command");
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::InternalInvariant ? 2 : 1;
    return {code, "", diagnostic(e).dump() + "\n"};
  } catch (const json::exception& e) {
    return {1, "", json{{"code", to_string(ErrorCode::InvalidInput)}, {"message", e.what()}}.dump() + "\n"};
  } catch (const std::exception& e) {
    return {2, "", json{{"code", to_string(ErrorCode::InternalInvariant)}, {"message", e.what()}}.dump() + "\n"};
  }
}

RunResult run(const JobSpec& job) {
  const bool suite = job.command == Command::Equiv && job.options.count("random-suite") != 0 &&
                     job.options.at("random-suite") != "0";
  if (suite) return run(job, std::string());
  std::string text;
  if (job.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(job.input_path, std::ios::binary);
    if (!f) {
      return {1, "",
              json{{"code", to_string(ErrorCode::InvalidInput)}, {"message", "cannot open " + job.input_path}}.dump() +
                  "\n"};
    }
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  return run(job, text);
}

}  // namespace bubble::cli
