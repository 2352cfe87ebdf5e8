#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmod/classify.hpp"
#include "pmod/counting.hpp"
#include "pmod/errors.hpp"
#include "pmod/finite_field.hpp"
#include "pmod/group_spec.hpp"
#include "pmod/report.hpp"
#include "pmod/stabilizer.hpp"
#include "pmod/sylow.hpp"
#include "pmod/verification.hpp"
#include "pmod/witness.hpp"

using nlohmann::json;
using namespace pmod;

namespace {

constexpr int kExitModerate = 0;
constexpr int kExitExtreme = 10;
constexpr int kExitInapplicable = 11;
constexpr int kExitError = 2;
constexpr int kExitVerifyFailed = 1;

struct Options {
  std::string spec;
  std::string named;
  std::uint64_t p = 0;
  std::string strategy = "constructive";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::size_t max_degree = SubsetCensus::kMaxDegree;
  std::uint64_t max_order = Limits{}.max_order;
};

json load_spec_document(const Options& o) {
  if (!o.named.empty()) {
    if (!o.spec.empty()) throw InvalidArgument("give either a spec or --named, not both");
    return json{{"named", o.named}};
  }
  if (o.spec.empty()) throw InvalidArgument("missing group spec (file path, '-', inline JSON or --named)");
  std::string text;
  if (o.spec == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (o.spec.front() == '{') {
    text = o.spec;
  } else {
    std::ifstream in(o.spec);
    if (!in) throw InvalidArgument("cannot read spec file " + o.spec);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("spec is not valid JSON: ") + e.what());
  }
}

void require_prime(const Options& o) {
  if (o.p == 0) throw InvalidArgument("--p is required");
  if (!is_prime(o.p)) throw InvalidArgument("--p must be prime, got " + std::to_string(o.p));
}

Strategy parse_strategy(const std::string& s) {
  if (s == "exhaustive") return Strategy::Exhaustive;
  if (s == "constructive") return Strategy::Constructive;
  throw InvalidArgument("unknown strategy " + s);
}

struct Loaded {
  json doc;
  BuiltGroup group;
};

Loaded load_group(const Options& o) {
  json doc = load_spec_document(o);
  Limits limits;
  limits.max_order = o.max_order;
  BuiltGroup group = build_group(parse_group_spec(doc), limits);
  return Loaded{std::move(doc), std::move(group)};
}

void require_divides(const BuiltGroup& g, std::uint64_t p) {
  if (g.group.order() % p != 0) throw InvalidArgument(std::to_string(p) + " does not divide the group order");
}

/// Runs one command body, wraps its payload in a Report and prints it.
template <typename Body>
int run_command(const std::string& command, const Options& o, bool with_group, Body body) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = command;
  report.input = json::object();
  std::optional<Loaded> loaded;
  if (with_group) {
    loaded = load_group(o);
    report.input["spec"] = loaded->doc;
    report.group = summarize(loaded->group.name, loaded->group.group);
  }
  int code = 0;
  report.payload = body(loaded ? &loaded->group : nullptr, report.input, code);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << json(report).dump(2) << std::endl;
  return code;
}

int cmd_classify(const Options& o) {
  require_prime(o);
  const Strategy strategy = parse_strategy(o.strategy);
  return run_command("classify", o, true, [&](const BuiltGroup* g, json& input, int& code) {
    input["p"] = o.p;
    input["strategy"] = o.strategy;
    input["seed"] = o.seed;
    input["trials"] = o.trials;
    require_divides(*g, o.p);
    ClassifyOptions opts{o.seed, o.trials, o.max_degree};
    const auto r = classify_moderation(*g, o.p, strategy, opts);
    code = r.verdict == Verdict::Moderate ? kExitModerate : kExitExtreme;
    std::cerr << g->name << " p=" << o.p << ": " << to_string(r.verdict);
    if (r.witness) std::cerr << " witness " << r.witness->to_string() << " stab p-part " << r.witness_p_part;
    std::cerr << " (|G|_p = " << r.group_p_part << ", stage " << r.stage << ")\n";
    return json(r);
  });
}

int cmd_concealed(const Options& o) {
  require_prime(o);
  return run_command("concealed", o, true, [&](const BuiltGroup* g, json& input, int&) {
    input["p"] = o.p;
    const auto r = is_p_concealed(g->group, o.p, o.max_degree);
    std::cerr << g->name << " p=" << o.p << ": " << (r.concealed ? "concealed" : "not concealed");
    if (r.uncovered) std::cerr << ", uncovered " << r.uncovered->to_string();
    std::cerr << "\n";
    json j = r;
    j["p"] = o.p;
    return j;
  });
}

int cmd_census(const Options& o) {
  require_prime(o);
  return run_command("census", o, true, [&](const BuiltGroup* g, json& input, int&) {
    input["p"] = o.p;
    require_divides(*g, o.p);
    const SubsetCensus census(g->group, std::min(o.max_degree, SubsetCensus::kMaxDegree));
    const auto hist = census.p_part_histogram(o.p);
    std::cerr << g->name << " p=" << o.p << ": " << census.orbit_count() << " subset orbits\n";
    return json{{"p", o.p},
                {"subsets", census.subset_count()},
                {"subset_orbits", census.orbit_count()},
                {"histogram", histogram_json(hist)}};
  });
}

int cmd_sylow(const Options& o) {
  require_prime(o);
  return run_command("sylow", o, true, [&](const BuiltGroup* g, json& input, int&) {
    input["p"] = o.p;
    require_divides(*g, o.p);
    const auto d = all_sylows(g->group, o.p);
    std::cerr << g->name << " p=" << o.p << ": " << d.count << " Sylow subgroups of order "
              << d.representative.order() << "\n";
    return sylow_json(d);
  });
}

int cmd_prop31(const Options& o) {
  require_prime(o);
  return run_command("prop31", o, true, [&](const BuiltGroup* g, json& input, int&) {
    input["p"] = o.p;
    input["seed"] = o.seed;
    input["trials"] = o.trials;
    const auto cert = counting_certificate(g->group, o.p);
    json j = {{"certificate", cert}, {"witness", nullptr}};
    std::cerr << g->name << " p=" << o.p << ": " << cert.sylow_norm_index << "^" << o.p * o.p << " = "
              << cert.lhs_power << (cert.verdict ? " < " : " >= ") << "2^" << cert.rhs_exponent << "\n";
    if (cert.verdict) {
      std::uint64_t trial = 0;
      const auto delta = randomized_witness_from_z(g->group, o.p, cert.z, o.trials, o.seed, &trial);
      if (delta) {
        const auto part = p_part(setwise_stabilizer(g->group, *delta).order_u64(), o.p);
        j["witness"] = {{"subset", point_set_json(*delta)}, {"stab_p_part", part}, {"trial", trial}};
        std::cerr << "witness " << delta->to_string() << " stab p-part " << part << "\n";
      }
    }
    return j;
  });
}

int cmd_witness(const Options& o) {
  require_prime(o);
  return run_command("witness", o, true, [&](const BuiltGroup* g, json& input, int& code) {
    input["p"] = o.p;
    require_divides(*g, o.p);
    std::vector<std::string> skipped;
    const auto candidates = witness_candidates(*g, o.p, &skipped);
    const std::uint64_t full = p_part(g->group.order_u64(), o.p);
    json list = json::array();
    for (const auto& c : candidates) {
      const auto part = stab_p_part(g->group, c.subset, o.p);
      const bool ok = part > 1 && part < full;
      list.push_back({{"stage", c.stage}, {"subset", point_set_json(c.subset)}, {"stab_p_part", part}, {"witness", ok}});
      std::cerr << c.stage << ": " << c.subset.to_string() << " stab p-part " << part << (ok ? " (witness)" : "")
                << "\n";
    }
    if (candidates.empty()) {
      code = kExitInapplicable;
      std::cerr << "no witness construction applies\n";
    }
    return json{{"p", o.p}, {"group_p_part", full}, {"candidates", list}, {"skipped", skipped}};
  });
}

int cmd_verify(const Options& o) {
  return run_command("verify-paper", o, false, [&](const BuiltGroup*, json& input, int& code) {
    input["seed"] = o.seed;
    input["trials"] = o.trials;
    const auto results = run_verification_suite({o.seed, o.trials, 100});
    for (const auto& r : results)
      std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds << " s)\n";
    const json payload = verification_payload(results);
    code = payload.at("all_passed").get<bool>() ? 0 : kExitVerifyFailed;
    return payload;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation group moderation toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Options o;

  auto add_group_options = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec, "group spec: file path, '-' for stdin, or inline JSON");
    sub->add_option("--named", o.named, "catalogue name, e.g. AGammaL(1,8)");
    sub->add_option("--p", o.p, "prime")->required();
    sub->add_option("--max-order", o.max_order, "enumeration bound on group order");
    sub->add_option("--max-degree", o.max_degree, "degree bound for exhaustive subset scans");
  };

  auto* classify = app.add_subcommand("classify", "decide p-moderate or p-extreme");
  add_group_options(classify);
  classify->add_option("--strategy", o.strategy, "exhaustive or constructive")
      ->check(CLI::IsMember({"exhaustive", "constructive"}));
  classify->add_option("--seed", o.seed, "random seed");
  classify->add_option("--trials", o.trials, "random trials");

  auto* concealed = app.add_subcommand("concealed", "test whether every subset is covered by a Sylow subgroup");
  add_group_options(concealed);
  auto* census = app.add_subcommand("census", "histogram of stabilizer p-parts over all subsets");
  add_group_options(census);
  auto* sylow = app.add_subcommand("sylow", "Sylow subgroup data");
  add_group_options(sylow);
  auto* prop31 = app.add_subcommand("prop31", "counting certificate and randomized witness");
  add_group_options(prop31);
  prop31->add_option("--seed", o.seed, "random seed");
  prop31->add_option("--trials", o.trials, "random trials");
  auto* witness = app.add_subcommand("witness", "run the witness constructions");
  add_group_options(witness);
  auto* verify = app.add_subcommand("verify-paper", "run the reproduction suite");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*concealed) return cmd_concealed(o);
    if (*census) return cmd_census(o);
    if (*sylow) return cmd_sylow(o);
    if (*prop31) return cmd_prop31(o);
    if (*witness) return cmd_witness(o);
    if (*verify) return cmd_verify(o);
  } catch (const Inapplicable& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
