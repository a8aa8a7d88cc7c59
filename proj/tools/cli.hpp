#ifndef EPG_TOOLS_CLI_HPP
#define EPG_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epg/epg.hpp"

namespace epg::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2 };

/// Cap on group orders: EPG_MAX_ORDER when set, else the library default.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("EPG_MAX_ORDER")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxOrder;
}

struct CliConfig {
  std::size_t max_order = 0;  // 0: not given on the command line
  std::string validation = "full";
  std::string format;
  std::string output;
};

inline Validation parse_validation(const std::string& v) {
  if (v == "sampled") return Validation::sampled;
  if (v == "off") return Validation::off;
  return Validation::full;
}

inline std::set<std::string> parse_props(const std::string& text) {
  std::set<std::string> props;
  if (text.empty() || text == "all") return {kPropertyNames.begin(), kPropertyNames.end()};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (!is_property_name(item)) throw ParseError("unknown property '" + item + "'");
    props.insert(item);
  }
  return props;
}

inline nlohmann::ordered_json graph_json(const SimpleGraph& g, const GroupSpec& spec, bool deleted) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["spec"] = to_string(spec);
  j["deleted"] = deleted;
  j["vertices"] = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& l = g.labels()[v];
    j["vertices"].push_back({{"id", v}, {"element", l.element}, {"order", l.order}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline void write_property_text(std::ostream& out, const nlohmann::ordered_json& j) {
  for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Enhanced power graphs of finite groups"};
    app.require_subcommand(1);

    CliConfig build_cfg, check_cfg, verify_cfg, ingest_cfg;
    std::string group_text, theorem_text = "all", props_text, ingest_path;
    bool deleted = false;

    auto add_common = [](CLI::App* sub, CliConfig& cfg) {
      sub->add_option("--max-order", cfg.max_order, "Largest group order to build")->check(CLI::PositiveNumber);
      sub->add_option("--validate", cfg.validation, "Associativity validation")
          ->check(CLI::IsMember({"full", "sampled", "off"}));
      sub->add_option("--output", cfg.output, "Write to this file instead of stdout");
    };

    auto* build = app.add_subcommand("build", "Write the enhanced power graph of a group");
    build->add_option("--group", group_text, "Group spec, e.g. cyclic:6")->required();
    build->add_flag("--deleted", deleted, "Drop the identity vertex");
    build_cfg.format = "json";
    build->add_option("--format", build_cfg.format)->check(CLI::IsMember({"json", "dot", "edgelist", "text"}));
    add_common(build, build_cfg);

    auto* check = app.add_subcommand("check", "Decide graph properties of a group's enhanced power graph");
    check->add_option("--group", group_text, "Group spec")->required();
    check->add_option("--props", props_text, "Comma-separated properties (default: all)");
    check->add_flag("--deleted", deleted, "Analyze the deleted enhanced power graph");
    check_cfg.format = "json";
    check->add_option("--format", check_cfg.format)->check(CLI::IsMember({"json", "text"}));
    add_common(check, check_cfg);

    auto* verify = app.add_subcommand("verify", "Check theorems over group rosters");
    verify->add_option("--theorem", theorem_text, "Theorem ids, comma-separated, or 'all'");
    verify_cfg.max_order = 32;
    verify_cfg.format = "json";
    verify->add_option("--format", verify_cfg.format)->check(CLI::IsMember({"json", "text"}));
    add_common(verify, verify_cfg);

    auto* ingest = app.add_subcommand("ingest", "Validate a Cayley table file and report properties");
    ingest->add_option("path", ingest_path, "Cayley table file")->required();
    ingest->add_option("--props", props_text, "Comma-separated properties (default: all)");
    ingest->add_flag("--deleted", deleted, "Analyze the deleted enhanced power graph");
    ingest_cfg.format = "json";
    ingest->add_option("--format", ingest_cfg.format)->check(CLI::IsMember({"json", "text"}));
    add_common(ingest, ingest_cfg);

    std::vector<const char*> argv{"epg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }

    try {
      if (build->parsed()) return cmd_build(group_text, deleted, build_cfg);
      if (check->parsed()) return cmd_check(parse_group_spec(group_text), props_text, deleted, check_cfg);
      if (verify->parsed()) return cmd_verify(theorem_text, verify_cfg);
      if (ingest->parsed()) return cmd_check(GroupSpec::cayley_file(ingest_path), props_text, deleted, ingest_cfg);
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kUsage;
  }

 private:
  BuildOptions options(const CliConfig& cfg) const {
    return {cfg.max_order > 0 ? cfg.max_order : default_cap(), parse_validation(cfg.validation)};
  }

  /// Runs `emit` against stdout or the --output file.
  template <typename Emit>
  int emit_to(const CliConfig& cfg, Emit&& emit) {
    if (cfg.output.empty()) return emit(out_);
    std::ofstream file(cfg.output);
    if (!file) {
      err_ << "error: cannot open '" << cfg.output << "' for writing\n";
      return kUsage;
    }
    return emit(file);
  }

  int cmd_build(const std::string& group_text, bool deleted, const CliConfig& cfg) {
    const auto spec = parse_group_spec(group_text);
    const auto bundle = EpgBundle::build(make_group(spec, options(cfg)));
    const SimpleGraph& g = deleted ? bundle.deleted : bundle.epg;
    return emit_to(cfg, [&](std::ostream& os) {
      if (cfg.format == "dot") {
        write_dot(os, g);
      } else if (cfg.format == "edgelist") {
        write_edge_list(os, g);
      } else if (cfg.format == "text") {
        os << "name: " << bundle.group.name() << '\n'
           << "spec: " << to_string(spec) << '\n'
           << "order: " << bundle.group.order() << '\n'
           << "graph: " << (deleted ? "deleted enhanced power graph" : "enhanced power graph") << '\n'
           << "vertices: " << g.vertex_count() << '\n'
           << "edges: " << g.edge_count() << '\n';
      } else {
        os << graph_json(g, spec, deleted).dump() << '\n';
      }
      return static_cast<int>(kOk);
    });
  }

  int cmd_check(const GroupSpec& spec, const std::string& props_text, bool deleted, const CliConfig& cfg) {
    const auto props = parse_props(props_text);
    const auto bundle = EpgBundle::build(make_group(spec, options(cfg)));
    const auto report = deleted ? analyze(bundle.deleted, props, ConeMode::all_universal)
                                : analyze(bundle.epg, props, ConeMode::exclude_identity);
    const auto j = to_json(report);
    return emit_to(cfg, [&](std::ostream& os) {
      if (cfg.format == "text") {
        write_property_text(os, j);
      } else {
        os << j.dump() << '\n';
      }
      return static_cast<int>(kOk);
    });
  }

  int cmd_verify(const std::string& theorem_text, const CliConfig& cfg) {
    std::vector<const TheoremCheck*> checks;
    if (theorem_text == "all") {
      for (const auto& c : theorem_registry()) checks.push_back(&c);
    } else {
      std::stringstream in(theorem_text);
      std::string id;
      while (std::getline(in, id, ',')) {
        const auto* c = find_check(id);
        if (!c) {
          err_ << "error: unknown theorem id '" << id << "'\n";
          return kUsage;
        }
        checks.push_back(c);
      }
    }
    const std::size_t max_order = cfg.max_order;
    if (max_order > default_cap()) {
      err_ << "error: --max-order " << max_order << " exceeds cap " << default_cap() << '\n';
      return kUsage;
    }
    BundleCache cache(BuildOptions{default_cap(), parse_validation(cfg.validation)});
    int status = kOk;
    return emit_to(cfg, [&](std::ostream& os) {
      for (const auto* c : checks) {
        const auto report = run_default(*c, max_order, cache);
        if (!report.counterexamples.empty() || report.unexpected_vacuous) status = kCounterexample;
        if (cfg.format == "text") {
          os << report.theorem << ": tested " << report.tested << ", passed " << report.passed << ", counterexamples "
             << report.counterexamples.size() << (report.vacuous ? ", vacuous" : "") << '\n';
        } else {
          os << to_json(report).dump() << '\n';
        }
      }
      return status;
    });
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace epg::cli

#endif  // EPG_TOOLS_CLI_HPP
