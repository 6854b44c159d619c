#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "elgr/entailment.hpp"
#include "elgr/http_server.hpp"
#include "elgr/justifications.hpp"
#include "elgr/neighbors.hpp"
#include "elgr/parser.hpp"
#include "elgr/render.hpp"
#include "elgr/repair.hpp"
#include "elgr/trace_json.hpp"

namespace elgr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

RepairProblem load_problem(const std::string& file, const std::string& query) {
  return {parse_ontology(slurp(file)), parse_axiom(query)};
}

std::string join_labels(const std::vector<Label>& labels) {
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += ' ';
    s += l.str();
  }
  return s;
}

std::unique_ptr<Strategy> make_strategy(const std::string& spec, WeakeningKind kind,
                                        std::size_t budget) {
  if (spec == "tautology") return std::make_unique<TautologyStrategy>();
  if (spec == "oracle") return std::make_unique<OracleStrategy>(kind, budget);
  if (spec == "max-strong") return std::make_unique<MaxStrongStrategy>(kind, budget);
  if (spec.rfind("scripted:", 0) == 0)
    return std::make_unique<ScriptedStrategy>(parse_script(slurp(spec.substr(9))), kind, budget);
  throw UsageError("unknown strategy '" + spec +
                   "', expected tautology, oracle, max-strong or scripted:<file>");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gentle repair of EL ontologies", "elgr"};
  app.require_subcommand(1);

  std::string file, query, concept_text;
  bool all = false, syn = false;
  std::string algorithm = "gentle", weakening = "syn", strategy = "max-strong", trace_path;
  std::size_t budget = default_search_budget();
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string state_dir, ui_dir;

  auto* check = app.add_subcommand("check", "Print entailed or not-entailed for a query");
  check->add_option("file", file, "Ontology file, - for stdin")->required();
  check->add_option("--query", query, "Axiom to test")->required();

  auto* justify = app.add_subcommand("justify", "Print justifications as label lists");
  justify->add_option("file", file, "Ontology file, - for stdin")->required();
  justify->add_option("--query", query, "Entailed axiom")->required();
  justify->add_flag("--all", all, "All justifications instead of one");
  justify->add_option("--search-budget", budget, "Node budget of the hitting-set tree");

  auto* neighbors = app.add_subcommand("neighbors", "Print one-step generalizations of a concept");
  neighbors->add_option("--concept", concept_text, "Concept")->required();
  neighbors->add_flag("--syn", syn, "Syntactic one-step generalizations");

  auto* repair = app.add_subcommand("repair", "Repair an ontology and print the result");
  repair->add_option("file", file, "Ontology file, - for stdin")->required();
  repair->add_option("--query", query, "Unwanted consequence")->required();
  repair->add_option("--algorithm", algorithm, "classical, gentle or modified")
      ->check(CLI::IsMember({"classical", "gentle", "modified"}));
  repair->add_option("--weakening", weakening, "sub or syn")->check(CLI::IsMember({"sub", "syn"}));
  repair->add_option("--strategy", strategy,
                     "tautology, oracle, max-strong or scripted:<file>");
  repair->add_option("--trace", trace_path, "Write the JSON trace to this file");
  repair->add_option("--search-budget", budget, "Node budget of weakening searches");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP session API");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--port", port, "Port, 0 for any free one");
  serve_cmd->add_option("--state-dir", state_dir, "Directory for session snapshots");
  serve_cmd->add_option("--ui-dir", ui_dir, "Static files served at /");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (check->parsed()) {
      auto p = load_problem(file, query);
      out << (entails(p.ontology.all(), p.target) ? "entailed" : "not-entailed") << "\n";
      return kOk;
    }

    if (justify->parsed()) {
      auto p = load_problem(file, query);
      if (all) {
        for (const auto& j : all_justifications(p.ontology, p.target, budget))
          out << join_labels(j.labels()) << "\n";
      } else {
        out << join_labels(find_one_justification(p.ontology, p.target).labels()) << "\n";
      }
      return kOk;
    }

    if (neighbors->parsed()) {
      Concept c = parse_concept(concept_text);
      for (const auto& n : syn ? syn_one_step_up(c) : upper_neighbors(c)) out << render(n) << "\n";
      return kOk;
    }

    if (repair->parsed()) {
      auto p = load_problem(file, query);
      auto alg = *parse_algorithm(algorithm);
      auto kind = *parse_weakening_kind(weakening);
      auto st = make_strategy(strategy, kind, budget);
      RepairResult r = run_repair(p, alg, *st, kind, budget);
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        if (!tf) throw UsageError("cannot write '" + trace_path + "'");
        tf << trace_json(r.trace).dump(2) << "\n";
      }
      out << render(r.ontology);
      err << "repaired after " << r.trace.iteration_count << " iteration"
          << (r.trace.iteration_count == 1 ? "" : "s") << "\n";
      return kOk;
    }

    if (serve_cmd->parsed()) {
      std::optional<std::filesystem::path> sd, ud;
      if (!state_dir.empty()) sd = state_dir;
      if (!ui_dir.empty()) ud = ui_dir;
      return serve(host, port, sd, ud, err);
    }
  } catch (const UsageError& e) {
    err << "elgr: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "elgr: parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NotEntailed& e) {
    err << "elgr: not entailed: " << e.what() << "\n";
    return kDomainError;
  } catch (const StaticEntails& e) {
    err << "elgr: static part entails the query: " << e.what() << "\n";
    return kDomainError;
  } catch (const ConditionViolated& e) {
    err << "elgr: condition violated: " << e.what() << "\n";
    return kDomainError;
  } catch (const Error& e) {
    err << "elgr: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace elgr::cli
