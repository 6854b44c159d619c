#include "elgr/service.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "elgr/entailment.hpp"
#include "elgr/parser.hpp"
#include "elgr/render.hpp"
#include "elgr/trace_json.hpp"

namespace elgr {

using nlohmann::json;

struct SessionStore::Session {
  std::string id;
  std::string ontology_text;
  std::string query_text;
  Algorithm algorithm = Algorithm::Gentle;
  WeakeningKind kind = WeakeningKind::Syn;
  RepairProblem problem;
  std::optional<RepairRun> run;
  std::optional<RepairResult> classical;
  std::string status = "awaiting_choice";
  std::string failure;
  json events = json::array();
  mutable std::shared_mutex mutex;

  const Ontology& current() const { return run ? run->current() : classical->ontology; }
  const RepairTrace& trace() const { return run ? run->trace() : classical->trace; }
};

namespace {

std::string new_id() {
  static std::mutex m;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard<std::mutex> lock(m);
  std::ostringstream os;
  os << std::hex << rng();
  std::string s = os.str();
  return std::string(16 - std::min<std::size_t>(16, s.size()), '0') + s;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ApiError&) {
    throw;
  } catch (const ParseError& e) {
    throw ApiError{400, "ParseError", e.what()};
  } catch (const NotEntailed& e) {
    throw ApiError{422, "NotEntailed", e.what()};
  } catch (const StaticEntails& e) {
    throw ApiError{422, "StaticEntails", e.what()};
  } catch (const UnknownLabel& e) {
    throw ApiError{404, "UnknownLabel", e.what()};
  } catch (const ConditionViolated& e) {
    json detail = {{"message", e.what()},
                   {"justification", axioms_json(e.justification().axioms)}};
    throw ApiError{409, "ConditionViolated", std::move(detail)};
  } catch (const NotWeaker& e) {
    throw ApiError{409, "NotWeaker", e.what()};
  } catch (const StrategyViolation& e) {
    throw ApiError{409, "StrategyViolation", e.what()};
  } catch (const SearchBudgetExceeded& e) {
    throw ApiError{422, "SearchBudgetExceeded", e.what()};
  } catch (const json::exception& e) {
    throw ApiError{400, "BadRequest", e.what()};
  }
}

std::string required_string(const json& body, const char* key) {
  if (!body.is_object() || !body.contains(key) || !body[key].is_string())
    throw ApiError{400, "BadRequest", std::string("missing string field '") + key + "'"};
  return body[key].get<std::string>();
}

std::string optional_string(const json& body, const char* key, const char* fallback) {
  if (body.is_object() && body.contains(key) && body[key].is_string())
    return body[key].get<std::string>();
  return fallback;
}

std::unique_ptr<Strategy> automated_strategy(const std::string& name, WeakeningKind kind,
                                             std::size_t budget) {
  if (name == "tautology") return std::make_unique<TautologyStrategy>();
  if (name == "oracle") return std::make_unique<OracleStrategy>(kind, budget);
  if (name == "max-strong") return std::make_unique<MaxStrongStrategy>(kind, budget);
  throw ApiError{400, "BadRequest",
                 "unknown strategy '" + name + "', expected tautology, oracle or max-strong"};
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> state_dir)
    : state_dir_(std::move(state_dir)) {
  if (state_dir_) {
    std::filesystem::create_directories(*state_dir_);
    load_all();
  }
}

SessionStore::~SessionStore() = default;

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError{404, "UnknownSession", "no session '" + id + "'"};
  return it->second;
}

namespace {

void refresh_status(SessionStore::Session& s) {
  if (s.status == "failed") return;
  bool finished = s.run ? s.run->done() : true;
  if (!finished) {
    s.status = "awaiting_choice";
  } else if (verify_repair(s.problem, s.current())) {
    s.status = "repaired";
  } else {
    s.status = "failed";
    s.failure = "the final ontology does not verify as a repair";
  }
}

std::shared_ptr<SessionStore::Session> build_session(std::string id, const json& body) {
  return guarded([&] {
    auto s = std::make_shared<SessionStore::Session>();
    s->id = std::move(id);
    s->ontology_text = required_string(body, "ontology");
    s->query_text = required_string(body, "query");
    std::string alg = optional_string(body, "algorithm", "gentle");
    std::string weak = optional_string(body, "weakening", "syn");
    auto a = parse_algorithm(alg);
    if (!a) throw ApiError{400, "BadRequest", "unknown algorithm '" + alg + "'"};
    auto k = parse_weakening_kind(weak);
    if (!k) throw ApiError{400, "BadRequest", "unknown weakening '" + weak + "'"};
    s->algorithm = *a;
    s->kind = *k;
    s->problem = {parse_ontology(s->ontology_text), parse_axiom(s->query_text)};
    if (s->algorithm == Algorithm::Classical) {
      s->classical = classical_repair(s->problem);
      s->classical->trace.weakening = s->kind;
    } else {
      s->run.emplace(s->problem, s->algorithm, s->kind);
    }
    refresh_status(*s);
    return s;
  });
}

json justification_list(const std::vector<Justification>& justs) {
  json out = json::array();
  for (const auto& j : justs) out.push_back(axioms_json(j.axioms));
  return out;
}

json iteration_view(const SessionStore::Session& s) {
  json v = {{"justifications", json::array()},
            {"hitting_set", json::array()},
            {"open_axioms", json::array()}};
  if (!s.run || s.run->done()) return v;
  v["justifications"] = justification_list(s.run->justifications());
  if (s.algorithm == Algorithm::Gentle)
    v["hitting_set"] = labels_json(labels_of(s.run->hitting_sets()[s.run->selected_hitting_set()]));
  v["open_axioms"] = labels_json(labels_of(s.run->open_axioms()));
  return v;
}

json summary(const SessionStore::Session& s) {
  json out = {{"id", s.id},
              {"status", s.status},
              {"algorithm", to_string(s.algorithm)},
              {"weakening", to_string(s.kind)},
              {"query", render(s.problem.target)},
              {"iteration", s.run ? s.run->iteration() : 1},
              {"entailed", s.run ? !s.run->done() : false},
              {"ontology", ontology_json(s.current())},
              {"trace", trace_json(s.trace())}};
  out.update(iteration_view(s));
  if (!s.failure.empty()) out["failure"] = s.failure;
  return out;
}

void require_awaiting(const SessionStore::Session& s) {
  if (s.status != "awaiting_choice")
    throw ApiError{409, "WrongStatus", "session " + s.id + " is " + s.status};
}

void do_apply(SessionStore::Session& s, const std::string& label, const std::string& text) {
  require_awaiting(s);
  Axiom gamma = guarded([&] { return parse_axiom(text); });
  guarded([&] {
    s.run->apply(Label(label), gamma);
    return 0;
  });
  refresh_status(s);
}

void do_auto(SessionStore::Session& s, const std::string& strategy) {
  require_awaiting(s);
  auto st = automated_strategy(strategy, s.kind, s.run->budget());
  try {
    drive(*s.run, *st);
  } catch (const std::exception& e) {
    s.status = "failed";
    s.failure = e.what();
    return;
  }
  refresh_status(s);
}

}  // namespace

void SessionStore::persist(const Session& s) const {
  if (!state_dir_) return;
  json snap = {{"id", s.id},
               {"ontology", s.ontology_text},
               {"query", s.query_text},
               {"algorithm", to_string(s.algorithm)},
               {"weakening", to_string(s.kind)},
               {"events", s.events},
               {"status", s.status},
               {"current", render(s.current())}};
  auto path = *state_dir_ / (s.id + ".json");
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << snap.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load_all() {
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      std::ifstream in(entry.path());
      json snap = json::parse(in);
      auto s = build_session(snap.at("id").get<std::string>(), snap);
      for (const auto& ev : snap.at("events")) {
        std::string type = ev.at("type").get<std::string>();
        if (type == "apply")
          do_apply(*s, ev.at("axiom").get<std::string>(), ev.at("replacement").get<std::string>());
        else if (type == "auto")
          do_auto(*s, ev.at("strategy").get<std::string>());
        s->events.push_back(ev);
      }
      sessions_[s->id] = s;
    } catch (const std::exception& e) {
      std::cerr << "elgr: skipping session file " << entry.path() << ": " << e.what() << "\n";
    } catch (const ApiError& e) {
      std::cerr << "elgr: skipping session file " << entry.path() << ": " << e.error << "\n";
    }
  }
}

json SessionStore::create(const json& body) {
  auto s = build_session(new_id(), body);
  std::unique_lock lock(mutex_);
  sessions_[s->id] = s;
  persist(*s);
  return summary(*s);
}

json SessionStore::state(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  return summary(*s);
}

json SessionStore::justifications(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  json out = {{"id", s->id}, {"status", s->status}, {"iteration", s->run ? s->run->iteration() : 1}};
  out.update(iteration_view(*s));
  if (s->classical) out["justifications"] = justification_list(s->classical->trace.iterations.front().justifications);
  return out;
}

json SessionStore::candidates(const std::string& id, const std::string& axiom,
                              const std::string& mode) {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  require_awaiting(*s);
  if (mode != "max-strong" && mode != "one-step")
    throw ApiError{400, "BadRequest", "unknown mode '" + mode + "', expected one-step"};
  return guarded([&] {
    Label label(axiom);
    const Axiom beta = s->run->open_axiom(label);
    WeakeningContext ctx = s->run->context_for(label);
    std::size_t budget = s->run->budget();
    json out = {{"axiom", axiom_json(beta)}, {"mode", mode}};

    std::vector<Axiom> found;
    if (mode == "one-step") {
      found = one_step_successors(s->kind, beta, budget);
    } else {
      try {
        found = max_strong_weakenings(s->kind, ctx, beta, budget);
      } catch (const SearchBudgetExceeded& e) {
        out["mode"] = "one-step";
        out["warning"] = std::string(e.what()) + "; showing one-step successors instead";
        found = one_step_successors(s->kind, beta, budget);
      }
    }
    Axiom taut = tautology_for(beta);
    bool has_taut = false;
    for (const auto& g : found) has_taut = has_taut || render(g) == render(taut);
    if (!has_taut) found.push_back(taut);

    json list = json::array();
    for (const auto& g : found) {
      json c = axiom_json(g.relabeled(label));
      try {
        s->run->check(label, g);
        c["satisfies_condition"] = true;
      } catch (const StrategyViolation& e) {
        c["satisfies_condition"] = false;
        c["reason"] = e.what();
      }
      list.push_back(std::move(c));
    }
    out["candidates"] = std::move(list);
    return out;
  });
}

json SessionStore::apply(const std::string& id, const json& body) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  std::string label = required_string(body, "axiom");
  std::string text = required_string(body, "replacement");
  do_apply(*s, label, text);
  s->events.push_back({{"type", "apply"}, {"axiom", label}, {"replacement", text}});
  persist(*s);
  return summary(*s);
}

json SessionStore::auto_run(const std::string& id, const json& body) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  std::string strategy = optional_string(body, "strategy", "max-strong");
  do_auto(*s, strategy);
  s->events.push_back({{"type", "auto"}, {"strategy", strategy}});
  persist(*s);
  return summary(*s);
}

std::string SessionStore::export_text(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  return render(s->current());
}

}  // namespace elgr
