#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include <httplib.h>

#include "elgr/entailment.hpp"
#include "elgr/http_server.hpp"
#include "elgr/render.hpp"
#include "elgr/repair.hpp"
#include "elgr/service.hpp"
#include "test_support.hpp"

using namespace elgr;
using nlohmann::json;
using elgr::testing::Ax;
using elgr::testing::read_data;

namespace {

json session_body(const std::string& file, const std::string& query,
                  const std::string& algorithm = "gentle", const std::string& weakening = "syn") {
  return {{"ontology", read_data(file)},
          {"query", query},
          {"algorithm", algorithm},
          {"weakening", weakening}};
}

int status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ApiError& e) {
    return e.status;
  }
  return 200;
}

ApiError error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ApiError& e) {
    return e;
  }
  FAIL("expected an ApiError");
  return {};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("elgr-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::vector<std::string> texts(const json& axioms) {
  std::vector<std::string> out;
  for (const auto& a : axioms) out.push_back(a["text"]);
  return out;
}

}  // namespace

TEST_CASE("professor session") {
  SessionStore store;
  json s = store.create(session_body("prof.el", "Prof SubClassOf Studi"));
  CHECK(s["status"] == "awaiting_choice");
  CHECK(s["entailed"] == true);
  CHECK(s["iteration"] == 1);
  REQUIRE(s["justifications"].size() == 1);
  CHECK(s["justifications"][0].size() == 2);
  CHECK(s["hitting_set"] == json::parse(R"(["r1"])"));

  std::string id = s["id"];
  json c = store.candidates(id, "r1", "max-strong");
  CHECK(texts(c["candidates"]) ==
        std::vector<std::string>{"Prof SubClassOf some employed.Uni and some enrolled.Top",
                                 "Prof SubClassOf Top"});
  for (const auto& cand : c["candidates"]) {
    CHECK(cand["label"] == "r1");
    CHECK(cand["satisfies_condition"] == true);
  }

  json one = store.candidates(id, "r1", "one-step");
  CHECK(one["mode"] == "one-step");
  CHECK(one["candidates"].size() == 3);

  json done = store.apply(id, {{"axiom", "r1"},
                               {"replacement", "Prof SubClassOf some employed.Uni and some enrolled.Top"}});
  CHECK(done["status"] == "repaired");
  CHECK(done["entailed"] == false);
  CHECK(done["trace"]["iteration_count"] == 1);
  CHECK(store.justifications(id)["justifications"].empty());
}

TEST_CASE("creation errors") {
  SessionStore store;
  CHECK(status_of([&] { store.create({{"ontology", "[refutable]\nA SubClassOf and\n"}, {"query", "A SubClassOf B"}}); }) == 400);
  CHECK(status_of([&] { store.create({{"ontology", "[refutable]\nA SubClassOf B\n"}, {"query", "A SubClassOf"}}); }) == 400);
  CHECK(status_of([&] { store.create({{"query", "A SubClassOf B"}}); }) == 400);
  CHECK(status_of([&] { store.create({{"ontology", 3}, {"query", "A SubClassOf B"}}); }) == 400);
  CHECK(status_of([&] { store.create({{"ontology", "[static]\nA SubClassOf B\n[refutable]\n"}, {"query", "A SubClassOf B"}}); }) == 422);
  CHECK(status_of([&] { store.create({{"ontology", "[refutable]\nA SubClassOf B\n"}, {"query", "B SubClassOf A"}}); }) == 422);
  CHECK(status_of([&] {
          store.create({{"ontology", "[refutable]\nA SubClassOf B\n"}, {"query", "A SubClassOf B"}, {"algorithm", "gentlest"}});
        }) == 400);
  CHECK(status_of([&] {
          store.create({{"ontology", "[refutable]\nA SubClassOf B\n"}, {"query", "A SubClassOf B"}, {"weakening", "sem"}});
        }) == 400);
  CHECK(store.size() == 0);
}

TEST_CASE("lookup and status errors") {
  SessionStore store;
  CHECK(status_of([&] { store.state("nope"); }) == 404);
  CHECK(status_of([&] { store.export_text("nope"); }) == 404);
  std::string id = store.create(session_body("prof.el", "Prof SubClassOf Studi"))["id"];
  CHECK(status_of([&] { store.candidates(id, "r2", "max-strong"); }) == 404);
  CHECK(status_of([&] { store.candidates(id, "r7", "max-strong"); }) == 404);
  CHECK(status_of([&] { store.candidates(id, "r1", "everything"); }) == 400);
  CHECK(status_of([&] { store.apply(id, {{"axiom", "r1"}}); }) == 400);
  CHECK(status_of([&] { store.apply(id, {{"axiom", "r1"}, {"replacement", "Prof SubClassOf ("}}); }) == 400);
  CHECK(status_of([&] { store.apply(id, {{"axiom", "r1"}, {"replacement", "Prof SubClassOf Studi"}}); }) == 409);
  CHECK(status_of([&] { store.auto_run(id, {{"strategy", "scripted"}}); }) == 400);
  store.auto_run(id, {{"strategy", "max-strong"}});
  CHECK(store.state(id)["status"] == "repaired");
  CHECK(status_of([&] { store.candidates(id, "r1", "max-strong"); }) == 409);
  CHECK(status_of([&] { store.apply(id, {{"axiom", "r1"}, {"replacement", "Prof SubClassOf Top"}}); }) == 409);
  CHECK(status_of([&] { store.auto_run(id, {{"strategy", "tautology"}}); }) == 409);
}

TEST_CASE("a still-entailed consequence keeps the session open") {
  RepairProblem p{parse_ontology(read_data("still_entailed.el")), Ax("A(a)")};
  SessionStore store;
  for (std::string alg : {"gentle", "modified"}) {
    std::string id = store.create(session_body("still_entailed.el", "A(a)", alg))["id"];
    json after = store.apply(id, {{"axiom", "r2"}, {"replacement", "B(a)"}});
    CHECK(after["status"] == "awaiting_choice");
    CHECK(after["entailed"] == true);
    CHECK(after["iteration"] == 2);
    CHECK(after["trace"]["iterations"][0]["entailed_after"] == true);
    REQUIRE(after["justifications"].size() == 1);
    CHECK(texts(after["justifications"][0]) == std::vector<std::string>{"B SubClassOf A", "B(a)"});

    json done = alg == "gentle"
                    ? store.apply(id, {{"axiom", "r1"}, {"replacement", "B SubClassOf Top"}})
                    : store.apply(id, {{"axiom", "r2"}, {"replacement", "Top(a)"}});
    CHECK(done["status"] == "repaired");
    CHECK(verify_repair(p, parse_ontology(store.export_text(id))));
  }
}

TEST_CASE("condition violations echo the justification") {
  SessionStore store;
  std::string id = store.create(session_body("still_entailed.el", "A(a)"))["id"];
  ApiError e = error_of([&] { store.apply(id, {{"axiom", "r2"}, {"replacement", "A(a)"}}); });
  CHECK(e.status == 409);
  CHECK(e.error == "ConditionViolated");
  CHECK(texts(e.detail["justification"]) == std::vector<std::string>{"(A and B)(a)"});
  CHECK(e.body().contains("detail"));
  ApiError w = error_of([&] { store.apply(id, {{"axiom", "r2"}, {"replacement", "C(a)"}}); });
  CHECK(w.status == 409);
  CHECK(w.error == "NotWeaker");
  CHECK(store.state(id)["iteration"] == 1);
}

TEST_CASE("automatic completion") {
  SessionStore store;
  for (std::string alg : {"gentle", "modified"})
    for (std::string kind : {"syn", "sub"})
      for (std::string strategy : {"tautology", "oracle", "max-strong"}) {
        std::string id = store.create(session_body("still_entailed.el", "A(a)", alg, kind))["id"];
        json done = store.auto_run(id, {{"strategy", strategy}});
        CHECK(done["status"] == "repaired");
      }
  std::string id = store.create(session_body("still_entailed.el", "A(a)"))["id"];
  CHECK(store.auto_run(id, json::object())["status"] == "repaired");

  json classical = store.create(session_body("prof.el", "Prof SubClassOf Studi", "classical"));
  CHECK(classical["status"] == "repaired");
  CHECK(classical["trace"]["iterations"][0]["replacements"][0]["new"].is_null());
  CHECK(store.justifications(classical["id"])["justifications"].size() == 1);
}

TEST_CASE("export parses back") {
  SessionStore store;
  std::string id = store.create(session_body("adversarial2.el", "A SubClassOf B", "modified", "sub"))["id"];
  store.auto_run(id, {{"strategy", "max-strong"}});
  std::string text = store.export_text(id);
  CHECK(render(parse_ontology(text)) == text);
  CHECK_FALSE(entails(parse_ontology(text).all(), Ax("A SubClassOf B")));
}

TEST_CASE("replaying a trace reproduces the final ontology") {
  SessionStore store;
  std::string auto_id = store.create(session_body("still_entailed.el", "A(a)"))["id"];
  json done = store.auto_run(auto_id, {{"strategy", "oracle"}});
  std::string manual = store.create(session_body("still_entailed.el", "A(a)"))["id"];
  for (const auto& step : done["trace"]["iterations"])
    for (const auto& r : step["replacements"])
      store.apply(manual, {{"axiom", r["label"]}, {"replacement", r["new"]}});
  CHECK(store.state(manual)["status"] == "repaired");
  CHECK(store.export_text(manual) == store.export_text(auto_id));
}

TEST_CASE("sessions survive a restart") {
  TempDir dir;
  std::string a, b;
  json before;
  {
    SessionStore store(dir.path);
    a = store.create(session_body("still_entailed.el", "A(a)"))["id"];
    store.apply(a, {{"axiom", "r2"}, {"replacement", "B(a)"}});
    before = store.state(a);
    b = store.create(session_body("prof.el", "Prof SubClassOf Studi", "modified"))["id"];
    store.auto_run(b, {{"strategy", "max-strong"}});
  }
  std::ofstream(dir.path / "garbage.json") << "{not json";
  SessionStore again(dir.path);
  CHECK(again.size() == 2);
  CHECK(again.state(a) == before);
  CHECK(again.state(b)["status"] == "repaired");
  CHECK(again.apply(a, {{"axiom", "r1"}, {"replacement", "B SubClassOf Top"}})["status"] == "repaired");
}

TEST_CASE("concurrent sessions") {
  SessionStore store;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(store.create(session_body("prof.el", "Prof SubClassOf Studi"))["id"]);
  std::atomic<int> repaired{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      const std::string& id = ids[t % ids.size()];
      for (int k = 0; k < 20; ++k) store.state(id);
      try {
        json s = store.auto_run(id, {{"strategy", "max-strong"}});
        if (s["status"] == "repaired") ++repaired;
      } catch (const ApiError& e) {
        if (e.status == 409) ++conflicts;
      }
      store.create(session_body("still_entailed.el", "A(a)"));
    });
  for (auto& w : workers) w.join();
  CHECK(repaired == 4);
  CHECK(conflicts == 4);
  CHECK(store.size() == 12);
  for (const auto& id : ids) CHECK(store.state(id)["trace"]["iteration_count"] == 1);
}

TEST_CASE("http api") {
  SessionStore store;
  HttpServer server(store);
  int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread loop([&] { server.listen(); });
  server.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto created = cli.Post("/api/sessions", session_body("still_entailed.el", "A(a)").dump(),
                          "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  json s = json::parse(created->body);
  std::string base = "/api/sessions/" + s["id"].get<std::string>();

  auto got = cli.Get(base);
  REQUIRE(got);
  CHECK(got->status == 200);
  CHECK(json::parse(got->body)["status"] == "awaiting_choice");

  auto js = cli.Get(base + "/justifications");
  CHECK(json::parse(js->body)["justifications"].size() == 1);

  auto cands = cli.Get(base + "/candidates?axiom=r2");
  REQUIRE(cands);
  CHECK(cands->status == 200);
  CHECK(json::parse(cands->body)["candidates"].size() >= 1);
  CHECK(cli.Get(base + "/candidates?axiom=r1")->status == 404);
  CHECK(cli.Get(base + "/candidates?axiom=r2&mode=one-step")->status == 200);

  auto bad = cli.Post(base + "/apply", "{not json", "application/json");
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body).contains("error"));

  auto violated = cli.Post(base + "/apply", json{{"axiom", "r2"}, {"replacement", "A(a)"}}.dump(),
                           "application/json");
  CHECK(violated->status == 409);
  CHECK(json::parse(violated->body)["error"] == "ConditionViolated");

  auto applied = cli.Post(base + "/apply", json{{"axiom", "r2"}, {"replacement", "B(a)"}}.dump(),
                          "application/json");
  CHECK(applied->status == 200);
  CHECK(json::parse(applied->body)["status"] == "awaiting_choice");

  auto finished = cli.Post(base + "/auto", json{{"strategy", "max-strong"}}.dump(), "application/json");
  CHECK(finished->status == 200);
  CHECK(json::parse(finished->body)["status"] == "repaired");

  auto exported = cli.Get(base + "/export");
  REQUIRE(exported);
  CHECK(exported->status == 200);
  CHECK(exported->get_header_value("Content-Type").rfind("text/plain", 0) == 0);
  CHECK_NOTHROW(parse_ontology(exported->body));

  CHECK(cli.Get("/api/sessions/missing")->status == 404);
  CHECK(json::parse(cli.Get("/api/sessions/missing")->body)["error"] == "UnknownSession");

  server.stop();
  loop.join();
}
