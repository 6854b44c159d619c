#include <doctest.h>

#include <stdexcept>

#include "elgr/entailment.hpp"
#include "elgr/error.hpp"
#include "elgr/justifications.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace elgr;
using elgr::testing::Ax;

namespace {

std::vector<std::vector<Label>> label_lists(const std::vector<Justification>& js) {
  std::vector<std::vector<Label>> out;
  for (const auto& j : js) out.push_back(j.labels());
  return out;
}

std::vector<std::vector<Label>> label_lists(const std::vector<std::vector<Axiom>>& sets) {
  std::vector<std::vector<Label>> out;
  for (const auto& s : sets) out.push_back(labels_of(s));
  return out;
}

std::vector<Label> L(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

}  // namespace

TEST_CASE("single justification of the professor consequence") {
  Ontology o = elgr::testing::load("prof.el");
  Axiom q = Ax("Prof SubClassOf Studi");
  CHECK(find_one_justification(o, q).labels() == L({"r1", "r2"}));
  CHECK(label_lists(all_justifications(o, q)) == std::vector<std::vector<Label>>{L({"r1", "r2"})});
}

TEST_CASE("single-axiom justification") {
  Ontology o = parse_ontology("[refutable]\nA SubClassOf B\n");
  CHECK(find_one_justification(o, Ax("A SubClassOf B")).labels() == L({"r1"}));
}

TEST_CASE("errors") {
  Ontology o = parse_ontology("[static]\nA SubClassOf B\n[refutable]\nB SubClassOf C\n");
  CHECK_THROWS_AS(find_one_justification(o, Ax("A SubClassOf D")), NotEntailed);
  CHECK_THROWS_AS(find_one_justification(o, Ax("A SubClassOf B")), StaticEntails);
  CHECK_THROWS_AS(all_justifications(o, Ax("A SubClassOf D")), NotEntailed);
  CHECK_THROWS_AS(minimal_hitting_sets({Justification{}}), std::invalid_argument);
}

TEST_CASE("deletion order decides which justification is found") {
  Ontology o = parse_ontology(
      "[refutable]\nA SubClassOf B\nB SubClassOf C\nA SubClassOf C\n");
  Axiom q = Ax("A SubClassOf C");
  CHECK(find_one_justification(o, q).labels() == L({"r3"}));
  CHECK(label_lists(all_justifications(o, q)) ==
        std::vector<std::vector<Label>>{L({"r1", "r2"}), L({"r3"})});
}

TEST_CASE("static axioms never appear") {
  Ontology o = parse_ontology(
      "[static]\nB SubClassOf C\n[refutable]\nA SubClassOf B\nA SubClassOf D\nD SubClassOf C\n");
  auto js = all_justifications(o, Ax("A SubClassOf C"));
  CHECK(label_lists(js) == std::vector<std::vector<Label>>{L({"r1"}), L({"r2", "r3"})});
  auto hs = minimal_hitting_sets(js);
  CHECK(label_lists(hs) == std::vector<std::vector<Label>>{L({"r1", "r2"}), L({"r1", "r3"})});
}

TEST_CASE("hitting sets") {
  std::vector<Justification> js{
      {{Ax("A SubClassOf B").relabeled(Label("r1")), Ax("B SubClassOf C").relabeled(Label("r2"))}},
      {{Ax("B SubClassOf C").relabeled(Label("r2")), Ax("C SubClassOf D").relabeled(Label("r3"))}}};
  CHECK(label_lists(minimal_hitting_sets(js)) ==
        std::vector<std::vector<Label>>{L({"r1", "r3"}), L({"r2"})});
  CHECK(minimal_hitting_sets({}).size() == 1);
  CHECK(minimal_hitting_sets({}).front().empty());
}

TEST_CASE("hitting-set tree budget") {
  Ontology o;
  for (int i = 1; i <= 6; ++i) {
    o.refutable_part.push_back(Ax("A SubClassOf X" + std::to_string(i)).relabeled(Label("r" + std::to_string(2 * i - 1))));
    o.refutable_part.push_back(Ax("X" + std::to_string(i) + " SubClassOf B").relabeled(Label("r" + std::to_string(2 * i))));
  }
  CHECK(all_justifications(o, Ax("A SubClassOf B")).size() == 6);
  CHECK_THROWS_AS(all_justifications(o, Ax("A SubClassOf B"), 3), SearchBudgetExceeded);
}

TEST_CASE("justifications match the subset scan") {
  elgr::testing::ConceptGenerator gen(41, {{"A", "B"}, {"r"}});
  for (int i = 0; i < 1000; ++i) {
    auto p = elgr::testing::random_problem(gen, 6, 2, gen.coin(0.3), gen.coin(0.3));
    auto js = all_justifications(p.ontology, p.target);
    auto want = oracle::justifications(p.ontology, p.target);
    CHECK(label_lists(js) == want);

    Justification one = find_one_justification(p.ontology, p.target);
    CHECK(std::find(want.begin(), want.end(), one.labels()) != want.end());

    CHECK(label_lists(minimal_hitting_sets(js)) == oracle::minimal_hitting_sets(want));
  }
}
