#include <doctest.h>

#include <cstdlib>

#include "elgr/entailment.hpp"
#include "elgr/error.hpp"
#include "elgr/render.hpp"
#include "elgr/weakening.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace elgr;
using elgr::testing::Ax;
using elgr::testing::C;

namespace {

std::vector<std::string> rendered(const std::vector<Axiom>& as) {
  std::vector<std::string> out;
  for (const auto& a : as) out.push_back(render(a));
  return out;
}

// P1 and Q1 and ... and Pn and Qn, with static Pi and Qi SubClassOf B.
struct Exponential {
  std::vector<Axiom> statics;
  Axiom beta;
  Axiom target = Ax("A SubClassOf B");

  explicit Exponential(int n) {
    std::vector<Concept> parts;
    for (int i = 1; i <= n; ++i) {
      std::string p = "P" + std::to_string(i), q = "Q" + std::to_string(i);
      statics.push_back(Ax(p + " and " + q + " SubClassOf B"));
      parts.push_back(C(p));
      parts.push_back(C(q));
    }
    beta = Axiom::gci(C("A"), Concept::conj(parts));
  }
};

}  // namespace

TEST_CASE("weakening kinds parse") {
  CHECK(parse_weakening_kind("sub") == WeakeningKind::Sub);
  CHECK(parse_weakening_kind("syn") == WeakeningKind::Syn);
  CHECK_FALSE(parse_weakening_kind("semantic").has_value());
  CHECK(to_string(WeakeningKind::Sub) == "sub");
}

TEST_CASE("search budget from the environment") {
  ::setenv("ELGR_SEARCH_BUDGET", "42", 1);
  CHECK(default_search_budget() == 42);
  ::setenv("ELGR_SEARCH_BUDGET", "nonsense", 1);
  CHECK(default_search_budget() == 100000);
  ::unsetenv("ELGR_SEARCH_BUDGET");
  CHECK(default_search_budget() == 100000);
}

TEST_CASE("weaker-than relations") {
  Axiom beta = Ax("Top SubClassOf some r.(A and B)");
  Axiom split = Ax("Top SubClassOf some r.A and some r.B");
  CHECK(is_weaker(WeakeningKind::Sub, beta, split));
  CHECK_FALSE(is_weaker(WeakeningKind::Syn, beta, split));
  CHECK(is_weaker(WeakeningKind::Syn, beta, Ax("Top SubClassOf some r.A")));
  CHECK_FALSE(is_weaker(WeakeningKind::Syn, beta, beta));
  CHECK_FALSE(is_weaker(WeakeningKind::Sub, Ax("A SubClassOf B"), Ax("C SubClassOf Top")));
  CHECK(is_weaker(WeakeningKind::Sub, Ax("(A and B)(a)"), Ax("B(a)")));
  CHECK_FALSE(is_weaker(WeakeningKind::Sub, Ax("(A and B)(a)"), Ax("B(b)")));
  // strict subsumption without fewer consequences
  CHECK_FALSE(is_weaker(WeakeningKind::Sub, Ax("Top SubClassOf A and some r.A"),
                        Ax("Top SubClassOf A and some r.Top")));
  CHECK(is_weaker(WeakeningKind::Sub, Ax("r(a, b)"), Ax("Top(a)")));
  CHECK_FALSE(is_weaker(WeakeningKind::Sub, Ax("r(a, b)"), Ax("r(a, b)")));
  CHECK(is_weaker_general(Ax("A SubClassOf B and C"), Ax("A and D SubClassOf B")));
  CHECK(is_weaker_s(Ax("A SubClassOf B and C"), Ax("A SubClassOf B")));
}

TEST_CASE("semantic one-step successors pass through equivalent axioms") {
  Axiom beta = Ax("Top SubClassOf A and some r.A");
  auto succ = sub_one_step(beta);
  CHECK(rendered(succ) ==
        std::vector<std::string>{"Top SubClassOf A", "Top SubClassOf some r.A"});
  auto space = oracle::concept_space({"A"}, {"r"});
  CHECK(oracle::same_classes(succ, oracle::sub_one_step(beta, space)));
  for (const auto& g : succ) CHECK(render(g) != "Top SubClassOf some r.Top");
}

TEST_CASE("one-step successors, small cases") {
  CHECK(rendered(sub_one_step(Ax("Top SubClassOf A and B"))) ==
        std::vector<std::string>{"Top SubClassOf A", "Top SubClassOf B"});
  CHECK(sub_one_step(Ax("A SubClassOf Top")).empty());
  CHECK(sub_one_step(Ax("A SubClassOf A")).empty());
  CHECK(rendered(sub_one_step(Ax("(A and B)(a)"))) == std::vector<std::string>{"A(a)", "B(a)"});
  CHECK(rendered(syn_one_step(Ax("Prof SubClassOf some employed.Uni and some enrolled.Uni"))) ==
        std::vector<std::string>{
            "Prof SubClassOf some employed.Top and some enrolled.Uni",
            "Prof SubClassOf some employed.Uni and some enrolled.Top"});
  CHECK(rendered(one_step_successors(WeakeningKind::Sub, Ax("Top SubClassOf some r.(A and B)"))) ==
        std::vector<std::string>{"Top SubClassOf some r.A and some r.B"});
  CHECK(rendered(one_step_successors(WeakeningKind::Syn, Ax("Top SubClassOf some r.(A and B)"))) ==
        std::vector<std::string>{"Top SubClassOf some r.A", "Top SubClassOf some r.B"});
  CHECK(rendered(one_step_successors(WeakeningKind::Sub, Ax("r(a, b)"))) ==
        std::vector<std::string>{"Top(a)"});
}

TEST_CASE("semantic one-step successors match the closed-space brute force") {
  auto space = oracle::concept_space({"A", "B", "C"}, {"r"});
  elgr::testing::ConceptGenerator gen(31);
  for (int i = 0; i < 400; ++i) {
    Concept lhs = gen.coin(0.6) ? Concept::name(gen.pick_name()) : gen.concept_of(1, 2);
    Axiom beta = Axiom::gci(lhs, space[gen.uniform(0, int(space.size()) - 1)]);
    INFO(render(beta));
    CHECK(oracle::same_classes(sub_one_step(beta), oracle::sub_one_step(beta, space)));
  }
}

TEST_CASE("maximally strong weakening is unique for a conjunction") {
  std::vector<Axiom> none;
  for (auto kind : {WeakeningKind::Sub, WeakeningKind::Syn}) {
    WeakeningContext ctx(none, none, Ax("Top SubClassOf A"));
    CHECK(rendered(max_strong_weakenings(kind, ctx, Ax("Top SubClassOf A and B"))) ==
          std::vector<std::string>{"Top SubClassOf B"});
  }
}

TEST_CASE("exponentially many maximally strong weakenings") {
  Exponential ex(3);
  for (auto kind : {WeakeningKind::Sub, WeakeningKind::Syn}) {
    WeakeningContext ctx(ex.statics, {}, ex.target);
    auto ms = max_strong_weakenings(kind, ctx, ex.beta);
    CHECK(ms.size() == 8);
    CHECK(oracle::texts(ms) == oracle::texts(oracle::max_strong_syn(ex.beta, ex.statics, {{}}, ex.target)));
    for (const auto& g : ms) {
      CHECK(ctx.breaks(g));
      CHECK(g.as_gci().rhs.parts().size() == 3);
    }
  }
}

TEST_CASE("professor weakening keeps the employment") {
  Axiom beta = Ax("Prof SubClassOf some employed.Uni and some enrolled.Uni");
  WeakeningContext ctx({}, {Ax("some enrolled.Uni SubClassOf Studi")}, Ax("Prof SubClassOf Studi"));
  for (auto kind : {WeakeningKind::Sub, WeakeningKind::Syn})
    CHECK(rendered(max_strong_weakenings(kind, ctx, beta)) ==
          std::vector<std::string>{"Prof SubClassOf some employed.Uni and some enrolled.Top"});
  CHECK(render(single_max_strong_syn(ctx, beta)) ==
        "Prof SubClassOf some employed.Uni and some enrolled.Top");
  // The oracle walks in rendering order, and employed.Top sorts first.
  CHECK(render(weaken_until(WeakeningKind::Syn, ctx, beta)) ==
        "Prof SubClassOf some employed.Top and some enrolled.Top");
  CHECK(render(oracle_step(WeakeningKind::Syn, beta)) ==
        "Prof SubClassOf some employed.Top and some enrolled.Uni");
}

TEST_CASE("oracle iteration ends at the tautology") {
  Axiom a = Ax("A SubClassOf B and some r.C");
  int steps = 0;
  while (!is_tautology(a)) {
    Axiom next = oracle_step(WeakeningKind::Syn, a);
    REQUIRE(render(next) != render(a));
    a = next;
    ++steps;
  }
  CHECK(steps == 3);
  CHECK(render(oracle_step(WeakeningKind::Syn, a)) == render(a));
}

TEST_CASE("context with several justifications") {
  Axiom beta = Ax("A SubClassOf B and C");
  auto ctx = WeakeningContext::for_rests({}, {{Ax("B SubClassOf D")}, {Ax("C SubClassOf D")}},
                                         Ax("A SubClassOf D"));
  CHECK_FALSE(ctx.breaks(Ax("A SubClassOf B")));
  CHECK(ctx.first_violation(Ax("A SubClassOf C")) == std::size_t(1));
  CHECK(ctx.breaks(Ax("A SubClassOf Top")));
  CHECK(max_strong_weakenings(WeakeningKind::Syn, ctx, beta).size() == 1);
}

TEST_CASE("budget exhaustion is reported") {
  Exponential ex(4);
  WeakeningContext ctx(ex.statics, {}, ex.target);
  CHECK_THROWS_AS(max_strong_weakenings(WeakeningKind::Sub, ctx, ex.beta, 5), SearchBudgetExceeded);
}

TEST_CASE("syntactic maximally strong weakenings match position-subset brute force") {
  elgr::testing::ConceptGenerator gen(33);
  int checked = 0;
  while (checked < 1000) {
    Concept rhs = gen.bounded(2, 6, 3);
    Concept lhs = gen.coin(0.7) ? Concept::name(gen.pick_name()) : gen.concept_of(1, 2);
    Axiom beta = Axiom::gci(lhs, rhs);
    std::vector<Axiom> statics, rest;
    for (int k = gen.uniform(0, 2); k > 0; --k) statics.push_back(gen.gci(1));
    for (int k = gen.uniform(0, 2); k > 0; --k) rest.push_back(gen.gci(1));
    auto subs = elgr::testing::subconcepts(rhs);
    Axiom target = Axiom::gci(lhs, subs[gen.uniform(0, int(subs.size()) - 1)]);
    if (gen.coin(0.3)) target = Axiom::gci(lhs, gen.concept_of(1, 2));
    std::vector<Axiom> all = statics;
    all.insert(all.end(), rest.begin(), rest.end());
    std::vector<Axiom> with_beta = all;
    with_beta.push_back(beta);
    if (entails(std::span<const Axiom>(all), target) ||
        !entails(std::span<const Axiom>(with_beta), target))
      continue;
    ++checked;
    WeakeningContext ctx(statics, rest, target);
    INFO(render(beta), " target ", render(target));
    auto got = max_strong_weakenings(WeakeningKind::Syn, ctx, beta);
    CHECK(oracle::same_classes(got, oracle::max_strong_syn(beta, statics, {rest}, target)));
    Axiom one = single_max_strong_syn(ctx, beta);
    bool listed = false;
    for (const auto& g : got) listed = listed || equivalent_axioms(g, one);
    CHECK(listed);
  }
}

TEST_CASE("semantic maximally strong weakenings match the closed-space brute force") {
  auto space = oracle::concept_space({"A", "B", "C"}, {"r"});
  elgr::testing::ConceptGenerator gen(34);
  int checked = 0;
  while (checked < 300) {
    Axiom beta = Axiom::gci(Concept::name(gen.pick_name()), space[gen.uniform(0, int(space.size()) - 1)]);
    std::vector<Axiom> rest;
    for (int k = gen.uniform(0, 2); k > 0; --k) rest.push_back(gen.gci(1));
    Axiom target = Axiom::gci(beta.as_gci().lhs, gen.concept_of(1, 2));
    std::vector<Axiom> with_beta = rest;
    with_beta.push_back(beta);
    if (entails(std::span<const Axiom>(rest), target) ||
        !entails(std::span<const Axiom>(with_beta), target))
      continue;
    ++checked;
    WeakeningContext ctx({}, rest, target);
    INFO(render(beta), " target ", render(target));
    CHECK(oracle::same_classes(max_strong_weakenings(WeakeningKind::Sub, ctx, beta),
                       oracle::max_strong_sub(beta, space, {}, {rest}, target)));
  }
}
