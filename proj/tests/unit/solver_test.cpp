#include <doctest.h>

#include "common.hpp"
#include "regsyn/error.hpp"
#include "regsyn/solver.hpp"

using namespace regsyn;

TEST_CASE("single atoms on fig2") {
  Union u(fig2());
  auto c1 = parse_atom(u, "essp:c,1");
  auto r0 = solve_atom(u, c1, NetType(Family::tau0, 2));
  CHECK(r0.outcome == Outcome::Solved);
  REQUIRE(r0.witness);
  CHECK(verify_region(u, *r0.witness, NetType(Family::tau0, 2)).ok);
  CHECK(solves(*r0.witness, c1, NetType(Family::tau0, 2)));
  CHECK(solve_atom(u, c1, NetType(Family::tau1, 2)).outcome == Outcome::Unsolvable);
  CHECK(code_of([&] { solve_atom(u, Atom::ssp(1, 1), NetType(Family::tau0, 2)); }) == ErrorCode::InvalidAtom);
}

TEST_CASE("decide on fig2") {
  Union u(fig2());
  auto f0 = decide(u, Property::Feasibility, NetType(Family::tau0, 2));
  CHECK(f0.aggregate == Outcome::Solved);
  CHECK(!f0.witnesses.empty());
  CHECK(f0.results.size() == 89);
  CHECK(decide(u, Property::Feasibility, NetType(Family::tau3, 2)).aggregate == Outcome::Solved);
  auto e1 = decide(u, Property::ESSP, NetType(Family::tau1, 2));
  CHECK(e1.aggregate == Outcome::Unsolvable);
  REQUIRE(e1.first_failure >= 0);
  CHECK(atom_str(u, e1.results[e1.first_failure].atom) == "essp:c,1");
  DecideOptions all;
  all.all = true;
  auto e2 = decide(u, Property::ESSP, NetType(Family::tau1, 2), all);
  int unsolved = 0;
  for (auto& r : e2.results) unsolved += r.outcome == Outcome::Unsolvable;
  CHECK(unsolved == 4);
  CHECK(e2.results.size() == 23);
}

TEST_CASE("reports do not depend on the worker count") {
  Union u(fig2());
  DecideOptions one, four;
  four.jobs = 4;
  auto a = decide(u, Property::Feasibility, NetType(Family::tau0, 2), one);
  auto b = decide(u, Property::Feasibility, NetType(Family::tau0, 2), four);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].same_mapping(b.witnesses[i]));
    CHECK(a.witnesses[i].name == b.witnesses[i].name);
  }
  for (size_t i = 0; i < a.results.size(); ++i) CHECK(a.results[i].witness_index == b.results[i].witness_index);
}

TEST_CASE("greedy cover reuses witnesses") {
  Union u(fig2());
  DecideOptions g;
  g.greedy_cover = true;
  NetType t(Family::tau0, 2);
  auto plain = decide(u, Property::Feasibility, t);
  auto cover = decide(u, Property::Feasibility, t, g);
  CHECK(cover.aggregate == Outcome::Solved);
  CHECK(cover.witnesses.size() <= plain.witnesses.size());
  for (auto& r : cover.results) {
    REQUIRE(r.witness_index >= 0);
    CHECK(solves(cover.witnesses[r.witness_index], r.atom, t));
  }
}

TEST_CASE("node budget is reported, never turned into a refutation") {
  Union u(fig2());
  Budget b;
  b.nodes = 1;
  auto r = solve_atom(u, parse_atom(u, "essp:c,1"), NetType(Family::tau1, 2), b);
  CHECK(r.outcome != Outcome::Solved);
  auto e = decide(u, Property::ESSP, NetType(Family::tau0, 2), DecideOptions{false, false, 1, b});
  CHECK(e.aggregate != Outcome::Unsolvable);
}

TEST_CASE("events without transitions and self loops") {
  auto ts = parse_ts("ts s\nstates x y\nevents a b idle\ninitial x\ntrans x a y\ntrans y b y\n");
  Union u(ts);
  for (auto f : {Family::tau0, Family::tau1, Family::tau2, Family::tau3}) {
    NetType t(f, 2);
    auto r = decide(u, Property::Feasibility, t, DecideOptions{true, false, 1, {}});
    for (auto& x : r.results)
      if (x.witness) CHECK(verify_region(u, *x.witness, t).ok);
  }
}
