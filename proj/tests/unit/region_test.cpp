#include <doctest.h>

#include "common.hpp"
#include "regsyn/error.hpp"

using namespace regsyn;

TEST_CASE("fig2 regions are valid under tau0 b=2") {
  Union u(fig2());
  NetType t(Family::tau0, 2);
  for (auto n : {"R1", "R2", "R3", "R4"}) CHECK(verify_region(u, fig2_region(u, n), t).ok);
}

TEST_CASE("rejection names the first offending transition") {
  Union u(fig2());
  NetType t(Family::tau0, 2);
  auto r = fig2_region(u, "R1");
  r.sup[u.state_index("1")] = 2;
  auto c = verify_region(u, r, t);
  CHECK(!c.ok);
  CHECK(edge_str(u, c.edge) == "0 --a--> 1");
}

TEST_CASE("signature outside the type is an arity error") {
  Union u(fig2());
  auto r = fig2_region(u, "R1");
  CHECK(code_of([&] { verify_region(u, r, NetType(Family::tau1, 2)); }) == ErrorCode::ArityMismatch);
  r.sup.pop_back();
  CHECK(code_of([&] { verify_region(u, r, NetType(Family::tau0, 2)); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("solves") {
  Union u(fig2());
  NetType t(Family::tau0, 2);
  auto c1 = Atom::essp(u.event_index("c"), u.state_index("1"));
  CHECK(solves(fig2_region(u, "R1"), c1, t));
  CHECK(!solves(fig2_region(u, "R2"), c1, t));
  NetType t3(Family::tau3, 2);
  auto r5 = parse_region(read_file(kData + "/R5.region"), u).region;
  // group events are total
  CHECK(!solves(r5, Atom::essp(u.event_index("a"), u.state_index("2")), t3));
}

TEST_CASE("atom enumeration") {
  Union u(fig2());
  auto all = enumerate_atoms(u);
  CHECK(all.size() == 66 + 23);
  CHECK(all.front().kind == Atom::SSP);
  CHECK(all.back().kind == Atom::ESSP);
  CHECK(atom_str(u, parse_atom(u, "essp:c,1")) == "essp:c,1");
  CHECK(atom_str(u, parse_atom(u, "ssp:5,0")) == "ssp:0,5");
  CHECK(code_of([&] { parse_atom(u, "ssp:1,1"); }) == ErrorCode::InvalidAtom);
  CHECK(code_of([&] { parse_atom(u, "essp:c,0"); }) == ErrorCode::InvalidAtom);
  CHECK(code_of([&] { parse_atom(u, "essp:q,0"); }) == ErrorCode::UnknownIdentifier);
  CHECK(code_of([&] { parse_atom(u, "foo"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("union atoms stay within components") {
  auto a = TransitionSystem::build("a", {"a0", "a1"}, {"e"}, {{"a0", "e", "a1"}}, "a0");
  auto b = TransitionSystem::build("b", {"b0", "b1"}, {"e"}, {{"b0", "e", "b1"}}, "b0");
  Union u({a, b});
  int ssp = 0;
  for (auto& x : enumerate_atoms(u)) ssp += x.kind == Atom::SSP;
  CHECK(ssp == 2);
  CHECK(!is_valid_atom(u, Atom::ssp(0, 2)));
}

TEST_CASE("complete_region propagates from initial supports") {
  Union u(fig2());
  NetType t(Family::tau0, 2);
  std::vector<TypeEvent> sig{TypeEvent::flow(1, 0), TypeEvent::flow(0, 2), TypeEvent::flow(2, 2)};
  auto c = complete_region(u, {2}, sig, t);
  REQUIRE(c.region);
  CHECK(c.region->same_mapping(fig2_region(u, "R1")));
  auto bad = complete_region(u, {1}, sig, t);
  CHECK(!bad.region);
  CHECK(!bad.check.ok);
}

TEST_CASE("sparse region files") {
  Union u(fig2());
  auto f = parse_region("region S over A\ntype tau0 2\nsig a 1:0\nsig b 0:2\nsig c 2:2\n", u);
  // unlisted initial defaults to b, the rest propagates
  CHECK(f.region.same_mapping(fig2_region(u, "R1")));
  auto g = parse_region("region S over A\ntype tau3 2\n", u);
  CHECK(g.region.sig[0] == TypeEvent::grp(0));
  CHECK(code_of([&] { parse_region("region S over A\n", u); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_region("type tau0 2\nsup nowhere 1\n", u); }) == ErrorCode::UnknownIdentifier);
  RegionFile rf;
  rf.name = "R1";
  rf.type = NetType(Family::tau0, 2);
  rf.region = fig2_region(u, "R1");
  CHECK(parse_region(serialize_region(rf, u), u).region.same_mapping(rf.region));
}

TEST_CASE("valid on a union iff valid on each component") {
  auto a = TransitionSystem::build("a", {"a0", "a1"}, {"e"}, {{"a0", "e", "a1"}}, "a0");
  auto b = TransitionSystem::build("b", {"b0", "b1"}, {"e"}, {{"b0", "e", "b1"}}, "b0");
  Union u({a, b});
  NetType t(Family::tau1, 1);
  Region r{"r", {1, 0, 1, 0}, {TypeEvent::flow(1, 0)}};
  CHECK(verify_region(u, r, t).ok);
  CHECK(verify_region(Union(a), Region{"r", {1, 0}, r.sig}, t).ok);
  r.sup[2] = 0;
  CHECK(!verify_region(u, r, t).ok);
}
