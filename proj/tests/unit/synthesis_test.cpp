#include <doctest.h>

#include <algorithm>

#include "common.hpp"
#include "regsyn/error.hpp"
#include "regsyn/synthesis.hpp"

using namespace regsyn;

namespace {

std::vector<Region> regions(const Union& u, std::vector<std::string> names) {
  std::vector<Region> v;
  for (auto& n : names) v.push_back(fig2_region(u, n));
  return v;
}

int tr(const SynthNet& n, const std::string& e) {
  return int(std::find(n.transitions.begin(), n.transitions.end(), e) - n.transitions.begin());
}

}  // namespace

TEST_CASE("synthesized net of R1..R4") {
  auto A = fig2();
  Union u(A);
  NetType t(Family::tau0, 2);
  auto net = build_net(A, regions(u, {"R1", "R2", "R3", "R4"}), t);
  CHECK(net.places == std::vector<std::string>{"R1", "R2", "R3", "R4"});
  CHECK(marking_name(net, net.m0) == "2002");
  auto m1 = fire(net, net.m0, tr(net, "a"));
  REQUIRE(m1);
  CHECK(marking_name(net, *m1) == "1011");
  CHECK(marking_name(net, *fire(net, Marking{0, 0, 2, 0}, tr(net, "b"))) == "2022");
  CHECK(!fire(net, net.m0, tr(net, "b")));
  auto sg = state_graph(net);
  CHECK(sg.num_states() == 12);
  auto iso = isomorphic(sg, A);
  REQUIRE(iso);
  CHECK(std::count(iso->begin(), iso->end(), std::make_pair(std::string("2002"), std::string("0"))) == 1);
}

TEST_CASE("R2..R4 under tau1: extra c edges, not isomorphic") {
  auto A = fig2();
  Union u(A);
  NetType t(Family::tau1, 2);
  auto net = build_net(A, regions(u, {"R2", "R3", "R4"}), t);
  auto sg = state_graph(net);
  CHECK(sg.num_states() == 12);
  int c = sg.event_index("c");
  CHECK(sg.step(sg.state_index("011"), c) == sg.state_index("111"));
  CHECK(sg.step(sg.state_index("020"), c) == sg.state_index("120"));
  CHECK(!isomorphic(sg, A));
}

TEST_CASE("zero-place net") {
  auto ts = parse_ts("ts t\nstates s\nevents a\ninitial s\n");
  auto net = build_net(ts, {}, NetType(Family::tau0, 1));
  CHECK(marking_name(net, net.m0) == "()");
  CHECK(fire(net, {}, 0) == Marking{});
  auto sg = state_graph(net);
  CHECK(sg.num_states() == 1);
  CHECK(sg.edges().size() == 1);
}

TEST_CASE("invalid region rejected by build_net") {
  auto A = fig2();
  Union u(A);
  auto r = fig2_region(u, "R1");
  r.sup[0] = 0;
  CHECK(code_of([&] { build_net(A, {r}, NetType(Family::tau0, 2)); }) == ErrorCode::InvalidRegion);
}

TEST_CASE("isomorphism") {
  auto A = fig2();
  auto id = isomorphic(A, A);
  REQUIRE(id);
  for (auto& [x, y] : *id) CHECK(x == y);
  auto B = parse_ts("ts b\nstates s\nevents z\ninitial s\n");
  CHECK(code_of([&] { isomorphic(A, B); }) == ErrorCode::EventSetMismatch);
}

TEST_CASE("explosion guard") {
  auto A = fig2();
  Union u(A);
  auto net = build_net(A, regions(u, {"R1", "R2", "R3", "R4"}), NetType(Family::tau0, 2));
  CHECK(code_of([&] { state_graph(net, 5); }) == ErrorCode::ExplosionGuard);
}

TEST_CASE("net files round trip") {
  auto A = fig2();
  Union u(A);
  auto net = build_net(A, regions(u, {"R1", "R2", "R3", "R4"}), NetType(Family::tau0, 2));
  auto back = parse_net(serialize_net(net));
  CHECK(back.places == net.places);
  CHECK(back.transitions == net.transitions);
  CHECK(back.flow == net.flow);
  CHECK(back.m0 == net.m0);
  CHECK(net_to_dot(net).find("digraph") != std::string::npos);
}
