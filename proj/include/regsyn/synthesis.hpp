#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regsyn/region.hpp"

namespace regsyn {

struct SynthNet {
  std::string name = "N";
  NetType type{Family::tau0, 1};
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::vector<std::vector<TypeEvent>> flow;  // [place][transition]
  std::vector<int> m0;
};

using Marking = std::vector<int>;

// throws InvalidRegion if some region is not a region of ts
SynthNet build_net(const TransitionSystem& ts, const std::vector<Region>& regions, const NetType& t);

std::optional<Marking> fire(const SynthNet& net, const Marking& m, int transition);
std::string marking_name(const SynthNet& net, const Marking& m);

// throws ExplosionGuard past cap reachable markings
TransitionSystem state_graph(const SynthNet& net, std::size_t cap = 1'000'000);

// label- and initial-preserving bijection as (state of a, state of b) pairs
// in the order of a's states; throws EventSetMismatch
std::optional<std::vector<std::pair<std::string, std::string>>> isomorphic(const TransitionSystem& a,
                                                                           const TransitionSystem& b);

SynthNet parse_net(const std::string& text);
std::string serialize_net(const SynthNet& net);
std::string net_to_dot(const SynthNet& net);

}  // namespace regsyn
