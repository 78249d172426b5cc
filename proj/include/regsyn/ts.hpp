#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace regsyn {

// Deterministic initialized transition system. States and events are kept
// in lexicographic order; indices refer to that order.
class TransitionSystem {
 public:
  struct Edge {
    int src, ev, dst;
    bool operator==(const Edge&) const = default;
  };
  using Triple = std::tuple<std::string, std::string, std::string>;

  TransitionSystem() = default;

  static TransitionSystem build(std::string name, std::vector<std::string> states,
                                std::vector<std::string> events,
                                const std::vector<Triple>& transitions,
                                const std::string& initial);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& events() const { return events_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int initial() const { return initial_; }
  int num_states() const { return (int)states_.size(); }
  int num_events() const { return (int)events_.size(); }

  int state_index(const std::string& s) const;  // -1 if absent
  int event_index(const std::string& e) const;
  int step(int s, int e) const;  // -1 if undefined
  const std::vector<std::pair<int, int>>& out(int s) const { return out_[s]; }

  // BFS order of states from the initial one
  std::vector<int> bfs_order() const;

  bool operator==(const TransitionSystem& o) const {
    return name_ == o.name_ && states_ == o.states_ && events_ == o.events_ &&
           edges_ == o.edges_ && initial_ == o.initial_;
  }

 private:
  std::string name_;
  std::vector<std::string> states_, events_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> out_;  // (event, target), sorted by event
  std::unordered_map<std::string, int> sidx_, eidx_;
  int initial_ = 0;
};

std::vector<std::string> occurs_at(const TransitionSystem& ts, const std::string& event);

TransitionSystem parse_ts(const std::string& text);
std::string serialize_ts(const TransitionSystem& ts);
std::string ts_to_dot(const TransitionSystem& ts);

}  // namespace regsyn
