#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "regsyn/ts.hpp"

namespace regsyn {

// Ordered collection of state-disjoint TSs that may share events. A single
// TS is the one-component union. Global state indices are component-major;
// global events are the sorted union of all component events.
class Union {
 public:
  struct Edge {
    int src, ev, dst;
  };

  Union() = default;
  Union(const TransitionSystem& ts) : Union(std::vector<TransitionSystem>{ts}) {}  // NOLINT
  explicit Union(std::vector<TransitionSystem> comps, std::string name = "U");

  const std::string& name() const { return name_; }
  const std::vector<TransitionSystem>& components() const { return comps_; }
  int num_components() const { return (int)comps_.size(); }
  int num_states() const { return (int)comp_of_.size(); }
  int num_events() const { return (int)events_.size(); }

  const std::string& state_name(int g) const { return snames_[g]; }
  const std::string& event_name(int e) const { return events_[e]; }
  const std::vector<std::string>& events() const { return events_; }
  int state_index(const std::string& s) const;  // -1 if absent
  int event_index(const std::string& e) const;

  int comp_of(int g) const { return comp_of_[g]; }
  int offset(int c) const { return offset_[c]; }
  int comp_size(int c) const { return comps_[c].num_states(); }
  int initial(int c) const { return offset_[c] + comps_[c].initial(); }
  // global event index of a component-local event
  int global_event(int c, int local_e) const { return evmap_[c][local_e]; }
  bool comp_has_event(int c, int e) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& out(int g) const { return out_[g]; }  // (event, target)
  int step(int g, int e) const;  // -1 if undefined
  bool occurs(int e, int g) const { return step(g, e) >= 0; }

 private:
  std::string name_;
  std::vector<TransitionSystem> comps_;
  std::vector<int> offset_, comp_of_;
  std::vector<std::string> snames_, events_;
  std::vector<std::vector<int>> evmap_;
  std::vector<std::vector<char>> has_ev_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::unordered_map<std::string, int> sidx_, eidx_;
};

}  // namespace regsyn
