#include "regsyn/union.hpp"

#include <algorithm>

#include "regsyn/error.hpp"

namespace regsyn {

Union::Union(std::vector<TransitionSystem> comps, std::string name)
    : name_(std::move(name)), comps_(std::move(comps)) {
  for (auto& c : comps_) events_.insert(events_.end(), c.events().begin(), c.events().end());
  std::sort(events_.begin(), events_.end());
  events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
  for (int i = 0; i < (int)events_.size(); ++i) eidx_[events_[i]] = i;

  for (int c = 0; c < (int)comps_.size(); ++c) {
    auto& ts = comps_[c];
    offset_.push_back((int)snames_.size());
    for (auto& s : ts.states()) {
      if (!sidx_.emplace(s, (int)snames_.size()).second)
        throw Error(ErrorCode::StateClash, "state '" + s + "' in more than one component");
      snames_.push_back(s);
      comp_of_.push_back(c);
    }
    std::vector<int> m;
    std::vector<char> has(events_.size(), 0);
    for (auto& e : ts.events()) {
      m.push_back(eidx_.at(e));
      has[m.back()] = 1;
    }
    evmap_.push_back(std::move(m));
    has_ev_.push_back(std::move(has));
  }
  out_.assign(snames_.size(), {});
  for (int c = 0; c < (int)comps_.size(); ++c)
    for (auto& e : comps_[c].edges()) {
      Edge g{offset_[c] + e.src, evmap_[c][e.ev], offset_[c] + e.dst};
      edges_.push_back(g);
      out_[g.src].push_back({g.ev, g.dst});
    }
  for (auto& o : out_) std::sort(o.begin(), o.end());
}

int Union::state_index(const std::string& s) const {
  auto it = sidx_.find(s);
  return it == sidx_.end() ? -1 : it->second;
}

int Union::event_index(const std::string& e) const {
  auto it = eidx_.find(e);
  return it == eidx_.end() ? -1 : it->second;
}

bool Union::comp_has_event(int c, int e) const { return has_ev_[c][e]; }

int Union::step(int g, int e) const {
  auto& o = out_[g];
  auto it = std::lower_bound(o.begin(), o.end(), std::make_pair(e, -1));
  return (it != o.end() && it->first == e) ? it->second : -1;
}

}  // namespace regsyn
