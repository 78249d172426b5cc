#include "regsyn/ts.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "regsyn/error.hpp"
#include "regsyn/text.hpp"

namespace regsyn {

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

TransitionSystem TransitionSystem::build(std::string name, std::vector<std::string> states,
                                         std::vector<std::string> events,
                                         const std::vector<Triple>& transitions,
                                         const std::string& initial) {
  TransitionSystem ts;
  ts.name_ = std::move(name);
  sort_unique(states);
  sort_unique(events);
  for (auto& s : states)
    if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty state identifier");
  for (auto& e : events)
    if (e.empty()) throw Error(ErrorCode::SyntaxError, "empty event identifier");
  ts.states_ = std::move(states);
  ts.events_ = std::move(events);
  for (int i = 0; i < (int)ts.states_.size(); ++i) ts.sidx_[ts.states_[i]] = i;
  for (int i = 0; i < (int)ts.events_.size(); ++i) ts.eidx_[ts.events_[i]] = i;

  auto sid = [&](const std::string& s) {
    int i = ts.state_index(s);
    if (i < 0) throw Error(ErrorCode::UnknownIdentifier, "state '" + s + "'");
    return i;
  };
  auto eid = [&](const std::string& e) {
    int i = ts.event_index(e);
    if (i < 0) throw Error(ErrorCode::UnknownIdentifier, "event '" + e + "'");
    return i;
  };
  if (ts.states_.empty()) throw Error(ErrorCode::UnknownIdentifier, "no states declared");
  ts.initial_ = sid(initial);

  std::map<std::pair<int, int>, int> delta;
  for (auto& [s, e, t] : transitions) {
    int si = sid(s), ei = eid(e), ti = sid(t);
    auto [it, fresh] = delta.emplace(std::make_pair(si, ei), ti);
    if (!fresh && it->second != ti)
      throw Error(ErrorCode::DuplicateTransition,
                  s + " --" + e + "--> {" + ts.states_[it->second] + ", " + t + "}");
  }
  ts.out_.assign(ts.states_.size(), {});
  for (auto& [k, t] : delta) {
    ts.edges_.push_back({k.first, k.second, t});
    ts.out_[k.first].push_back({k.second, t});
  }

  auto order = ts.bfs_order();
  if (order.size() != ts.states_.size()) {
    std::vector<char> seen(ts.states_.size(), 0);
    for (int s : order) seen[s] = 1;
    std::string miss;
    for (size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) miss += (miss.empty() ? "" : " ") + ts.states_[i];
    throw Error(ErrorCode::Unreachable, miss);
  }
  return ts;
}

int TransitionSystem::state_index(const std::string& s) const {
  auto it = sidx_.find(s);
  return it == sidx_.end() ? -1 : it->second;
}

int TransitionSystem::event_index(const std::string& e) const {
  auto it = eidx_.find(e);
  return it == eidx_.end() ? -1 : it->second;
}

int TransitionSystem::step(int s, int e) const {
  auto& o = out_[s];
  auto it = std::lower_bound(o.begin(), o.end(), std::make_pair(e, -1));
  return (it != o.end() && it->first == e) ? it->second : -1;
}

std::vector<int> TransitionSystem::bfs_order() const {
  std::vector<int> order;
  if (states_.empty()) return order;
  std::vector<char> seen(states_.size(), 0);
  std::deque<int> q{initial_};
  seen[initial_] = 1;
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    order.push_back(s);
    for (auto [e, t] : out_[s])
      if (!seen[t]) {
        seen[t] = 1;
        q.push_back(t);
      }
  }
  return order;
}

std::vector<std::string> occurs_at(const TransitionSystem& ts, const std::string& event) {
  int e = ts.event_index(event);
  if (e < 0) throw Error(ErrorCode::UnknownIdentifier, "event '" + event + "'");
  std::vector<std::string> r;
  for (int s = 0; s < ts.num_states(); ++s)
    if (ts.step(s, e) >= 0) r.push_back(ts.states()[s]);
  return r;
}

TransitionSystem parse_ts(const std::string& text) {
  std::string name = "ts", initial;
  bool have_initial = false;
  std::vector<std::string> states, events;
  std::vector<TransitionSystem::Triple> trans;
  for (auto& l : tokenize(text)) {
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "line " + std::to_string(l.number) + ": " + why);
    };
    const auto& k = l.tok[0];
    if (k == "ts") {
      if (l.tok.size() != 2) throw bad("expected 'ts <name>'");
      name = l.tok[1];
    } else if (k == "states") {
      states.insert(states.end(), l.tok.begin() + 1, l.tok.end());
    } else if (k == "events") {
      events.insert(events.end(), l.tok.begin() + 1, l.tok.end());
    } else if (k == "initial") {
      if (l.tok.size() != 2) throw bad("expected 'initial <state>'");
      if (have_initial) throw bad("initial declared twice");
      initial = l.tok[1];
      have_initial = true;
    } else if (k == "trans") {
      if (l.tok.size() != 4) throw bad("expected 'trans <src> <event> <dst>'");
      trans.emplace_back(l.tok[1], l.tok[2], l.tok[3]);
    } else {
      throw bad("unknown keyword '" + k + "'");
    }
  }
  if (!have_initial) throw Error(ErrorCode::SyntaxError, "missing 'initial' line");
  return TransitionSystem::build(name, states, events, trans, initial);
}

std::string serialize_ts(const TransitionSystem& ts) {
  std::ostringstream o;
  o << "ts " << ts.name() << "\n";
  // keep lines short for big gadgets
  auto list = [&](const char* kw, const std::vector<std::string>& v) {
    for (size_t i = 0; i < v.size(); i += 16) {
      o << kw;
      for (size_t j = i; j < std::min(v.size(), i + 16); ++j) o << ' ' << v[j];
      o << "\n";
    }
  };
  list("states", ts.states());
  list("events", ts.events());
  o << "initial " << ts.states()[ts.initial()] << "\n";
  for (auto& e : ts.edges())
    o << "trans " << ts.states()[e.src] << ' ' << ts.events()[e.ev] << ' ' << ts.states()[e.dst]
      << "\n";
  return o.str();
}

std::string ts_to_dot(const TransitionSystem& ts) {
  std::ostringstream o;
  o << "digraph \"" << ts.name() << "\" {\n  rankdir=LR;\n";
  for (int s = 0; s < ts.num_states(); ++s)
    o << "  \"" << ts.states()[s] << "\" [shape=" << (s == ts.initial() ? "doublecircle" : "circle")
      << "];\n";
  for (auto& e : ts.edges())
    o << "  \"" << ts.states()[e.src] << "\" -> \"" << ts.states()[e.dst] << "\" [label=\""
      << ts.events()[e.ev] << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace regsyn
