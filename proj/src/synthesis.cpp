#include "regsyn/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "regsyn/error.hpp"
#include "regsyn/text.hpp"

namespace regsyn {

SynthNet build_net(const TransitionSystem& ts, const std::vector<Region>& regions, const NetType& t) {
  Union u(ts);
  SynthNet net;
  net.name = "N_" + ts.name();
  net.type = t;
  net.transitions = ts.events();
  for (size_t i = 0; i < regions.size(); ++i) {
    auto& r = regions[i];
    auto chk = verify_region(u, r, t);
    if (!chk.ok)
      throw Error(ErrorCode::InvalidRegion,
                  (r.name.empty() ? "#" + std::to_string(i) : r.name) + ": " + chk.message);
    net.places.push_back(r.name.empty() ? "R" + std::to_string(i + 1) : r.name);
    net.flow.push_back(r.sig);
    net.m0.push_back(r.sup[ts.initial()]);
  }
  return net;
}

std::optional<Marking> fire(const SynthNet& net, const Marking& m, int transition) {
  if (m.size() != net.places.size())
    throw Error(ErrorCode::ArityMismatch, "marking has wrong dimension");
  Marking next(m.size());
  for (size_t p = 0; p < m.size(); ++p) {
    int x = net.type.step(m[p], net.flow[p][transition]);
    if (x < 0) return std::nullopt;
    next[p] = x;
  }
  return next;
}

std::string marking_name(const SynthNet& net, const Marking& m) {
  if (m.empty()) return "()";
  std::string s;
  bool wide = net.type.bound() >= 10;
  for (size_t i = 0; i < m.size(); ++i) {
    if (wide && i) s += '.';
    s += std::to_string(m[i]);
  }
  return s;
}

TransitionSystem state_graph(const SynthNet& net, std::size_t cap) {
  std::map<Marking, int> seen;
  std::vector<Marking> order;
  std::vector<TransitionSystem::Triple> trans;
  std::deque<int> q;
  seen[net.m0] = 0;
  order.push_back(net.m0);
  q.push_back(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    Marking m = order[i];
    for (int t = 0; t < (int)net.transitions.size(); ++t) {
      auto nx = fire(net, m, t);
      if (!nx) continue;
      auto [it, fresh] = seen.emplace(*nx, (int)order.size());
      if (fresh) {
        if (order.size() >= cap)
          throw Error(ErrorCode::ExplosionGuard, "more than " + std::to_string(cap) + " markings");
        order.push_back(*nx);
        q.push_back(it->second);
      }
      trans.emplace_back(marking_name(net, m), net.transitions[t], marking_name(net, *nx));
    }
  }
  std::vector<std::string> states;
  for (auto& m : order) states.push_back(marking_name(net, m));
  return TransitionSystem::build("SG_" + net.name, states, net.transitions, trans,
                                 marking_name(net, net.m0));
}

std::optional<std::vector<std::pair<std::string, std::string>>> isomorphic(const TransitionSystem& a,
                                                                           const TransitionSystem& b) {
  if (a.events() != b.events()) throw Error(ErrorCode::EventSetMismatch, a.name() + " vs " + b.name());
  if (a.num_states() != b.num_states() || a.edges().size() != b.edges().size()) return std::nullopt;
  std::vector<int> fwd(a.num_states(), -1), bwd(b.num_states(), -1);
  std::deque<int> q{a.initial()};
  fwd[a.initial()] = b.initial();
  bwd[b.initial()] = a.initial();
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    int t = fwd[s];
    // same event sets, so out lists must line up entry by entry
    auto &oa = a.out(s), &ob = b.out(t);
    if (oa.size() != ob.size()) return std::nullopt;
    for (size_t k = 0; k < oa.size(); ++k) {
      if (oa[k].first != ob[k].first) return std::nullopt;
      int x = oa[k].second, y = ob[k].second;
      if (fwd[x] < 0 && bwd[y] < 0) {
        fwd[x] = y;
        bwd[y] = x;
        q.push_back(x);
      } else if (fwd[x] != y || bwd[y] != x) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::pair<std::string, std::string>> m;
  for (int s = 0; s < a.num_states(); ++s) m.emplace_back(a.states()[s], b.states()[fwd[s]]);
  return m;
}

SynthNet parse_net(const std::string& text) {
  SynthNet net;
  bool have_type = false;
  std::map<std::string, int> pidx, tidx;
  struct F {
    std::string p, t;
    TypeEvent v;
  };
  std::vector<F> flows;
  std::vector<std::pair<std::string, int>> m0;
  for (auto& l : tokenize(text)) {
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "line " + std::to_string(l.number) + ": " + why);
    };
    auto num = [&](const std::string& s) {
      try {
        return std::stoi(s);
      } catch (...) {
        throw bad("number '" + s + "'");
      }
    };
    auto& k = l.tok[0];
    if (k == "net") {
      if (l.tok.size() != 2) throw bad("expected 'net <name>'");
      net.name = l.tok[1];
    } else if (k == "type") {
      if (l.tok.size() != 3) throw bad("expected 'type <family> <b>'");
      net.type = NetType(parse_family(l.tok[1]), num(l.tok[2]));
      have_type = true;
    } else if (k == "place") {
      if (l.tok.size() != 2) throw bad("expected 'place <name>'");
      if (pidx.count(l.tok[1])) throw bad("place declared twice");
      pidx[l.tok[1]] = (int)net.places.size();
      net.places.push_back(l.tok[1]);
    } else if (k == "transition") {
      for (size_t i = 1; i < l.tok.size(); ++i)
        if (!tidx.count(l.tok[i])) {
          tidx[l.tok[i]] = 0;
          net.transitions.push_back(l.tok[i]);
        }
    } else if (k == "flow") {
      if (l.tok.size() != 4) throw bad("expected 'flow <place> <transition> <m:n|g+>'");
      flows.push_back({l.tok[1], l.tok[2], TypeEvent::parse(l.tok[3])});
      if (!tidx.count(l.tok[2])) {
        tidx[l.tok[2]] = 0;
        net.transitions.push_back(l.tok[2]);
      }
    } else if (k == "m0") {
      if (l.tok.size() != 3) throw bad("expected 'm0 <place> <value>'");
      m0.emplace_back(l.tok[1], num(l.tok[2]));
    } else {
      throw bad("unknown keyword '" + k + "'");
    }
  }
  if (!have_type) throw Error(ErrorCode::SyntaxError, "missing 'type' line");
  std::sort(net.transitions.begin(), net.transitions.end());
  for (int i = 0; i < (int)net.transitions.size(); ++i) tidx[net.transitions[i]] = i;
  net.flow.assign(net.places.size(), std::vector<TypeEvent>(net.transitions.size(), net.type.neutral()));
  net.m0.assign(net.places.size(), 0);
  auto place = [&](const std::string& p) {
    auto it = pidx.find(p);
    if (it == pidx.end()) throw Error(ErrorCode::UnknownIdentifier, "place '" + p + "'");
    return it->second;
  };
  for (auto& f : flows) {
    if (!net.type.contains(f.v)) throw Error(ErrorCode::EventNotInType, f.v.str() + " in " + net.type.str());
    net.flow[place(f.p)][tidx[f.t]] = f.v;
  }
  for (auto& [p, v] : m0) {
    if (v < 0 || v > net.type.bound()) throw Error(ErrorCode::InvalidBound, "m0 " + p);
    net.m0[place(p)] = v;
  }
  return net;
}

std::string serialize_net(const SynthNet& net) {
  std::ostringstream o;
  o << "net " << net.name << "\n";
  o << "type " << net.type.str() << "\n";
  for (auto& t : net.transitions) o << "transition " << t << "\n";
  for (auto& p : net.places) o << "place " << p << "\n";
  for (size_t p = 0; p < net.places.size(); ++p)
    for (size_t t = 0; t < net.transitions.size(); ++t)
      o << "flow " << net.places[p] << ' ' << net.transitions[t] << ' ' << net.flow[p][t].str() << "\n";
  for (size_t p = 0; p < net.places.size(); ++p) o << "m0 " << net.places[p] << ' ' << net.m0[p] << "\n";
  return o.str();
}

std::string net_to_dot(const SynthNet& net) {
  std::ostringstream o;
  o << "digraph \"" << net.name << "\" {\n";
  for (size_t p = 0; p < net.places.size(); ++p)
    o << "  \"p:" << net.places[p] << "\" [shape=circle,label=\"" << net.places[p] << "\\n" << net.m0[p]
      << "\"];\n";
  for (auto& t : net.transitions) o << "  \"t:" << t << "\" [shape=box,label=\"" << t << "\"];\n";
  for (size_t p = 0; p < net.places.size(); ++p)
    for (size_t t = 0; t < net.transitions.size(); ++t) {
      auto& f = net.flow[p][t];
      if (f == net.type.neutral()) continue;
      o << "  \"p:" << net.places[p] << "\" -> \"t:" << net.transitions[t] << "\" [dir=none,label=\""
        << f.str() << "\"];\n";
    }
  o << "}\n";
  return o.str();
}

}  // namespace regsyn
