#include "regsyn/region.hpp"

#include <deque>
#include <sstream>

#include "regsyn/error.hpp"
#include "regsyn/text.hpp"

namespace regsyn {

std::string edge_str(const Union& u, int edge) {
  auto& e = u.edges()[edge];
  return u.state_name(e.src) + " --" + u.event_name(e.ev) + "--> " + u.state_name(e.dst);
}

RegionCheck verify_region(const Union& u, const Region& r, const NetType& t) {
  if ((int)r.sup.size() != u.num_states() || (int)r.sig.size() != u.num_events())
    throw Error(ErrorCode::ArityMismatch, "region size does not match the carrier");
  for (int e = 0; e < u.num_events(); ++e)
    if (!t.contains(r.sig[e]))
      throw Error(ErrorCode::ArityMismatch,
                  "sig(" + u.event_name(e) + ")=" + r.sig[e].str() + " not in " + t.str());
  auto in_range = [&](int v) { return v >= 0 && v <= t.bound(); };
  for (int i = 0; i < (int)u.edges().size(); ++i) {
    auto& e = u.edges()[i];
    int s = r.sup[e.src], d = r.sup[e.dst];
    if (!in_range(s) || !in_range(d))
      return {false, i, "support undefined or out of range at " + edge_str(u, i)};
    int x = t.step(s, r.sig[e.ev]);
    if (x != d) {
      std::ostringstream m;
      m << edge_str(u, i) << ": " << s << " --" << r.sig[e.ev].str() << "--> ";
      if (x < 0)
        m << "undefined";
      else
        m << x << " but sup(" << u.state_name(e.dst) << ")=" << d;
      return {false, i, m.str()};
    }
  }
  for (int g = 0; g < u.num_states(); ++g)
    if (!in_range(r.sup[g]))
      return {false, -1, "support of " + u.state_name(g) + " out of range"};
  return {};
}

Completion complete_region(const Union& u, const std::vector<int>& initial,
                           const std::vector<TypeEvent>& sig, const NetType& t) {
  if ((int)initial.size() != u.num_components())
    throw Error(ErrorCode::ArityMismatch, "one initial support per component expected");
  Region r;
  r.sig = sig;
  r.sup.assign(u.num_states(), -1);
  for (int c = 0; c < u.num_components(); ++c) {
    int s0 = u.initial(c);
    r.sup[s0] = initial[c];
    if (initial[c] < 0 || initial[c] > t.bound()) continue;
    std::deque<int> q{s0};
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (auto [e, d] : u.out(s)) {
        if (r.sup[d] >= 0) continue;
        int x = t.step(r.sup[s], sig[e]);
        if (x < 0) continue;
        r.sup[d] = x;
        q.push_back(d);
      }
    }
  }
  Completion c;
  c.check = verify_region(u, r, t);
  if (c.check.ok) c.region = std::move(r);
  return c;
}

bool is_valid_atom(const Union& u, const Atom& a) {
  if (a.kind == Atom::SSP) {
    if (a.a < 0 || a.b < 0 || a.a >= u.num_states() || a.b >= u.num_states()) return false;
    return a.a != a.b && u.comp_of(a.a) == u.comp_of(a.b);
  }
  if (a.a < 0 || a.a >= u.num_events() || a.b < 0 || a.b >= u.num_states()) return false;
  return !u.occurs(a.a, a.b);
}

std::vector<Atom> enumerate_atoms(const Union& u) {
  std::vector<Atom> v;
  for (int c = 0; c < u.num_components(); ++c) {
    int o = u.offset(c), n = u.comp_size(c);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) v.push_back(Atom::ssp(o + i, o + j));
  }
  for (int e = 0; e < u.num_events(); ++e)
    for (int s = 0; s < u.num_states(); ++s)
      if (!u.occurs(e, s)) v.push_back(Atom::essp(e, s));
  return v;
}

bool solves(const Region& r, const Atom& a, const NetType& t) {
  if (a.kind == Atom::SSP) return r.sup[a.a] != r.sup[a.b];
  return t.step(r.sup[a.b], r.sig[a.a]) < 0;
}

std::string atom_str(const Union& u, const Atom& a) {
  if (a.kind == Atom::SSP) return "ssp:" + u.state_name(a.a) + "," + u.state_name(a.b);
  return "essp:" + u.event_name(a.a) + "," + u.state_name(a.b);
}

Atom parse_atom(const Union& u, const std::string& s) {
  auto colon = s.find(':'), comma = s.find(',');
  if (colon == std::string::npos || comma == std::string::npos || comma < colon)
    throw Error(ErrorCode::SyntaxError, "atom '" + s + "', expected ssp:s,t or essp:e,s");
  std::string kind = s.substr(0, colon), x = s.substr(colon + 1, comma - colon - 1),
              y = s.substr(comma + 1);
  auto state = [&](const std::string& n) {
    int i = u.state_index(n);
    if (i < 0) throw Error(ErrorCode::UnknownIdentifier, "state '" + n + "'");
    return i;
  };
  Atom a;
  if (kind == "ssp") {
    int p = state(x), q = state(y);
    if (p == q) throw Error(ErrorCode::InvalidAtom, "degenerate SSP atom " + s);
    a = Atom::ssp(p, q);
  } else if (kind == "essp") {
    int e = u.event_index(x);
    if (e < 0) throw Error(ErrorCode::UnknownIdentifier, "event '" + x + "'");
    a = Atom::essp(e, state(y));
  } else {
    throw Error(ErrorCode::SyntaxError, "atom kind '" + kind + "'");
  }
  if (!is_valid_atom(u, a)) throw Error(ErrorCode::InvalidAtom, s);
  return a;
}

Region assemble_region(const Union& u, const NetType& t, const std::vector<std::pair<int, int>>& sups,
                       const std::vector<std::pair<int, TypeEvent>>& sigs) {
  Region r;
  r.sig.assign(u.num_events(), t.neutral());
  for (auto& [e, v] : sigs) r.sig[e] = v;
  std::vector<int> listed(u.num_states(), -1);
  for (auto& [s, v] : sups) listed[s] = v;
  r.sup.assign(u.num_states(), -1);
  for (int c = 0; c < u.num_components(); ++c) {
    int s0 = u.initial(c);
    r.sup[s0] = listed[s0] >= 0 ? listed[s0] : t.bound();
    std::deque<int> q{s0};
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (auto [e, d] : u.out(s)) {
        if (r.sup[d] >= 0) continue;
        int x = listed[d] >= 0 ? listed[d] : t.step(r.sup[s], r.sig[e]);
        if (x < 0) continue;
        r.sup[d] = x;
        q.push_back(d);
      }
    }
  }
  return r;
}

RegionFile parse_region(const std::string& text, const Union& u) {
  RegionFile f;
  bool have_type = false;
  std::vector<std::pair<int, int>> sups;
  std::vector<std::pair<int, TypeEvent>> sigs;
  for (auto& l : tokenize(text)) {
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "line " + std::to_string(l.number) + ": " + why);
    };
    auto& k = l.tok[0];
    if (k == "region") {
      if (l.tok.size() != 4 || l.tok[2] != "over") throw bad("expected 'region <name> over <ts>'");
      f.name = l.tok[1];
      f.over = l.tok[3];
    } else if (k == "type") {
      if (l.tok.size() != 3) throw bad("expected 'type <family> <b>'");
      int b;
      try {
        b = std::stoi(l.tok[2]);
      } catch (...) {
        throw bad("bound '" + l.tok[2] + "'");
      }
      f.type = NetType(parse_family(l.tok[1]), b);
      have_type = true;
    } else if (k == "sup") {
      if (l.tok.size() != 3) throw bad("expected 'sup <state> <value>'");
      int s = u.state_index(l.tok[1]);
      if (s < 0) throw Error(ErrorCode::UnknownIdentifier, "state '" + l.tok[1] + "'");
      int v;
      try {
        v = std::stoi(l.tok[2]);
      } catch (...) {
        throw bad("support '" + l.tok[2] + "'");
      }
      sups.emplace_back(s, v);
    } else if (k == "sig") {
      if (l.tok.size() != 3) throw bad("expected 'sig <event> <m:n|g+>'");
      int e = u.event_index(l.tok[1]);
      if (e < 0) throw Error(ErrorCode::UnknownIdentifier, "event '" + l.tok[1] + "'");
      sigs.emplace_back(e, TypeEvent::parse(l.tok[2]));
    } else {
      throw bad("unknown keyword '" + k + "'");
    }
  }
  if (!have_type) throw Error(ErrorCode::SyntaxError, "missing 'type' line");
  f.region = assemble_region(u, f.type, sups, sigs);
  f.region.name = f.name;
  return f;
}

std::string serialize_region(const RegionFile& f, const Union& u) {
  std::ostringstream o;
  o << "region " << (f.name.empty() ? "R" : f.name) << " over " << (f.over.empty() ? u.name() : f.over)
    << "\n";
  o << "type " << f.type.str() << "\n";
  for (int s = 0; s < u.num_states(); ++s) o << "sup " << u.state_name(s) << ' ' << f.region.sup[s] << "\n";
  for (int e = 0; e < u.num_events(); ++e)
    o << "sig " << u.event_name(e) << ' ' << f.region.sig[e].str() << "\n";
  return o.str();
}

}  // namespace regsyn
