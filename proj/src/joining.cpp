#include "regsyn/joining.hpp"

#include <filesystem>

#include "regsyn/error.hpp"
#include "regsyn/text.hpp"

namespace regsyn {

std::string q_name(int i) { return "q." + std::to_string(i); }
std::string w_name(int i) { return "w." + std::to_string(i); }
std::string y_name(int i) { return "y." + std::to_string(i); }

Union flatten(const std::vector<Union>& parts, std::string name) {
  std::vector<TransitionSystem> comps;
  for (auto& p : parts) comps.insert(comps.end(), p.components().begin(), p.components().end());
  return Union(std::move(comps), std::move(name));
}

namespace {

bool reserved(const std::string& s, char lead) {
  if (s.size() < 3 || s[0] != lead || s[1] != '.') return false;
  for (size_t i = 2; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

TransitionSystem join(const Union& u) {
  int n = u.num_components() - 1;
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "empty union");
  std::vector<std::string> states, events = u.events();
  std::vector<TransitionSystem::Triple> tr;
  for (int g = 0; g < u.num_states(); ++g) {
    auto& s = u.state_name(g);
    if (reserved(s, 'q')) throw Error(ErrorCode::NameClash, "state '" + s + "' is reserved");
    states.push_back(s);
  }
  for (auto& e : events)
    if (reserved(e, 'w') || reserved(e, 'y')) throw Error(ErrorCode::NameClash, "event '" + e + "' is reserved");
  for (auto& e : u.edges()) tr.emplace_back(u.state_name(e.src), u.event_name(e.ev), u.state_name(e.dst));
  for (int i = 0; i <= n; ++i) {
    states.push_back(q_name(i));
    events.push_back(y_name(i));
    tr.emplace_back(q_name(i), y_name(i), u.state_name(u.initial(i)));
    if (i < n) {
      events.push_back(w_name(i + 1));
      tr.emplace_back(q_name(i), w_name(i + 1), q_name(i + 1));
    }
  }
  return TransitionSystem::build("A_" + u.name(), states, events, tr, q_name(0));
}

bool lemma2_precondition(const Union& u) {
  for (int e = 0; e < u.num_events(); ++e) {
    bool missing = false;
    for (int s = 0; s < u.num_states() && !missing; ++s) missing = !u.occurs(e, s);
    if (!missing) return false;
  }
  return true;
}

Region lift_region(const Union& u, const Region& r, int pivot, const NetType& t) {
  Union j(join(u));
  Region out;
  out.name = r.name;
  out.sup.assign(j.num_states(), pivot);
  out.sig.assign(j.num_events(), t.neutral());
  for (int g = 0; g < u.num_states(); ++g) out.sup[j.state_index(u.state_name(g))] = r.sup[g];
  for (int e = 0; e < u.num_events(); ++e) out.sig[j.event_index(u.event_name(e))] = r.sig[e];
  for (int i = 0; i < u.num_components(); ++i) {
    int s0 = r.sup[u.initial(i)];
    TypeEvent y = s0 < pivot ? TypeEvent::flow(pivot - s0, 0) : TypeEvent::flow(0, s0 - pivot);
    if (y == TypeEvent::flow(0, 0)) y = t.neutral();
    out.sig[j.event_index(y_name(i))] = y;
  }
  return out;
}

Region connector_region(const Union& u, int i, const NetType& t) {
  int n = u.num_components() - 1;
  if (i < 0 || i > n) throw Error(ErrorCode::IndexOutOfRange, "connector " + std::to_string(i));
  Union j(join(u));
  int b = t.bound();
  Region out;
  out.name = "C" + std::to_string(i);
  out.sup.assign(j.num_states(), b);
  out.sup[j.state_index(q_name(i))] = 0;
  out.sig.assign(j.num_events(), t.neutral());
  out.sig[j.event_index(y_name(i))] = TypeEvent::flow(0, b);
  if (i < n) out.sig[j.event_index(w_name(i + 1))] = TypeEvent::flow(0, b);
  // w.i leads from q.(i-1) at b down to q.i at 0
  if (i >= 1) out.sig[j.event_index(w_name(i))] = TypeEvent::flow(b, 0);
  return out;
}

Region project_region(const Union& u, const Union& joined, const Region& r) {
  Region out;
  out.name = r.name;
  for (int g = 0; g < u.num_states(); ++g) out.sup.push_back(r.sup[joined.state_index(u.state_name(g))]);
  for (int e = 0; e < u.num_events(); ++e) out.sig.push_back(r.sig[joined.event_index(u.event_name(e))]);
  return out;
}

Union parse_union(const std::string& text, const std::string& base_dir) {
  std::string name = "U";
  std::vector<TransitionSystem> comps;
  for (auto& l : tokenize(text)) {
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "line " + std::to_string(l.number) + ": " + why);
    };
    if (l.tok[0] == "union") {
      if (l.tok.size() != 2) throw bad("expected 'union <name>'");
      name = l.tok[1];
    } else if (l.tok[0] == "include") {
      if (l.tok.size() != 2) throw bad("expected 'include <ts-file>'");
      std::filesystem::path p(l.tok[1]);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      comps.push_back(parse_ts(read_file(p.string())));
    } else {
      throw bad("unknown keyword '" + l.tok[0] + "'");
    }
  }
  if (comps.empty()) throw Error(ErrorCode::SyntaxError, "union without components");
  return Union(std::move(comps), name);
}

}  // namespace regsyn
