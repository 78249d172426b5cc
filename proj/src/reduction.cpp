#include "regsyn/reduction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "regsyn/error.hpp"
#include "regsyn/joining.hpp"
#include "regsyn/text.hpp"

namespace regsyn {

namespace {

std::string num(int i) { return std::to_string(i); }

// a single path: states prefix0, prefix1, ...
struct Path {
  std::string name, prefix;
  std::vector<std::string> events;

  Path& add(const std::string& e, int times = 1) {
    for (int i = 0; i < times; ++i) events.push_back(e);
    return *this;
  }
  TransitionSystem build() const {
    std::vector<std::string> st;
    std::vector<TransitionSystem::Triple> tr;
    for (int i = 0; i <= (int)events.size(); ++i) st.push_back(prefix + num(i));
    for (int i = 0; i < (int)events.size(); ++i) tr.emplace_back(st[i], events[i], st[i + 1]);
    return TransitionSystem::build(name, st, events, tr, st[0]);
  }
};

// H3 / F_j shape: p.0.0 -k^b-> p.0.b, p.0.0 -entry-> p.1.0 -k^(b-1)-> p.1.(b-1) -exit-> p.0.b
TransitionSystem fork(const std::string& name, const std::string& p, const std::string& entry,
                      const std::string& exit, int b) {
  std::vector<std::string> st;
  std::vector<TransitionSystem::Triple> tr;
  auto top = [&](int i) { return p + ".0." + num(i); };
  auto bot = [&](int i) { return p + ".1." + num(i); };
  for (int i = 0; i <= b; ++i) st.push_back(top(i));
  for (int i = 0; i < b; ++i) st.push_back(bot(i));
  for (int i = 0; i < b; ++i) tr.emplace_back(top(i), "k", top(i + 1));
  tr.emplace_back(top(0), entry, bot(0));
  for (int i = 0; i + 1 < b; ++i) tr.emplace_back(bot(i), "k", bot(i + 1));
  tr.emplace_back(bot(b - 1), exit, top(b));
  return TransitionSystem::build(name, st, {"k", entry, exit}, tr, top(0));
}

std::string var(int j) { return "X" + num(j); }

bool is_group_target(Target t) { return t == Target::tau2 || t == Target::tau3; }

// T_{i,0..2} of the flow-type reductions
void flow_translator(const SatInstance& s, int b, std::vector<TransitionSystem>& out) {
  for (int i = 0; i < s.m(); ++i) {
    auto& c = s.clauses[i];
    std::string ti = "t" + num(i), x = "x" + num(i), p = "p" + num(i);
    auto k = [&](int r) { return "k" + num(6 * i + r); };
    out.push_back(Path{"T" + num(i) + ".0", ti + ".0.", {}}
                      .add(k(0)).add(var(c[0]), b).add(x).add(var(c[2]), b).add(k(1)).build());
    out.push_back(Path{"T" + num(i) + ".1", ti + ".1.", {}}.add(k(2)).add(var(c[1]), b).add(p).add(k(3)).build());
    out.push_back(Path{"T" + num(i) + ".2", ti + ".2.", {}}.add(k(4)).add(x).add(p).add(k(5)).build());
  }
}

}  // namespace

void validate(const SatInstance& s, bool strict) {
  for (int i = 0; i < s.m(); ++i) {
    auto& c = s.clauses[i];
    for (int v : c)
      if (v < 0 || v >= s.num_vars)
        throw Error(ErrorCode::UnknownIdentifier, "clause " + num(i) + ": variable " + num(v));
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw Error(ErrorCode::ClauseArity, "clause " + num(i) + " repeats a variable");
  }
  if (!strict) return;
  if (s.num_vars != s.m())
    throw Error(ErrorCode::NotCubic, num(s.num_vars) + " variables but " + num(s.m()) + " clauses");
  std::vector<int> occ(s.num_vars, 0);
  for (auto& c : s.clauses)
    for (int v : c) ++occ[v];
  for (int v = 0; v < s.num_vars; ++v)
    if (occ[v] != 3) throw Error(ErrorCode::NotCubic, var(v) + " occurs " + num(occ[v]) + " times");
}

SatInstance parse_sat(const std::string& text, bool strict) {
  SatInstance s;
  int declared = -1, maxv = -1;
  for (auto& l : tokenize(text)) {
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "line " + num(l.number) + ": " + why);
    };
    auto integer = [&](const std::string& t) {
      std::size_t pos = 0;
      int v = -1;
      try {
        v = std::stoi(t, &pos);
      } catch (...) {
        pos = 0;
      }
      if (pos != t.size() || v < 0) throw bad("expected a non-negative integer, got '" + t + "'");
      return v;
    };
    if (l.tok[0] == "p") {
      if (l.tok.size() != 3 || l.tok[1] != "1in3") throw bad("expected 'p 1in3 <m>'");
      if (declared >= 0) throw bad("second header");
      declared = integer(l.tok[2]);
    } else if (l.tok[0] == "c") {
      if (declared < 0) throw bad("clause before header");
      if (l.tok.size() != 4)
        throw Error(ErrorCode::ClauseArity, "line " + num(l.number) + ": a clause has three variables");
      std::array<int, 3> c{integer(l.tok[1]), integer(l.tok[2]), integer(l.tok[3])};
      for (int v : c) maxv = std::max(maxv, v);
      s.clauses.push_back(c);
    } else {
      throw bad("unknown keyword '" + l.tok[0] + "'");
    }
  }
  if (declared < 0) throw Error(ErrorCode::SyntaxError, "missing 'p 1in3 <m>' header");
  if (declared != s.m())
    throw Error(ErrorCode::SyntaxError, "header declares " + num(declared) + " clauses, found " + num(s.m()));
  s.num_vars = strict ? std::max(declared, maxv + 1) : maxv + 1;
  validate(s, strict);
  return s;
}

std::string serialize_sat(const SatInstance& s) {
  std::ostringstream o;
  o << "p 1in3 " << s.m() << "\n";
  for (auto& c : s.clauses) o << "c " << c[0] << ' ' << c[1] << ' ' << c[2] << "\n";
  return o.str();
}

bool is_model(const SatInstance& s, const Model& m) {
  std::vector<char> in(s.num_vars, 0);
  for (int v : m) {
    if (v < 0 || v >= s.num_vars) return false;
    in[v] = 1;
  }
  for (auto& c : s.clauses)
    if (in[c[0]] + in[c[1]] + in[c[2]] != 1) return false;
  return true;
}

std::optional<Model> oracle(const SatInstance& s) {
  if (s.num_vars > 24) throw Error(ErrorCode::SizeGuard, num(s.num_vars) + " variables, at most 24");
  std::vector<std::uint32_t> masks;
  for (auto& c : s.clauses) masks.push_back((1u << c[0]) | (1u << c[1]) | (1u << c[2]));
  std::optional<Model> best;
  for (std::uint32_t x = 0; x < (1u << s.num_vars); ++x) {
    bool ok = true;
    for (auto c : masks)
      if (__builtin_popcount(x & c) != 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Model m;
    for (int v = 0; v < s.num_vars; ++v)
      if (x >> v & 1) m.push_back(v);
    if (!best || m < *best) best = m;
  }
  return best;
}

const char* target_name(Target t) {
  switch (t) {
    case Target::tau0: return "tau0";
    case Target::tau1: return "tau1";
    case Target::tau2: return "tau2";
    case Target::tau3: return "tau3";
    case Target::wssp: return "w-ssp";
  }
  return "?";
}

Target parse_target(const std::string& s) {
  if (s == "w-ssp" || s == "wssp" || s == "W") return Target::wssp;
  switch (parse_family(s)) {
    case Family::tau0: return Target::tau0;
    case Family::tau1: return Target::tau1;
    case Family::tau2: return Target::tau2;
    case Family::tau3: return Target::tau3;
  }
  return Target::tau1;
}

NetType target_type(Target t, int b) {
  switch (t) {
    case Target::tau0: return NetType(Family::tau0, b);
    case Target::tau2: return NetType(Family::tau2, b);
    case Target::tau3: return NetType(Family::tau3, b);
    default: return NetType(Family::tau1, b);
  }
}

GadgetUnion generate(const SatInstance& s, Target target, int b) {
  validate(s, true);
  target_type(target, b);  // throws InvalidBound
  GadgetUnion g;
  g.target = target;
  g.bound = b;
  int m = s.m();
  std::vector<TransitionSystem> comps;
  std::string key_event = "k", key_state;
  if (is_group_target(target)) {
    comps.push_back(fork("H3", "h3", "u", "z", b));
    for (int j = 0; j < m; ++j) comps.push_back(fork("F" + num(j), "f" + num(j), "v" + num(j), var(j), b));
    for (int i = 0; i < m; ++i) {
      auto& c = s.clauses[i];
      comps.push_back(Path{"T" + num(i), "t" + num(i) + ".", {}}
                          .add("k", b).add(var(c[0])).add(var(c[1])).add(var(c[2])).add("z").add("k", b).build());
    }
    for (int j = 0; j < m; ++j) comps.push_back(Path{"G" + num(j), "g" + num(j) + ".", {}}.add("k", b).add(var(j)).build());
    key_state = "h3.1." + num(b - 1);
    g.interface_events = {"k", "z"};
  } else {
    if (target == Target::tau0) {
      comps.push_back(Path{"H0", "h0.", {}}
                          .add("k", b).add("z", b).add("o0").add("k", b).add("z", b).add("o1", b).add("k", b).build());
      for (int j = 0; j < 6 * m; ++j)
        comps.push_back(Path{"D" + num(j) + ".0", "d" + num(j) + ".0.", {}}.add("o0").add("k" + num(j)).add("o1", b).build());
      key_state = "h0." + num(4 * b + 1);
    } else {
      if (target == Target::tau1) {
        comps.push_back(Path{"H1", "h1.", {}}
                            .add("k", b).add("z0").add("o0").add("k", b).add("z1").add("z0").add("o2").add("k", b).build());
        key_state = "h1." + num(2 * b + 4);
      } else {
        comps.push_back(Path{"H2", "h2.", {}}.add("k", b).add("o0").add("k", b).add("o2").add("k", b).build());
      }
      for (int j = 0; j < 6 * m; ++j)
        comps.push_back(Path{"D" + num(j) + ".1", "d" + num(j) + ".1.", {}}.add("o0").add("k" + num(j)).add("o2").build());
    }
    flow_translator(s, b, comps);
    for (int j = 0; j < 6 * m; ++j) g.interface_events.push_back("k" + num(j));
  }
  g.u = Union(std::move(comps), std::string("U_") + target_name(target));
  if (target == Target::wssp)
    g.key = Atom::ssp(g.u.state_index("h2.0"), g.u.state_index("h2." + num(b)));
  else
    g.key = Atom::essp(g.u.event_index(key_event), g.u.state_index(key_state));
  if (!is_valid_atom(g.u, g.key) || !lemma2_precondition(g.u))
    throw Error(ErrorCode::InvalidAtom, "generated union is malformed");
  return g;
}

Region witness_key_region(const SatInstance& s, const Model& model, const GadgetUnion& g) {
  if (!is_model(s, model)) throw Error(ErrorCode::NotAModel, "the given set is not a one-in-three model");
  const Union& u = g.u;
  NetType t = g.type();
  int b = g.bound;
  std::vector<char> in(s.num_vars, 0);
  for (int v : model) in[v] = 1;
  std::vector<std::pair<int, TypeEvent>> sig;
  std::vector<std::pair<int, int>> sup;
  auto set = [&](const std::string& e, TypeEvent v) {
    int i = u.event_index(e);
    if (i >= 0) sig.emplace_back(i, v);
  };
  for (int c = 0; c < u.num_components(); ++c) sup.emplace_back(u.initial(c), 0);

  if (is_group_target(g.target)) {
    set("k", TypeEvent::flow(0, 1));
    set("u", TypeEvent::grp(1));
    set("z", TypeEvent::grp(0));
    for (int j = 0; j < s.num_vars; ++j) {
      set(var(j), TypeEvent::grp(in[j] ? 1 : 0));
      set("v" + num(j), TypeEvent::grp(in[j] ? 0 : 1));
    }
  } else {
    for (int c = 0; c < u.num_components(); ++c)
      if (u.state_name(u.initial(c))[0] == 'd') sup[c].second = b;
    for (int j = 0; j < 6 * s.m(); ++j) set("k" + num(j), TypeEvent::flow(0, b));
    set("k", TypeEvent::flow(0, 1));
    for (auto e : {"z", "z0", "z1"}) set(e, TypeEvent::flow(0, 0));
    set("o1", TypeEvent::flow(1, 0));
    set("o0", TypeEvent::flow(b, 0));
    set("o2", TypeEvent::flow(b, 0));
    for (int j = 0; j < s.num_vars; ++j) set(var(j), TypeEvent::flow(in[j] ? 1 : 0, 0));
    for (int i = 0; i < s.m(); ++i) {
      bool mid = in[s.clauses[i][1]];
      set("x" + num(i), TypeEvent::flow(mid ? b : 0, 0));
      set("p" + num(i), TypeEvent::flow(mid ? 0 : b, 0));
    }
  }
  Region r = assemble_region(u, t, sup, sig);
  r.name = "key";
  auto chk = verify_region(u, r, t);
  if (!chk.ok) throw Error(ErrorCode::InvalidRegion, "witness construction failed: " + chk.message);
  if (!solves(r, g.key, t)) throw Error(ErrorCode::InvalidRegion, "witness does not solve the key atom");
  return r;
}

Model decode_model(const SatInstance& s, const GadgetUnion& g, const Region& r) {
  Model m;
  for (int j = 0; j < s.num_vars; ++j) {
    int e = g.u.event_index(var(j));
    if (e >= 0 && !NetType::in_e0(r.sig[e])) m.push_back(j);
  }
  return m;
}

std::vector<ClauseSum> modular_counting(const SatInstance& s, const GadgetUnion& g, const Region& r,
                                        bool derived) {
  int b = g.bound;
  TypeEvent k = r.sig[g.u.event_index("k")];
  int expected = -1;
  if (k == TypeEvent::flow(1, 0))
    expected = b;
  else if (k == TypeEvent::flow(0, 1))
    expected = derived ? 1 : 0;
  std::vector<ClauseSum> out;
  for (int i = 0; i < s.m(); ++i) {
    int sum = 0;
    for (int v : s.clauses[i]) sum += r.sig[g.u.event_index(var(v))].abs();
    out.push_back({i, sum % (b + 1), expected});
  }
  return out;
}

SatInstance phi0() {
  SatInstance s;
  s.num_vars = 6;
  s.clauses = {{0, 1, 2}, {2, 0, 3}, {1, 3, 0}, {2, 4, 5}, {1, 5, 4}, {4, 3, 5}};
  return s;
}

namespace {

struct RowSpec {
  std::string id, note;
  std::vector<std::pair<std::string, int>> sup;
  std::vector<std::pair<std::string, TypeEvent>> sig;
  std::string event;
  std::vector<std::string> states;
};

Region build_row(const Union& u, const NetType& t, const RowSpec& row) {
  std::vector<std::pair<int, int>> sup;
  std::vector<std::pair<int, TypeEvent>> sig;
  for (auto& [n, v] : row.sup) {
    int i = u.state_index(n);
    if (i < 0) throw Error(ErrorCode::UnknownIdentifier, "fixture state " + n);
    sup.emplace_back(i, v);
  }
  for (auto& [n, v] : row.sig) {
    int i = u.event_index(n);
    if (i < 0) throw Error(ErrorCode::UnknownIdentifier, "fixture event " + n);
    sig.emplace_back(i, v);
  }
  Region r = assemble_region(u, t, sup, sig);
  r.name = row.id;
  return r;
}

Fixture make_row(const GadgetUnion& g, const RowSpec& row) {
  Fixture f;
  f.id = row.id;
  f.note = row.note;
  f.region = build_row(g.u, g.type(), row);
  int e = g.u.event_index(row.event);
  for (auto& n : row.states) {
    Atom a = Atom::essp(e, g.u.state_index(n));
    // the tables list state sets; states where the event occurs are not atoms
    if (is_valid_atom(g.u, a)) f.claimed.push_back(a);
  }
  return f;
}

std::vector<std::string> states_where(const Union& u, const std::function<bool(const std::string&)>& keep) {
  std::vector<std::string> v;
  for (int s = 0; s < u.num_states(); ++s)
    if (keep(u.state_name(s))) v.push_back(u.state_name(s));
  return v;
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

FixtureCatalog fixture_regions(const std::string& id) {
  const int b = 2;
  SatInstance s = phi0();
  FixtureCatalog cat;
  auto F = TypeEvent::flow;
  auto G = TypeEvent::grp;
  auto h = [](const std::string& p, int i) { return p + num(i); };
  if (id == "table1") {
    cat.gadget = generate(s, Target::tau1, b);
    const Union& u = cat.gadget.u;
    auto exclude = [&](std::vector<std::string> no) {
      return states_where(u, [no](const std::string& n) {
        return starts(n, "h1.") && std::find(no.begin(), no.end(), n) == no.end();
      });
    };
    cat.rows.push_back(make_row(cat.gadget, {"table1.row1", "",
                                             {{"h1.0", b}},
                                             {{"z0", F(0, b)}, {"k", F(1, 0)}},
                                             "z0",
                                             exclude({h("h1.", 2 * b + 2), h("h1.", 3 * b + 5)})}));
    cat.rows.push_back(make_row(cat.gadget, {"table1.row2", "",
                                             {{"h1.0", 0}},
                                             {{"z0", F(0, b)}, {"z1", F(b, 0)}},
                                             "z0",
                                             {h("h1.", 2 * b + 2), h("h1.", 3 * b + 5)}}));
    cat.rows.push_back(make_row(cat.gadget, {"table1.k", "",
                                             {{"h1.0", 0}},
                                             {{"k", F(0, 1)}, {"z0", F(b, 0)}},
                                             "k",
                                             states_where(u, [](const std::string& n) { return !starts(n, "h1."); })}));
  } else if (id == "table2") {
    cat.gadget = generate(s, Target::tau1, b);
    const Union& u = cat.gadget.u;
    cat.rows.push_back(make_row(
        cat.gadget, {"table2.row1",
                     "initial of D_{4,1} used; the printed row names d4.0.0, which is not a state of this union",
                     {{"t0.0.0", 0}, {"t0.2.0", b}, {"d4.1.0", b}},
                     {{"x0", F(0, b)}, {"k4", F(b, 0)}},
                     "x0",
                     states_where(u, [](const std::string& n) { return starts(n, "t0.2."); })}));
  } else if (id == "table3") {
    cat.gadget = generate(s, Target::tau0, b);
    const Union& u = cat.gadget.u;
    cat.rows.push_back(make_row(cat.gadget, {"table3.row1", "",
                                             {{"h0.0", 0}},
                                             {{"z", F(0, 1)}, {"o0", F(b, 0)}},
                                             "z",
                                             {h("h0.", 2 * b), h("h0.", 4 * b + 1), h("h0.", 6 * b + 1)}}));
    std::vector<std::pair<std::string, int>> sup{{"h0.0", b}};
    std::vector<std::string> targets{h("h0.", 2 * b)};
    for (int j = 0; j < 6 * s.m(); ++j) {
      sup.emplace_back("d" + num(j) + ".0.0", b);
      targets.push_back("d" + num(j) + ".0.0");
    }
    cat.rows.push_back(make_row(cat.gadget, {"table3.row4", "", sup, {{"o1", F(0, 1)}, {"o0", F(b, 0)}}, "o1", targets}));
    (void)u;
  } else if (id == "table4") {
    cat.gadget = generate(s, Target::tau3, b);
    const Union& u = cat.gadget.u;
    std::vector<std::pair<std::string, int>> zero;
    for (int c = 0; c < u.num_components(); ++c) zero.emplace_back(u.state_name(u.initial(c)), 0);
    std::vector<std::pair<std::string, TypeEvent>> sig1{{"k", F(0, 1)}, {"z", G(1)}};
    for (int j = 0; j < s.m(); ++j) sig1.emplace_back("v" + num(j), G(1));
    cat.rows.push_back(make_row(cat.gadget, {"table4.row1", "",
                                             zero, sig1, "k",
                                             states_where(u, [](const std::string& n) { return !starts(n, "h3."); })}));
    std::vector<std::pair<std::string, int>> sup3;
    for (int c = 0; c < u.num_components(); ++c) {
      auto n = u.state_name(u.initial(c));
      sup3.emplace_back(n, n[0] == 't' ? 1 : 0);
    }
    std::vector<std::pair<std::string, TypeEvent>> sig3{{"z", F(0, b)}, {"k", G(1)}, {"u", G(2)}};
    RowSpec printed{"table4.row3", "sig(v_j)=1 added; the printed row leaves v_j neutral", sup3, sig3, "z",
                    states_where(u, [](const std::string& n) { return starts(n, "h3.") && n != "h3.0.0"; })};
    RowSpec fixed = printed;
    for (int j = 0; j < s.m(); ++j) fixed.sig.emplace_back("v" + num(j), G(1));
    Fixture f = make_row(cat.gadget, fixed);
    f.verbatim = build_row(u, cat.gadget.type(), printed);
    cat.rows.push_back(std::move(f));
  } else {
    throw Error(ErrorCode::UnknownCatalog, "'" + id + "', expected table1..table4");
  }
  return cat;
}

}  // namespace regsyn
