#include "regsyn/properties.hpp"

#include <sstream>

#include "regsyn/error.hpp"
#include "regsyn/joining.hpp"

namespace regsyn {

Enumeration enumerate_regions(const Union& u, const NetType& t, std::uint64_t cap) {
  const auto& te = t.events();
  int ne = u.num_events(), nc = u.num_components(), vals = t.bound() + 1;
  double space = 1;
  for (int i = 0; i < ne; ++i) space *= (double)te.size();
  for (int i = 0; i < nc; ++i) space *= vals;
  if (space > (double)cap) {
    std::ostringstream m;
    m << "region space " << space << " exceeds " << cap;
    throw Error(ErrorCode::SizeGuard, m.str());
  }
  Enumeration out;
  std::vector<int> si(ne, 0), ini(nc, 0);
  std::vector<TypeEvent> sig(ne);
  while (true) {
    for (int e = 0; e < ne; ++e) sig[e] = te[si[e]];
    std::fill(ini.begin(), ini.end(), 0);
    while (true) {
      ++out.candidates;
      auto c = complete_region(u, ini, sig, t);
      if (c.region) out.regions.push_back(std::move(*c.region));
      int i = 0;
      while (i < nc && ++ini[i] == vals) ini[i++] = 0;
      if (i == nc) break;
    }
    int e = 0;
    while (e < ne && ++si[e] == (int)te.size()) si[e++] = 0;
    if (e == ne) break;
  }
  return out;
}

bool naive_solvable(const Enumeration& e, const Atom& a, const NetType& t) {
  for (auto& r : e.regions)
    if (solves(r, a, t)) return true;
  return false;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

std::string event_letter(int i) { return std::string(1, char('a' + i)); }

std::vector<std::string> letters(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(event_letter(i));
  return v;
}

}  // namespace

TransitionSystem random_ts(Rng& rng, int states, int events, const std::string& prefix, int run,
                           int extra_edges) {
  auto name = [&](int i) { return prefix + std::to_string(i); };
  std::vector<std::vector<int>> succ(states, std::vector<int>(events, -1));
  std::vector<std::string> st;
  for (int i = 0; i < states; ++i) st.push_back(name(i));
  for (int i = 1; i < states; ++i) {
    if (i <= run) {
      succ[i - 1][0] = i;
      continue;
    }
    while (true) {
      int p = uniform(rng, 0, i - 1), e = uniform(rng, 0, events - 1);
      if (succ[p][e] >= 0) continue;
      succ[p][e] = i;
      break;
    }
  }
  if (extra_edges < 0) extra_edges = uniform(rng, 0, states);
  for (int k = 0; k < extra_edges; ++k) {
    int p = uniform(rng, 0, states - 1), e = uniform(rng, 0, events - 1), d = uniform(rng, 0, states - 1);
    if (succ[p][e] < 0) succ[p][e] = d;
  }
  std::vector<TransitionSystem::Triple> tr;
  for (int p = 0; p < states; ++p)
    for (int e = 0; e < events; ++e)
      if (succ[p][e] >= 0) tr.emplace_back(name(p), event_letter(e), name(succ[p][e]));
  return TransitionSystem::build(prefix.empty() ? "A" : prefix, st, letters(events), tr, name(0));
}

TransitionSystem random_linear_ts(Rng& rng, int states, int events, const std::string& prefix) {
  std::vector<std::string> st;
  std::vector<TransitionSystem::Triple> tr;
  for (int i = 0; i < states; ++i) st.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < states; ++i) tr.emplace_back(st[i], event_letter(uniform(rng, 0, events - 1)), st[i + 1]);
  return TransitionSystem::build("L", st, letters(events), tr, st[0]);
}

Union random_union(Rng& rng, int comps, int max_states, int events) {
  std::vector<TransitionSystem> v;
  for (int c = 0; c < comps; ++c)
    v.push_back(random_ts(rng, uniform(rng, 1, max_states), events, "c" + std::to_string(c) + "s"));
  return Union(std::move(v), "R");
}

std::vector<std::string> absolute_value_violations(const Union& u, const Region& r, const NetType& t) {
  std::vector<std::string> out;
  int b = t.bound();
  for (int e = 0; e < u.num_events(); ++e) {
    const TypeEvent& x = r.sig[e];
    if (x.group || x.m == x.n) continue;
    for (int s0 = 0; s0 < u.num_states(); ++s0) {
      int s = s0;
      for (int i = 0; i < b && s >= 0; ++i) s = u.step(s, e);
      if (s < 0) continue;
      bool ok = (x == TypeEvent::flow(1, 0) && r.sup[s0] == b && r.sup[s] == 0) ||
                (x == TypeEvent::flow(0, 1) && r.sup[s0] == 0 && r.sup[s] == b);
      if (!ok)
        out.push_back("sig(" + u.event_name(e) + ")=" + x.str() + " on a run from " + u.state_name(s0));
    }
  }
  return out;
}

namespace {

NetType pick_type(Rng& rng, int i) {
  auto f = Family(i % 4);
  bool groups = f == Family::tau2 || f == Family::tau3;
  return NetType(f, groups ? 2 : uniform(rng, 1, 2));
}

void note(SuiteResult& r, const std::string& s) {
  ++r.violations;
  if (r.details.size() < 5) r.details.push_back(s);
}

}  // namespace

SuiteResult suite_absolute_value(std::uint64_t seed, int samples) {
  SuiteResult res;
  res.name = "absolute-value";
  Rng rng(seed);
  for (int i = 0; res.cases < samples; ++i) {
    NetType t = pick_type(rng, i);
    int b = t.bound();
    auto ts = random_ts(rng, uniform(rng, b + 1, b + 4), uniform(rng, 1, 3), "s", b);
    Union u(ts);
    auto en = enumerate_regions(u, t);
    if (en.regions.empty()) continue;
    for (int k = 0; k < 10 && res.cases < samples; ++k) {
      auto& r = en.regions[uniform(rng, 0, (int)en.regions.size() - 1)];
      ++res.cases;
      for (auto& v : absolute_value_violations(u, r, t)) note(res, t.str() + ": " + v);
    }
  }
  return res;
}

SuiteResult suite_join_equivalence(std::uint64_t seed, int unions) {
  SuiteResult res;
  res.name = "join-equivalence";
  Rng rng(seed);
  for (int i = 0; res.cases < unions; ++i) {
    NetType t = pick_type(rng, i);
    Union u = random_union(rng, uniform(rng, 2, 3), 8, 3);
    if (!lemma2_precondition(u)) continue;
    ++res.cases;
    Union j(join(u));
    for (auto p : {Property::ESSP, Property::SSP}) {
      auto a = decide(u, p, t).aggregate, b = decide(j, p, t).aggregate;
      if (a != b || a == Outcome::BudgetExceeded)
        note(res, std::string(property_name(p)) + " " + t.str() + " case " + std::to_string(res.cases) + ": " +
                      outcome_name(a) + " vs joined " + outcome_name(b));
    }
  }
  return res;
}

SuiteResult suite_linear_essp_ssp(std::uint64_t seed, int systems) {
  SuiteResult res;
  res.name = "linear-essp-implies-ssp";
  Rng rng(seed);
  for (int i = 0; i < systems; ++i) {
    NetType t(Family::tau1, uniform(rng, 1, 2));
    Union u(random_linear_ts(rng, uniform(rng, 2, 10), uniform(rng, 1, 3)));
    ++res.cases;
    auto essp = decide(u, Property::ESSP, t).aggregate;
    auto ssp = decide(u, Property::SSP, t).aggregate;
    if (essp == Outcome::BudgetExceeded || ssp == Outcome::BudgetExceeded)
      note(res, "budget exceeded on case " + std::to_string(i));
    else if (essp == Outcome::Solved && ssp != Outcome::Solved)
      note(res, "case " + std::to_string(i) + " " + t.str() + ": ESSP without SSP");
  }
  return res;
}

SuiteResult suite_solver_vs_naive(std::uint64_t seed, int systems) {
  SuiteResult res;
  res.name = "solver-vs-naive";
  Rng rng(seed);
  for (int i = 0; i < systems; ++i) {
    NetType t = pick_type(rng, i);
    Union u(random_ts(rng, uniform(rng, 1, 8), uniform(rng, 1, 4)));
    auto en = enumerate_regions(u, t);
    ++res.cases;
    for (auto& a : enumerate_atoms(u)) {
      auto r = solve_atom(u, a, t);
      bool naive = naive_solvable(en, a, t);
      if (r.outcome == Outcome::BudgetExceeded || (r.outcome == Outcome::Solved) != naive)
        note(res, "case " + std::to_string(i) + " " + t.str() + " " + atom_str(u, a) + ": solver " +
                      outcome_name(r.outcome) + ", naive " + (naive ? "solvable" : "unsolvable"));
    }
  }
  return res;
}

}  // namespace regsyn
