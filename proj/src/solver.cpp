#include "regsyn/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "regsyn/error.hpp"

namespace regsyn {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Solved: return "solved";
    case Outcome::Unsolvable: return "unsolvable";
    case Outcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

const char* property_name(Property p) {
  switch (p) {
    case Property::ESSP: return "essp";
    case Property::SSP: return "ssp";
    case Property::Feasibility: return "feasibility";
  }
  return "?";
}

Property parse_property(const std::string& s) {
  if (s == "essp") return Property::ESSP;
  if (s == "ssp") return Property::SSP;
  if (s == "feasibility") return Property::Feasibility;
  throw Error(ErrorCode::SyntaxError, "unknown property '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

// type-event sets over dense indices, at most 240 of them
struct SigSet {
  std::array<std::uint64_t, 4> w{};
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  int first() const {
    for (int k = 0; k < 4; ++k)
      if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return -1;
  }
  bool operator==(const SigSet&) const = default;
  template <class F>
  void each(F&& f) const {
    for (int k = 0; k < 4; ++k)
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(k * 64 + std::countr_zero(x));
  }
};

struct Domains {
  std::vector<SigSet> sig;
  std::vector<std::uint32_t> sup;
};

struct BudgetHit {};

bool single(std::uint32_t m) { return m && !(m & (m - 1)); }

class Search {
 public:
  Search(const Union& u, const Atom& atom, const NetType& t, const Budget& b)
      : u_(u), atom_(atom), t_(t), budget_(b) {
    int nd = t.dense_size(), bb = t.bound();
    step_.assign(nd, std::vector<int>(bb + 1, -1));
    for (auto& te : t.events()) {
      int i = t.dense(te);
      type_events_.set(i);
      for (int x = 0; x <= bb; ++x) step_[i][x] = t.step(x, te);
    }
    full_sup_ = (std::uint32_t(1) << (bb + 1)) - 1;

    int ne = (int)u.edges().size();
    atom_con_ = ne;
    sig_cons_.assign(u.num_events(), {});
    sup_cons_.assign(u.num_states(), {});
    for (int i = 0; i < ne; ++i) {
      auto& e = u.edges()[i];
      sig_cons_[e.ev].push_back(i);
      sup_cons_[e.src].push_back(i);
      if (e.dst != e.src) sup_cons_[e.dst].push_back(i);
    }
    if (atom_.kind == Atom::ESSP) {
      sig_cons_[atom_.a].push_back(atom_con_);
      sup_cons_[atom_.b].push_back(atom_con_);
    } else {
      sup_cons_[atom_.a].push_back(atom_con_);
      sup_cons_[atom_.b].push_back(atom_con_);
    }
    in_queue_.assign(ne + 1, 0);

    comp_events_.assign(u.num_components(), {});
    for (int c = 0; c < u.num_components(); ++c)
      for (int le = 0; le < u.components()[c].num_events(); ++le)
        comp_events_[c].push_back(u.global_event(c, le));
    atom_comp_ = u.comp_of(atom_.b);
    memo_.resize(u.num_components());
    build_order();
  }

  AtomResult run() {
    AtomResult r;
    r.atom = atom_;
    start_ = Clock::now();
    Domains d;
    d.sig.assign(u_.num_events(), type_events_);
    d.sup.assign(u_.num_states(), full_sup_);
    try {
      std::vector<int> seed;
      for (int i = 0; i <= atom_con_; ++i) seed.push_back(i);
      if (fixpoint(d, seed) && dfs(d, 0)) {
        r.outcome = Outcome::Solved;
        r.witness = std::move(found_);
      } else {
        r.outcome = Outcome::Unsolvable;
      }
    } catch (const BudgetHit&) {
      r.outcome = Outcome::BudgetExceeded;
    }
    r.stats.nodes = nodes_;
    r.stats.memo_hits = memo_hits_;
    r.stats.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return r;
  }

 private:
  struct Var {
    bool is_sig;
    int idx;
  };

  void build_order() {
    std::vector<char> have_sig(u_.num_events(), 0);
    auto add_sig = [&](int e) {
      if (!have_sig[e]) {
        have_sig[e] = 1;
        order_.push_back({true, e});
      }
    };
    if (atom_.kind == Atom::ESSP) add_sig(atom_.a);
    std::vector<int> comps;
    for (int c = 0; c < u_.num_components(); ++c)
      if (c != atom_comp_) comps.push_back(c);
    std::stable_sort(comps.begin(), comps.end(),
                     [&](int a, int b) { return u_.comp_size(a) < u_.comp_size(b); });
    comps.insert(comps.begin(), atom_comp_);
    for (int c : comps) {
      order_.push_back({false, u_.initial(c)});
      auto& ts = u_.components()[c];
      for (int s : ts.bfs_order())
        for (auto [le, d] : ts.out(s)) add_sig(u_.global_event(c, le));
    }
    // events declared without any transition
    for (int e = 0; e < u_.num_events(); ++e) add_sig(e);
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.nodes) throw BudgetHit{};
    if ((nodes_ & 1023) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.seconds)
      throw BudgetHit{};
  }

  void push(int c) {
    if (!in_queue_[c]) {
      in_queue_[c] = 1;
      queue_.push_back(c);
    }
  }

  void sig_changed(int e, int except) {
    for (int c : sig_cons_[e])
      if (c != except) push(c);
  }
  void sup_changed(int s, int except) {
    for (int c : sup_cons_[s])
      if (c != except) push(c);
  }

  // false on wipe-out
  bool revise(Domains& d, int c) {
    if (c == atom_con_) return revise_atom(d);
    auto& e = u_.edges()[c];
    const SigSet& de = d.sig[e.ev];
    std::uint32_t ds = d.sup[e.src], dt = d.sup[e.dst];
    SigSet ne;
    std::uint32_t ns = 0, nt = 0;
    de.each([&](int te) {
      auto& st = step_[te];
      bool any = false;
      for (std::uint32_t x = ds; x; x &= x - 1) {
        int s = std::countr_zero(x);
        int y = st[s];
        if (y >= 0 && ((dt >> y) & 1)) {
          ns |= std::uint32_t(1) << s;
          nt |= std::uint32_t(1) << y;
          any = true;
        }
      }
      if (any) ne.set(te);
    });
    if (ne.empty()) return false;
    if (e.src == e.dst) {
      std::uint32_t both = ns & nt;
      // self-loop: only values with x -> x survive
      SigSet ne2;
      std::uint32_t keep = 0;
      ne.each([&](int te) {
        bool any = false;
        for (std::uint32_t x = both; x; x &= x - 1) {
          int s = std::countr_zero(x);
          if (step_[te][s] == s) {
            keep |= std::uint32_t(1) << s;
            any = true;
          }
        }
        if (any) ne2.set(te);
      });
      if (!keep) return false;
      ne = ne2;
      ns = nt = keep;
    }
    if (!(ne == de)) {
      d.sig[e.ev] = ne;
      sig_changed(e.ev, c);
    }
    if (ns != ds) {
      d.sup[e.src] = ns;
      sup_changed(e.src, c);
    }
    if (e.dst != e.src && nt != dt) {
      d.sup[e.dst] = nt;
      sup_changed(e.dst, c);
    }
    return true;
  }

  bool revise_atom(Domains& d) {
    if (atom_.kind == Atom::SSP) {
      std::uint32_t &p = d.sup[atom_.a], &q = d.sup[atom_.b];
      if (single(p) && (q & p)) {
        q &= ~p;
        if (!q) return false;
        sup_changed(atom_.b, atom_con_);
      }
      if (single(q) && (p & q)) {
        p &= ~q;
        if (!p) return false;
        sup_changed(atom_.a, atom_con_);
      }
      return true;
    }
    SigSet& de = d.sig[atom_.a];
    std::uint32_t ds = d.sup[atom_.b];
    SigSet ne;
    std::uint32_t ns = 0;
    de.each([&](int te) {
      bool any = false;
      for (std::uint32_t x = ds; x; x &= x - 1) {
        int s = std::countr_zero(x);
        if (step_[te][s] < 0) {
          ns |= std::uint32_t(1) << s;
          any = true;
        }
      }
      if (any) ne.set(te);
    });
    if (ne.empty()) return false;
    if (!(ne == de)) {
      de = ne;
      sig_changed(atom_.a, atom_con_);
    }
    if (ns != ds) {
      d.sup[atom_.b] = ns;
      sup_changed(atom_.b, atom_con_);
    }
    return true;
  }

  bool drain(Domains& d) {
    bool ok = true;
    while (!queue_.empty()) {
      int c = queue_.back();
      queue_.pop_back();
      in_queue_[c] = 0;
      if (ok && !revise(d, c)) ok = false;
    }
    return ok;
  }

  // feasible initial supports of component c under the fixed signature
  std::uint32_t comp_mask(const Domains& d, int c) {
    std::string key;
    key.reserve(comp_events_[c].size() * 2);
    for (int e : comp_events_[c]) {
      int v = d.sig[e].first();
      key.push_back(char(v & 0xff));
    }
    auto& m = memo_[c];
    if (auto it = m.find(key); it != m.end()) {
      ++memo_hits_;
      return it->second;
    }
    std::uint32_t mask = 0;
    auto& ts = u_.components()[c];
    std::vector<int> sup(ts.num_states());
    auto order = ts.bfs_order();
    for (int x = 0; x <= t_.bound(); ++x) {
      std::fill(sup.begin(), sup.end(), -1);
      sup[ts.initial()] = x;
      bool ok = true;
      for (int s : order) {
        for (auto [le, dst] : ts.out(s)) {
          int y = step_[d.sig[u_.global_event(c, le)].first()][sup[s]];
          if (y < 0 || (sup[dst] >= 0 && sup[dst] != y)) {
            ok = false;
            break;
          }
          sup[dst] = y;
        }
        if (!ok) break;
      }
      if (ok) mask |= std::uint32_t(1) << x;
    }
    if (memo_size_ < budget_.memo_cap) {
      m.emplace(std::move(key), mask);
      ++memo_size_;
    }
    return mask;
  }

  bool fixpoint(Domains& d, const std::vector<int>& seed) {
    for (int c : seed) push(c);
    for (;;) {
      if (!drain(d)) return false;
      bool changed = false;
      for (int c = 0; c < u_.num_components(); ++c) {
        if (c == atom_comp_) continue;
        int s0 = u_.initial(c);
        bool ready = true;
        for (int e : comp_events_[c])
          if (d.sig[e].count() != 1) {
            ready = false;
            break;
          }
        if (!ready) continue;
        std::uint32_t m = comp_mask(d, c) & d.sup[s0];
        if (!m) {
          for (int k : queue_) in_queue_[k] = 0;
          queue_.clear();
          return false;
        }
        if (m != d.sup[s0]) {
          d.sup[s0] = m;
          sup_changed(s0, -1);
          changed = true;
        }
      }
      if (!changed) return true;
    }
  }

  bool dfs(const Domains& d, int from) {
    tick();
    int i = from;
    while (i < (int)order_.size()) {
      auto& v = order_[i];
      if (v.is_sig ? d.sig[v.idx].count() > 1 : !single(d.sup[v.idx])) break;
      ++i;
    }
    if (i == (int)order_.size()) return leaf(d);
    auto v = order_[i];
    std::vector<int> values;
    if (v.is_sig)
      d.sig[v.idx].each([&](int te) { values.push_back(te); });
    else
      for (std::uint32_t x = d.sup[v.idx]; x; x &= x - 1) values.push_back(std::countr_zero(x));
    for (int val : values) {
      Domains c = d;
      if (v.is_sig) {
        c.sig[v.idx] = SigSet{};
        c.sig[v.idx].set(val);
        for (int k : sig_cons_[v.idx]) push(k);
      } else {
        c.sup[v.idx] = std::uint32_t(1) << val;
        for (int k : sup_cons_[v.idx]) push(k);
      }
      if (fixpoint(c, {}) && dfs(c, i + 1)) return true;
    }
    return false;
  }

  bool leaf(const Domains& d) {
    Region r;
    r.sig.resize(u_.num_events());
    r.sup.resize(u_.num_states());
    for (int e = 0; e < u_.num_events(); ++e) r.sig[e] = t_.from_dense(d.sig[e].first());
    for (int s = 0; s < u_.num_states(); ++s) {
      if (!single(d.sup[s])) return false;
      r.sup[s] = std::countr_zero(d.sup[s]);
    }
    if (!verify_region(u_, r, t_).ok || !solves(r, atom_, t_)) return false;
    found_ = std::move(r);
    return true;
  }

  const Union& u_;
  Atom atom_;
  const NetType& t_;
  Budget budget_;
  std::vector<std::vector<int>> step_;
  SigSet type_events_;
  std::uint32_t full_sup_ = 0;
  int atom_con_ = 0, atom_comp_ = 0;
  std::vector<std::vector<int>> sig_cons_, sup_cons_, comp_events_;
  std::vector<char> in_queue_;
  std::vector<int> queue_;
  std::vector<Var> order_;
  std::vector<std::unordered_map<std::string, std::uint32_t>> memo_;
  std::size_t memo_size_ = 0;
  std::uint64_t nodes_ = 0, memo_hits_ = 0;
  Clock::time_point start_;
  std::optional<Region> found_;
};

}  // namespace

AtomResult solve_atom(const Union& u, const Atom& atom, const NetType& t, const Budget& budget) {
  if (!is_valid_atom(u, atom)) throw Error(ErrorCode::InvalidAtom, "not a separation atom of the carrier");
  Search s(u, atom, t, budget);
  auto r = s.run();
  if (r.witness) {
    // soundness is checked, not assumed
    if (!verify_region(u, *r.witness, t).ok || !solves(*r.witness, atom, t))
      throw Error(ErrorCode::InvalidRegion, "solver produced an invalid witness");
  }
  return r;
}

std::vector<Atom> atoms_for(const Union& u, Property p) {
  auto all = enumerate_atoms(u);
  if (p == Property::Feasibility) return all;
  std::vector<Atom> v;
  auto k = p == Property::SSP ? Atom::SSP : Atom::ESSP;
  for (auto& a : all)
    if (a.kind == k) v.push_back(a);
  return v;
}

SolveReport decide(const Union& u, Property p, const NetType& t, const DecideOptions& opt) {
  SolveReport rep;
  rep.property = p;
  auto t0 = Clock::now();
  auto atoms = atoms_for(u, p);
  int n = (int)atoms.size();
  std::vector<std::optional<AtomResult>> res(n);

  if (opt.greedy_cover || opt.jobs <= 1) {
    for (int i = 0; i < n; ++i) {
      if (opt.greedy_cover) {
        int hit = -1;
        for (int w = 0; w < (int)rep.witnesses.size() && hit < 0; ++w)
          if (solves(rep.witnesses[w], atoms[i], t)) hit = w;
        if (hit >= 0) {
          AtomResult r;
          r.atom = atoms[i];
          r.outcome = Outcome::Solved;
          r.witness_index = hit;
          res[i] = std::move(r);
          continue;
        }
      }
      auto r = solve_atom(u, atoms[i], t, opt.budget);
      if (r.witness && opt.greedy_cover) {
        r.witness_index = (int)rep.witnesses.size();
        rep.witnesses.push_back(*r.witness);
      }
      bool stop = r.outcome == Outcome::Unsolvable && !opt.all;
      res[i] = std::move(r);
      if (stop) break;
    }
  } else {
    std::atomic<int> next{0};
    std::atomic<int> stop_at{n};
    std::mutex mu;
    std::exception_ptr err;
    auto work = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n || i > stop_at.load()) return;
        try {
          auto r = solve_atom(u, atoms[i], t, opt.budget);
          if (r.outcome == Outcome::Unsolvable && !opt.all) {
            int cur = stop_at.load();
            while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
            }
          }
          std::lock_guard<std::mutex> g(mu);
          res[i] = std::move(r);
        } catch (...) {
          std::lock_guard<std::mutex> g(mu);
          if (!err) err = std::current_exception();
          stop_at.store(-1);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min(opt.jobs, std::max(n, 1)); ++j) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    // results past the first failure depend on the schedule, drop them
    int cut = stop_at.load();
    for (int i = cut + 1; i < n; ++i) res[i].reset();
  }

  bool budget_hit = false;
  for (int i = 0; i < n; ++i) {
    if (!res[i]) break;
    auto& r = *res[i];
    rep.stats.nodes += r.stats.nodes;
    rep.stats.memo_hits += r.stats.memo_hits;
    if (r.outcome == Outcome::Unsolvable && rep.first_failure < 0) rep.first_failure = (int)rep.results.size();
    if (r.outcome == Outcome::BudgetExceeded) budget_hit = true;
    if (!opt.greedy_cover && r.witness) {
      int found = -1;
      for (int w = 0; w < (int)rep.witnesses.size() && found < 0; ++w)
        if (rep.witnesses[w].same_mapping(*r.witness)) found = w;
      if (found < 0) {
        found = (int)rep.witnesses.size();
        rep.witnesses.push_back(*r.witness);
      }
      r.witness_index = found;
    }
    rep.results.push_back(std::move(r));
  }
  if (rep.first_failure >= 0)
    rep.aggregate = Outcome::Unsolvable;
  else if (budget_hit)
    rep.aggregate = Outcome::BudgetExceeded;
  else
    rep.aggregate = Outcome::Solved;
  for (size_t w = 0; w < rep.witnesses.size(); ++w) rep.witnesses[w].name = "W" + std::to_string(w);
  rep.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace regsyn
