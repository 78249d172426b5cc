#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "regsyn/solver.hpp"

namespace regsyn {

// every valid region by brute force over signatures and initial supports;
// throws SizeGuard when the candidate space exceeds cap
struct Enumeration {
  std::uint64_t candidates = 0;
  std::vector<Region> regions;
};
Enumeration enumerate_regions(const Union& u, const NetType& t, std::uint64_t cap = 20'000'000);
bool naive_solvable(const Enumeration& e, const Atom& a, const NetType& t);

using Rng = std::mt19937_64;
int uniform(Rng& rng, int lo, int hi);  // inclusive

// reachable deterministic TS with states <prefix>0.. and events drawn from
// a, b, c, ...; the first `run` tree edges form the path s0 -a-> s1 -a-> ...
TransitionSystem random_ts(Rng& rng, int states, int events, const std::string& prefix = "s", int run = 0,
                           int extra_edges = -1);
TransitionSystem random_linear_ts(Rng& rng, int states, int events, const std::string& prefix = "s");
Union random_union(Rng& rng, int comps, int max_states, int events);

// sig(e) for an event with b consecutive steps: any flow with m != n must be
// (1,0) or (0,1), with the matching supports at both ends of the run
std::vector<std::string> absolute_value_violations(const Union& u, const Region& r, const NetType& t);

struct SuiteResult {
  std::string name;
  int cases = 0;
  int violations = 0;
  std::vector<std::string> details;  // first few violations
  bool passed() const { return cases > 0 && violations == 0; }
};

SuiteResult suite_absolute_value(std::uint64_t seed, int samples = 1000);
SuiteResult suite_join_equivalence(std::uint64_t seed, int unions = 100);
SuiteResult suite_linear_essp_ssp(std::uint64_t seed, int systems = 200);
SuiteResult suite_solver_vs_naive(std::uint64_t seed, int systems = 50);

}  // namespace regsyn
