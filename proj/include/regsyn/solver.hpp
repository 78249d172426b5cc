#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regsyn/region.hpp"

namespace regsyn {

struct Budget {
  double seconds = 60.0;
  std::uint64_t nodes = 100'000'000;
  std::size_t memo_cap = std::size_t(1) << 20;
};

enum class Outcome { Solved, Unsolvable, BudgetExceeded };
const char* outcome_name(Outcome o);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double seconds = 0;
};

struct AtomResult {
  Atom atom{Atom::SSP, 0, 0};
  Outcome outcome = Outcome::Unsolvable;
  std::optional<Region> witness;
  int witness_index = -1;  // position in SolveReport::witnesses
  SolveStats stats;
};

// Exact within budget. Witnesses are verified before they are returned.
AtomResult solve_atom(const Union& u, const Atom& atom, const NetType& t, const Budget& budget = {});

enum class Property { ESSP, SSP, Feasibility };
const char* property_name(Property p);
Property parse_property(const std::string& s);

struct DecideOptions {
  bool all = false;           // keep going after the first unsolvable atom
  bool greedy_cover = false;  // reuse earlier witnesses, runs sequentially
  int jobs = 1;
  Budget budget;
};

struct SolveReport {
  Property property = Property::Feasibility;
  Outcome aggregate = Outcome::Solved;  // Solved: holds, Unsolvable: refuted
  std::vector<AtomResult> results;      // canonical atom order
  std::vector<Region> witnesses;
  SolveStats stats;
  int first_failure = -1;  // index into results
};

std::vector<Atom> atoms_for(const Union& u, Property p);
SolveReport decide(const Union& u, Property p, const NetType& t, const DecideOptions& opt = {});

}  // namespace regsyn
