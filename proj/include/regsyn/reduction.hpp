#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "regsyn/region.hpp"

namespace regsyn {

// monotone one-in-three instance; clauses may repeat
struct SatInstance {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
  int m() const { return (int)clauses.size(); }
};

// strict: cubic monotone (every variable in exactly three clauses, one
// variable per clause). Lax admits any monotone 3-clauses.
void validate(const SatInstance& s, bool strict = true);
SatInstance parse_sat(const std::string& text, bool strict = true);
std::string serialize_sat(const SatInstance& s);

using Model = std::vector<int>;  // sorted variable indices

bool is_model(const SatInstance& s, const Model& m);
// lexicographically smallest model; SizeGuard above 24 variables
std::optional<Model> oracle(const SatInstance& s);

enum class Target { tau0, tau1, tau2, tau3, wssp };
const char* target_name(Target t);  // "tau0".. "w-ssp"
Target parse_target(const std::string& s);
NetType target_type(Target t, int b);  // w-ssp is checked as tau1

struct GadgetUnion {
  Target target = Target::tau1;
  int bound = 1;
  Union u;
  Atom key{Atom::ESSP, 0, 0};
  std::vector<std::string> interface_events;
  NetType type() const { return target_type(target, bound); }
};

GadgetUnion generate(const SatInstance& s, Target target, int b);

// throws NotAModel
Region witness_key_region(const SatInstance& s, const Model& m, const GadgetUnion& g);

// variables whose signature leaves the support unchanged are dropped
Model decode_model(const SatInstance& s, const GadgetUnion& g, const Region& r);

struct ClauseSum {
  int clause;
  int sum;       // sum of |sig| over the clause's variables, mod b+1
  int expected;  // -1 when sig(k) is neither (1,0) nor (0,1)
  bool holds() const { return expected >= 0 && sum == expected; }
};

// per-clause residues on a tau2/tau3 gadget region. The stated form expects
// b for sig(k)=(1,0) and 0 for (0,1); `derived` uses 1 for (0,1).
std::vector<ClauseSum> modular_counting(const SatInstance& s, const GadgetUnion& g, const Region& r,
                                        bool derived = false);

struct Fixture {
  std::string id;
  std::string note;
  Region region;
  std::vector<Atom> claimed;
  std::optional<Region> verbatim;  // as printed, where it differs and is expressible
};

struct FixtureCatalog {
  GadgetUnion gadget;
  std::vector<Fixture> rows;
};

// "table1".."table4", instantiated on phi0 at b=2; throws UnknownCatalog
FixtureCatalog fixture_regions(const std::string& id);
SatInstance phi0();

}  // namespace regsyn
