#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regsyn/net_type.hpp"
#include "regsyn/union.hpp"

namespace regsyn {

// sup indexed by global state of the carrier, sig by global event
struct Region {
  std::string name;
  std::vector<int> sup;
  std::vector<TypeEvent> sig;

  bool same_mapping(const Region& o) const { return sup == o.sup && sig == o.sig; }
};

struct Atom {
  enum Kind { SSP, ESSP } kind;
  int a, b;  // SSP: two states (a < b). ESSP: event a, state b.

  static Atom ssp(int s, int t) { return s < t ? Atom{SSP, s, t} : Atom{SSP, t, s}; }
  static Atom essp(int e, int s) { return Atom{ESSP, e, s}; }
  bool operator==(const Atom&) const = default;
};

struct RegionCheck {
  bool ok = true;
  int edge = -1;  // index into carrier.edges(), -1 when no transition is to blame
  std::string message;
};

// throws ArityMismatch on wrong sizes or signatures outside the type
RegionCheck verify_region(const Union& u, const Region& r, const NetType& t);

struct Completion {
  std::optional<Region> region;
  RegionCheck check;
};

// initial: one support per component
Completion complete_region(const Union& u, const std::vector<int>& initial,
                           const std::vector<TypeEvent>& sig, const NetType& t);

bool is_valid_atom(const Union& u, const Atom& a);
std::vector<Atom> enumerate_atoms(const Union& u);  // SSP atoms first, then ESSP
bool solves(const Region& r, const Atom& a, const NetType& t);

std::string atom_str(const Union& u, const Atom& a);
Atom parse_atom(const Union& u, const std::string& s);  // "ssp:s,t" or "essp:e,s"
std::string edge_str(const Union& u, int edge);

// sparse description: unlisted component initials get b, unlisted events
// the neutral event; other supports follow by propagation unless listed.
// States the propagation cannot reach keep support -1.
Region assemble_region(const Union& u, const NetType& t, const std::vector<std::pair<int, int>>& sups,
                       const std::vector<std::pair<int, TypeEvent>>& sigs);

struct RegionFile {
  std::string name, over;
  NetType type{Family::tau0, 1};
  Region region;
};

RegionFile parse_region(const std::string& text, const Union& u);
std::string serialize_region(const RegionFile& f, const Union& u);

}  // namespace regsyn
