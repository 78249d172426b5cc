#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "regsyn/ts.hpp"

namespace regsyn {

enum class Family { tau0, tau1, tau2, tau3 };

const char* family_name(Family f);
Family parse_family(const std::string& s);

// Flow(m,n) or Group(g). Text form "m:n" or "g+".
struct TypeEvent {
  bool group = false;
  int m = 0, n = 0, g = 0;

  static TypeEvent flow(int m, int n) { return {false, m, n, 0}; }
  static TypeEvent grp(int g) { return {true, 0, 0, g}; }

  int minus() const { return group ? 0 : m; }
  int plus() const { return group ? 0 : n; }
  int abs() const { return group ? g : 0; }

  std::string str() const;
  static TypeEvent parse(const std::string& s);

  auto operator<=>(const TypeEvent&) const = default;
};

class NetType {
 public:
  static constexpr int kMaxBound = 14;

  // permissive admits b=1 for the group families (not a paper type)
  NetType(Family f, int b, bool permissive = false);

  Family family() const { return fam_; }
  int bound() const { return b_; }
  bool has_groups() const { return fam_ == Family::tau2 || fam_ == Family::tau3; }
  std::string str() const;

  const std::vector<TypeEvent>& events() const { return events_; }
  bool contains(const TypeEvent& e) const;

  // dense index over all conceivable type events of this bound
  int dense_size() const { return (b_ + 1) * (b_ + 1) + b_ + 1; }
  int dense(const TypeEvent& e) const {
    return e.group ? (b_ + 1) * (b_ + 1) + e.g : e.m * (b_ + 1) + e.n;
  }
  TypeEvent from_dense(int i) const;

  // throws EventNotInType
  std::optional<int> delta(int s, const TypeEvent& e) const;
  // no membership check, -1 when undefined
  int step(int s, const TypeEvent& e) const;

  TypeEvent neutral() const {
    return has_groups() ? TypeEvent::grp(0) : TypeEvent::flow(0, 0);
  }
  // (m,m) or group 0: events that never change the support
  static bool in_e0(const TypeEvent& e) { return e.group ? e.g == 0 : e.m == e.n; }

  TransitionSystem as_transition_system() const;

  bool operator==(const NetType& o) const { return fam_ == o.fam_ && b_ == o.b_; }

 private:
  Family fam_;
  int b_;
  std::vector<TypeEvent> events_;
  std::vector<char> member_;
};

}  // namespace regsyn
