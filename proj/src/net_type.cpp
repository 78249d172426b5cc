#include "regsyn/net_type.hpp"

#include "regsyn/error.hpp"

namespace regsyn {

const char* family_name(Family f) {
  switch (f) {
    case Family::tau0: return "tau0";
    case Family::tau1: return "tau1";
    case Family::tau2: return "tau2";
    case Family::tau3: return "tau3";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "tau0" || s == "tau_0") return Family::tau0;
  if (s == "tau1" || s == "tau_1") return Family::tau1;
  if (s == "tau2" || s == "tau_2") return Family::tau2;
  if (s == "tau3" || s == "tau_3") return Family::tau3;
  throw Error(ErrorCode::SyntaxError, "unknown type family '" + s + "'");
}

std::string TypeEvent::str() const {
  return group ? std::to_string(g) + "+" : std::to_string(m) + ":" + std::to_string(n);
}

namespace {

int parse_small(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 3) throw Error(ErrorCode::SyntaxError, "bad type event '" + whole + "'");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error(ErrorCode::SyntaxError, "bad type event '" + whole + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

TypeEvent TypeEvent::parse(const std::string& s) {
  if (!s.empty() && s.back() == '+') return grp(parse_small(s.substr(0, s.size() - 1), s));
  auto c = s.find(':');
  if (c == std::string::npos) throw Error(ErrorCode::SyntaxError, "bad type event '" + s + "'");
  return flow(parse_small(s.substr(0, c), s), parse_small(s.substr(c + 1), s));
}

NetType::NetType(Family f, int b, bool permissive) : fam_(f), b_(b) {
  int lo = (has_groups() && !permissive) ? 2 : 1;
  if (b < lo || b > kMaxBound)
    throw Error(ErrorCode::InvalidBound, std::string(family_name(f)) + " needs " +
                                             std::to_string(lo) + " <= b <= " +
                                             std::to_string(kMaxBound) + ", got " + std::to_string(b));
  bool pure = f == Family::tau1 || f == Family::tau3;
  for (int m = 0; m <= b; ++m)
    for (int n = 0; n <= b; ++n) {
      if (pure && m >= 1 && n >= 1) continue;
      if (has_groups() && m == 0 && n == 0) continue;
      events_.push_back(TypeEvent::flow(m, n));
    }
  if (has_groups())
    for (int g = 0; g <= b; ++g) events_.push_back(TypeEvent::grp(g));
  member_.assign(dense_size(), 0);
  for (auto& e : events_) member_[dense(e)] = 1;
}

std::string NetType::str() const { return std::string(family_name(fam_)) + " " + std::to_string(b_); }

bool NetType::contains(const TypeEvent& e) const {
  if (e.group) {
    if (e.g < 0 || e.g > b_) return false;
  } else if (e.m < 0 || e.n < 0 || e.m > b_ || e.n > b_) {
    return false;
  }
  return member_[dense(e)];
}

TypeEvent NetType::from_dense(int i) const {
  int q = (b_ + 1) * (b_ + 1);
  return i >= q ? TypeEvent::grp(i - q) : TypeEvent::flow(i / (b_ + 1), i % (b_ + 1));
}

int NetType::step(int s, const TypeEvent& e) const {
  if (e.group) return (s + e.g) % (b_ + 1);
  if (s < e.m) return -1;
  int t = s - e.m + e.n;
  return t <= b_ ? t : -1;
}

std::optional<int> NetType::delta(int s, const TypeEvent& e) const {
  if (!contains(e)) throw Error(ErrorCode::EventNotInType, e.str() + " in " + str());
  if (s < 0 || s > b_) throw Error(ErrorCode::IndexOutOfRange, "state " + std::to_string(s));
  int t = step(s, e);
  if (t < 0) return std::nullopt;
  return t;
}

TransitionSystem NetType::as_transition_system() const {
  std::vector<std::string> st, ev;
  std::vector<TransitionSystem::Triple> tr;
  for (int s = 0; s <= b_; ++s) st.push_back(std::to_string(s));
  for (auto& e : events_) ev.push_back(e.str());
  for (int s = 0; s <= b_; ++s)
    for (auto& e : events_)
      if (int t = step(s, e); t >= 0) tr.emplace_back(std::to_string(s), e.str(), std::to_string(t));
  // every state is reachable from 0 through (0,1) or group 1
  return TransitionSystem::build(std::string(family_name(fam_)) + "_" + std::to_string(b_), st, ev,
                                 tr, "0");
}

}  // namespace regsyn
