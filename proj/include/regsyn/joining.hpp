#pragma once

#include <string>
#include <vector>

#include "regsyn/region.hpp"

namespace regsyn {

// connector names reserved by join
std::string q_name(int i);
std::string w_name(int i);
std::string y_name(int i);

Union flatten(const std::vector<Union>& parts, std::string name = "U");

// throws NameClash if the union already uses q.i / w.i / y.i
TransitionSystem join(const Union& u);

bool lemma2_precondition(const Union& u);

// region of u lifted to join(u); pivot is the support of the separated state
Region lift_region(const Union& u, const Region& r, int pivot, const NetType& t);

// the connector region for index i, on join(u); throws IndexOutOfRange
Region connector_region(const Union& u, int i, const NetType& t);

// restriction of a region of join(u) back to u
Region project_region(const Union& u, const Union& joined, const Region& r);

// `union <name>` then `include <ts-file>` lines, paths relative to base_dir
Union parse_union(const std::string& text, const std::string& base_dir);

}  // namespace regsyn
