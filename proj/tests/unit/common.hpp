#pragma once

#include <doctest.h>
#include <string>

#include "regsyn/error.hpp"
#include "regsyn/region.hpp"
#include "regsyn/text.hpp"
#include "regsyn/ts.hpp"

inline const std::string kData = REGSYN_TEST_DATA;

inline regsyn::TransitionSystem fig2() { return regsyn::parse_ts(regsyn::read_file(kData + "/fig2_A.ts")); }

inline regsyn::Region fig2_region(const regsyn::Union& u, const std::string& n) {
  return regsyn::parse_region(regsyn::read_file(kData + "/" + n + ".region"), u).region;
}

template <class F>
regsyn::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const regsyn::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return regsyn::ErrorCode::Io;
}
