#pragma once

#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ordertop/error.hpp"
#include "ordertop/finstruct.hpp"

namespace testsupport {

inline oracle::Family family_of(const std::vector<ordertop::PointSet>& sets) {
  oracle::Family f;
  for (auto s : sets) f.push_back(static_cast<oracle::Mask>(s.bits()));
  std::sort(f.begin(), f.end());
  return f;
}

inline oracle::Family family_of(const ordertop::Topology& t) { return family_of(t.opens()); }

inline oracle::Matrix matrix_of(const ordertop::Qoset& q) { return q.relation().matrix(); }

inline ordertop::Topology topology_of(int n, const oracle::Family& f) {
  std::vector<ordertop::PointSet> sets;
  for (auto m : f) sets.emplace_back(m);
  return ordertop::Topology::validate(static_cast<std::size_t>(n), sets);
}

inline ordertop::BoolMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  ordertop::BoolMatrix m;
  for (auto r : rows) {
    m.emplace_back();
    for (int v : r) m.back().push_back(v != 0);
  }
  return m;
}

inline ordertop::PointSet set(std::initializer_list<std::size_t> xs) { return ordertop::PointSet::of(xs); }

inline std::vector<std::uint64_t> bits(std::initializer_list<std::initializer_list<std::size_t>> sets) {
  std::vector<std::uint64_t> out;
  for (auto s : sets) out.push_back(ordertop::PointSet::of(s).bits());
  return out;
}

/// Runs f and returns the error it raised; fails the test when nothing is thrown.
template <class F>
ordertop::Error error_of(F&& f) {
  try {
    f();
  } catch (const ordertop::Error& e) {
    return e;
  }
  FAIL("expected an ordertop::Error");
  return ordertop::Error(ordertop::ErrorCode::SchemaError, {});
}

}  // namespace testsupport
