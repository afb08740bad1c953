#include "ordertop/enumerate.hpp"

#include <algorithm>
#include <string>

#include "ordertop/ospace.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

namespace {

bool rows_transitive(const std::vector<PointSet>& rows) {
  for (std::size_t x = 0; x < rows.size(); ++x) {
    bool ok = true;
    rows[x].for_each([&](std::size_t y) {
      if (!rows[y].subset_of(rows[x])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

void check_size(EnumKind k, std::size_t n, bool allow_large) {
  if (n == 0) throw Error(ErrorCode::BadCarrier, {0}, "enumeration needs at least one point");
  const auto cap = enumeration_cap(k, allow_large);
  if (n > cap) throw Error(ErrorCode::BoundTooLarge, {n, cap}, std::string(to_string(k)));
}

struct TopologySearch {
  std::size_t n;
  std::size_t last;  // index of the full set
  std::vector<std::uint64_t> chosen_list;
  std::vector<bool> chosen, required;
  std::vector<Topology> out;

  void run(std::uint64_t s) {
    if (s == last) {
      std::vector<PointSet> fam;
      for (auto c : chosen_list) fam.emplace_back(c);
      fam.emplace_back(last);
      out.push_back(Topology::validate(n, std::move(fam)));
      return;
    }
    // include s
    bool ok = true;
    std::vector<std::uint64_t> marked;
    for (auto a : chosen_list)
      if (!chosen[a & s]) { ok = false; break; }
    if (ok) {
      for (auto a : chosen_list)
        if (!required[a | s]) { required[a | s] = true; marked.push_back(a | s); }
      chosen[s] = true;
      chosen_list.push_back(s);
      run(s + 1);
      chosen_list.pop_back();
      chosen[s] = false;
      for (auto m : marked) required[m] = false;
    }
    if (!required[s]) run(s + 1);
  }
};

}  // namespace

std::string_view to_string(EnumKind k) {
  switch (k) {
    case EnumKind::qoset: return "qoset";
    case EnumKind::partial_order: return "partial-order";
    case EnumKind::topology: return "topology";
    case EnumKind::t0_topology: return "t0-topology";
    case EnumKind::ordered_space: return "ordered-space";
    case EnumKind::lattice: return "lattice";
    case EnumKind::semilattice_ordered_space: return "semilattice-ordered-space";
  }
  return "?";
}

EnumKind enum_kind_from_string(std::string_view s) {
  for (auto k : {EnumKind::qoset, EnumKind::partial_order, EnumKind::topology, EnumKind::t0_topology,
                 EnumKind::ordered_space, EnumKind::lattice, EnumKind::semilattice_ordered_space})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::SchemaError, {}, "unknown enumeration kind " + std::string(s));
}

std::size_t enumeration_cap(EnumKind k, bool allow_large) {
  switch (k) {
    case EnumKind::qoset:
    case EnumKind::partial_order: return 5;
    case EnumKind::topology:
    case EnumKind::t0_topology: return allow_large ? 6 : 5;
    case EnumKind::ordered_space:
    case EnumKind::semilattice_ordered_space: return allow_large ? 5 : 4;
    case EnumKind::lattice: return 7;
  }
  return 0;
}

std::vector<Qoset> enumerate_qosets(std::size_t n) {
  check_size(EnumKind::qoset, n, false);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) slots.emplace_back(x, y);
  std::vector<std::vector<PointSet>> found;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<PointSet> rows(n);
    for (std::size_t x = 0; x < n; ++x) rows[x] = PointSet::singleton(x);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((bits >> i) & 1u) rows[slots[i].first] = rows[slots[i].first].with(slots[i].second);
    if (rows_transitive(rows)) found.push_back(std::move(rows));
  }
  std::sort(found.begin(), found.end());
  std::vector<Qoset> out;
  out.reserve(found.size());
  for (auto& rows : found) out.push_back(Qoset::validate(BinaryRelation(n, std::move(rows))));
  return out;
}

std::vector<Qoset> enumerate_partial_orders(std::size_t n) {
  auto all = enumerate_qosets(n);
  std::erase_if(all, [](const Qoset& q) { return !q.antisymmetric(); });
  return all;
}

std::vector<Qoset> enumerate_semilattice_orders(std::size_t n) {
  auto all = enumerate_partial_orders(n);
  std::erase_if(all, [](const Qoset& q) {
    try {
      meet_table(q);
      return false;
    } catch (const Error&) {
      return true;
    }
  });
  return all;
}

std::vector<Topology> enumerate_topologies(std::size_t n) {
  check_size(EnumKind::topology, n, true);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  TopologySearch search{n, subsets - 1, {}, std::vector<bool>(subsets), std::vector<bool>(subsets), {}};
  search.chosen[0] = true;
  search.chosen_list.push_back(0);
  search.run(1);
  auto out = std::move(search.out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Topology> enumerate_t0_topologies(std::size_t n) {
  auto all = enumerate_topologies(n);
  std::erase_if(all, [](const Topology& t) { return !is_t0(t); });
  return all;
}

std::vector<Lattice> enumerate_lattices(std::size_t m) {
  check_size(EnumKind::lattice, m, false);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 1; a + 1 < m; ++a)
    for (std::size_t b = a + 1; b + 1 < m; ++b) slots.emplace_back(a, b);
  std::vector<Lattice> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<PointSet> rows(m);
    for (std::size_t a = 0; a < m; ++a) rows[a] = PointSet::singleton(a).with(m - 1);
    rows[0] = PointSet::full(m);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((bits >> i) & 1u) rows[slots[i].first] = rows[slots[i].first].with(slots[i].second);
    if (!rows_transitive(rows)) continue;
    try {
      out.push_back(Lattice::validate(m, rows));
    } catch (const Error&) {
    }
  }
  std::sort(out.begin(), out.end(), [m](const Lattice& a, const Lattice& b) {
    for (std::size_t x = 0; x < m; ++x)
      if (a.up(x) != b.up(x)) return a.up(x) < b.up(x);
    return false;
  });
  return out;
}

void for_each_ordered_space(std::size_t n, const std::function<void(const OrderedSpace&)>& f) {
  check_size(EnumKind::ordered_space, n, true);
  const auto tops = enumerate_topologies(n);
  for (const auto& q : enumerate_partial_orders(n))
    for (const auto& t : tops) f(OrderedSpace(q, t));
}

void for_each_semilattice_ordered_space(std::size_t n, const std::function<void(const OrderedSpace&)>& f) {
  check_size(EnumKind::semilattice_ordered_space, n, true);
  const auto tops = enumerate_topologies(n);
  for (const auto& q : enumerate_semilattice_orders(n))
    for (const auto& t : tops) f(OrderedSpace(q, t));
}

std::vector<Object> enumerate(EnumKind k, std::size_t n, bool allow_large) {
  check_size(k, n, allow_large);
  std::vector<Object> out;
  switch (k) {
    case EnumKind::qoset:
      for (auto& q : enumerate_qosets(n)) out.emplace_back(std::move(q));
      break;
    case EnumKind::partial_order:
      for (auto& q : enumerate_partial_orders(n)) out.emplace_back(std::move(q));
      break;
    case EnumKind::topology:
      for (auto& t : enumerate_topologies(n)) out.emplace_back(std::move(t));
      break;
    case EnumKind::t0_topology:
      for (auto& t : enumerate_t0_topologies(n)) out.emplace_back(std::move(t));
      break;
    case EnumKind::ordered_space:
      for_each_ordered_space(n, [&](const OrderedSpace& s) { out.emplace_back(s); });
      break;
    case EnumKind::semilattice_ordered_space:
      for_each_semilattice_ordered_space(n, [&](const OrderedSpace& s) { out.emplace_back(s); });
      break;
    case EnumKind::lattice:
      for (auto& l : enumerate_lattices(n)) out.emplace_back(std::move(l));
      break;
  }
  return out;
}

}  // namespace ordertop
