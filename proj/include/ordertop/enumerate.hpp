#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "ordertop/codec.hpp"
#include "ordertop/finstruct.hpp"

namespace ordertop {

enum class EnumKind { qoset, partial_order, topology, t0_topology, ordered_space, lattice, semilattice_ordered_space };

std::string_view to_string(EnumKind k);
/// Throws SchemaError for unknown names.
EnumKind enum_kind_from_string(std::string_view s);

/// Largest exhaustive n per kind (lattices count elements).
std::size_t enumeration_cap(EnumKind k, bool allow_large = false);

/// Sorted by relation rows.
std::vector<Qoset> enumerate_qosets(std::size_t n);
std::vector<Qoset> enumerate_partial_orders(std::size_t n);
/// Meet-semilattice partial orders.
std::vector<Qoset> enumerate_semilattice_orders(std::size_t n);
/// Built by a closure-pruned search over subset families, sorted by open-set lists.
std::vector<Topology> enumerate_topologies(std::size_t n);
std::vector<Topology> enumerate_t0_topologies(std::size_t n);
/// Lattices on {0..m-1} whose order refines the natural order of labels.
std::vector<Lattice> enumerate_lattices(std::size_t m);

/// Partial orders (outer) times topologies (inner).
void for_each_ordered_space(std::size_t n, const std::function<void(const OrderedSpace&)>& f);
void for_each_semilattice_ordered_space(std::size_t n, const std::function<void(const OrderedSpace&)>& f);

/// Throws BoundTooLarge(n, cap) above enumeration_cap.
std::vector<Object> enumerate(EnumKind k, std::size_t n, bool allow_large = false);

}  // namespace ordertop
