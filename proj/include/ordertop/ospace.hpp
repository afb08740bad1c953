#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordertop/finstruct.hpp"
#include "ordertop/topoderive.hpp"

namespace ordertop {

using FlagList = std::vector<std::pair<std::string, bool>>;

struct SeparationProfile {
  bool lower_semi_qospace = false;
  bool upper_semi_qospace = false;
  bool semi_qospace = false;
  bool qospace = false;
  bool pospace = false;
  bool t1_ordered = false;
  bool t2_ordered = false;
  bool upper_regular = false;
  bool lower_regular = false;
  bool upper_t3_ordered = false;
  FlagList flags() const;
};

struct ConvexityProfile {
  bool locally_convex = false;
  bool strongly_convex = false;
  bool hyperconvex = false;
  bool sigma_convex = false;
  bool alpha_convex = false;
  FlagList flags() const;
};

struct StabilityProfile {
  bool up_stable = false;
  bool d_stable = false;
  bool core_stable = false;
  bool vee_stable = false;
  bool wedge_stable = false;
  bool diamond_stable = false;
  FlagList flags() const;
};

struct WebProfile {
  bool web_ordered = false;
  bool locally_filtered = false;
  bool sector_space = false;
  bool upsilon_sector_space = false;
  bool fan_space = false;
  bool mc_ordered = false;
  bool upper_m_determined = false;
  FlagList flags() const;
};

struct SemilatticeProfile {
  bool compatible = false;
  bool semitopological = false;
  bool topological = false;
  bool small_semilattices = false;
  bool small_convex_semilattices = false;
  FlagList flags() const;
};

SeparationProfile separation_profile(const OrderedSpace& t);
ConvexityProfile convexity_profile(const OrderedSpace& t);
StabilityProfile stability_profile(const OrderedSpace& t);
WebProfile web_profile(const OrderedSpace& t);
/// Throws NotASemilattice(x, y) for the first pair without a meet.
SemilatticeProfile semilattice_profile(const OrderedSpace& t);

// ---------------------------------------------------------------------------
// single predicates

bool is_lower_semi_qospace(const OrderedSpace& t);
bool is_upper_semi_qospace(const OrderedSpace& t);
bool is_semi_qospace(const OrderedSpace& t);
bool is_qospace(const OrderedSpace& t);
bool is_t2_ordered(const OrderedSpace& t);
bool is_upper_regular(const OrderedSpace& t);
bool is_lower_regular(const OrderedSpace& t);
bool is_hausdorff(const Topology& t);

bool is_locally_convex(const OrderedSpace& t);
bool is_strongly_convex(const OrderedSpace& t);
/// T generated by the open upper sets and zeta of the upper space.
bool is_zeta_convex(const OrderedSpace& t, Coselection z);
/// Base criterion: the sets U - up(F), U open upper, F finite, are open and form a base.
bool is_hyperconvex_by_base(const OrderedSpace& t);

bool is_up_stable(const OrderedSpace& t);
bool is_d_stable(const OrderedSpace& t);
bool is_core_stable(const OrderedSpace& t);

/// Families of upper sets built from principal filters of the order.
enum class UpsetFamily { vee, wedge, diamond, alpha };
std::vector<PointSet> upset_family(const Qoset& q, UpsetFamily f);
/// Y° = union of (up y)° over y in Y for every Y of the family, ° taken in the upper space.
bool is_family_stable(const OrderedSpace& t, UpsetFamily f);

bool is_web(const Qoset& q, PointSet w, std::size_t x);
bool is_web_ordered(const OrderedSpace& t);
bool is_locally_filtered(const OrderedSpace& t);
bool is_sector_space(const OrderedSpace& t);
bool is_zeta_sector_space(const OrderedSpace& t, Coselection z);
bool is_fan_space(const OrderedSpace& t);
bool is_mc_ordered(const OrderedSpace& t);
bool is_upper_m_determined(const OrderedSpace& t);

/// Meet table of a meet-semilattice order; throws NotASemilattice(x, y).
std::vector<std::size_t> meet_table(const Qoset& q);
bool is_compatible(const OrderedSpace& t);

// ---------------------------------------------------------------------------
// theorem bundles

enum class Bundle { thm_4_6, thm_5_3, thm_6_2, thm_7_2, prop_7_4 };
std::string_view to_string(Bundle b);
/// Accepts thm-4.6 style names; throws UnknownSuite.
Bundle bundle_from_string(std::string_view s);

struct BundleResult {
  Bundle which = Bundle::thm_4_6;
  std::vector<std::string> labels;
  std::vector<bool> verdicts;
  /// Indices of conditions asserted equivalent to each other.
  std::vector<std::vector<std::size_t>> groups;
  /// Standing hypothesis of the statement (always true when it has none).
  bool hypothesis = true;
  /// Every group is constant; vacuously true when the hypothesis fails.
  bool agree = true;
};

BundleResult theorem_bundle(const OrderedSpace& t, Bundle which);

// pieces reused by other modules
bool is_dcpo(const Qoset& q);
bool is_continuous_domain(const Qoset& q);
bool is_meet_continuous_domain(const Qoset& q);
bool is_lawson_space(const OrderedSpace& t);

}  // namespace ordertop
