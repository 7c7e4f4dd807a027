#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ttl {

/// A bijection of {0, ..., n-1}, stored as its image list.
class Perm {
 public:
  /// Throws BadParameter unless images is a bijection.
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  /// Parses cycle notation such as "(0 1 2)(3 4)" on n points; "()" is the
  /// identity. Throws ParseError.
  static Perm from_cycles(std::string_view text, int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const;

  /// (a * b)(x) = a(b(x)).
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  /// Cycle notation without fixed points; "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

inline constexpr std::uint64_t kDefaultMaxOrder = 3628800;  // 10!

/// A permutation group on n points, with its element list once closed.
struct PermGroup {
  int n = 0;
  std::vector<Perm> generators;
  std::optional<std::vector<Perm>> elements;  // sorted
  std::uint64_t order = 0;

  bool closed() const noexcept { return elements.has_value(); }
};

/// Breadth-first closure. Throws OrderBoundExceeded, BadParameter.
PermGroup group_closure(const std::vector<Perm>& generators, int n, std::uint64_t max_order = kDefaultMaxOrder);

/// x -> a·x + b on F_q with a in the index-two subgroup of squares.
/// Throws BadModulus unless q is a prime congruent to 3 mod 4.
PermGroup affine_half_group(int q);

/// Orbits of the group on some finite set; members are the set's indices.
struct Orbit {
  std::vector<int> members;  // ascending
  std::size_t size() const noexcept { return members.size(); }
};

/// Unordered pair {i, j}, i < j, indexed lexicographically.
int pair_index(int i, int j, int n);
std::pair<int, int> pair_from_index(int index, int n);

std::vector<Orbit> orbits_on_points(const PermGroup& group);
std::vector<Orbit> orbits_on_2subsets(const PermGroup& group);
/// Ordered pairs (i, j), i != j, indexed as i·n + j.
std::vector<Orbit> orbits_on_ordered_pairs(const PermGroup& group);

enum class Primitivity { YesByAlmostDoubleTransitivity, Undetermined };
std::string_view to_string(Primitivity p);

struct TransitivityProfile {
  std::uint64_t order = 0;
  bool transitive = false;
  bool two_set_transitive = false;
  bool two_transitive = false;
  Primitivity primitive_witness = Primitivity::Undetermined;
  std::vector<std::size_t> point_orbit_sizes;
  std::vector<std::size_t> two_subset_orbit_sizes;
  std::vector<std::size_t> ordered_pair_orbit_sizes;
};

/// Throws NotClosed for a group whose elements were never materialized.
TransitivityProfile transitivity_profile(const PermGroup& group);

}  // namespace ttl
