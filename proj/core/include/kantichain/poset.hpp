#pragma once

// Finite point sets under the coordinatewise dominance order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kantichain {

using BigInt = boost::multiprecision::cpp_int;

/// A point of [0,1]^n. Coordinates are validated on construction.
class RealPoint {
 public:
  explicit RealPoint(std::vector<double> coords);
  RealPoint(std::initializer_list<double> coords);

  std::size_t dimension() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  /// Left-to-right sum; the fixed order makes it monotone under dominance.
  double coordinate_sum() const;

  friend bool operator==(const RealPoint&, const RealPoint&) = default;
  friend auto operator<=>(const RealPoint& a, const RealPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<double> coords_;
};

/// A vertex of {0,1}^n, i.e. a subset of [n].
class LatticePoint {
 public:
  explicit LatticePoint(std::vector<std::uint8_t> bits);

  /// Bit i of `mask` becomes coordinate i.
  static LatticePoint from_mask(std::size_t n, std::uint64_t mask);

  std::size_t dimension() const { return bits_.size(); }
  std::size_t weight() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  RealPoint to_real() const;

 private:
  std::vector<std::uint8_t> bits_;
};

/// A finite, deduplicated set of points sharing one dimension. Points are kept
/// in lexicographic order.
class PointSet {
 public:
  explicit PointSet(std::size_t dimension, std::vector<RealPoint> points = {});
  PointSet(std::size_t dimension, const std::vector<LatticePoint>& points);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<RealPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  bool contains(const RealPoint& p) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dimension_;
  std::vector<RealPoint> points_;
};

struct ChainResult {
  std::size_t length = 0;
  std::vector<RealPoint> witness;  // increasing under leq
};

/// Layer 1 holds the minimal elements of the input, layer 2 the minimal
/// elements of what remains, and so on.
struct PeelingResult {
  std::vector<PointSet> layers;
};

bool leq(const RealPoint& x, const RealPoint& y);
bool comparable(const RealPoint& x, const RealPoint& y);

bool is_chain(const PointSet& s);
ChainResult longest_chain(const PointSet& s);
bool is_k_antichain(const PointSet& s, long k);

PointSet minimal_elements(const PointSet& s);
PeelingResult peel(const PointSet& s);

/// All 2^n vertices of the cube, or only those of the given weight.
PointSet lattice_cube(std::size_t n);
PointSet lattice_layer(std::size_t n, std::size_t weight);

BigInt binomial(unsigned n, unsigned r);

/// Erdos's bound on the size of a k-antichain in {0,1}^n: the sum of the k
/// largest binomial coefficients C(n, floor((n-k)/2) + i), i = 1..k.
BigInt erdos_bound(long n, long k);

/// The k middle layers attaining erdos_bound. Enumerates 2^n masks, so n is
/// capped at kMaxExtremalDimension.
inline constexpr long kMaxExtremalDimension = 20;
PointSet erdos_extremal(long n, long k);

/// Largest subset of {0,1}^n whose longest chain is at most k, by exhaustive
/// search with pruning. Refuses n > kMaxBruteForceDimension.
inline constexpr long kMaxBruteForceDimension = 4;
std::uint64_t brute_force_max(long n, long k);

}  // namespace kantichain
