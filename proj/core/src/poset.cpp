#include "kantichain/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "kantichain/errors.hpp"

namespace kantichain {

RealPoint::RealPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("point must have at least one coordinate");
  for (double c : coords_) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw InputError("coordinate " + std::to_string(c) + " outside [0,1]");
    }
  }
}

RealPoint::RealPoint(std::initializer_list<double> coords)
    : RealPoint(std::vector<double>(coords)) {}

double RealPoint::coordinate_sum() const {
  double s = 0.0;
  for (double c : coords_) s += c;
  return s;
}

LatticePoint::LatticePoint(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InputError("lattice point must have at least one coordinate");
  for (auto b : bits_) {
    if (b > 1) throw InputError("lattice coordinates must be 0 or 1");
  }
}

LatticePoint LatticePoint::from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1u;
  return LatticePoint(std::move(bits));
}

std::size_t LatticePoint::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

RealPoint LatticePoint::to_real() const {
  return RealPoint(std::vector<double>(bits_.begin(), bits_.end()));
}

PointSet::PointSet(std::size_t dimension, std::vector<RealPoint> points)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension_ == 0) throw InputError("point set dimension must be at least 1");
  for (const auto& p : points_) {
    if (p.dimension() != dimension_) {
      throw InputError("point of dimension " + std::to_string(p.dimension()) +
                       " in a set of dimension " + std::to_string(dimension_));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet::PointSet(std::size_t dimension, const std::vector<LatticePoint>& points)
    : PointSet(dimension, [&] {
        std::vector<RealPoint> real;
        real.reserve(points.size());
        for (const auto& p : points) real.push_back(p.to_real());
        return real;
      }()) {}

bool PointSet::contains(const RealPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool leq(const RealPoint& x, const RealPoint& y) {
  if (x.dimension() != y.dimension()) {
    throw InputError("cannot compare points of dimension " + std::to_string(x.dimension()) +
                     " and " + std::to_string(y.dimension()));
  }
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (!(x[i] <= y[i])) return false;
  }
  return true;
}

bool comparable(const RealPoint& x, const RealPoint& y) { return leq(x, y) || leq(y, x); }

bool is_chain(const PointSet& s) {
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!comparable(pts[i], pts[j])) return false;
    }
  }
  return true;
}

namespace {

// Indices sorted by (coordinate sum, lexicographic). Any x < y under dominance
// has sum(x) <= sum(y) and x lexicographically before y, so this is a linear
// extension of the order.
std::vector<std::size_t> linear_extension(const PointSet& s) {
  const auto& pts = s.points();
  std::vector<double> sums(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) sums[i] = pts[i].coordinate_sum();
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    return pts[a] < pts[b];
  });
  return order;
}

}  // namespace

ChainResult longest_chain(const PointSet& s) {
  ChainResult result;
  if (s.empty()) return result;
  const auto& pts = s.points();
  const auto order = linear_extension(s);
  const std::size_t m = order.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(m, 1), pred(m, kNone);
  std::size_t top = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& xi = pts[order[i]];
    for (std::size_t j = 0; j < i; ++j) {
      if (best[j] + 1 > best[i] && leq(pts[order[j]], xi)) {
        best[i] = best[j] + 1;
        pred[i] = j;
      }
    }
    if (best[i] > best[top]) top = i;
  }
  result.length = best[top];
  for (std::size_t i = top; i != kNone; i = pred[i]) result.witness.push_back(pts[order[i]]);
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

bool is_k_antichain(const PointSet& s, long k) {
  if (k < 1) throw InputError("k must be a positive integer");
  return longest_chain(s).length <= static_cast<std::size_t>(k);
}

PointSet minimal_elements(const PointSet& s) {
  const auto& pts = s.points();
  std::vector<RealPoint> minimal;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      dominated = j != i && leq(pts[j], pts[i]);
    }
    if (!dominated) minimal.push_back(pts[i]);
  }
  return PointSet(s.dimension(), std::move(minimal));
}

PeelingResult peel(const PointSet& s) {
  PeelingResult result;
  PointSet rest = s;
  while (!rest.empty()) {
    PointSet layer = minimal_elements(rest);
    std::vector<RealPoint> remaining;
    remaining.reserve(rest.size() - layer.size());
    for (const auto& p : rest) {
      if (!layer.contains(p)) remaining.push_back(p);
    }
    result.layers.push_back(std::move(layer));
    rest = PointSet(s.dimension(), std::move(remaining));
  }
  return result;
}

PointSet lattice_cube(std::size_t n) {
  if (n == 0 || n > 24) throw InputError("cube dimension must be in [1,24]");
  std::vector<RealPoint> pts;
  pts.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    pts.push_back(LatticePoint::from_mask(n, mask).to_real());
  }
  return PointSet(n, std::move(pts));
}

PointSet lattice_layer(std::size_t n, std::size_t weight) {
  if (n == 0 || n > 24) throw InputError("cube dimension must be in [1,24]");
  std::vector<RealPoint> pts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) == weight) {
      pts.push_back(LatticePoint::from_mask(n, mask).to_real());
    }
  }
  return PointSet(n, std::move(pts));
}

BigInt binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt c = 1;
  for (unsigned i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;  // exact: c is C(n-r+i, i) after this step
  }
  return c;
}

namespace {

void check_erdos_args(long n, long k) {
  if (n < 1) throw InputError("n must be a positive integer");
  if (k < 1 || k > n) {
    throw InputError("k must lie in [1, n]; got k=" + std::to_string(k) +
                     ", n=" + std::to_string(n));
  }
}

}  // namespace

BigInt erdos_bound(long n, long k) {
  check_erdos_args(n, k);
  const long base = (n - k) / 2;
  BigInt sum = 0;
  for (long i = 1; i <= k; ++i) {
    sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(base + i));
  }
  return sum;
}

PointSet erdos_extremal(long n, long k) {
  check_erdos_args(n, k);
  if (n > kMaxExtremalDimension) {
    throw InputError("erdos_extremal enumerates 2^n points; n is capped at " +
                     std::to_string(kMaxExtremalDimension));
  }
  const long lo = (n - k) / 2 + 1;
  const long hi = (n - k) / 2 + k;
  std::vector<RealPoint> pts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const long w = std::popcount(mask);
    if (w >= lo && w <= hi) {
      pts.push_back(LatticePoint::from_mask(static_cast<std::size_t>(n), mask).to_real());
    }
  }
  return PointSet(static_cast<std::size_t>(n), std::move(pts));
}

namespace {

// Depth-first include/exclude over the cube vertices in increasing mask order.
// Every strict subset of a mask is numerically smaller, so chain heights of
// included vertices are final when a vertex is decided.
class BruteForceSearch {
 public:
  BruteForceSearch(unsigned n, unsigned k) : count_(1u << n), k_(k) {}

  std::uint64_t run() {
    descend(0, 0);
    return best_;
  }

 private:
  void descend(unsigned v, unsigned chosen) {
    if (chosen + (count_ - v) <= best_) return;
    if (v == count_) {
      best_ = chosen;
      return;
    }
    unsigned h = 1;
    for (unsigned u = 0; u < v; ++u) {
      if (included_[u] && (u & v) == u) h = std::max(h, height_[u] + 1);
    }
    if (h <= k_) {
      included_[v] = true;
      height_[v] = h;
      descend(v + 1, chosen + 1);
      included_[v] = false;
    }
    descend(v + 1, chosen);
  }

  unsigned count_;
  unsigned k_;
  unsigned best_ = 0;
  std::array<bool, 16> included_{};
  std::array<unsigned, 16> height_{};
};

}  // namespace

std::uint64_t brute_force_max(long n, long k) {
  if (n < 1) throw InputError("n must be a positive integer");
  if (n > kMaxBruteForceDimension) {
    throw InputError("brute_force_max refuses n > " + std::to_string(kMaxBruteForceDimension) +
                     " (2^(2^n) subsets)");
  }
  if (k < 1) throw InputError("k must be a positive integer");
  const auto kk = static_cast<unsigned>(std::min<long>(k, n + 1));
  return BruteForceSearch(static_cast<unsigned>(n), kk).run();
}

}  // namespace kantichain
