#ifndef GRAPHINV_DESCRIPTOR_HPP
#define GRAPHINV_DESCRIPTOR_HPP

#include <vector>

#include "graphinv/graph.hpp"
#include "graphinv/nm.hpp"

namespace graphinv {

// Six distinct positive irrationals; w3 is the additive offset inside the
// second and third numerators.
struct WeightSet {
  double w1, w2, w3, w4, w5, w6;

  // sqrt 7, 11, 3, 13, 17, 19.
  static WeightSet defaults();
};

// Square roots of the first `count` primes: <sqrt 2, sqrt 3, sqrt 5, ...>.
// Indexed 1-based to match the weighting positions.
class IrrSequence {
 public:
  explicit IrrSequence(int count);

  // Long enough for every per-vertex list (<= n-1 values) and for the level
  // weights (k <= log2 n).
  static IrrSequence for_order(int n);

  double operator()(int j) const;  // j in 1..size()
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> values_;
};

struct DescriptorSequence {
  std::vector<double> values;                  // R_G(1..n)
  std::vector<std::vector<double>> per_level;  // per_level[l-1][i] = E_l(i) / Irr(l)
  int k = 0;
  double epsilon = 1e-9;
};

constexpr double kDefaultEps = 1e-9;

// One value per x in the neighbour set of i, sorted ascending.
std::vector<double> measure_m1(const NMMatrix& m, int i, const WeightSet& w);

// One value per y in the X set of i, sorted ascending.
std::vector<double> measure_m2(const NMMatrix& m, int i, const WeightSet& w);

// E(i) = sum_j M1_sorted[j]/Irr(j) + sum_j M2_sorted[j]/Irr(j).
std::vector<double> structural_descriptor(const NMMatrix& m, const IrrSequence& irr, const WeightSet& w);

DescriptorSequence descriptor_sequence(const Graph& g, const WeightSet& w = WeightSet::defaults(),
                                       double eps = kDefaultEps);

// True iff the ascending sorts agree entrywise within eps (false for
// different lengths).
bool sorted_equal(const DescriptorSequence& a, const DescriptorSequence& b, double eps);

// Sort-and-sweep grouping: indices whose values fall in the same eps-chain.
// Each group is sorted; groups are ordered by their smallest value.
std::vector<std::vector<int>> group_indices_by_value(const std::vector<double>& values, double eps);

}  // namespace graphinv

#endif
