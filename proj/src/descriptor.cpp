#include "graphinv/descriptor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace graphinv {

WeightSet WeightSet::defaults() {
  return WeightSet{std::sqrt(7.0), std::sqrt(11.0), std::sqrt(3.0),
                   std::sqrt(13.0), std::sqrt(17.0), std::sqrt(19.0)};
}

namespace {

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  primes.reserve(count);
  for (int candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

}  // namespace

IrrSequence::IrrSequence(int count) {
  values_.reserve(count);
  for (int p : first_primes(count)) values_.push_back(std::sqrt(static_cast<double>(p)));
}

IrrSequence IrrSequence::for_order(int n) { return IrrSequence(std::max(n, 8)); }

double IrrSequence::operator()(int j) const {
  if (j < 1 || j > size()) throw std::invalid_argument("IrrSequence: index out of range");
  return values_[j - 1];
}

std::vector<double> measure_m1(const NMMatrix& m, int i, const WeightSet& w) {
  std::vector<double> out;
  for (int x : neighbour_set(m, i)) {
    const int eta_ix = m.eta(i, x);
    const int same_level = std::abs(m.eta(x, x)) - eta_ix;
    assert(eta_ix >= 1 && eta_ix <= m.n - 1);
    assert(same_level >= 0 && same_level <= m.n - 2);
    out.push_back(eta_ix / w.w1 + (same_level + w.w3) / w.w2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> measure_m2(const NMMatrix& m, int i, const WeightSet& w) {
  const std::vector<int> xs = x_set(m, i);
  std::vector<double> out;
  out.reserve(xs.size());
  for (int y : xs) {
    // p_y = |N(y) intersect X(i)| = positive entries in column y of the X-block.
    int p = 0;
    for (int u : xs)
      if (m.eta(u, y) > 0) ++p;
    const int eta_iy = std::abs(m.eta(i, y));
    const int residual = std::abs(m.eta(y, y)) - p - eta_iy;
    assert(eta_iy >= 1 && eta_iy <= m.n - 2);
    assert(p >= 0 && p <= m.n - 3);
    assert(residual >= 0 && residual <= m.n - 3);
    out.push_back(eta_iy / w.w4 + (p + w.w3) / w.w5 + (residual + w.w3) / w.w6);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> structural_descriptor(const NMMatrix& m, const IrrSequence& irr, const WeightSet& w) {
  std::vector<double> e(m.n, 0.0);
  for (int i = 0; i < m.n; ++i) {
    const std::vector<double> m1 = measure_m1(m, i, w);
    const std::vector<double> m2 = measure_m2(m, i, w);
    if (static_cast<int>(std::max(m1.size(), m2.size())) > irr.size())
      throw std::invalid_argument("structural_descriptor: Irr sequence too short");
    double s = 0.0;
    for (std::size_t j = 0; j < m1.size(); ++j) s += m1[j] / irr(static_cast<int>(j) + 1);
    for (std::size_t j = 0; j < m2.size(); ++j) s += m2[j] / irr(static_cast<int>(j) + 1);
    e[i] = s;
  }
  return e;
}

DescriptorSequence descriptor_sequence(const Graph& g, const WeightSet& w, double eps) {
  const NMSequence seq = power_sequence(g);
  const IrrSequence irr = IrrSequence::for_order(g.vertex_count());
  DescriptorSequence d;
  d.k = seq.k;
  d.epsilon = eps;
  d.values.assign(g.vertex_count(), 0.0);
  for (const NMMatrix& m : seq.matrices) {
    std::vector<double> level = structural_descriptor(m, irr, w);
    const double scale = irr(m.level);
    for (double& v : level) v /= scale;
    for (int i = 0; i < g.vertex_count(); ++i) d.values[i] += level[i];
    d.per_level.push_back(std::move(level));
  }
  return d;
}

bool sorted_equal(const DescriptorSequence& a, const DescriptorSequence& b, double eps) {
  if (a.values.size() != b.values.size()) return false;
  std::vector<double> sa = a.values, sb = b.values;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (std::abs(sa[i] - sb[i]) > eps) return false;
  return true;
}

std::vector<std::vector<int>> group_indices_by_value(const std::vector<double>& values, double eps) {
  std::vector<int> order(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return values[a] != values[b] ? values[a] < values[b] : a < b;
  });
  std::vector<std::vector<int>> groups;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos == 0 || values[order[pos]] - values[order[pos - 1]] > eps) groups.emplace_back();
    groups.back().push_back(order[pos]);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

}  // namespace graphinv
