#include "hsdisc/base_problems.hpp"

#include <algorithm>
#include <numeric>

namespace hsdisc {

namespace {

void check_ksum(const KSumInstance& inst) {
  if (inst.k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (inst.values.size() < inst.k) throw Error(ErrorCode::kTooFewValues, "fewer values than k");
}

// Visits index tuples of length `len` over [0, n) in lexicographic order:
// nondecreasing (multiset) or strictly increasing (distinct). The visitor
// returns true to stop.
template <class Visit>
bool for_each_tuple(std::size_t n, std::size_t len, KSumMode mode, Visit&& visit) {
  std::vector<std::size_t> t(len);
  const std::size_t step = mode == KSumMode::kDistinct ? 1 : 0;
  for (std::size_t i = 0; i < len; ++i) t[i] = i * step;
  if (len == 0) return visit(t);
  if (t.back() >= n) return false;
  while (true) {
    if (visit(t)) return true;
    // Advance the rightmost slot that still has room.
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      const std::size_t limit = n - 1 - (len - 1 - pos) * step;
      if (t[pos] < limit) break;
      if (pos == 0) return false;
    }
    if (t[pos] >= n - 1 - (len - 1 - pos) * step) return false;
    ++t[pos];
    for (std::size_t i = pos + 1; i < len; ++i) t[i] = t[i - 1] + step;
  }
}

ExactInt tuple_sum(const KSumInstance& inst, const std::vector<std::size_t>& t) {
  ExactInt s = 0;
  for (auto i : t) s += inst.values[i];
  return s;
}

}  // namespace

std::optional<KSumWitness> ksum_bruteforce(const KSumInstance& inst, KSumMode mode) {
  check_ksum(inst);
  std::optional<KSumWitness> found;
  for_each_tuple(inst.values.size(), inst.k, mode, [&](const std::vector<std::size_t>& t) {
    if (tuple_sum(inst, t) != 0) return false;
    found = KSumWitness{t};
    return true;
  });
  return found;
}

std::optional<KSumWitness> ksum_mitm(const KSumInstance& inst, KSumMode mode) {
  check_ksum(inst);
  const std::size_t n = inst.values.size();
  const std::size_t left_len = (inst.k + 1) / 2;
  const std::size_t right_len = inst.k / 2;

  struct Half {
    ExactInt sum;
    std::vector<std::size_t> idx;
  };
  std::vector<Half> table;
  for_each_tuple(n, right_len, mode, [&](const std::vector<std::size_t>& t) {
    table.push_back({tuple_sum(inst, t), t});
    return false;
  });
  std::sort(table.begin(), table.end(), [](const Half& a, const Half& b) {
    const int c = cmp(a.sum, b.sum);
    return c != 0 ? c < 0 : a.idx < b.idx;
  });

  std::optional<KSumWitness> found;
  for_each_tuple(n, left_len, mode, [&](const std::vector<std::size_t>& left) {
    const ExactInt target = -tuple_sum(inst, left);
    auto it = std::lower_bound(table.begin(), table.end(), target,
                               [](const Half& h, const ExactInt& v) { return h.sum < v; });
    for (; it != table.end() && it->sum == target; ++it) {
      if (mode == KSumMode::kDistinct &&
          std::any_of(it->idx.begin(), it->idx.end(), [&](std::size_t i) {
            return std::find(left.begin(), left.end(), i) != left.end();
          }))
        continue;
      std::vector<std::size_t> all = left;
      all.insert(all.end(), it->idx.begin(), it->idx.end());
      std::sort(all.begin(), all.end());
      found = KSumWitness{std::move(all)};
      return true;
    }
    return false;
  });
  return found;
}

bool is_ksum_witness(const KSumInstance& inst, const KSumWitness& w, KSumMode mode) {
  if (w.indices.size() != inst.k) return false;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (w.indices[i] >= inst.values.size()) return false;
    if (i > 0 && w.indices[i] < w.indices[i - 1]) return false;
    if (mode == KSumMode::kDistinct && i > 0 && w.indices[i] == w.indices[i - 1]) return false;
  }
  return tuple_sum(inst, w.indices) == 0;
}

ExactInt PointSetInstance::bound() const {
  if (coord_bound) return *coord_bound;
  ExactInt b = 1;
  for (const auto& p : points)
    for (const auto& c : p)
      if (abs(c) > b) b = abs(c);
  return b;
}

void PointSetInstance::validate() const {
  if (dim == 0) throw Error(ErrorCode::kDimensionMismatch, "dimension must be positive");
  for (const auto& p : points)
    if (p.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "point length differs from dimension");
  if (coord_bound) {
    if (*coord_bound < 1) throw Error(ErrorCode::kOutOfRange, "coordinate bound must be positive");
    for (const auto& p : points)
      for (const auto& c : p)
        if (abs(c) > *coord_bound) throw Error(ErrorCode::kOutOfRange, "coordinate exceeds the stated bound");
  }
}

ExactInt homogeneous_det(const std::vector<std::vector<ExactInt>>& points) {
  const std::size_t m = points.size();
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (points[i].size() + 1 != m) throw Error(ErrorCode::kDimensionMismatch, "need d+1 points in Z^d");
    for (std::size_t j = 0; j + 1 < m; ++j) a(i, j) = points[i][j];
    a(i, m - 1) = 1;
  }
  return det(a);
}

std::optional<DegeneracyWitness> degeneracy_bruteforce(const PointSetInstance& inst) {
  inst.validate();
  const std::size_t len = inst.dim + 1;
  if (inst.points.size() < len) throw Error(ErrorCode::kTooFewPoints, "fewer than d+1 points");
  std::optional<DegeneracyWitness> found;
  std::vector<std::vector<ExactInt>> rows(len);
  for_each_tuple(inst.points.size(), len, KSumMode::kDistinct, [&](const std::vector<std::size_t>& t) {
    for (std::size_t i = 0; i < len; ++i) rows[i] = inst.points[t[i]];
    if (homogeneous_det(rows) != 0) return false;
    found = DegeneracyWitness{t};
    return true;
  });
  return found;
}

bool is_degeneracy_witness(const PointSetInstance& inst, const DegeneracyWitness& w) {
  if (w.indices.size() != inst.dim + 1) return false;
  std::vector<std::vector<ExactInt>> rows;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (w.indices[i] >= inst.points.size()) return false;
    if (i > 0 && w.indices[i] <= w.indices[i - 1]) return false;
    rows.push_back(inst.points[w.indices[i]]);
  }
  return homogeneous_det(rows) == 0;
}

}  // namespace hsdisc
