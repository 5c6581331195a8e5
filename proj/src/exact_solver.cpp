// Exact MaxHalfspace by recursive contact-hyperplane enumeration.
//
// Points are scaled to a common integer grid and equal positions merged into
// one weighted point. A closed halfspace either contains everything, nothing,
// or can be moved until its boundary H is spanned by d input points; the
// points on H are then split by a halfspace inside H, found recursively.
// Geometry runs in the narrowest integer type that cannot overflow for the
// instance's coordinate bound.

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hsdisc/solvers.hpp"

namespace hsdisc {

namespace {

using i128 = __int128;

template <class T>
T iabs(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <class T>
T igcd(T a, T b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    T t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExactInt igcd(const ExactInt& a, const ExactInt& b) {
  ExactInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

template <class T>
T exact_div(const T& a, const T& b) {
  return a / b;
}

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ExactInt to_mpz(std::int64_t x) { return ExactInt(static_cast<long>(x)); }

ExactInt to_mpz(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(x)
                            : static_cast<unsigned __int128>(x);
  ExactInt r(static_cast<unsigned long>(u >> 64));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
  r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  return neg ? ExactInt(-r) : r;
}

const ExactInt& to_mpz(const ExactInt& x) { return x; }

template <class T>
T from_mpz(const ExactInt& x);

template <>
std::int64_t from_mpz<std::int64_t>(const ExactInt& x) {
  return static_cast<std::int64_t>(x.get_si());
}

template <>
i128 from_mpz<i128>(const ExactInt& x) {
  ExactInt a = abs(x);
  ExactInt hi;
  mpz_tdiv_q_2exp(hi.get_mpz_t(), a.get_mpz_t(), 64);
  ExactInt lo;
  mpz_tdiv_r_2exp(lo.get_mpz_t(), a.get_mpz_t(), 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  const i128 v = static_cast<i128>(u);
  return x < 0 ? -v : v;
}

template <>
ExactInt from_mpz<ExactInt>(const ExactInt& x) {
  return x;
}

template <class T>
struct Cloud {
  std::size_t dim = 0;
  std::size_t size = 0;
  std::vector<T> coords;  // row-major, size x dim
  std::vector<std::int64_t> weights;

  const T* point(std::size_t i) const { return coords.data() + i * dim; }
};

struct Plan;
using PlanPtr = std::shared_ptr<const Plan>;

// One node of a solution: a contact hyperplane (w, xi) with orientation sign
// and the plan for the points on it, or one of the two trivial answers.
struct Plan {
  enum class Kind { kAll, kEmpty, kHyper };
  Kind kind = Kind::kAll;
  std::vector<ExactInt> w;
  ExactInt xi;
  int sign = 1;
  PlanPtr sub;
};

const PlanPtr& all_plan() {
  static const PlanPtr p = std::make_shared<Plan>(Plan{Plan::Kind::kAll, {}, 0, 1, nullptr});
  return p;
}

const PlanPtr& empty_plan() {
  static const PlanPtr p = std::make_shared<Plan>(Plan{Plan::Kind::kEmpty, {}, 0, 1, nullptr});
  return p;
}

constexpr std::int64_t kNoValue = std::numeric_limits<std::int64_t>::min();

struct Best {
  std::int64_t value = kNoValue;
  PlanPtr plan;
};

// Best total weight inside (plus) and best negated total weight inside
// (minus, the swapped coloring).
struct Outcome {
  Best plus;
  Best minus;
};

void offer(Best& best, std::int64_t value, const PlanPtr& plan) {
  if (value > best.value) {
    best.value = value;
    best.plan = plan;
  }
}

struct Work {
  QueryCounter qc;
  std::uint64_t candidates = 0;
};

// Rank of the differences p_i - p_0 and the pivot columns of a fraction-free
// echelon form. Projection onto the pivot coordinates is injective on the
// affine hull.
template <class T>
std::vector<std::size_t> hull_pivots(const Cloud<T>& c) {
  std::vector<std::size_t> pivots;
  if (c.size < 2) return pivots;
  const std::size_t rows = c.size - 1;
  const std::size_t cols = c.dim;
  std::vector<T> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) a[i * cols + k] = c.point(i + 1)[k] - c.point(0)[k];
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p * cols + col] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[r * cols + k], a[p * cols + k]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = col + 1; k < cols; ++k) {
        T t = a[i * cols + k] * a[r * cols + col] - a[i * cols + col] * a[r * cols + k];
        a[i * cols + k] = exact_div(t, prev);
      }
      a[i * cols + col] = 0;
    }
    prev = a[r * cols + col];
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

template <class T>
Cloud<T> project(const Cloud<T>& c, const std::vector<std::size_t>& keep) {
  Cloud<T> out;
  out.dim = keep.size();
  out.size = c.size;
  out.weights = c.weights;
  out.coords.reserve(c.size * keep.size());
  for (std::size_t i = 0; i < c.size; ++i)
    for (auto k : keep) out.coords.push_back(c.point(i)[k]);
  return out;
}

template <class T>
T evaluate(const T* w, const T& xi, const T* p, std::size_t dim) {
  T s = -xi;
  for (std::size_t k = 0; k < dim; ++k) s += w[k] * p[k];
  return s;
}

// Points of c lying on (w, xi), with coordinate `drop` removed.
template <class T>
Cloud<T> on_boundary(const Cloud<T>& c, const T* w, const T& xi, std::size_t drop) {
  Cloud<T> out;
  out.dim = c.dim - 1;
  for (std::size_t i = 0; i < c.size; ++i) {
    const T* p = c.point(i);
    if (evaluate(w, xi, p, c.dim) != 0) continue;
    for (std::size_t k = 0; k < c.dim; ++k)
      if (k != drop) out.coords.push_back(p[k]);
    out.weights.push_back(c.weights[i]);
    ++out.size;
  }
  return out;
}

template <class T>
T bareiss_det(std::vector<T> a, std::size_t n) {
  if (n == 0) return T(1);
  T prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        a[i * n + j] = exact_div(t, prev);
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  T r = a[(n - 1) * n + (n - 1)];
  return negate ? T(-r) : r;
}

// Normal (w, xi) of the hyperplane through the given d points, reduced by
// gcd with the first nonzero w positive. Returns false if they do not span.
template <class T>
bool contact_hyperplane(const Cloud<T>& c, const std::vector<std::size_t>& idx, T* out) {
  const std::size_t d = c.dim;
  T* w = out;
  const T* p0 = c.point(idx[0]);
  if (d == 1) {
    w[0] = 1;
  } else if (d == 2) {
    const T* p1 = c.point(idx[1]);
    w[0] = p1[1] - p0[1];
    w[1] = p0[0] - p1[0];
  } else if (d == 3) {
    const T* p1 = c.point(idx[1]);
    const T* p2 = c.point(idx[2]);
    const T u0 = p1[0] - p0[0], u1 = p1[1] - p0[1], u2 = p1[2] - p0[2];
    const T v0 = p2[0] - p0[0], v1 = p2[1] - p0[1], v2 = p2[2] - p0[2];
    w[0] = u1 * v2 - u2 * v1;
    w[1] = u2 * v0 - u0 * v2;
    w[2] = u0 * v1 - u1 * v0;
  } else {
    std::vector<T> diff((d - 1) * d);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) diff[(i - 1) * d + k] = c.point(idx[i])[k] - p0[k];
    std::vector<T> minor((d - 1) * (d - 1));
    for (std::size_t col = 0; col < d; ++col) {
      for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t k = 0, mk = 0; k < d; ++k)
          if (k != col) minor[i * (d - 1) + mk++] = diff[i * d + k];
      T m = bareiss_det(minor, d - 1);
      w[col] = (col % 2 == 0) ? m : T(-m);
    }
  }
  std::size_t first = 0;
  while (first < d && w[first] == 0) ++first;
  if (first == d) return false;
  T xi = 0;
  for (std::size_t k = 0; k < d; ++k) xi += w[k] * p0[k];
  T g = iabs(xi);
  for (std::size_t k = 0; k < d; ++k) g = igcd(g, w[k]);
  const bool flip = w[first] < 0;
  for (std::size_t k = 0; k < d; ++k) {
    w[k] = exact_div(w[k], g);
    if (flip) w[k] = -w[k];
  }
  xi = exact_div(xi, g);
  if (flip) xi = -xi;
  out[d] = xi;
  return true;
}

template <class T>
Outcome search(const Cloud<T>& c, Work& work, unsigned threads);

template <class T>
PlanPtr hyper_plan(const T* key, std::size_t d, int sign, const PlanPtr& sub) {
  auto p = std::make_shared<Plan>();
  p->kind = Plan::Kind::kHyper;
  p->w.reserve(d);
  for (std::size_t k = 0; k < d; ++k) p->w.push_back(to_mpz(key[k]));
  p->xi = to_mpz(key[d]);
  p->sign = sign;
  p->sub = sub;
  return p;
}

// Evaluates hyperplanes order[lo, hi) of the sorted key table.
template <class T>
Outcome scan(const Cloud<T>& c, const std::vector<T>& keys, const std::vector<std::size_t>& order, std::size_t lo,
             std::size_t hi, Work& work) {
  const std::size_t d = c.dim;
  const std::size_t stride = d + 1;
  Outcome out;
  for (std::size_t t = lo; t < hi; ++t) {
    const T* key = keys.data() + order[t] * stride;
    const T& xi = key[d];
    std::int64_t pos = 0, neg = 0;
    bool any_on = false;
    for (std::size_t i = 0; i < c.size; ++i) {
      const T s = evaluate(key, xi, c.point(i), d);
      if (s > 0)
        pos += c.weights[i];
      else if (s < 0)
        neg += c.weights[i];
      else
        any_on = true;
    }
    work.qc.add(c.size);
    ++work.candidates;
    if (!any_on) continue;
    std::size_t drop = 0;
    while (key[drop] == 0) ++drop;
    const Outcome sub = search(on_boundary(c, key, xi, drop), work, 1);
    // Orientation +: {<w,x> >= xi}; orientation -: {<w,x> <= xi}.
    if (pos + sub.plus.value > out.plus.value) offer(out.plus, pos + sub.plus.value, hyper_plan(key, d, 1, sub.plus.plan));
    if (-pos + sub.minus.value > out.minus.value)
      offer(out.minus, -pos + sub.minus.value, hyper_plan(key, d, 1, sub.minus.plan));
    if (neg + sub.plus.value > out.plus.value) offer(out.plus, neg + sub.plus.value, hyper_plan(key, d, -1, sub.plus.plan));
    if (-neg + sub.minus.value > out.minus.value)
      offer(out.minus, -neg + sub.minus.value, hyper_plan(key, d, -1, sub.minus.plan));
  }
  return out;
}

template <class T>
Outcome search(const Cloud<T>& c, Work& work, unsigned threads) {
  std::int64_t total = 0;
  for (auto w : c.weights) total += w;
  Outcome out;
  offer(out.plus, total, all_plan());
  offer(out.plus, 0, empty_plan());
  offer(out.minus, -total, all_plan());
  offer(out.minus, 0, empty_plan());
  if (c.dim == 0 || c.size < 2) return out;

  const auto pivots = hull_pivots(c);
  if (pivots.empty()) return out;
  if (pivots.size() < c.dim) return search(project(c, pivots), work, threads);

  const std::size_t d = c.dim;
  const std::size_t stride = d + 1;
  std::vector<T> keys;
  std::vector<T> key(stride);
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (contact_hyperplane(c, idx, key.data())) keys.insert(keys.end(), key.begin(), key.end());
    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == c.size - d + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }

  const std::size_t count = keys.size() / stride;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const T* ka = keys.data() + a * stride;
    const T* kb = keys.data() + b * stride;
    return std::lexicographical_compare(ka, ka + stride, kb, kb + stride);
  };
  auto same = [&](std::size_t a, std::size_t b) {
    return std::equal(keys.data() + a * stride, keys.data() + (a + 1) * stride, keys.data() + b * stride);
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), same), order.end());

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, order.size() / 64));
  std::vector<Outcome> parts(workers);
  if (workers == 1) {
    parts[0] = scan(c, keys, order, 0, order.size(), work);
  } else {
    std::vector<Work> local(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (order.size() + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t lo = std::min(order.size(), t * chunk);
      const std::size_t hi = std::min(order.size(), lo + chunk);
      pool.emplace_back([&, t, lo, hi] { parts[t] = scan(c, keys, order, lo, hi, local[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& l : local) {
      work.qc.merge(l.qc);
      work.candidates += l.candidates;
    }
  }
  // Merging in block order with strict improvement keeps the sequential
  // tie-break.
  for (const auto& p : parts) {
    if (p.plus.plan) offer(out.plus, p.plus.value, p.plus.plan);
    if (p.minus.plan) offer(out.minus, p.minus.value, p.minus.plan);
  }
  return out;
}

struct IntHalfspace {
  std::vector<ExactInt> w;
  ExactInt xi;
};

template <class T>
ExactInt evaluate_mpz(const std::vector<ExactInt>& w, const ExactInt& xi, const T* p) {
  ExactInt s = -xi;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * to_mpz(p[k]);
  return s;
}

template <class T>
IntHalfspace trivial_halfspace(const Cloud<T>& c, bool all) {
  IntHalfspace h;
  h.w.assign(c.dim, ExactInt(0));
  h.w[0] = 1;
  ExactInt edge = 0;
  for (std::size_t i = 0; i < c.size; ++i) {
    const ExactInt x = to_mpz(c.point(i)[0]);
    if (all ? x < edge : x > edge) edge = x;
  }
  h.xi = all ? ExactInt(edge - 1) : ExactInt(edge + 1);
  return h;
}

// Concrete integer halfspace on c whose closed membership realizes plan.
template <class T>
IntHalfspace realize(const Cloud<T>& c, const Plan& plan) {
  if (plan.kind != Plan::Kind::kHyper) return trivial_halfspace(c, plan.kind == Plan::Kind::kAll);
  const auto pivots = hull_pivots(c);
  if (pivots.size() < c.dim) {
    const IntHalfspace inner = realize(project(c, pivots), plan);
    IntHalfspace h;
    h.w.assign(c.dim, ExactInt(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) h.w[pivots[k]] = inner.w[k];
    h.xi = inner.xi;
    return h;
  }

  const ExactInt s = plan.sign;
  IntHalfspace base;
  for (const auto& x : plan.w) base.w.push_back(s * x);
  base.xi = s * plan.xi;
  const Plan& sub = *plan.sub;
  if (sub.kind == Plan::Kind::kAll) return base;
  if (sub.kind == Plan::Kind::kEmpty) {
    for (auto& x : base.w) x *= 2;
    base.xi = 2 * base.xi + 1;
    return base;
  }

  std::size_t drop = 0;
  while (plan.w[drop] == 0) ++drop;
  std::vector<T> key(c.dim + 1);
  for (std::size_t k = 0; k < c.dim; ++k) key[k] = from_mpz<T>(plan.w[k]);
  key[c.dim] = from_mpz<T>(plan.xi);
  const IntHalfspace inner = realize(on_boundary(c, key.data(), key[c.dim], drop), sub);
  std::vector<ExactInt> u;
  for (std::size_t k = 0, m = 0; k < c.dim; ++k) u.push_back(k == drop ? ExactInt(0) : inner.w[m++]);

  // Tilt by u: small enough to keep every strict side, large enough to
  // impose the inner pattern on H.
  ExactInt margin = 0;
  ExactInt spread = 0;
  for (std::size_t i = 0; i < c.size; ++i) {
    const ExactInt m = abs(evaluate_mpz(plan.w, plan.xi, c.point(i)));
    if (m != 0 && (margin == 0 || m < margin)) margin = m;
    const ExactInt t = abs(evaluate_mpz(u, inner.xi, c.point(i)));
    if (t > spread) spread = t;
  }
  if (margin == 0) margin = 1;
  const ExactInt scale = 2 * (1 + spread);
  IntHalfspace h;
  for (std::size_t k = 0; k < c.dim; ++k) h.w.push_back(scale * base.w[k] + margin * u[k]);
  h.xi = scale * base.xi + margin * inner.xi;
  return h;
}

enum class Width { k64, k128, kBig };

Width pick_width(const ExactInt& bound, std::size_t d) {
  // Every intermediate is at most twice a d x d minor of entries <= 2B+1, so
  // d^d (2B+1)^(2d) bounds its square.
  ExactInt b;
  mpz_pow_ui(b.get_mpz_t(), ExactInt(2 * bound + 1).get_mpz_t(), 2 * d);
  ExactInt dd;
  mpz_pow_ui(dd.get_mpz_t(), ExactInt(static_cast<unsigned long>(d)).get_mpz_t(), d);
  const std::size_t bits = mpz_sizeinbase(ExactInt(b * dd).get_mpz_t(), 2) + 8;
  if (bits <= 62) return Width::k64;
  if (bits <= 126) return Width::k128;
  return Width::kBig;
}

struct Grid {
  std::size_t dim = 0;
  ExactInt scale = 1;
  std::map<std::vector<ExactInt>, std::int64_t> cells;  // every position, zero weights kept
};

template <class T>
Cloud<T> to_cloud(const Grid& g) {
  Cloud<T> c;
  c.dim = g.dim;
  for (const auto& [pos, wt] : g.cells) {
    if (wt == 0) continue;
    for (const auto& x : pos) c.coords.push_back(from_mpz<T>(x));
    c.weights.push_back(wt);
    ++c.size;
  }
  return c;
}

template <class T>
SolveResult solve_grid(const Grid& g, const WeightedPoints& cloud, const ExactOptions& opts) {
  const Cloud<T> c = to_cloud<T>(g);
  Work work;
  const Outcome out = search(c, work, std::max(1u, opts.threads));
  const bool swapped = opts.abs_mode && out.minus.value > out.plus.value;
  const Best& best = swapped ? out.minus : out.plus;

  SolveResult res{Halfspace(RatVector{1}, 0), ExactInt(static_cast<long>(best.value)), work.qc.count(),
                  opts.abs_mode, swapped, {}};
  res.stats.n = cloud.points.size();
  res.stats.d = cloud.dim;
  res.stats.candidates = work.candidates;

  if (best.plan->kind != Plan::Kind::kHyper) {
    // Same trivial halfspaces as all_space / empty_space, taken over every
    // input point.
    ExactScalar edge = 0;
    const bool all = best.plan->kind == Plan::Kind::kAll;
    for (const auto& p : cloud.points)
      if (all ? p[0] < edge : p[0] > edge) edge = p[0];
    RatVector w(cloud.dim);
    w[0] = 1;
    res.halfspace = Halfspace(std::move(w), all ? ExactScalar(edge - 1) : ExactScalar(edge + 1));
    return res;
  }

  IntHalfspace h = realize(c, *best.plan);
  // Move the boundary off every grid position, weightless ones included.
  ExactInt gap = 0;
  bool touches = false;
  for (const auto& [pos, wt] : g.cells) {
    ExactInt s = -h.xi;
    for (std::size_t k = 0; k < g.dim; ++k) s += h.w[k] * pos[k];
    if (s == 0) touches = true;
    if (s < 0 && (gap == 0 || -s < gap)) gap = -s;
  }
  if (touches) {
    if (gap == 0) gap = 1;
    for (auto& x : h.w) x *= 2;
    h.xi = 2 * h.xi - gap;
  }
  RatVector w;
  for (const auto& x : h.w) w.emplace_back(x);
  ExactScalar xi(h.xi, g.scale);
  xi.canonicalize();
  res.halfspace = Halfspace(std::move(w), std::move(xi));
  return res;
}

}  // namespace

SolveResult max_weight_halfspace(const WeightedPoints& cloud, const ExactOptions& opts) {
  if (cloud.dim == 0) throw Error(ErrorCode::kDimensionMismatch, "dimension must be positive");
  if (cloud.points.size() != cloud.weights.size())
    throw Error(ErrorCode::kDimensionMismatch, "one weight per point expected");
  for (const auto& p : cloud.points)
    if (p.size() != cloud.dim) throw Error(ErrorCode::kDimensionMismatch, "point length differs from dimension");

  Grid g;
  g.dim = cloud.dim;
  for (const auto& p : cloud.points)
    for (const auto& x : p) {
      ExactInt l;
      mpz_lcm(l.get_mpz_t(), g.scale.get_mpz_t(), x.get_den_mpz_t());
      g.scale = l;
    }
  ExactInt bound = 1;
  ExactInt mass = 0;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    std::vector<ExactInt> pos;
    for (const auto& x : cloud.points[i]) {
      pos.push_back(exact_div(ExactInt(x.get_num() * g.scale), ExactInt(x.get_den())));
      if (abs(pos.back()) > bound) bound = abs(pos.back());
    }
    g.cells[pos] += cloud.weights[i];
    mass += ExactInt(static_cast<long>(cloud.weights[i] < 0 ? -cloud.weights[i] : cloud.weights[i]));
  }
  if (mpz_sizeinbase(mass.get_mpz_t(), 2) > 62) throw Error(ErrorCode::kTooLarge, "total weight overflows");

  switch (pick_width(bound, cloud.dim)) {
    case Width::k64: return solve_grid<std::int64_t>(g, cloud, opts);
    case Width::k128: return solve_grid<i128>(g, cloud, opts);
    case Width::kBig: break;
  }
  return solve_grid<ExactInt>(g, cloud, opts);
}

SolveResult max_halfspace_exact(const ColoredInstance& inst, const ExactOptions& opts) {
  inst.validate();
  WeightedPoints cloud;
  cloud.dim = inst.dim;
  for (const auto& p : inst.red) {
    cloud.points.push_back(p);
    cloud.weights.push_back(1);
  }
  for (const auto& p : inst.blue) {
    cloud.points.push_back(p);
    cloud.weights.push_back(-1);
  }
  SolveResult res = max_weight_halfspace(cloud, opts);
  const ExactInt achieved = phi(inst, res.halfspace);
  if (achieved != (res.swapped ? ExactInt(-res.value) : res.value))
    throw std::logic_error("exact solver: realized halfspace does not attain the optimum");
  return res;
}

}  // namespace hsdisc
