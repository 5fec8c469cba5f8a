#include "bkl/ncp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bkl {

const char* to_string(errc c) {
  switch (c) {
    case errc::index_out_of_range: return "index out of range";
    case errc::overlapping_blocks: return "overlapping blocks";
    case errc::crossing_blocks: return "crossing blocks";
    case errc::strand_mismatch: return "strand mismatch";
    case errc::not_a_prefix: return "not a prefix";
    case errc::exponent_overflow: return "exponent overflow";
    case errc::not_periodic: return "not periodic";
    case errc::not_in_sss: return "not in the super summit set";
    case errc::internal_inconsistency: return "internal inconsistency";
    case errc::too_large: return "instance too large";
    case errc::bad_parameters: return "bad parameters";
    case errc::syntax_error: return "syntax error";
    case errc::not_parallel: return "cycles are not parallel";
    case errc::bad_power: return "bad power";
    case errc::not_reduced: return "fraction not reduced";
  }
  return "unknown error";
}

namespace {

// Map an arbitrary integer to the strand range 1..n.
int mod1(long long x, int n) {
  long long r = x % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

void require_strands(int n) {
  if (n < 1) fail(errc::bad_parameters, "strand count must be positive");
}

void require_same_n(const SimpleElement& a, const SimpleElement& b) {
  if (a.n() != b.n())
    fail(errc::strand_mismatch,
         "operands live in B_" + std::to_string(a.n()) + " and B_" + std::to_string(b.n()));
}

struct BlockTable {
  std::vector<int> id;         // strand -> block id (0-based), id[0] unused
  std::vector<int> min, max;   // per block
  int count = 0;
};

// Orbits of the permutation, labelled in order of their minimal strand.
BlockTable blocks_of(int n, const std::vector<int>& img) {
  BlockTable t;
  t.id.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 1; i <= n; ++i) {
    if (t.id[static_cast<std::size_t>(i)] >= 0) continue;
    int b = t.count++;
    int lo = i, hi = i;
    int j = i;
    do {
      t.id[static_cast<std::size_t>(j)] = b;
      lo = std::min(lo, j);
      hi = std::max(hi, j);
      j = img[static_cast<std::size_t>(j)];
    } while (j != i);
    t.min.push_back(lo);
    t.max.push_back(hi);
  }
  return t;
}

// Classic linear scan: a partition of 1..n is non-crossing iff blocks can be
// opened and closed like balanced parentheses.
bool noncrossing(int n, const BlockTable& t) {
  std::vector<int> st;
  for (int i = 1; i <= n; ++i) {
    int b = t.id[static_cast<std::size_t>(i)];
    if (!st.empty() && st.back() == b) {
      if (i == t.max[static_cast<std::size_t>(b)]) st.pop_back();
    } else if (i == t.min[static_cast<std::size_t>(b)]) {
      st.push_back(b);
      if (i == t.max[static_cast<std::size_t>(b)]) st.pop_back();
    } else {
      return false;
    }
  }
  return true;
}

// Every orbit must be traversed increasingly: the image of a strand is the
// next larger strand of its orbit, the largest wrapping to the smallest.
bool increasing_cycles(int n, const std::vector<int>& img) {
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    // i is the minimum of its orbit (smaller members were visited first).
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = 1;
      int k = img[static_cast<std::size_t>(j)];
      if (k != i && k <= j) return false;  // must strictly increase until the wrap
      j = k;
    } while (j != i);
  }
  return true;
}

bool is_permutation(int n, const std::vector<int>& img) {
  if (static_cast<int>(img.size()) != n + 1) return false;
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int v = img[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

std::vector<int> inverse_perm(int n, const std::vector<int>& img) {
  std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])] = i;
  return inv;
}

// Apply p first, then q.
std::vector<int> compose(int n, const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    r[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
  return r;
}

std::vector<int> delta_perm(int n, long long u) {
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = mod1(i + u, n);
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// DescendingCycle

DescendingCycle::DescendingCycle(int n, std::vector<int> indices) : n_(n) {
  require_strands(n);
  if (indices.size() < 2) fail(errc::index_out_of_range, "a descending cycle needs at least two strands");
  idx_.reserve(indices.size());
  for (int raw : indices) {
    if (raw < 1 || raw > 2 * n)
      fail(errc::index_out_of_range,
           "index " + std::to_string(raw) + " out of range for B_" + std::to_string(n));
    idx_.push_back(mod1(raw, n));
  }
  // The reduced sequence must be a rotation of its decreasing arrangement.
  std::size_t top = static_cast<std::size_t>(
      std::max_element(idx_.begin(), idx_.end()) - idx_.begin());
  std::rotate(idx_.begin(), idx_.begin() + static_cast<std::ptrdiff_t>(top), idx_.end());
  for (std::size_t i = 1; i < idx_.size(); ++i) {
    if (idx_[i] >= idx_[i - 1]) {
      if (idx_[i] == idx_[i - 1])
        fail(errc::index_out_of_range, "repeated strand in descending cycle");
      fail(errc::syntax_error, "indices do not form a descending cycle");
    }
  }
}

DescendingCycle DescendingCycle::shifted(long long u) const {
  std::vector<int> out;
  out.reserve(idx_.size());
  for (int i : idx_) out.push_back(mod1(i + u, n_));
  std::sort(out.begin(), out.end(), std::greater<int>());
  DescendingCycle c(n_, out);
  return c;
}

bool is_parallel(const DescendingCycle& a, const DescendingCycle& b) {
  if (a.n() != b.n()) fail(errc::strand_mismatch, "cycles live in different braid groups");
  const int n = a.n();
  std::vector<char> in_a(static_cast<std::size_t>(n) + 1, 0);
  for (int i : a.indices()) in_a[static_cast<std::size_t>(i)] = 1;
  for (int j : b.indices())
    if (in_a[static_cast<std::size_t>(j)]) return false;
  // All of b must sit strictly inside one circular gap between consecutive
  // points of a; then the hulls are disjoint.
  std::vector<int> pa = a.indices();
  std::sort(pa.begin(), pa.end());
  auto gap_of = [&](int x) {
    // Index of the a-point that opens the gap containing x.
    for (std::size_t i = 0; i < pa.size(); ++i) {
      int lo = pa[i];
      int hi = pa[(i + 1) % pa.size()];
      if (lo < hi ? (x > lo && x < hi) : (x > lo || x < hi)) return static_cast<int>(i);
    }
    return -1;  // unreachable for disjoint sets
  };
  int g = gap_of(b.indices()[0]);
  for (int j : b.indices())
    if (gap_of(j) != g) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SimpleElement

SimpleElement SimpleElement::identity(int n) {
  require_strands(n);
  SimpleElement e;
  e.n_ = n;
  e.img_.resize(static_cast<std::size_t>(n) + 1);
  std::iota(e.img_.begin(), e.img_.end(), 0);
  return e;
}

SimpleElement SimpleElement::delta(int n) {
  require_strands(n);
  SimpleElement d;
  d.n_ = n;
  d.img_ = delta_perm(n, 1);
  return d;
}

SimpleElement SimpleElement::band_generator(int n, int t, int s) {
  return from_cycles(n, {{t, s}});
}

SimpleElement SimpleElement::from_cycle(const DescendingCycle& c) {
  return from_cycles(c.n(), {c.indices()});
}

SimpleElement SimpleElement::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  require_strands(n);
  SimpleElement a = identity(n);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& raw : cycles) {
    DescendingCycle c(n, raw);
    const auto& idx = c.indices();
    for (int i : idx) {
      if (used[static_cast<std::size_t>(i)])
        fail(errc::overlapping_blocks, "strand " + std::to_string(i) + " appears in two blocks");
      used[static_cast<std::size_t>(i)] = 1;
    }
    // Strands of a block map to the next larger member, the top wraps down.
    for (std::size_t j = 0; j + 1 < idx.size(); ++j)
      a.img_[static_cast<std::size_t>(idx[j + 1])] = idx[j];
    a.img_[static_cast<std::size_t>(idx.front())] = idx.back();
  }
  BlockTable t = blocks_of(n, a.img_);
  if (!noncrossing(n, t)) fail(errc::crossing_blocks, "convex hulls of blocks intersect");
  return a;
}

SimpleElement SimpleElement::from_permutation(int n, std::vector<int> image) {
  require_strands(n);
  if (!is_permutation(n, image))
    fail(errc::internal_inconsistency, "image table is not a permutation of 1..n");
  SimpleElement a;
  a.n_ = n;
  a.img_ = std::move(image);
  a.img_[0] = 0;
  if (!increasing_cycles(n, a.img_))
    fail(errc::internal_inconsistency, "permutation does not traverse blocks increasingly");
  BlockTable t = blocks_of(n, a.img_);
  if (!noncrossing(n, t))
    fail(errc::internal_inconsistency, "permutation blocks cross");
  return a;
}

bool SimpleElement::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool SimpleElement::is_delta() const {
  for (int i = 1; i <= n_; ++i)
    if (img_[static_cast<std::size_t>(i)] != mod1(i + 1, n_)) return false;
  return n_ >= 1;
}

int SimpleElement::atom_length() const {
  BlockTable t = blocks_of(n_, img_);
  return n_ - t.count;
}

std::vector<DescendingCycle> SimpleElement::cycles() const {
  std::vector<DescendingCycle> out;
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 1; i <= n_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> orbit;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = 1;
      orbit.push_back(j);
      j = img_[static_cast<std::size_t>(j)];
    } while (j != i);
    if (orbit.size() < 2) continue;
    std::sort(orbit.begin(), orbit.end(), std::greater<int>());
    out.emplace_back(n_, orbit);
  }
  std::sort(out.begin(), out.end(), [](const DescendingCycle& a, const DescendingCycle& b) {
    return a.max_index() > b.max_index();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Divisibility and lattice operations

bool left_divides(const SimpleElement& a, const SimpleElement& b) {
  require_same_n(a, b);
  const int n = a.n();
  BlockTable tb = blocks_of(n, b.permutation());
  // a refines b iff every strand stays in its b-block under a.
  for (int i = 1; i <= n; ++i)
    if (tb.id[static_cast<std::size_t>(i)] !=
        tb.id[static_cast<std::size_t>(a.image_of(i))])
      return false;
  return true;
}

SimpleElement meet_left(const SimpleElement& a, const SimpleElement& b) {
  require_same_n(a, b);
  const int n = a.n();
  BlockTable ta = blocks_of(n, a.permutation());
  BlockTable tb = blocks_of(n, b.permutation());
  // Common refinement: group strands by their (a-block, b-block) pair.
  std::vector<std::vector<int>> first(static_cast<std::size_t>(ta.count));
  std::vector<int> group(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<int>> members;
  for (int i = 1; i <= n; ++i) {
    int ia = ta.id[static_cast<std::size_t>(i)];
    int ib = tb.id[static_cast<std::size_t>(i)];
    int g = -1;
    for (std::size_t k = 0; k < first[static_cast<std::size_t>(ia)].size(); ++k) {
      int cand = first[static_cast<std::size_t>(ia)][k];
      if (tb.id[static_cast<std::size_t>(members[static_cast<std::size_t>(cand)][0])] == ib) {
        g = cand;
        break;
      }
    }
    if (g < 0) {
      g = static_cast<int>(members.size());
      members.emplace_back();
      first[static_cast<std::size_t>(ia)].push_back(g);
    }
    group[static_cast<std::size_t>(i)] = g;
    members[static_cast<std::size_t>(g)].push_back(i);
  }
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& m : members) {
    for (std::size_t j = 0; j + 1 < m.size(); ++j) img[static_cast<std::size_t>(m[j])] = m[j + 1];
    img[static_cast<std::size_t>(m.back())] = m.front();
  }
  return SimpleElement::from_permutation(n, std::move(img));
}

SimpleElement join_left(const SimpleElement& a, const SimpleElement& b) {
  require_same_n(a, b);
  const int n = a.n();
  // Union of the two partitions, then the non-crossing closure: whenever the
  // parenthesis scan fails, the two blocks it catches must cross, so merge
  // them and rescan. Each merge removes a block, hence O(n^2) overall.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (int i = 1; i <= n; ++i) {
    unite(i, a.image_of(i));
    unite(i, b.image_of(i));
  }
  std::vector<int> root_min(static_cast<std::size_t>(n) + 1, 0), root_max(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    for (int i = 1; i <= n; ++i) root_min[static_cast<std::size_t>(i)] = root_max[static_cast<std::size_t>(i)] = 0;
    for (int i = 1; i <= n; ++i) {
      int r = find(i);
      if (root_min[static_cast<std::size_t>(r)] == 0) root_min[static_cast<std::size_t>(r)] = i;
      root_max[static_cast<std::size_t>(r)] = i;
    }
    bool merged = false;
    std::vector<int> st;
    for (int i = 1; i <= n && !merged; ++i) {
      int r = find(i);
      if (!st.empty() && st.back() == r) {
        if (i == root_max[static_cast<std::size_t>(r)]) st.pop_back();
      } else if (i == root_min[static_cast<std::size_t>(r)]) {
        st.push_back(r);
        if (i == root_max[static_cast<std::size_t>(r)]) st.pop_back();
      } else {
        unite(r, st.back());
        merged = true;
      }
    }
    if (!merged) break;
  }
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) members[static_cast<std::size_t>(find(i))].push_back(i);
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& m : members) {
    if (m.empty()) continue;
    for (std::size_t j = 0; j + 1 < m.size(); ++j) img[static_cast<std::size_t>(m[j])] = m[j + 1];
    img[static_cast<std::size_t>(m.back())] = m.front();
  }
  return SimpleElement::from_permutation(n, std::move(img));
}

SimpleElement meet_right(const SimpleElement& a, const SimpleElement& b) {
  return left_complement(join_left(right_complement(a), right_complement(b)));
}

SimpleElement join_right(const SimpleElement& a, const SimpleElement& b) {
  return right_complement(meet_left(left_complement(a), left_complement(b)));
}

SimpleElement right_complement(const SimpleElement& a) {
  const int n = a.n();
  return SimpleElement::from_permutation(
      n, compose(n, inverse_perm(n, a.permutation()), delta_perm(n, 1)));
}

SimpleElement left_complement(const SimpleElement& a) {
  const int n = a.n();
  return SimpleElement::from_permutation(
      n, compose(n, delta_perm(n, 1), inverse_perm(n, a.permutation())));
}

SimpleElement complement_delta(const SimpleElement& a, Side side) {
  SimpleElement c = side == Side::right ? right_complement(a) : left_complement(a);
  auto p = side == Side::right ? try_mul(a, c) : try_mul(c, a);
  if (!p || !p->is_delta()) fail(errc::internal_inconsistency, "complement does not multiply to delta");
  return c;
}

SimpleElement complement_in(const SimpleElement& a, const SimpleElement& b, Side side) {
  require_same_n(a, b);
  if (side == Side::right) return quotient_left(a, join_left(a, b));
  return quotient_right(join_right(a, b), a);
}

SimpleElement tau_power(const SimpleElement& a, long long u) {
  const int n = a.n();
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    img[static_cast<std::size_t>(mod1(i + u, n))] = mod1(a.image_of(i) + u, n);
  return SimpleElement::from_permutation(n, std::move(img));
}

std::optional<SimpleElement> try_mul(const SimpleElement& a, const SimpleElement& b) {
  require_same_n(a, b);
  const int n = a.n();
  std::vector<int> img = compose(n, a.permutation(), b.permutation());
  if (!increasing_cycles(n, img)) return std::nullopt;
  BlockTable t = blocks_of(n, img);
  if (!noncrossing(n, t)) return std::nullopt;
  // The candidate is simple; a b equals it iff a is a prefix of it.
  for (int i = 1; i <= n; ++i)
    if (t.id[static_cast<std::size_t>(i)] != t.id[static_cast<std::size_t>(a.image_of(i))])
      return std::nullopt;
  return SimpleElement::from_permutation(n, std::move(img));
}

SimpleElement quotient_left(const SimpleElement& prefix, const SimpleElement& whole) {
  if (!left_divides(prefix, whole)) fail(errc::not_a_prefix, "quotient_left: not a prefix");
  const int n = whole.n();
  return SimpleElement::from_permutation(
      n, compose(n, inverse_perm(n, prefix.permutation()), whole.permutation()));
}

SimpleElement quotient_right(const SimpleElement& whole, const SimpleElement& suffix) {
  if (!left_divides(suffix, whole)) fail(errc::not_a_prefix, "quotient_right: not a suffix");
  const int n = whole.n();
  return SimpleElement::from_permutation(
      n, compose(n, whole.permutation(), inverse_perm(n, suffix.permutation())));
}

std::pair<SimpleElement, SimpleElement> left_weight_pair(const SimpleElement& a,
                                                         const SimpleElement& b) {
  require_same_n(a, b);
  SimpleElement t = meet_left(right_complement(a), b);
  if (t.is_identity()) return {a, b};
  auto prod = try_mul(a, t);
  if (!prod) fail(errc::internal_inconsistency, "left weighting produced a non-simple product");
  return {*prod, quotient_left(t, b)};
}

bool is_left_weighted_pair(const SimpleElement& a, const SimpleElement& b) {
  return meet_left(right_complement(a), b).is_identity();
}

}  // namespace bkl
