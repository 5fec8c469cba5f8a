#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "bkl/errors.hpp"

namespace bkl {

// Simple elements of the braid group B_n with the band-generator Garside
// structure. The band generators a_{ts} (n >= t > s >= 1) generate the
// positive monoid, and the Garside element is
//
//     delta = a_{n,n-1} a_{n-1,n-2} ... a_{2,1}.
//
// The left divisors of delta correspond bijectively to the non-crossing
// partitions of the strands 1..n placed on a circle: a block {i_1 < ... < i_k}
// of size >= 2 contributes the descending cycle
//
//     [i_k, ..., i_2, i_1] = a_{i_k i_{k-1}} ... a_{i_3 i_2} a_{i_2 i_1},
//
// and a simple element is a product of parallel descending cycles (blocks
// with pairwise disjoint convex hulls).
//
// We encode a simple element by the permutation it induces (strands act from
// the right): every strand maps to the next larger strand of its block, the
// largest wrapping around to the smallest. Simple elements are determined by
// their permutations, so the encoding is faithful, and the whole lattice
// toolkit below runs in O(n) or O(n log n) per call except where noted.

class DescendingCycle {
 public:
  // Indices may exceed n ("wraparound" notation): an index x stands for the
  // strand ((x-1) mod n)+1. After reduction the sequence must be a cyclic
  // rotation of its strictly decreasing arrangement, which becomes the
  // canonical form. The cycle needs at least two distinct strands.
  DescendingCycle(int n, std::vector<int> indices);

  int n() const { return n_; }
  const std::vector<int>& indices() const { return idx_; }  // strictly decreasing
  int size() const { return static_cast<int>(idx_.size()); }
  int max_index() const { return idx_.front(); }
  int min_index() const { return idx_.back(); }

  // Image under tau^u (conjugation by delta^u): every index shifts by u mod n.
  DescendingCycle shifted(long long u) const;

  friend bool operator==(const DescendingCycle&, const DescendingCycle&) = default;

 private:
  int n_;
  std::vector<int> idx_;
};

// True iff the convex hulls of the two index sets are disjoint. Cycles sharing
// a strand are not parallel.
bool is_parallel(const DescendingCycle& a, const DescendingCycle& b);

class SimpleElement {
 public:
  SimpleElement() = default;  // invalid placeholder (n() == 0)

  static SimpleElement identity(int n);
  static SimpleElement delta(int n);
  static SimpleElement band_generator(int n, int t, int s);
  static SimpleElement from_cycle(const DescendingCycle& c);
  // Blocks given as cycles plus implicit singletons. Wraparound indices are
  // normalized first. Throws overlapping_blocks on a shared strand and
  // crossing_blocks when two hulls intersect.
  static SimpleElement from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // image[i] (1-based, image[0] ignored) is the image of strand i. Rejects
  // permutations that do not describe a non-crossing partition traversed in
  // increasing cycles.
  static SimpleElement from_permutation(int n, std::vector<int> image);

  int n() const { return n_; }
  int image_of(int strand) const { return img_[static_cast<std::size_t>(strand)]; }
  const std::vector<int>& permutation() const { return img_; }  // img_[0] == 0

  bool is_identity() const;
  bool is_delta() const;
  // Number of band generators in any positive expression: n minus the number
  // of blocks, i.e. the sum of (block size - 1).
  int atom_length() const;
  // The descending cycles of the blocks of size >= 2, sorted by maximal index
  // descending.
  std::vector<DescendingCycle> cycles() const;

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;
  friend bool operator<(const SimpleElement& a, const SimpleElement& b) {
    return std::tie(a.n_, a.img_) < std::tie(b.n_, b.img_);
  }

 private:
  int n_ = 0;
  std::vector<int> img_;
};

enum class Side { left, right };

// Divisibility. For simple elements the prefix and suffix orders coincide and
// both are the refinement order on the underlying partitions.
bool left_divides(const SimpleElement& a, const SimpleElement& b);

// Lattice operations for the prefix order: the gcd is the common refinement
// of the two partitions, the lcm is the non-crossing closure of their union
// (merge blocks with intersecting hulls until stable, worst case O(n^2)).
SimpleElement meet_left(const SimpleElement& a, const SimpleElement& b);
SimpleElement join_left(const SimpleElement& a, const SimpleElement& b);

// Suffix-order gcd/lcm computed through the complement identities
//   a /\_R b = *(a* \/_L b*)   and   a \/_R b = (*a /\_L *b)*.
SimpleElement meet_right(const SimpleElement& a, const SimpleElement& b);
SimpleElement join_right(const SimpleElement& a, const SimpleElement& b);

// The complements of a in delta: *a a = delta = a a*.
SimpleElement left_complement(const SimpleElement& a);   // *a
SimpleElement right_complement(const SimpleElement& a);  // a*
SimpleElement complement_delta(const SimpleElement& a, Side side);

// side == right: the unique simple c with a c = a \/_L b.
// side == left:  the unique simple c with c a = a \/_R b.
SimpleElement complement_in(const SimpleElement& a, const SimpleElement& b, Side side);

// tau^u(a) = delta^{-u} a delta^u shifts every strand by u mod n.
SimpleElement tau_power(const SimpleElement& a, long long u);

// The product a b when it is again simple, std::nullopt otherwise.
std::optional<SimpleElement> try_mul(const SimpleElement& a, const SimpleElement& b);

// prefix^{-1} whole and whole suffix^{-1}; the divisibility precondition is
// checked and not_a_prefix is thrown when it fails.
SimpleElement quotient_left(const SimpleElement& prefix, const SimpleElement& whole);
SimpleElement quotient_right(const SimpleElement& whole, const SimpleElement& suffix);

// The left-weighted form (a', b') of the length-two word a b: a' takes the
// maximal simple prefix of the product, so a' = a (a* /\_L b) and b' is the
// matching right complement. b' may be the identity and a' may be delta.
std::pair<SimpleElement, SimpleElement> left_weight_pair(const SimpleElement& a,
                                                         const SimpleElement& b);

bool is_left_weighted_pair(const SimpleElement& a, const SimpleElement& b);

}  // namespace bkl
