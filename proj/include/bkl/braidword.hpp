#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "bkl/ncp.hpp"

namespace bkl {

// A raw braid word: a sequence of delta powers, simple elements and inverses
// of simple elements. Delta powers stay collected as exponents, so the word
// length that matters for complexity is the number of non-delta syllables.
struct Syllable {
  enum class Kind { delta, simple, simple_inverse };

  Kind kind = Kind::delta;
  long long power = 0;  // delta syllables only
  SimpleElement elt;    // simple / simple_inverse syllables only

  static Syllable delta_power(long long u) { return {Kind::delta, u, {}}; }
  static Syllable simple(SimpleElement a) { return {Kind::simple, 0, std::move(a)}; }
  static Syllable simple_inverse(SimpleElement a) { return {Kind::simple_inverse, 0, std::move(a)}; }
  Syllable inverted() const;
};

class BraidWord {
 public:
  explicit BraidWord(int n);

  int n() const { return n_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::size_t simple_count() const;  // syllables that are not delta powers

  void append_delta(long long u);
  void append(const SimpleElement& a);          // drops e, folds delta into the exponent
  void append_inverse(const SimpleElement& a);  // likewise
  void append(const Syllable& s);
  void append(const BraidWord& w);
  BraidWord inverted() const;

 private:
  int n_;
  std::vector<Syllable> syl_;
};

// The left normal form delta^u a_1 ... a_l: factors lie strictly between e and
// delta and consecutive factors are left-weighted. Two braids are equal iff
// their normal forms agree componentwise.
class NormalForm {
 public:
  static NormalForm identity(int n);
  static NormalForm delta_power(int n, long long u);
  // epsilon = delta a_{2,1}; epsilon^k in closed form (n >= 3).
  static NormalForm epsilon_power(int n, long long k);
  static NormalForm of(const BraidWord& w);
  // Left-weights the given factor sequence; factors may contain e or delta.
  static NormalForm from_parts(int n, long long inf, std::vector<SimpleElement> factors);

  int n() const { return n_; }
  long long inf() const { return inf_; }
  long long sup() const { return inf_ + static_cast<long long>(factors_.size()); }
  int len() const { return static_cast<int>(factors_.size()); }
  const std::vector<SimpleElement>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_delta_power() const { return factors_.empty(); }

  BraidWord to_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    return std::tie(a.n_, a.inf_, a.factors_) < std::tie(b.n_, b.inf_, b.factors_);
  }

 private:
  NormalForm(int n, long long inf, std::vector<SimpleElement> factors)
      : n_(n), inf_(inf), factors_(std::move(factors)) {}
  int n_;
  long long inf_;
  std::vector<SimpleElement> factors_;
};

NormalForm mul(const NormalForm& x, const NormalForm& y);
NormalForm inverse(const NormalForm& x);
NormalForm power(const NormalForm& x, long long k);
// tau^u(x) = delta^{-u} x delta^u.
NormalForm tau_shift(const NormalForm& x, long long u);

// u (n-1) + sum of factor atom lengths: the image under the abelianization
// sending every band generator to 1.
long long exponent_sum(const NormalForm& x);
// Induced permutation as an image table (1-based, entry 0 unused); strands act
// from the right, so the first syllable acts first.
std::vector<int> permutation_of(const NormalForm& x);

}  // namespace bkl
