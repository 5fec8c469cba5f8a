#pragma once

#include "bkl/braidword.hpp"

namespace bkl {

// A conjugating element kept as a lazy braid word. Applying x to g yields
// x^{-1} g x, so compose(x, y) applied to g equals y applied to (x applied to
// g) and is plain word concatenation.
class Conjugator {
 public:
  static Conjugator identity(int n) { return Conjugator(BraidWord(n)); }
  explicit Conjugator(BraidWord word) : word_(std::move(word)) {}

  int n() const { return word_.n(); }
  const BraidWord& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  std::size_t size() const { return word_.syllables().size(); }

 private:
  BraidWord word_;
};

Conjugator compose(const Conjugator& x, const Conjugator& y);
Conjugator invert(const Conjugator& x);

// x^{-1} g x, evaluated one syllable at a time so long conjugator words never
// enter a single normalization.
NormalForm apply(const Conjugator& x, const NormalForm& g);
NormalForm conjugate_by(const NormalForm& g, const Syllable& s);

struct CyclingResult {
  NormalForm result;
  Conjugator conj;  // apply(conj, input) == result
};

// c(g) = delta^u a_2 ... a_l tau^{-u}(a_1); the conjugator is tau^{-u}(a_1).
CyclingResult cycling(const NormalForm& g);
// d(g) = delta^u tau^u(a_l) a_1 ... a_{l-1}; conjugation by a_l^{-1}.
CyclingResult decycling(const NormalForm& g);
// Conjugation by tau^{-u}(b) for a prefix b of the first factor:
// delta^u a_1 ... a_l  ->  delta^u a_1' a_2 ... a_l tau^{-u}(b) where a_1 = b a_1'.
// Throws not_a_prefix when b does not divide a_1. The infimum never drops.
CyclingResult partial_cycling(const NormalForm& g, const SimpleElement& b);

struct SummitResult {
  NormalForm element;  // in the super summit set of the input
  Conjugator conj;     // apply(conj, element) == input
};

// Iterated cycling until the infimum stays put for n-1 consecutive rounds,
// then iterated decycling likewise for the supremum. An element of canonical
// length <= 1 is already a super summit element here: the atom length of a
// factor is forced by the exponent sum, which rules out a conjugate of larger
// infimum.
SummitResult to_super_summit(const NormalForm& g);

// Workhorse shared with the periodic solver: reduces g and appends the
// elementary forward conjugators to `forward`, so apply(Conjugator(forward),
// g) equals the returned element.
NormalForm reduce_to_summit(NormalForm g, BraidWord& forward);

}  // namespace bkl
