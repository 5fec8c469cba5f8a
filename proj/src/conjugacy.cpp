#include "bkl/conjugacy.hpp"

#include <utility>

namespace bkl {

Conjugator compose(const Conjugator& x, const Conjugator& y) {
  BraidWord w = x.word();
  w.append(y.word());
  return Conjugator(std::move(w));
}

Conjugator invert(const Conjugator& x) { return Conjugator(x.word().inverted()); }

NormalForm conjugate_by(const NormalForm& g, const Syllable& s) {
  if (s.kind == Syllable::Kind::delta) return tau_shift(g, s.power);
  BraidWord w(g.n());
  if (s.kind == Syllable::Kind::simple) {
    w.append_inverse(s.elt);
    w.append(g.to_word());
    w.append(s.elt);
  } else {
    w.append(s.elt);
    w.append(g.to_word());
    w.append_inverse(s.elt);
  }
  return NormalForm::of(w);
}

NormalForm apply(const Conjugator& x, const NormalForm& g) {
  if (x.n() != g.n()) fail(errc::strand_mismatch, "conjugator and braid have different strand counts");
  NormalForm cur = g;
  for (const auto& s : x.word().syllables()) cur = conjugate_by(cur, s);
  return cur;
}

CyclingResult cycling(const NormalForm& g) {
  if (g.len() == 0) return {g, Conjugator::identity(g.n())};
  const long long u = g.inf();
  SimpleElement moved = tau_power(g.factors().front(), -u);
  std::vector<SimpleElement> f(g.factors().begin() + 1, g.factors().end());
  f.push_back(moved);
  NormalForm r = NormalForm::from_parts(g.n(), u, std::move(f));
  BraidWord w(g.n());
  w.append(moved);
  return {std::move(r), Conjugator(std::move(w))};
}

CyclingResult decycling(const NormalForm& g) {
  if (g.len() == 0) return {g, Conjugator::identity(g.n())};
  const long long u = g.inf();
  SimpleElement last = g.factors().back();
  std::vector<SimpleElement> f;
  f.reserve(g.factors().size());
  f.push_back(tau_power(last, u));
  f.insert(f.end(), g.factors().begin(), g.factors().end() - 1);
  NormalForm r = NormalForm::from_parts(g.n(), u, std::move(f));
  BraidWord w(g.n());
  w.append_inverse(last);
  return {std::move(r), Conjugator(std::move(w))};
}

CyclingResult partial_cycling(const NormalForm& g, const SimpleElement& b) {
  if (g.n() != b.n()) fail(errc::strand_mismatch, "prefix lives in a different braid group");
  if (b.is_identity()) return {g, Conjugator::identity(g.n())};
  if (g.len() == 0) fail(errc::not_a_prefix, "partial cycling needs a factor to cycle");
  if (!left_divides(b, g.factors().front()))
    fail(errc::not_a_prefix, "element is not a prefix of the first factor");
  const long long u = g.inf();
  SimpleElement rest = quotient_left(b, g.factors().front());
  SimpleElement moved = tau_power(b, -u);
  std::vector<SimpleElement> f;
  f.reserve(g.factors().size() + 1);
  if (!rest.is_identity()) f.push_back(rest);
  f.insert(f.end(), g.factors().begin() + 1, g.factors().end());
  f.push_back(moved);
  NormalForm r = NormalForm::from_parts(g.n(), u, std::move(f));
  if (r.inf() < g.inf()) fail(errc::internal_inconsistency, "partial cycling dropped the infimum");
  BraidWord w(g.n());
  w.append(moved);
  return {std::move(r), Conjugator(std::move(w))};
}

NormalForm reduce_to_summit(NormalForm g, BraidWord& forward) {
  const int window = g.n() - 1;
  int stagnant = 0;
  while (g.len() > 1 && stagnant < window) {
    long long before = g.inf();
    CyclingResult step = cycling(g);
    forward.append(step.conj.word());
    g = std::move(step.result);
    stagnant = g.inf() > before ? 0 : stagnant + 1;
  }
  stagnant = 0;
  while (g.len() > 1 && stagnant < window) {
    long long before = g.sup();
    CyclingResult step = decycling(g);
    forward.append(step.conj.word());
    g = std::move(step.result);
    stagnant = g.sup() < before ? 0 : stagnant + 1;
  }
  return g;
}

SummitResult to_super_summit(const NormalForm& g) {
  BraidWord forward(g.n());
  NormalForm h = reduce_to_summit(g, forward);
  return {std::move(h), invert(Conjugator(std::move(forward)))};
}

}  // namespace bkl
