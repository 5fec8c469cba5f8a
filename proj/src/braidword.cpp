#include "bkl/braidword.hpp"

#include <algorithm>
#include <string>

namespace bkl {

namespace {

void require_same_n(int a, int b) {
  if (a != b)
    fail(errc::strand_mismatch,
         "operands live in B_" + std::to_string(a) + " and B_" + std::to_string(b));
}

// One right-to-left weighting pass. Pulling the maximal prefix of f[i+1] into
// f[i] after the tail has already cascaded lets a factor's surplus travel the
// whole word in a single pass, so the number of passes is bounded by the
// number of factors.
bool weight_pass(std::vector<SimpleElement>& f) {
  bool changed = false;
  for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) {
    auto& a = f[static_cast<std::size_t>(i)];
    auto& b = f[static_cast<std::size_t>(i) + 1];
    if (b.is_identity() || a.is_delta()) continue;
    SimpleElement t = meet_left(right_complement(a), b);
    if (t.is_identity()) continue;
    auto prod = try_mul(a, t);
    if (!prod) fail(errc::internal_inconsistency, "weighting produced a non-simple product");
    a = *prod;
    b = quotient_left(t, b);
    changed = true;
  }
  return changed;
}

// Left-weights the sequence in place and returns the delta power stripped off
// the front. Trailing identities are removed as well.
long long left_weight_factors(std::vector<SimpleElement>& f) {
  std::size_t passes = 0;
  const std::size_t limit = f.size() + 4;
  while (weight_pass(f)) {
    if (++passes > limit) fail(errc::internal_inconsistency, "weighting did not stabilize");
  }
  std::size_t lead = 0;
  while (lead < f.size() && f[lead].is_delta()) ++lead;
  std::size_t tail = f.size();
  while (tail > lead && f[tail - 1].is_identity()) --tail;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(tail), f.end());
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  return static_cast<long long>(lead);
}

int mod1(long long x, int n) {
  long long r = x % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Syllable / BraidWord

Syllable Syllable::inverted() const {
  switch (kind) {
    case Kind::delta: return delta_power(checked_mul(power, -1));
    case Kind::simple: return simple_inverse(elt);
    case Kind::simple_inverse: return simple(elt);
  }
  fail(errc::internal_inconsistency, "bad syllable kind");
}

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) fail(errc::bad_parameters, "strand count must be positive");
}

std::size_t BraidWord::simple_count() const {
  std::size_t r = 0;
  for (const auto& s : syl_)
    if (s.kind != Syllable::Kind::delta) ++r;
  return r;
}

void BraidWord::append_delta(long long u) {
  if (u == 0) return;
  if (!syl_.empty() && syl_.back().kind == Syllable::Kind::delta) {
    syl_.back().power = checked_add(syl_.back().power, u);
    if (syl_.back().power == 0) syl_.pop_back();
    return;
  }
  syl_.push_back(Syllable::delta_power(u));
}

void BraidWord::append(const SimpleElement& a) {
  require_same_n(n_, a.n());
  if (a.is_identity()) return;
  if (a.is_delta()) {
    append_delta(1);
    return;
  }
  syl_.push_back(Syllable::simple(a));
}

void BraidWord::append_inverse(const SimpleElement& a) {
  require_same_n(n_, a.n());
  if (a.is_identity()) return;
  if (a.is_delta()) {
    append_delta(-1);
    return;
  }
  syl_.push_back(Syllable::simple_inverse(a));
}

void BraidWord::append(const Syllable& s) {
  if (s.kind == Syllable::Kind::delta) {
    append_delta(s.power);
  } else if (s.kind == Syllable::Kind::simple) {
    append(s.elt);
  } else {
    append_inverse(s.elt);
  }
}

void BraidWord::append(const BraidWord& w) {
  require_same_n(n_, w.n());
  for (const auto& s : w.syllables()) append(s);
}

BraidWord BraidWord::inverted() const {
  BraidWord out(n_);
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) out.append(it->inverted());
  return out;
}

// ---------------------------------------------------------------------------
// NormalForm

NormalForm NormalForm::identity(int n) { return delta_power(n, 0); }

NormalForm NormalForm::delta_power(int n, long long u) {
  if (n < 1) fail(errc::bad_parameters, "strand count must be positive");
  return NormalForm(n, u, {});
}

NormalForm NormalForm::epsilon_power(int n, long long k) {
  if (n < 3) fail(errc::bad_parameters, "epsilon needs at least three strands");
  // epsilon^{n-1} = delta^n, and for 0 < v < n-1,
  // epsilon^v = delta^v [v+1, v, ..., 1].
  long long u = k >= 0 ? k / (n - 1) : -((-k + (n - 2)) / (n - 1));
  long long v = k - u * (n - 1);
  if (v == 0) return delta_power(n, checked_mul(n, u));
  std::vector<int> run(static_cast<std::size_t>(v) + 1);
  for (std::size_t i = 0; i < run.size(); ++i) run[i] = static_cast<int>(v) + 1 - static_cast<int>(i);
  SimpleElement a = SimpleElement::from_cycles(n, {run});
  return NormalForm(n, checked_add(checked_mul(n, u), v), {a});
}

NormalForm NormalForm::of(const BraidWord& w) {
  const int n = w.n();
  // Rewrite a^{-1} = delta^{-1} (*a) and push every delta power to the front:
  // moving delta^s leftwards past a simple twists it by tau^s, so walking the
  // word right to left with the accumulated exponent does the whole job.
  std::vector<SimpleElement> f;
  long long shift = 0;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    switch (it->kind) {
      case Syllable::Kind::delta:
        shift = checked_add(shift, it->power);
        break;
      case Syllable::Kind::simple:
        f.push_back(tau_power(it->elt, shift));
        break;
      case Syllable::Kind::simple_inverse:
        f.push_back(tau_power(left_complement(it->elt), shift));
        shift = checked_add(shift, -1);
        break;
    }
  }
  std::reverse(f.begin(), f.end());
  long long u = checked_add(shift, left_weight_factors(f));
  return NormalForm(n, u, std::move(f));
}

NormalForm NormalForm::from_parts(int n, long long inf, std::vector<SimpleElement> factors) {
  for (const auto& a : factors) require_same_n(n, a.n());
  long long u = checked_add(inf, left_weight_factors(factors));
  return NormalForm(n, u, std::move(factors));
}

BraidWord NormalForm::to_word() const {
  BraidWord w(n_);
  w.append_delta(inf_);
  for (const auto& a : factors_) w.append(a);
  return w;
}

// ---------------------------------------------------------------------------
// Group arithmetic

NormalForm mul(const NormalForm& x, const NormalForm& y) {
  require_same_n(x.n(), y.n());
  std::vector<SimpleElement> f;
  f.reserve(x.factors().size() + y.factors().size());
  for (const auto& a : x.factors()) f.push_back(tau_power(a, y.inf()));
  for (const auto& b : y.factors()) f.push_back(b);
  return NormalForm::from_parts(x.n(), checked_add(x.inf(), y.inf()), std::move(f));
}

NormalForm inverse(const NormalForm& x) {
  BraidWord w(x.n());
  const auto& f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) w.append_inverse(*it);
  w.append_delta(checked_mul(x.inf(), -1));
  return NormalForm::of(w);
}

NormalForm power(const NormalForm& x, long long k) {
  if (k == 0) return NormalForm::identity(x.n());
  if (k < 0) return power(inverse(x), checked_mul(k, -1));
  NormalForm acc = NormalForm::identity(x.n());
  NormalForm base = x;
  while (true) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base);
  }
  return acc;
}

NormalForm tau_shift(const NormalForm& x, long long u) {
  std::vector<SimpleElement> f;
  f.reserve(x.factors().size());
  for (const auto& a : x.factors()) f.push_back(tau_power(a, u));
  // tau is an automorphism fixing delta, so weightedness is preserved.
  return NormalForm::from_parts(x.n(), x.inf(), std::move(f));
}

long long exponent_sum(const NormalForm& x) {
  long long e = checked_mul(x.inf(), x.n() - 1);
  for (const auto& a : x.factors()) e = checked_add(e, a.atom_length());
  return e;
}

std::vector<int> permutation_of(const NormalForm& x) {
  const int n = x.n();
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = mod1(i + x.inf(), n);
  for (const auto& a : x.factors())
    for (int i = 1; i <= n; ++i)
      p[static_cast<std::size_t>(i)] = a.image_of(p[static_cast<std::size_t>(i)]);
  return p;
}

}  // namespace bkl
