#include "bkl/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace bkl {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long pos_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

// Inverse of a modulo m (m >= 1, gcd(a, m) == 1).
long long mod_inverse(long long a, long long m) {
  long long r0 = m, r1 = pos_mod(a, m);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) fail(errc::bad_parameters, "element not invertible modulo " + std::to_string(m));
  return pos_mod(t0, m);
}

}  // namespace

Rational make_rational(long long p, long long q) {
  if (q == 0) fail(errc::bad_parameters, "zero denominator");
  if (q < 0) {
    p = checked_mul(p, -1);
    q = checked_mul(q, -1);
  }
  long long g = std::gcd(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return Rational{p, q};
}

Rational t_inf_periodic(PeriodicKind kind, long long k, int n) {
  if (n < 3) fail(errc::bad_parameters, "need at least three strands");
  if (kind == PeriodicKind::delta) return Rational{k, 1};
  return make_rational(checked_mul(static_cast<long long>(n), k), n - 1);
}

PcClass classify_pc(long long p, long long q, long long m) {
  if (q < 1) fail(errc::bad_parameters, "denominator must be positive");
  if (m < 1) fail(errc::bad_parameters, "central power must be positive");
  if (std::gcd(p, q) != 1) fail(errc::not_reduced, "p/q is not in lowest terms");
  return PcClass{pos_mod(p, q) == pos_mod(1, q), pos_mod(p, m) == 0};
}

long long bcmw_exponent(long long p, long long q, long long m) {
  if (q < 1 || m < 1) fail(errc::bad_parameters, "q and m must be positive");
  if (std::gcd(p, q) != 1) fail(errc::not_reduced, "p/q is not in lowest terms");
  if (q == 1) return 1;
  // q >= 2 forces p != 0 here. Prime divisors of m/gcd(p,m) that do not
  // divide q force the extra congruences r == 1 mod f; the Chinese remainder
  // theorem stitches them onto r == p^{-1} mod q.
  std::vector<long long> primes;
  long long x = m / std::gcd(std::abs(p), m);
  for (long long f = 2; f * f <= x; ++f) {
    if (x % f != 0) continue;
    while (x % f == 0) x /= f;
    if (q % f != 0) primes.push_back(f);
  }
  if (x > 1 && q % x != 0) primes.push_back(x);

  long long r = mod_inverse(p, q);  // 1 <= r < q
  long long modulus = q;
  for (long long f : primes) {
    long long inv = mod_inverse(pos_mod(modulus, f), f);
    long long k = pos_mod(checked_mul(pos_mod(1 - r, f), inv), f);
    r = checked_add(r, checked_mul(modulus, k));
    modulus = checked_mul(modulus, f);
  }
  return r;
}

EpsilonReduction epsilon_reduction(long long k, int n) {
  if (n < 3) fail(errc::bad_parameters, "need at least three strands");
  if (k == 0) fail(errc::bad_parameters, "exponent must be nonzero");
  const long long q = n - 1;
  long long d = std::gcd(k, q);
  long long qd = q / d;  // k/d is invertible modulo q/d
  long long r = qd == 1 ? 1 : mod_inverse(pos_mod(k / d, qd), qd);
  long long s = (d - checked_mul(k, r)) / q;
  return EpsilonReduction{d, r, s};
}

PowerConjugacy power_conjugacy(const NormalForm& g, long long r) {
  if (r < 1) fail(errc::bad_parameters, "exponent must be positive");
  if (g.len() > 1)
    fail(errc::bad_parameters, "input must be a super summit element of canonical length <= 1");
  const int n = g.n();
  int top = 0;
  while ((r >> (top + 1)) != 0) ++top;

  NormalForm gcur = g;
  NormalForm h = NormalForm::identity(n);
  BraidWord x(n);  // apply(Conjugator(x), h) == g^{r_i}
  PowerConjugacy out{h, Conjugator::identity(n), 0, 0};

  for (int i = top; i >= 0; --i) {
    ++out.outer_iterations;
    NormalForm hp = mul(h, h);
    if ((r >> i) & 1) hp = mul(hp, gcur);
    out.max_intermediate_len = std::max(out.max_intermediate_len, hp.len());

    BraidWord fwd(n);
    h = reduce_to_summit(std::move(hp), fwd);
    if (h.len() > 1) fail(errc::not_periodic, "a power has summit length > 1");
    for (const auto& s : fwd.syllables()) gcur = conjugate_by(gcur, s);
    if (gcur.len() > 1)
      fail(errc::internal_inconsistency, "base tracker left its super summit set");
    if (mul(gcur, h) != mul(h, gcur))
      fail(errc::internal_inconsistency, "power and base trackers stopped commuting");

    BraidWord nx = fwd.inverted();
    nx.append(x);
    x = std::move(nx);
  }
  out.h = std::move(h);
  out.x = Conjugator(std::move(x));
  return out;
}

PeriodicClass classify_periodic(const NormalForm& a) {
  const int n = a.n();
  BraidWord fwd(n);
  NormalForm b = reduce_to_summit(a, fwd);
  if (b.len() == 0)
    return PeriodicClass{PeriodicClass::Kind::delta_power, b.inf(), Conjugator(std::move(fwd))};
  if (b.len() > 1) return PeriodicClass{};
  try {
    PowerConjugacy pc = power_conjugacy(b, n - 1);
    if (pc.h.len() == 0) {
      long long j = pc.h.inf();
      if (j % n != 0)
        fail(errc::internal_inconsistency,
             "power of a length-one element is a delta power with exponent not divisible by n");
      return PeriodicClass{PeriodicClass::Kind::epsilon_power, j / n, std::nullopt};
    }
  } catch (const error& e) {
    if (e.code() != errc::not_periodic) throw;
  }
  return PeriodicClass{};
}

Conjugator conjugate_to_epsilon_divisor(const NormalForm& alpha, long long d,
                                        EpsilonDivisorTrace* trace) {
  const int n = alpha.n();
  if (n < 3 || d <= 0 || d >= n - 1 || (n - 1) % d != 0)
    fail(errc::bad_parameters, "d must be a proper positive divisor of n-1");
  if (alpha.len() != 1 || alpha.inf() != d)
    fail(errc::not_in_sss, "expected the normal form delta^d a with one factor");
  if (alpha.factors().front().atom_length() != d)
    fail(errc::not_in_sss, "factor has the wrong atom length");
  const long long q = (n - 1) / d;

  BraidWord gamma(n);
  NormalForm cur = alpha;
  while (true) {
    std::vector<DescendingCycle> cyc = cur.factors().front().cycles();
    if (cyc.size() <= 1) break;
    CycleMergeStep step{cyc.front(), {}};
    const std::size_t count = cyc.size();
    DescendingCycle rolling = cyc.front();
    bool merged = false;
    for (long long it = 0; it < q - 1; ++it) {
      CyclingResult pc = partial_cycling(cur, SimpleElement::from_cycle(rolling));
      if (pc.result.len() != 1)
        fail(errc::not_in_sss, "partial cycling left the super summit set");
      cur = std::move(pc.result);
      gamma.append(pc.conj.word());
      rolling = rolling.shifted(-d);
      step.applied.push_back(rolling);
      if (cur.factors().front().cycles().size() < count) {
        merged = true;
        break;
      }
    }
    if (!merged)
      fail(errc::not_in_sss, "cycle count did not drop within (n-1)/d - 1 partial cyclings");
    if (trace) trace->merges.push_back(std::move(step));
  }

  // The single remaining cycle must cover a consecutive run {t, ..., t+d} mod n.
  const DescendingCycle last = cur.factors().front().cycles().front();
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (int i : last.indices()) in[static_cast<std::size_t>(i)] = 1;
  int t = 0;
  for (int i : last.indices()) {
    int prev = i == 1 ? n : i - 1;
    if (!in[static_cast<std::size_t>(prev)]) {
      if (t != 0) fail(errc::not_in_sss, "final cycle is not a consecutive run");
      t = i;
    }
  }
  if (t == 0) fail(errc::not_in_sss, "final cycle is not a consecutive run");
  gamma.append_delta(1 - t);
  if (trace) trace->t = t;

  Conjugator out(std::move(gamma));
  if (apply(out, alpha) != NormalForm::epsilon_power(n, d))
    fail(errc::not_in_sss, "input is not conjugate to the claimed epsilon power");
  return out;
}

Conjugator conjugate_to_epsilon_power(const NormalForm& alpha, long long k) {
  const int n = alpha.n();
  if (n < 3) fail(errc::bad_parameters, "need at least three strands");
  if (alpha.len() > 1) fail(errc::not_in_sss, "expected canonical length <= 1");
  const long long u = floor_div(k, n - 1);
  const long long v = k - u * (n - 1);
  NormalForm a0 =
      NormalForm::from_parts(n, checked_add(alpha.inf(), checked_mul(-u, n)), alpha.factors());
  if (v == 0) {
    if (!a0.is_identity()) fail(errc::not_in_sss, "expected the central power delta^{nu}");
    return Conjugator::identity(n);
  }
  if (exponent_sum(a0) != checked_mul(static_cast<long long>(n), v))
    fail(errc::not_in_sss, "exponent sum does not match the claimed epsilon power");

  EpsilonReduction red = epsilon_reduction(v, n);
  PowerConjugacy pc = power_conjugacy(a0, red.r);
  NormalForm a2 = NormalForm::from_parts(
      n, checked_add(pc.h.inf(), checked_mul(static_cast<long long>(n), red.s)), pc.h.factors());
  Conjugator g2 = conjugate_to_epsilon_divisor(a2, red.d, nullptr);
  return compose(invert(pc.x), g2);
}

PeriodicVerdict solve_periodic(const NormalForm& alpha, bool verify) {
  const int n = alpha.n();
  BraidWord fwd(n);
  NormalForm a1 = reduce_to_summit(alpha, fwd);
  Conjugator g0(std::move(fwd));

  PeriodicVerdict verdict;
  if (a1.len() > 1) return verdict;

  PeriodicClass cls = classify_periodic(a1);
  switch (cls.kind) {
    case PeriodicClass::Kind::non_periodic:
      return verdict;
    case PeriodicClass::Kind::delta_power:
      verdict.kind = PeriodicVerdict::Kind::delta_type;
      verdict.k = cls.k;
      verdict.conjugator = compose(g0, *cls.conj);
      break;
    case PeriodicClass::Kind::epsilon_power: {
      verdict.kind = PeriodicVerdict::Kind::epsilon_type;
      verdict.k = cls.k;
      verdict.conjugator = compose(g0, conjugate_to_epsilon_power(a1, cls.k));
      break;
    }
  }
  if (verify) {
    NormalForm target = verdict.kind == PeriodicVerdict::Kind::delta_type
                            ? NormalForm::delta_power(n, verdict.k)
                            : NormalForm::epsilon_power(n, verdict.k);
    if (apply(*verdict.conjugator, alpha) != target)
      fail(errc::internal_inconsistency, "emitted conjugator failed verification");
  }
  return verdict;
}

}  // namespace bkl
