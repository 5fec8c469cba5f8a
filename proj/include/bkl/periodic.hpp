#pragma once

#include <optional>
#include <vector>

#include "bkl/conjugacy.hpp"

namespace bkl {

// A braid is periodic iff some power of it is central, i.e. lies in the cyclic
// group generated by delta^n, and every periodic braid is conjugate to a power
// of delta or of epsilon = delta a_{2,1}. This header carries the arithmetic
// of such elements and the deterministic conjugacy solver built on it.

struct Rational {
  long long p = 0;  // gcd(|p|, q) == 1
  long long q = 1;  // q >= 1

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long p, long long q);

enum class PeriodicKind { delta, epsilon };

// The translation number t_inf of delta^k (= k) or epsilon^k (= nk/(n-1)).
Rational t_inf_periodic(PeriodicKind kind, long long k, int n);

struct PcClass {
  bool p_minimal = false;  // p == 1 mod q
  bool c_tight = false;    // p == 0 mod m, m the smallest central delta power

  friend bool operator==(const PcClass&, const PcClass&) = default;
};

// Classification of a periodic element with t_inf = p/q in a Garside group
// whose Garside element has smallest central power m.
PcClass classify_pc(long long p, long long q, long long m);

// The smallest exponent r in [1, qm) with p r == 1 mod q and r coprime to
// m / gcd(p, m): the power g^r is then P-minimal and generates the same cyclic
// subgroup of the central quotient, so conjugators transfer between g and g^r.
long long bcmw_exponent(long long p, long long q, long long m);

struct EpsilonReduction {
  long long d = 0;  // gcd(k, n-1)
  long long r = 0;  // k r + (n-1) s = d, 0 < r < n-1
  long long s = 0;

  friend bool operator==(const EpsilonReduction&, const EpsilonReduction&) = default;
};

EpsilonReduction epsilon_reduction(long long k, int n);

struct PowerConjugacy {
  NormalForm h;  // a super summit element of g^r
  Conjugator x;  // x^{-1} h x = g^r
  int outer_iterations = 0;     // floor(log2 r) + 1
  int max_intermediate_len = 0;
};

// Square-and-multiply powering that keeps every intermediate value reduced to
// its super summit set, tracking one conjugator for the base and the power at
// once. Input must be a super summit element of canonical length <= 1. Throws
// not_periodic when an intermediate super summit element has length > 1,
// which certifies that some power of g has summit length > 1.
PowerConjugacy power_conjugacy(const NormalForm& g, long long r);

struct PeriodicClass {
  enum class Kind { non_periodic, delta_power, epsilon_power };
  Kind kind = Kind::non_periodic;
  long long k = 0;                    // exponent, when periodic
  std::optional<Conjugator> conj;     // delta_power only: conj^{-1} input conj = delta^k
};

// Decides periodicity, solves the conjugacy search problem for delta-type
// braids on the spot, and reports the epsilon exponent otherwise.
PeriodicClass classify_periodic(const NormalForm& a);

struct CycleMergeStep {
  DescendingCycle chosen;                     // cycle picked (largest maximal index)
  std::vector<DescendingCycle> applied;       // successive tau^{-d} shifts used as conjugators
};

struct EpsilonDivisorTrace {
  std::vector<CycleMergeStep> merges;
  int t = 0;  // final single cycle is {t, ..., t+d} mod n
};

// For a super summit element alpha = delta^d a of epsilon^d, d a proper
// divisor of n-1: repeatedly partial-cycle the descending cycle with the
// largest maximal index along its tau^{-d} orbit until the number of parallel
// cycles drops (at most (n-1)/d - 1 rounds each), then read off the final
// consecutive run and shift it home with a delta power. Returns gamma with
// gamma^{-1} alpha gamma = epsilon^d.
Conjugator conjugate_to_epsilon_divisor(const NormalForm& alpha, long long d,
                                        EpsilonDivisorTrace* trace = nullptr);

// Full epsilon-type search: strip the central part of epsilon^k, pass to a
// C-tight BCMW power via power_conjugacy, and finish with the divisor case.
// Returns gamma with gamma^{-1} alpha gamma = epsilon^k for alpha in the super
// summit set of epsilon^k.
Conjugator conjugate_to_epsilon_power(const NormalForm& alpha, long long k);

struct PeriodicVerdict {
  enum class Kind { non_periodic, delta_type, epsilon_type };
  Kind kind = Kind::non_periodic;
  long long k = 0;
  std::optional<Conjugator> conjugator;
};

// The complete decision + search routine: normalization, summit reduction,
// periodicity test, and conjugator assembly. With verify set, the returned
// conjugator is checked against the claimed target by exact normal-form
// equality before the verdict is emitted.
PeriodicVerdict solve_periodic(const NormalForm& alpha, bool verify = true);

}  // namespace bkl
