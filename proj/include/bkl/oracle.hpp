#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bkl/periodic.hpp"

namespace bkl {

// Brute-force ground truth at desk scale: exhaustive enumeration of simple
// elements, super summit sets of epsilon powers, the Catalan-size families of
// ultra summit elements, closure checks and randomized property harnesses.
// Everything here is independent of the polynomial-time solver and exists to
// cross-examine it.

std::uint64_t catalan(int n);

// All non-crossing partitions of 1..n, each exactly once, by the recursive
// decomposition along the block of the smallest point. n <= 14.
void for_each_simple(int n, const std::function<void(const SimpleElement&)>& fn);
// Materialized variant, n <= 12.
std::vector<SimpleElement> enumerate_simples(int n);

// All left divisors of a (equivalently the simples refining its partition).
void for_each_left_divisor(const SimpleElement& a,
                           const std::function<void(const SimpleElement&)>& fn);
std::vector<SimpleElement> left_divisors(const SimpleElement& a);

struct SssTable {
  int n = 0;
  long long k = 0;
  std::vector<NormalForm> elements;  // sorted

  bool contains(const NormalForm& x) const;
};

// The super summit set of epsilon^k for 0 < k < n-1, n <= 10: all delta^k a
// with a simple of atom length k whose (n-1)-st power is exactly delta^{nk}.
SssTable brute_sss_epsilon(int n, long long k);

// The Catalan(k) pairwise distinct ultra summit elements
// delta^u tau^u(b_i) a_i built from the factorizations a_i b_i = [k,...,1],
// for 2 <= k <= u <= n/2 or 2 <= k = u+1 <= n/2.
std::vector<NormalForm> uss_lower_bound(int n, int u, int k);

struct ClosureViolation {
  NormalForm element;
  SimpleElement divisor;
  NormalForm image;
};

struct ClosureReport {
  long long checked = 0;
  std::vector<ClosureViolation> violations;
};

// Partial-cycles every element of the table by every left divisor of its
// factor and reports the results that land outside the table.
ClosureReport check_partial_cycling_closure(const SssTable& table);

// normalize(gamma^{-1} alpha gamma) == target, exactly.
bool verify_conjugation(const NormalForm& alpha, const Conjugator& gamma,
                        const NormalForm& target);

// --- randomized property harnesses -----------------------------------------

using Rng = std::mt19937_64;

SimpleElement random_simple(Rng& rng, int n);
BraidWord random_word(Rng& rng, int n, int syllables);
Conjugator random_conjugator(Rng& rng, int n, int syllables);

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

// The identity/closure suites behind the `props` command: lattice laws,
// complement identities, normal-form soundness, and the cycling family of
// conjugation identities. Strand counts are drawn from [3, max_n].
SuiteResult suite_lattice_laws(int max_n, long long samples, std::uint64_t seed);
SuiteResult suite_complement_identities(int max_n, long long samples, std::uint64_t seed);
SuiteResult suite_normal_form(int max_n, long long samples, std::uint64_t seed);
SuiteResult suite_conjugation(int max_n, long long samples, std::uint64_t seed);
std::vector<SuiteResult> run_property_suites(int max_n, long long samples, std::uint64_t seed);

}  // namespace bkl
