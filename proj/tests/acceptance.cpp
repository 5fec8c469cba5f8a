// Acceptance suite: end-to-end checks of the periodic-braid conjugacy solver
// against worked values, brute-force oracles and runtime budgets. Each
// criterion prints one pass/fail line; the process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bkl/oracle.hpp"
#include "bkl/text.hpp"

using namespace bkl;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void operator()(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += what;
    }
  }
};

NormalForm nf(int n, const std::string& s) { return NormalForm::of(parse_braid(n, s)); }

// --- criterion 1: the 13-strand worked example -----------------------------

Outcome criterion_b13_trace() {
  Outcome out;
  Check check{out};
  auto t0 = Clock::now();

  NormalForm alpha = nf(13, "d^3 [13,10][12,11][6,4]");
  NormalForm eps3 = NormalForm::epsilon_power(13, 3);

  Conjugator beta(parse_braid(13, "d^-3 [7,4,1][6,5][3,2]"));
  check(verify_conjugation(alpha, beta, eps3), "the quoted conjugator fails");

  PeriodicVerdict v = solve_periodic(alpha);
  check(v.kind == PeriodicVerdict::Kind::epsilon_type && v.k == 3, "wrong verdict");
  check(v.conjugator && verify_conjugation(alpha, *v.conjugator, eps3),
        "solver conjugator fails");

  EpsilonDivisorTrace trace;
  conjugate_to_epsilon_divisor(alpha, 3, &trace);
  bool merges_ok =
      trace.merges.size() == 2 && trace.merges[0].chosen == DescendingCycle(13, {13, 10}) &&
      trace.merges[0].applied ==
          std::vector<DescendingCycle>{DescendingCycle(13, {10, 7}), DescendingCycle(13, {7, 4})} &&
      trace.merges[1].chosen == DescendingCycle(13, {12, 11}) &&
      trace.merges[1].applied ==
          std::vector<DescendingCycle>{DescendingCycle(13, {9, 8}), DescendingCycle(13, {6, 5})};
  check(merges_ok, "merge sequence differs");
  check(trace.t == 4, "wrong home position");

  double ms = ms_since(t0);
  check(ms < 50.0, "runtime " + std::to_string(ms) + " ms exceeds 50 ms");
  return out;
}

// --- criterion 2: the 6-strand identities -----------------------------------

Outcome criterion_b6_identities() {
  Outcome out;
  Check check{out};

  NormalForm e3 = nf(6, "d^3 [4,2][4,3][2,1]");
  check(e3 == nf(6, "d^3 [4,3,2,1]"), "normalization differs");

  auto pc1 = partial_cycling(e3, SimpleElement::from_cycles(6, {{4, 1}}));
  check(pc1.result.len() == 2, "partial cycling by [4,1] has wrong length");
  check(pc1.result == nf(6, "d^3 [4,3,2] [4,1]"), "partial cycling by [4,1] differs");

  auto pc2 = partial_cycling(e3, SimpleElement::from_cycles(6, {{4, 2}}));
  NormalForm g3 = nf(6, "d^3 [4,3][5,2,1]");
  check(pc2.result == g3, "partial cycling by [4,2] differs");

  check(mul(g3, g3) == nf(6, "d^6 [6,1][5,4,3,2] . [5,2,1]"), "square of g3 differs");
  return out;
}

// --- criterion 3: Catalan-size summit families ------------------------------

Outcome criterion_catalan_bound() {
  Outcome out;
  Check check{out};
  auto t0 = Clock::now();

  std::vector<NormalForm> fam = uss_lower_bound(6, 2, 3);
  check(fam.size() == 5, "expected exactly Catalan(3) = 5 elements");
  std::set<NormalForm> dedup(fam.begin(), fam.end());
  check(dedup.size() == 5, "elements are not pairwise distinct");
  NormalForm eps2 = NormalForm::epsilon_power(6, 2);
  for (const auto& a : fam) {
    check(a.len() == 1, "element is not length one");
    PeriodicVerdict v = solve_periodic(a);
    check(v.kind == PeriodicVerdict::Kind::epsilon_type && v.k == 2 && v.conjugator &&
              verify_conjugation(a, *v.conjugator, eps2),
          "element is not conjugate to epsilon^2");
  }
  check(brute_sss_epsilon(6, 2).elements.size() >= 5, "summit set smaller than the bound");

  double ms = ms_since(t0);
  check(ms < 1000.0, "runtime " + std::to_string(ms) + " ms exceeds 1 s");
  return out;
}

// --- criterion 4: randomized round trips ------------------------------------

Outcome criterion_round_trip() {
  Outcome out;
  Check check{out};
  auto t0 = Clock::now();

  Rng rng(0xB13);
  int failures = 0;
  const int total = 1000;
  for (int i = 0; i < total && out.pass; ++i) {
    int n = 3 + static_cast<int>(rng() % 28);  // 3..30
    long long bound = 3LL * (n - 1);
    long long k = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    bool delta_target = (i % 2 == 0);
    int syllables = 1 + static_cast<int>(rng() % 50);
    Conjugator x = random_conjugator(rng, n, syllables);

    NormalForm target =
        delta_target ? NormalForm::delta_power(n, k) : NormalForm::epsilon_power(n, k);
    NormalForm alpha = apply(x, target);
    PeriodicVerdict v = solve_periodic(alpha);

    PeriodicVerdict::Kind want_kind = PeriodicVerdict::Kind::delta_type;
    long long want_k = k;
    if (!delta_target && k % (n - 1) != 0) {
      want_kind = PeriodicVerdict::Kind::epsilon_type;
    } else if (!delta_target) {
      want_k = k / (n - 1) * n;
    }
    bool ok = v.kind == want_kind && v.k == want_k && v.conjugator &&
              verify_conjugation(alpha, *v.conjugator,
                                 want_kind == PeriodicVerdict::Kind::delta_type
                                     ? NormalForm::delta_power(n, want_k)
                                     : NormalForm::epsilon_power(n, want_k));
    if (!ok) {
      ++failures;
      check(false, "instance " + std::to_string(i) + " failed (n=" + std::to_string(n) +
                       ", k=" + std::to_string(k) + ")");
    }
  }
  check(failures == 0, std::to_string(failures) + " of " + std::to_string(total) + " failed");

  double ms = ms_since(t0);
  check(ms < 60000.0, "runtime " + std::to_string(ms) + " ms exceeds 60 s");
  if (out.pass) out.detail = std::to_string(total) + " instances";
  return out;
}

// --- criterion 5: closure of summit sets under partial cycling --------------

Outcome criterion_closure() {
  Outcome out;
  Check check{out};
  auto t0 = Clock::now();

  long long tables = 0, elements = 0;
  for (int n : {5, 7, 9}) {
    for (int d = 1; d < n - 1; ++d) {
      if ((n - 1) % d != 0) continue;
      SssTable table = brute_sss_epsilon(n, d);
      ++tables;
      elements += static_cast<long long>(table.elements.size());
      ClosureReport r = check_partial_cycling_closure(table);
      check(r.violations.empty(), "closure violated at n=" + std::to_string(n) +
                                      ", d=" + std::to_string(d));
      // twisted product identity tau^{(q-1)d}(a) ... tau^d(a) a = delta
      long long q = (n - 1) / d;
      for (const auto& h : table.elements) {
        SimpleElement prod = h.factors().front();
        bool simple_all_the_way = true;
        for (long long j = 1; j < q; ++j) {
          auto next = try_mul(tau_power(h.factors().front(), j * d), prod);
          if (!next) {
            simple_all_the_way = false;
            break;
          }
          prod = *next;
        }
        check(simple_all_the_way && prod.is_delta(),
              "twisted product identity fails at n=" + std::to_string(n));
        if (!out.pass) break;
      }
    }
  }

  double ms = ms_since(t0);
  check(ms < 60000.0, "runtime " + std::to_string(ms) + " ms exceeds 60 s");
  if (out.pass)
    out.detail = std::to_string(tables) + " tables, " + std::to_string(elements) + " elements";
  return out;
}

// --- criterion 6: the power-conjugacy contract -------------------------------

Outcome criterion_power_conjugacy() {
  Outcome out;
  Check check{out};

  NormalForm eps20 = NormalForm::epsilon_power(20, 1);
  for (long long r : {1LL, 2LL, 7LL, 19LL, 1000LL}) {
    PowerConjugacy pc = power_conjugacy(eps20, r);
    int expect = 0;
    for (long long t = r; t > 0; t >>= 1) ++expect;  // floor(log2 r) + 1
    check(pc.outer_iterations == expect, "iteration count off at r=" + std::to_string(r));
    check(apply(pc.x, pc.h) == NormalForm::epsilon_power(20, r),
          "closed-form check failed at r=" + std::to_string(r));
    if (r <= 100)
      check(apply(pc.x, pc.h) == power(eps20, r),
            "plain powering check failed at r=" + std::to_string(r));
    check(pc.h.len() <= 1, "summit length exceeded one");
  }

  PowerConjugacy p13 = power_conjugacy(NormalForm::epsilon_power(13, 1), 12);
  check(p13.h == NormalForm::delta_power(13, 13), "epsilon^12 in B_13 is not delta^13");
  return out;
}

// --- criterion 7: transfer arithmetic and the marking table ------------------

Outcome criterion_bcmw_table() {
  Outcome out;
  Check check{out};
  auto t0 = Clock::now();

  check(bcmw_exponent(2, 9, 2) == 5, "bcmw_exponent(2,9,2) != 5");

  auto mark = [](Rational t, long long m) {
    PcClass c = classify_pc(t.p, t.q, m);
    return c.p_minimal ? (c.c_tight ? 2 : 1) : 0;
  };
  // 0 = unmarked, 1 = P-minimal, 2 = P-minimal and C-tight, rows k = 1..9:
  // columns 2k/9 and 2k/10 with m = 2, then 10k/9 and 11k/10 with m = n.
  const int artin9[9] = {0, 0, 0, 0, 2, 2, 0, 0, 2};
  const int artin10[9] = {1, 0, 0, 0, 1, 2, 0, 0, 0};
  const int bkl10[9] = {2, 0, 2, 0, 0, 0, 0, 0, 2};
  const int bkl11[9] = {2, 2, 0, 0, 2, 0, 0, 0, 0};
  for (int k = 1; k <= 9; ++k) {
    check(mark(make_rational(2 * k, 9), 2) == artin9[k - 1], "column 1 row " + std::to_string(k));
    check(mark(make_rational(2 * k, 10), 2) == artin10[k - 1], "column 2 row " + std::to_string(k));
    check(mark(t_inf_periodic(PeriodicKind::epsilon, k, 10), 10) == bkl10[k - 1],
          "column 3 row " + std::to_string(k));
    check(mark(t_inf_periodic(PeriodicKind::epsilon, k, 11), 11) == bkl11[k - 1],
          "column 4 row " + std::to_string(k));
  }

  double ms = ms_since(t0);
  check(ms < 1.0, "runtime " + std::to_string(ms) + " ms exceeds 1 ms");
  return out;
}

// --- criterion 8: growth of the solver with the strand count ----------------

Outcome criterion_scaling() {
  Outcome out;
  Check check{out};

  const int sizes[4] = {10, 20, 40, 80};
  const int reps[4] = {40, 16, 6, 3};
  double t[4];
  for (int i = 0; i < 4; ++i) {
    int n = sizes[i];
    Rng rng(0xC0FFEE + static_cast<unsigned>(n));
    Conjugator x = random_conjugator(rng, n, 30);  // fixed conjugator length
    NormalForm alpha = apply(x, NormalForm::epsilon_power(n, 3));
    double best = 1e30;
    for (int rep = 0; rep < reps[i]; ++rep) {
      auto t0 = Clock::now();
      PeriodicVerdict v = solve_periodic(alpha);
      double ms = ms_since(t0);
      best = std::min(best, ms);
      check(v.kind == PeriodicVerdict::Kind::epsilon_type && v.k == 3,
            "wrong verdict at n=" + std::to_string(n));
    }
    t[i] = best;
  }
  // least-squares slope of log t against log n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < 4; ++i) {
    double lx = std::log(static_cast<double>(sizes[i])), ly = std::log(t[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  std::ostringstream os;
  os << "times ms";
  for (double v : t) os << " " << v;
  os << ", slope " << slope;
  out.detail = os.str();
  check(slope < 3.0, "log-log slope not sub-cubic");
  check(t[3] < 2000.0, "n = 80 took longer than 2 s");
  return out;
}

// --- criterion 9: randomized identity suites ---------------------------------

Outcome criterion_property_suites() {
  Outcome out;
  Check check{out};
  for (const auto& r : run_property_suites(12, 10000, 0x5EED)) {
    check(r.failures == 0,
          r.name + ": " + std::to_string(r.failures) + " failures; first: " + r.first_failure);
    check(r.cases == 10000, r.name + ": wrong case count");
  }
  if (out.pass) out.detail = "4 suites x 10000 cases";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "13-strand golden trace", criterion_b13_trace},
      {2, "6-strand golden identities", criterion_b6_identities},
      {3, "Catalan lower bound", criterion_catalan_bound},
      {4, "randomized round-trip soundness", criterion_round_trip},
      {5, "partial-cycling closure at desk scale", criterion_closure},
      {6, "power-conjugacy contract", criterion_power_conjugacy},
      {7, "transfer exponent arithmetic", criterion_bcmw_table},
      {8, "sub-cubic solver scaling", criterion_scaling},
      {9, "algebra property suites", criterion_property_suites},
  };

  int failed = 0;
  for (const auto& e : entries) {
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    double ms = ms_since(t0);
    std::printf("criterion %d [%s] %s (%.1f ms)%s%s\n", e.id, out.pass ? "PASS" : "FAIL", e.name,
                ms, out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  if (failed) std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
