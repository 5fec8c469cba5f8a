// Command-line front end: parse braid words in cycle notation, compute normal
// forms, run the periodic conjugacy solver and the brute-force oracles.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkl/oracle.hpp"
#include "bkl/text.hpp"

using json = nlohmann::json;

namespace {

struct GlobalOpts {
  bool as_json = false;
  bool no_verify = false;
  std::uint64_t seed = 20240817;
};

std::string join_words(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

json factors_json(const bkl::NormalForm& x) {
  json factors = json::array();
  for (const auto& f : x.factors()) {
    json cycles = json::array();
    for (const auto& c : f.cycles()) cycles.push_back(c.indices());
    factors.push_back(cycles);
  }
  return factors;
}

void emit(const GlobalOpts& g, const json& payload, const std::string& text) {
  if (g.as_json) {
    json out = payload;
    out["schema"] = 1;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int run_nf(const GlobalOpts& g, int n, const std::string& word) {
  bkl::NormalForm x = bkl::NormalForm::of(bkl::parse_braid(n, word));
  emit(g,
       json{{"command", "nf"},
            {"n", n},
            {"inf", x.inf()},
            {"len", x.len()},
            {"factors", factors_json(x)}},
       bkl::to_string(x));
  return 0;
}

int run_solve(const GlobalOpts& g, int n, const std::string& word) {
  bkl::NormalForm alpha = bkl::NormalForm::of(bkl::parse_braid(n, word));
  bkl::PeriodicVerdict v = bkl::solve_periodic(alpha, !g.no_verify);
  if (v.kind == bkl::PeriodicVerdict::Kind::non_periodic) {
    emit(g, json{{"command", "solve"}, {"n", n}, {"kind", "non-periodic"}}, "non-periodic");
    return 0;
  }
  const bool delta = v.kind == bkl::PeriodicVerdict::Kind::delta_type;
  bool verified = false;
  if (!g.no_verify) {
    bkl::NormalForm target = delta ? bkl::NormalForm::delta_power(n, v.k)
                                   : bkl::NormalForm::epsilon_power(n, v.k);
    verified = bkl::verify_conjugation(alpha, *v.conjugator, target);
  }
  std::string kind = delta ? "delta-type" : "epsilon-type";
  std::string gamma = bkl::to_string(*v.conjugator);
  std::string text = kind + " k=" + std::to_string(v.k) + " gamma=" + gamma +
                     (g.no_verify ? "" : std::string(" verified=") + (verified ? "true" : "false"));
  emit(g,
       json{{"command", "solve"},
            {"n", n},
            {"kind", kind},
            {"k", v.k},
            {"conjugator", gamma},
            {"verified", g.no_verify ? json(nullptr) : json(verified)}},
       text);
  if (!g.no_verify && !verified) return 1;
  return 0;
}

int run_power_conj(const GlobalOpts& g, int n, long long r, const std::string& word) {
  bkl::NormalForm x = bkl::NormalForm::of(bkl::parse_braid(n, word));
  if (x.len() > 1)
    bkl::fail(bkl::errc::bad_parameters,
              "input has canonical length > 1; reduce it to its super summit set first");
  bkl::PowerConjugacy pc = bkl::power_conjugacy(x, r);
  bool verified = false;
  if (!g.no_verify) verified = bkl::apply(pc.x, pc.h) == bkl::power(x, r);
  std::string text = "h=" + bkl::to_string(pc.h) + " x=" + bkl::to_string(pc.x) +
                     " iterations=" + std::to_string(pc.outer_iterations) +
                     (g.no_verify ? "" : std::string(" verified=") + (verified ? "true" : "false"));
  emit(g,
       json{{"command", "power-conj"},
            {"n", n},
            {"r", r},
            {"inf", pc.h.inf()},
            {"factors", factors_json(pc.h)},
            {"conjugator", bkl::to_string(pc.x)},
            {"iterations", pc.outer_iterations},
            {"verified", g.no_verify ? json(nullptr) : json(verified)}},
       text);
  if (!g.no_verify && !verified) return 1;
  return 0;
}

int run_sss_brute(const GlobalOpts& g, int n, long long k) {
  bkl::SssTable t = bkl::brute_sss_epsilon(n, k);
  json elems = json::array();
  std::string text = "size=" + std::to_string(t.elements.size());
  for (const auto& h : t.elements) {
    elems.push_back(bkl::to_string(h));
    text += "\n" + bkl::to_string(h);
  }
  emit(g,
       json{{"command", "sss-brute"},
            {"n", n},
            {"k", k},
            {"size", t.elements.size()},
            {"elements", elems}},
       text);
  return 0;
}

int run_uss_bound(const GlobalOpts& g, int n, int u, int k) {
  std::vector<bkl::NormalForm> fam = bkl::uss_lower_bound(n, u, k);
  json elems = json::array();
  std::string text = "count=" + std::to_string(fam.size()) +
                     " catalan=" + std::to_string(bkl::catalan(k)) + " distinct=true";
  for (const auto& a : fam) {
    elems.push_back(bkl::to_string(a));
    text += "\n" + bkl::to_string(a);
  }
  emit(g,
       json{{"command", "uss-bound"},
            {"n", n},
            {"u", u},
            {"k", k},
            {"count", fam.size()},
            {"catalan", bkl::catalan(k)},
            {"distinct", true},
            {"elements", elems}},
       text);
  return 0;
}

int run_props(const GlobalOpts& g, int n, long long samples) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<bkl::SuiteResult> results = bkl::run_property_suites(n, samples, g.seed);

  // closure spot check where the brute table is affordable
  if (n >= 4 && n <= 10) {
    bkl::SuiteResult closure{"summit-closure", 0, 0, ""};
    for (int d = 1; d < n - 1; ++d) {
      if ((n - 1) % d != 0) continue;
      bkl::ClosureReport r = bkl::check_partial_cycling_closure(bkl::brute_sss_epsilon(n, d));
      closure.cases += r.checked;
      closure.failures += static_cast<long long>(r.violations.size());
      if (!r.violations.empty() && closure.first_failure.empty())
        closure.first_failure = "violation at d=" + std::to_string(d);
    }
    results.push_back(closure);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  json suites = json::array();
  std::string text;
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.passed();
    suites.push_back(json{{"name", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"pass", r.passed()}});
    if (!text.empty()) text += "\n";
    text += r.name + ": " + (r.passed() ? "pass" : "FAIL") + " (" + std::to_string(r.cases) +
            " cases)";
    if (!r.passed()) text += " first failure: " + r.first_failure;
  }
  text += "\ntotal: " + std::string(all_ok ? "pass" : "FAIL") + " in " + std::to_string(ms) + " ms";
  emit(g, json{{"command", "props"}, {"n", n}, {"suites", suites}, {"pass", all_ok}}, text);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid group B_n with the band-generator Garside structure:\n"
               "normal forms and a polynomial-time conjugacy solver for periodic braids."};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.as_json, "machine-readable output");
  app.add_flag("--no-verify", g.no_verify, "skip conjugator verification");
  app.add_option("--seed", g.seed, "seed for randomized suites");

  int n = 0;
  long long r = 1, k = 1;
  int u = 1;
  long long samples = 2000;

  // Braid words are taken from the unparsed remainder so that brackets and
  // commas reach the grammar untouched.
  auto* nf_cmd = app.add_subcommand("nf", "left normal form of a braid word");
  nf_cmd->add_option("-n", n, "strand count")->required();
  nf_cmd->allow_extras();

  auto* solve = app.add_subcommand("solve", "decide periodicity and find a conjugator");
  solve->add_option("-n", n, "strand count")->required();
  solve->allow_extras();

  auto* pconj = app.add_subcommand("power-conj", "super summit element of a power, with conjugator");
  pconj->add_option("-n", n, "strand count")->required();
  pconj->add_option("-r", r, "positive exponent")->required();
  pconj->allow_extras();

  auto* sss = app.add_subcommand("sss-brute", "brute-force super summit set of epsilon^k");
  sss->add_option("-n", n, "strand count (<= 10)")->required();
  sss->add_option("-k", k, "exponent, 0 < k < n-1")->required();

  auto* uss = app.add_subcommand("uss-bound", "Catalan-size family of ultra summit elements");
  uss->add_option("-n", n, "strand count")->required();
  uss->add_option("-u", u, "delta exponent")->required();
  uss->add_option("-k", k, "cycle size")->required();

  auto* props = app.add_subcommand("props", "run the identity/closure property suites");
  props->add_option("-n", n, "largest strand count")->required();
  props->add_option("--samples", samples, "cases per suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (nf_cmd->parsed()) return run_nf(g, n, join_words(nf_cmd->remaining()));
    if (solve->parsed()) return run_solve(g, n, join_words(solve->remaining()));
    if (pconj->parsed()) return run_power_conj(g, n, r, join_words(pconj->remaining()));
    if (sss->parsed()) return run_sss_brute(g, n, k);
    if (uss->parsed()) return run_uss_bound(g, n, u, static_cast<int>(k));
    if (props->parsed()) return run_props(g, n, samples);
  } catch (const bkl::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
