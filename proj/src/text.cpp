#include "bkl/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace bkl {

namespace {

constexpr long long kMaxExpandedPower = 1 << 16;

long long parse_int(std::string_view s, errc code) {
  long long v = 0;
  if (s.empty()) fail(code, "expected an integer");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(code, "malformed integer '" + std::string(s) + "'");
  return v;
}

struct Token {
  std::string_view base;
  long long power = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == ".") continue;  // factor separator in printed normal forms
    Token t;
    std::size_t caret = tok.find('^');
    if (caret == std::string_view::npos) {
      t.base = tok;
    } else {
      t.base = tok.substr(0, caret);
      t.power = parse_int(tok.substr(caret + 1), errc::bad_power);
      if (tok.substr(caret + 1).find('^') != std::string_view::npos)
        fail(errc::bad_power, "repeated '^'");
    }
    if (t.base.empty()) fail(errc::syntax_error, "empty syllable before '^'");
    out.push_back(t);
  }
  return out;
}

// "i,j,..." between brackets.
std::vector<int> parse_index_list(std::string_view s, int n) {
  std::vector<int> idx;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    long long v = parse_int(s.substr(i, j - i), errc::syntax_error);
    if (v < 1 || v > 2LL * n)
      fail(errc::index_out_of_range,
           "index " + std::to_string(v) + " out of range for B_" + std::to_string(n));
    idx.push_back(static_cast<int>(v));
    if (j == s.size()) break;
    i = j + 1;
  }
  return idx;
}

// Juxtaposed cycles in one syllable denote their product. Pairwise parallel
// cycles collapse into a single simple element; cycles sharing strands stay a
// product of band-generator cycles (the usual way to spell factorizations
// like [4,2][4,3][2,1]); cycles that cross are rejected.
std::vector<SimpleElement> parse_cycles_syllable(int n, std::string_view base) {
  std::vector<DescendingCycle> cycles;
  std::size_t i = 0;
  while (i < base.size()) {
    if (base[i] != '[') fail(errc::syntax_error, "expected '[' in '" + std::string(base) + "'");
    std::size_t close = base.find(']', i);
    if (close == std::string_view::npos) fail(errc::syntax_error, "missing ']'");
    cycles.emplace_back(n, parse_index_list(base.substr(i + 1, close - i - 1), n));
    i = close + 1;
  }
  bool all_parallel = true;
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      if (is_parallel(cycles[a], cycles[b])) continue;
      all_parallel = false;
      bool disjoint = true;
      for (int x : cycles[a].indices())
        for (int y : cycles[b].indices())
          if (x == y) disjoint = false;
      if (disjoint) fail(errc::not_parallel, "cycles in one syllable cross");
    }
  std::vector<SimpleElement> out;
  if (all_parallel) {
    std::vector<std::vector<int>> idx;
    for (const auto& c : cycles) idx.push_back(c.indices());
    out.push_back(SimpleElement::from_cycles(n, idx));
  } else {
    for (const auto& c : cycles) out.push_back(SimpleElement::from_cycle(c));
  }
  return out;
}

}  // namespace

BraidWord parse_braid(int n, std::string_view text) {
  if (n < 2) fail(errc::bad_parameters, "need at least two strands");
  BraidWord w(n);
  for (const Token& t : tokenize(text)) {
    if (t.base == "d") {
      w.append_delta(t.power);
      continue;
    }
    if (t.base == "e") continue;

    std::vector<SimpleElement> factors;
    if (t.base[0] == '[') {
      factors = parse_cycles_syllable(n, t.base);
    } else if (t.base.rfind("a(", 0) == 0 && t.base.back() == ')') {
      auto idx = parse_index_list(t.base.substr(2, t.base.size() - 3), n);
      if (idx.size() != 2) fail(errc::syntax_error, "a(i,j) takes two indices");
      if ((idx[0] - idx[1]) % n == 0)
        fail(errc::index_out_of_range, "band generator needs two distinct strands");
      factors.push_back(SimpleElement::from_cycles(n, {{idx[0], idx[1]}}));
    } else if (t.base.rfind("s(", 0) == 0 && t.base.back() == ')') {
      auto idx = parse_index_list(t.base.substr(2, t.base.size() - 3), n);
      if (idx.size() != 1) fail(errc::syntax_error, "s(i) takes one index");
      if (idx[0] < 1 || idx[0] > n - 1)
        fail(errc::index_out_of_range, "sigma index must lie in 1..n-1");
      factors.push_back(SimpleElement::band_generator(n, idx[0] + 1, idx[0]));
    } else {
      fail(errc::syntax_error, "unrecognized syllable '" + std::string(t.base) + "'");
    }

    if (t.power == 0) continue;
    long long reps = t.power < 0 ? -t.power : t.power;
    if (reps > kMaxExpandedPower)
      fail(errc::bad_power, "power too large to expand; only d takes unbounded exponents");
    for (long long r = 0; r < reps; ++r) {
      if (t.power > 0) {
        for (const auto& a : factors) w.append(a);
      } else {
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) w.append_inverse(*it);
      }
    }
  }
  return w;
}

std::string to_string(const DescendingCycle& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.indices().size(); ++i) {
    if (i) os << ',';
    os << c.indices()[i];
  }
  os << ']';
  return os.str();
}

std::string to_string(const SimpleElement& a) {
  if (a.is_identity()) return "e";
  std::string out;
  for (const auto& c : a.cycles()) out += to_string(c);
  return out;
}

namespace {

std::string delta_token(long long u) {
  if (u == 1) return "d";
  return "d^" + std::to_string(u);
}

}  // namespace

std::string to_string(const NormalForm& x) {
  if (x.is_identity()) return "e";
  std::string out;
  if (x.inf() != 0) out = delta_token(x.inf());
  for (std::size_t i = 0; i < x.factors().size(); ++i) {
    if (!out.empty()) out += i == 0 ? " " : " . ";
    out += to_string(x.factors()[i]);
  }
  return out;
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    switch (s.kind) {
      case Syllable::Kind::delta:
        out += delta_token(s.power);
        break;
      case Syllable::Kind::simple:
        out += to_string(s.elt);
        break;
      case Syllable::Kind::simple_inverse:
        out += to_string(s.elt) + "^-1";
        break;
    }
  }
  return out;
}

std::string to_string(const Conjugator& c) { return to_string(c.word()); }

}  // namespace bkl
