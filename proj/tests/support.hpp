#pragma once

#include <ostream>
#include <string>

#include "bkl/oracle.hpp"
#include "bkl/text.hpp"

// Stringification for test output.
namespace bkl {
inline std::ostream& operator<<(std::ostream& os, const SimpleElement& a) {
  return os << to_string(a);
}
inline std::ostream& operator<<(std::ostream& os, const NormalForm& x) {
  return os << to_string(x);
}
inline std::ostream& operator<<(std::ostream& os, const DescendingCycle& c) {
  return os << to_string(c);
}
}  // namespace bkl

namespace support {

inline bkl::SimpleElement simple(int n, const std::vector<std::vector<int>>& cycles) {
  return bkl::SimpleElement::from_cycles(n, cycles);
}

inline bkl::NormalForm nf(int n, std::string_view text) {
  return bkl::NormalForm::of(bkl::parse_braid(n, text));
}

inline bkl::Conjugator conj(int n, std::string_view text) {
  return bkl::Conjugator(bkl::parse_braid(n, text));
}

}  // namespace support
