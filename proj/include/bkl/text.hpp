#pragma once

#include <string>
#include <string_view>

#include "bkl/conjugacy.hpp"

namespace bkl {

// Word grammar (whitespace-separated syllables, each optionally suffixed
// ^<int>; standalone "." tokens separate normal-form factors and are skipped):
//
//   d            the Garside element delta
//   e            the identity (empty syllable)
//   a(i,j)       band generator a_{ij} (order of i, j irrelevant)
//   s(i)         Artin generator sigma_i, read as the band generator a_{i+1,i}
//   [i1,i2,...]  descending cycle; indices above n wrap modulo n
//   [..][..]     juxtaposed cycles multiply: pairwise parallel cycles form one
//                simple element, cycles sharing strands stay a product, and
//                cycles that cross raise not_parallel
//
// Powers on d are kept as exponents; a power k on any other syllable expands
// into |k| copies of the syllable (inverted and reversed for k < 0).
BraidWord parse_braid(int n, std::string_view text);

std::string to_string(const SimpleElement& a);  // juxtaposed cycle notation, "e" for the identity
std::string to_string(const DescendingCycle& c);
std::string to_string(const NormalForm& x);     // d^u f1 . f2 . ... ; "e" for the identity
std::string to_string(const BraidWord& w);      // syllable list, inverses as ^-1
std::string to_string(const Conjugator& c);

}  // namespace bkl
