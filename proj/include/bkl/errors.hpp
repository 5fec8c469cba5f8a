#pragma once

#include <stdexcept>
#include <string>

namespace bkl {

enum class errc {
  index_out_of_range,
  overlapping_blocks,
  crossing_blocks,
  strand_mismatch,
  not_a_prefix,
  exponent_overflow,
  not_periodic,
  not_in_sss,
  internal_inconsistency,
  too_large,
  bad_parameters,
  syntax_error,
  not_parallel,
  bad_power,
  not_reduced,
};

const char* to_string(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// 64-bit arithmetic that reports overflow instead of wrapping.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::exponent_overflow, "integer addition overflow");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::exponent_overflow, "integer multiplication overflow");
  return r;
}

}  // namespace bkl
