#pragma once

// Continued fractions of quadratic surds and the digit-level moves that
// generate the PGL2(Z) orbit relation.

#include <cstdint>
#include <string>
#include <vector>

#include "acs/surd.hpp"

namespace acs {

/// a0; preperiod; period. An empty period means a finite (rational) expansion.
/// Canonical form: shortest period, shortest preperiod, and for finite
/// expansions no trailing digit 1 (unless it is the only digit after a0).
struct CFExpansion {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;

  bool is_finite() const { return period.empty(); }
  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;

  /// "a0;[d1,d2];(p1,p2)".
  std::string to_string() const;
  /// Throws ParseError; returns the canonical form.
  static CFExpansion parse(const std::string& text);
  /// Shortest equivalent period and preperiod.
  CFExpansion canonical() const;
};

CFExpansion cf_expand(const QuadraticSurd& x);

/// Exact value of an expansion.
QuadraticSurd cf_value(const CFExpansion& e);

/// x > 1: x - 1; 0 < x < 1: 1/x; x < 0: x + 1. Throws PreconditionError on
/// rational input.
QuadraticSurd f_step(const QuadraticSurd& x);

/// The same move on digits: decrement a0, drop it, or increment it.
CFExpansion f_digits(const CFExpansion& e);

/// Expansion of -x.
CFExpansion cf_negate(const CFExpansion& e);

/// Expansion of 1/x for irrational x, by digit rewriting. Throws
/// PreconditionError for finite expansions.
CFExpansion cf_reciprocal(const CFExpansion& e);

/// Shared suffix test. Rationals form one orbit. Throws PreconditionError
/// when exactly one expansion is finite.
bool tail_equivalent(const CFExpansion& e1, const CFExpansion& e2);

/// x, f(x), ..., f^steps(x).
std::vector<QuadraticSurd> end_selection_ray(const QuadraticSurd& x, int steps);

}  // namespace acs
