#pragma once

// Exact quadratic surds (p + q sqrt(D)) / r with checked 64-bit storage, and
// Moebius transformations acting on them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace acs {

/// Checked helpers; throw OverflowError when a result leaves int64.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Integer square root: largest s with s*s <= v (v >= 0).
std::int64_t isqrt(std::int64_t v);

class QuadraticSurd {
 public:
  /// Zero.
  QuadraticSurd() = default;
  /// Normalizes: r > 0, gcd(p, q, r) = 1, D squarefree, q = D = 0 for rationals.
  /// Throws PreconditionError if r == 0 or D < 0.
  QuadraticSurd(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r = 1);

  static QuadraticSurd integer(std::int64_t v) { return QuadraticSurd(v, 0, 0, 1); }
  static QuadraticSurd rational(std::int64_t num, std::int64_t den) { return QuadraticSurd(num, 0, 0, den); }
  static QuadraticSurd sqrt(std::int64_t d) { return QuadraticSurd(0, 1, d, 1); }
  static QuadraticSurd infinity();

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t d() const { return d_; }
  std::int64_t r() const { return r_; }
  bool is_infinity() const { return inf_; }
  bool is_rational() const { return !inf_ && q_ == 0; }

  /// -1, 0 or +1. Throws on infinity.
  int sign() const;
  std::int64_t floor() const;
  QuadraticSurd conjugate() const;

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  /// Throws PreconditionError on division by zero.
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);
  QuadraticSurd operator-() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
  /// Total order on representations (not on values); for use as a map key.
  friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b);
  /// Value order; infinity is not comparable.
  static int compare(const QuadraticSurd& a, const QuadraticSurd& b);

  /// "(p+q*sqrt(D))/r" with trivial parts dropped, e.g. "sqrt(2)", "7/3", "inf".
  std::string to_string() const;
  /// Accepts the to_string forms plus spacing; throws ParseError.
  static QuadraticSurd parse(const std::string& text);

 private:
  friend struct SurdOps;
  /// Normalizes wide parts; `reduce` also makes the radicand squarefree.
  static QuadraticSurd from_wide(__int128 p, __int128 q, __int128 d, __int128 r, bool reduce);

  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t d_ = 0;
  std::int64_t r_ = 1;
  bool inf_ = false;
};

/// 2x2 integer matrix up to sign, acting by x -> (ax + b) / (cx + d).
struct Moebius {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws PreconditionError unless det is +1 or -1.
  static Moebius make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  std::int64_t det() const;
  /// Sign fixed so that the first nonzero of (c, d) is positive.
  Moebius normalized() const;
  Moebius inverse() const;
  bool is_identity() const;

  friend Moebius operator*(const Moebius& x, const Moebius& y);
  friend bool operator==(const Moebius& x, const Moebius& y) {
    const Moebius u = x.normalized();
    const Moebius v = y.normalized();
    return u.a == v.a && u.b == v.b && u.c == v.c && u.d == v.d;
  }
  friend bool operator<(const Moebius& x, const Moebius& y);
  std::string to_string() const;
};

/// alpha: x + 1, beta: -1/x, gamma: 1/x.
Moebius moebius_alpha();
Moebius moebius_beta();
Moebius moebius_gamma();

/// Exact image; infinity maps to a/c and the pole to infinity.
QuadraticSurd moebius_apply(const Moebius& m, const QuadraticSurd& x);

struct FixedPoints {
  int count = 0;
  std::vector<QuadraticSurd> points;  // ascending, infinity last
};

/// Real projective fixed points. Throws PreconditionError on the identity.
FixedPoints fixed_points(const Moebius& m);

}  // namespace acs
