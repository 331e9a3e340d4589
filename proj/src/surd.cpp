#include "acs/surd.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "acs/error.hpp"

namespace acs {

namespace {

using i128 = __int128;

i128 mul128(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit product overflow");
  return out;
}

i128 add128(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit sum overflow");
  return out;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("value leaves the 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 isqrt128(i128 v) {
  if (v < 0) throw PreconditionError("square root of a negative number");
  if (v < 2) return v;
  // Newton from above: start at a power of two exceeding sqrt(v).
  int bits = 0;
  for (i128 t = v; t > 0; t >>= 1) ++bits;
  i128 x = i128{1} << ((bits + 1) / 2);
  for (;;) {
    const i128 y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Squarefree part of d, with the extracted square root multiplied into q.
void reduce_radicand(i128& q, i128& d) {
  for (i128 f = 2; f * f <= d; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      q = mul128(q, f);
    }
  }
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit sum overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit product overflow");
  return out;
}

std::int64_t isqrt(std::int64_t v) { return narrow(isqrt128(v)); }

QuadraticSurd::QuadraticSurd(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r) {
  if (d < 0) throw PreconditionError("negative radicand");
  *this = from_wide(p, q, d, r, true);
}

QuadraticSurd QuadraticSurd::from_wide(i128 p, i128 q, i128 d, i128 r, bool reduce) {
  if (r == 0) throw PreconditionError("zero denominator");
  if (reduce && d > 1) reduce_radicand(q, d);
  if (d == 1) {
    p = add128(p, q);
    q = 0;
  }
  if (q == 0 || d == 0) {
    q = 0;
    d = 0;
  }
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  const i128 g = gcd128(gcd128(p, q), r);
  if (g > 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  QuadraticSurd out;
  out.p_ = narrow(p);
  out.q_ = narrow(q);
  out.d_ = narrow(d);
  out.r_ = narrow(r);
  return out;
}

QuadraticSurd QuadraticSurd::infinity() {
  QuadraticSurd s;
  s.inf_ = true;
  return s;
}

struct SurdOps {
  static std::int64_t common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.inf_ || b.inf_) throw PreconditionError("arithmetic on infinity");
    if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) throw PreconditionError("surds with different radicands");
    return a.d_ != 0 ? a.d_ : b.d_;
  }
};

int QuadraticSurd::sign() const {
  if (inf_) throw PreconditionError("sign of infinity");
  if (q_ == 0) return (p_ > 0) - (p_ < 0);
  if (p_ >= 0 && q_ > 0) return 1;
  if (p_ <= 0 && q_ < 0) return -1;
  const i128 pp = mul128(p_, p_);
  const i128 qq = mul128(mul128(q_, q_), d_);
  // p^2 == q^2 D is impossible for squarefree D > 1.
  if (p_ > 0) return pp > qq ? 1 : -1;
  return qq > pp ? 1 : -1;
}

std::int64_t QuadraticSurd::floor() const {
  if (inf_) throw PreconditionError("floor of infinity");
  i128 whole = p_;
  if (q_ != 0) {
    const i128 sq = mul128(mul128(q_, q_), d_);
    const i128 s = isqrt128(sq);
    whole = add128(whole, q_ > 0 ? s : (s * s == sq ? -s : -s - 1));
  }
  return narrow(floor_div(whole, r_));
}

QuadraticSurd QuadraticSurd::conjugate() const {
  if (inf_) return *this;
  return from_wide(p_, -i128{q_}, d_, r_, false);
}

QuadraticSurd QuadraticSurd::operator-() const {
  if (inf_) return *this;
  return from_wide(-i128{p_}, -i128{q_}, d_, r_, false);
}

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  const std::int64_t d = SurdOps::common_radicand(a, b);
  const i128 p = add128(mul128(a.p(), b.r()), mul128(b.p(), a.r()));
  const i128 q = add128(mul128(a.q(), b.r()), mul128(b.q(), a.r()));
  return QuadraticSurd::from_wide(p, q, d, mul128(a.r(), b.r()), false);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const std::int64_t d = SurdOps::common_radicand(a, b);
  const i128 p = add128(mul128(a.p(), b.p()), mul128(mul128(a.q(), b.q()), d));
  const i128 q = add128(mul128(a.p(), b.q()), mul128(a.q(), b.p()));
  return QuadraticSurd::from_wide(p, q, d, mul128(a.r(), b.r()), false);
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
  const std::int64_t d = SurdOps::common_radicand(a, b);
  if (b.p() == 0 && b.q() == 0) throw PreconditionError("division by zero");
  // 1/b = r (p - q sqrt D) / (p^2 - q^2 D)
  const i128 norm = add128(mul128(b.p(), b.p()), -mul128(mul128(b.q(), b.q()), d));
  const QuadraticSurd inv = QuadraticSurd::from_wide(mul128(b.r(), b.p()), -mul128(b.r(), b.q()), d, norm, false);
  return a * inv;
}

bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) {
  return std::make_tuple(a.inf_, a.d_, a.p_, a.q_, a.r_) < std::make_tuple(b.inf_, b.d_, b.p_, b.q_, b.r_);
}

int QuadraticSurd::compare(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign(); }

std::string QuadraticSurd::to_string() const {
  if (inf_) return "inf";
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
    if (r_ != 1) os << "/" << r_;
    return os.str();
  }
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string radical;
  const std::int64_t aq = q_ < 0 ? -q_ : q_;
  radical = aq == 1 ? root : std::to_string(aq) + "*" + root;
  if (p_ == 0) {
    os << (q_ < 0 ? "-" : "") << radical;
    if (r_ != 1) os << "/" << r_;
    return os.str();
  }
  const std::string num = std::to_string(p_) + (q_ < 0 ? "-" : "+") + radical;
  if (r_ == 1) return num;
  os << "(" << num << ")/" << r_;
  return os.str();
}

namespace {

class SurdParser {
 public:
  explicit SurdParser(const std::string& text) : s_(text) {}

  QuadraticSurd parse() {
    skip();
    if (s_.compare(pos_, 3, "inf") == 0) {
      pos_ += 3;
      end();
      return QuadraticSurd::infinity();
    }
    std::int64_t p = 0, q = 0, d = 0;
    bool paren = false;
    if (peek() == '(') {
      ++pos_;
      paren = true;
    }
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      skip();
      std::int64_t coef = 1;
      bool has_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = number();
        has_number = true;
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
          if (s_.compare(pos_, 4, "sqrt") != 0) fail("expected sqrt after '*'");
        }
      }
      if (s_.compare(pos_, 4, "sqrt") == 0) {
        pos_ += 4;
        expect('(');
        const std::int64_t rad = number();
        expect(')');
        if (d != 0 && d != rad) fail("two different radicands");
        d = rad;
        q = checked_add(q, sign * coef);
      } else if (has_number) {
        p = checked_add(p, sign * coef);
      } else {
        fail("expected a number or sqrt");
      }
      first = false;
    }
    if (paren) expect(')');
    std::int64_t r = 1;
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      }
      r = sign * number();
    }
    end();
    if (r == 0) fail("zero denominator");
    return QuadraticSurd(p, q, d, r);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }
  std::int64_t number() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = checked_add(checked_mul(v, 10), s_[pos_++] - '0');
    return v;
  }
  void end() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("surd '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticSurd QuadraticSurd::parse(const std::string& text) { return SurdParser(text).parse(); }

Moebius Moebius::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Moebius m{a, b, c, d};
  const std::int64_t det = m.det();
  if (det != 1 && det != -1) throw PreconditionError("Moebius determinant " + std::to_string(det) + " is not +-1");
  return m;
}

std::int64_t Moebius::det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

Moebius Moebius::normalized() const {
  if (c < 0 || (c == 0 && d < 0)) return {-a, -b, -c, -d};
  return *this;
}

Moebius Moebius::inverse() const { return Moebius{d, -b, -c, a}.normalized(); }

bool Moebius::is_identity() const {
  const Moebius m = normalized();
  return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1;
}

Moebius operator*(const Moebius& x, const Moebius& y) {
  return Moebius{checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
                 checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
                 checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
                 checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))}
      .normalized();
}

bool operator<(const Moebius& x, const Moebius& y) {
  const Moebius u = x.normalized();
  const Moebius v = y.normalized();
  return std::make_tuple(u.a, u.b, u.c, u.d) < std::make_tuple(v.a, v.b, v.c, v.d);
}

std::string Moebius::to_string() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

Moebius moebius_alpha() { return {1, 1, 0, 1}; }
Moebius moebius_beta() { return {0, -1, 1, 0}; }
Moebius moebius_gamma() { return {0, 1, 1, 0}; }

QuadraticSurd moebius_apply(const Moebius& m, const QuadraticSurd& x) {
  if (m.det() != 1 && m.det() != -1) throw PreconditionError("degenerate Moebius transformation");
  if (x.is_infinity()) {
    if (m.c == 0) return QuadraticSurd::infinity();
    return QuadraticSurd::rational(m.a, m.c);
  }
  const QuadraticSurd den = QuadraticSurd::integer(m.c) * x + QuadraticSurd::integer(m.d);
  if (den.sign() == 0) return QuadraticSurd::infinity();
  return (QuadraticSurd::integer(m.a) * x + QuadraticSurd::integer(m.b)) / den;
}

FixedPoints fixed_points(const Moebius& m) {
  if (m.is_identity()) throw PreconditionError("the identity fixes every point");
  FixedPoints out;
  if (m.c == 0) {
    if (m.a != m.d) out.points.push_back(QuadraticSurd::rational(m.b, checked_add(m.d, -m.a)));
    out.points.push_back(QuadraticSurd::infinity());
  } else {
    // c x^2 + (d - a) x - b = 0
    const std::int64_t diff = checked_add(m.a, -m.d);
    const std::int64_t disc = checked_add(checked_mul(diff, diff), checked_mul(4, checked_mul(m.b, m.c)));
    const std::int64_t den = checked_mul(2, m.c);
    if (disc == 0) {
      out.points.push_back(QuadraticSurd::rational(diff, den));
    } else if (disc > 0) {
      QuadraticSurd lo(diff, -1, disc, den);
      QuadraticSurd hi(diff, 1, disc, den);
      if (QuadraticSurd::compare(lo, hi) > 0) std::swap(lo, hi);
      out.points = {lo, hi};
    }
  }
  out.count = static_cast<int>(out.points.size());
  return out;
}

}  // namespace acs
