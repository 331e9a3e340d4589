#include "acs/cfrac.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "acs/error.hpp"

namespace acs {

namespace {

using Digits = std::vector<std::int64_t>;

std::string join(const Digits& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

// Infinite digit stream a1, a2, ... of an expansion.
struct Tail {
  Digits pre;
  Digits period;

  // Removes and returns the first digit.
  std::int64_t pop() {
    if (!pre.empty()) {
      const std::int64_t v = pre.front();
      pre.erase(pre.begin());
      return v;
    }
    if (period.empty()) throw PreconditionError("expansion ran out of digits");
    const std::int64_t v = period.front();
    std::rotate(period.begin(), period.begin() + 1, period.end());
    return v;
  }
  bool empty() const { return pre.empty() && period.empty(); }
};

// Rewrites u, 0, v into u + v (a zero digit elides itself). `more` supplies
// the digit after a trailing zero.
Digits elide_zeros(Digits d, Tail& more) {
  for (std::size_t i = 1; i < d.size();) {
    if (d[i] != 0) {
      ++i;
      continue;
    }
    if (i + 1 == d.size()) d.push_back(more.pop());
    d[i - 1] += d[i + 1];
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(i), d.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
  return d;
}

CFExpansion assemble(std::int64_t a0, Digits prefix, const Tail& tail) {
  CFExpansion e;
  e.a0 = a0;
  e.preperiod = std::move(prefix);
  e.preperiod.insert(e.preperiod.end(), tail.pre.begin(), tail.pre.end());
  e.period = tail.period;
  return e.canonical();
}

}  // namespace

std::string CFExpansion::to_string() const {
  return std::to_string(a0) + ";[" + join(preperiod) + "];(" + join(period) + ")";
}

CFExpansion CFExpansion::parse(const std::string& text) {
  auto fail = [&](const std::string& why) -> void { throw ParseError("expansion '" + text + "': " + why); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto semi1 = s.find(';');
  if (semi1 == std::string::npos) fail("missing ';'");
  CFExpansion e;
  try {
    e.a0 = std::stoll(s.substr(0, semi1));
  } catch (const std::exception&) {
    fail("bad a0");
  }
  auto list = [&](std::size_t& pos, char open, char close) {
    Digits out;
    if (pos >= s.size() || s[pos] != open) fail(std::string("expected '") + open + "'");
    const auto end = s.find(close, pos);
    if (end == std::string::npos) fail(std::string("missing '") + close + "'");
    std::stringstream ss(s.substr(pos + 1, end - pos - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) fail("empty digit");
      std::int64_t v = 0;
      try {
        v = std::stoll(item);
      } catch (const std::exception&) {
        fail("bad digit '" + item + "'");
      }
      if (v < 1) fail("digits after a0 must be positive");
      out.push_back(v);
    }
    pos = end + 1;
    return out;
  };
  std::size_t pos = semi1 + 1;
  e.preperiod = list(pos, '[', ']');
  if (pos >= s.size() || s[pos] != ';') fail("missing second ';'");
  ++pos;
  e.period = list(pos, '(', ')');
  if (pos != s.size()) fail("trailing characters");
  return e.canonical();
}

CFExpansion CFExpansion::canonical() const {
  CFExpansion e = *this;
  if (e.period.empty()) {
    // [.., k, 1] equals [.., k + 1].
    if (e.preperiod.size() >= 2 && e.preperiod.back() == 1) {
      e.preperiod.pop_back();
      ++e.preperiod.back();
    } else if (e.preperiod.size() == 1 && e.preperiod.back() == 1) {
      e.preperiod.clear();
      ++e.a0;
    }
    return e;
  }
  const std::size_t n = e.period.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = e.period[i] == e.period[i - len];
    if (repeats) {
      e.period.resize(len);
      break;
    }
  }
  while (!e.preperiod.empty() && e.preperiod.back() == e.period.back()) {
    e.preperiod.pop_back();
    std::rotate(e.period.rbegin(), e.period.rbegin() + 1, e.period.rend());
  }
  return e;
}

CFExpansion cf_expand(const QuadraticSurd& x) {
  if (x.is_infinity()) throw PreconditionError("infinity has no continued fraction");
  CFExpansion e;
  e.a0 = x.floor();
  QuadraticSurd rest = x - QuadraticSurd::integer(e.a0);
  Digits digits;
  std::map<QuadraticSurd, std::size_t> seen;  // state -> index of its digit
  while (rest.sign() != 0) {
    const QuadraticSurd y = QuadraticSurd::integer(1) / rest;
    auto [it, fresh] = seen.emplace(y, digits.size());
    if (!fresh) {
      e.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      e.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return e.canonical();
    }
    const std::int64_t a = y.floor();
    digits.push_back(a);
    rest = y - QuadraticSurd::integer(a);
  }
  e.preperiod = digits;
  return e.canonical();
}

QuadraticSurd cf_value(const CFExpansion& e) {
  const QuadraticSurd one = QuadraticSurd::integer(1);
  QuadraticSurd tail = QuadraticSurd::infinity();
  if (!e.period.empty()) {
    // The purely periodic part y > 1 is a root of c y^2 + (d - a) y - b, where
    // [[a,b],[c,d]] is the product of [[k,1],[1,0]] over the period. Entries
    // grow exponentially in the period length, so they are big integers until
    // the quadratic is made primitive.
    using boost::multiprecision::cpp_int;
    cpp_int a = 1, b = 0, c = 0, d = 1;
    for (std::int64_t k : e.period) {
      cpp_int na = a * k + b;
      cpp_int nc = c * k + d;
      b = std::move(a);
      d = std::move(c);
      a = std::move(na);
      c = std::move(nc);
    }
    cpp_int qa = c, qb = d - a, qc = -b;
    const cpp_int g = gcd(gcd(qa, qb), qc);
    qa /= g;
    qb /= g;
    qc /= g;
    const cpp_int disc = qb * qb - 4 * qa * qc;
    auto narrow = [](const cpp_int& v) {
      if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("expansion value exceeds 64-bit coefficients");
      return static_cast<std::int64_t>(v);
    };
    tail = QuadraticSurd(narrow(-qb), 1, narrow(disc), narrow(2 * qa));
    if (QuadraticSurd::compare(tail, one) < 0) tail = QuadraticSurd(narrow(-qb), -1, narrow(disc), narrow(2 * qa));
  }
  // Fold the head digits from the back: x = k + 1/x'.
  for (auto it = e.preperiod.rbegin(); it != e.preperiod.rend(); ++it) {
    tail = tail.is_infinity() ? QuadraticSurd::integer(*it) : QuadraticSurd::integer(*it) + one / tail;
  }
  return tail.is_infinity() ? QuadraticSurd::integer(e.a0) : QuadraticSurd::integer(e.a0) + one / tail;
}

QuadraticSurd f_step(const QuadraticSurd& x) {
  if (x.is_infinity() || x.is_rational()) throw PreconditionError("f is defined on irrationals only");
  if (QuadraticSurd::compare(x, QuadraticSurd::integer(1)) > 0) return x - QuadraticSurd::integer(1);
  if (x.sign() > 0) return QuadraticSurd::integer(1) / x;
  return x + QuadraticSurd::integer(1);
}

CFExpansion f_digits(const CFExpansion& e) {
  if (e.is_finite()) throw PreconditionError("f is defined on irrationals only");
  if (e.a0 != 0) {
    CFExpansion out = e;
    out.a0 += e.a0 > 0 ? -1 : 1;
    return out;
  }
  Tail t{e.preperiod, e.period};
  const std::int64_t a1 = t.pop();
  return assemble(a1, {}, t);
}

CFExpansion cf_negate(const CFExpansion& e) {
  Tail t{e.preperiod, e.period};
  if (t.empty()) return CFExpansion{-e.a0, {}, {}};
  // -(a0 + 1/(a1 + C)) = (-a0 - 1) + 1/(1 + 1/((a1 - 1) + C))
  const std::int64_t a1 = t.pop();
  if (a1 == 1 && t.empty()) return CFExpansion{-e.a0 - 1, {}, {}}.canonical();
  Digits prefix{1, a1 - 1};
  if (a1 == 1) {
    prefix = {1 + t.pop()};
  }
  return assemble(-e.a0 - 1, prefix, t);
}

CFExpansion cf_reciprocal(const CFExpansion& e) {
  if (e.is_finite()) throw PreconditionError("reciprocal needs an irrational expansion");
  Tail t{e.preperiod, e.period};
  if (e.a0 >= 1) {
    Digits prefix{e.a0};
    return assemble(0, prefix, t);
  }
  if (e.a0 == 0) {
    const std::int64_t a1 = t.pop();
    return assemble(a1, {}, t);
  }
  if (e.a0 == -1) {
    // -1 < x < 0: 1/x = -(1/(-x)) with -x in (0, 1).
    return cf_negate(cf_reciprocal(cf_negate(e)));
  }
  // x = a + 1/(b + C), a <= -2, b >= 1:
  // 1/x = -1 + 1/(1 + 1/((-a-2) + 1/(1 + 1/((b-1) + C))))
  const std::int64_t a = e.a0;
  const std::int64_t b = t.pop();
  const Digits prefix = elide_zeros({1, -a - 2, 1, b - 1}, t);
  return assemble(-1, prefix, t);
}

bool tail_equivalent(const CFExpansion& e1, const CFExpansion& e2) {
  if (e1.is_finite() != e2.is_finite()) throw PreconditionError("cannot compare a rational with an irrational");
  if (e1.is_finite()) return true;
  const CFExpansion a = e1.canonical();
  const CFExpansion b = e2.canonical();
  if (a.period.size() != b.period.size()) return false;
  // Eventually periodic streams share a suffix iff their periods are rotations.
  Digits doubled = a.period;
  doubled.insert(doubled.end(), a.period.begin(), a.period.end());
  return std::search(doubled.begin(), doubled.end(), b.period.begin(), b.period.end()) != doubled.end();
}

std::vector<QuadraticSurd> end_selection_ray(const QuadraticSurd& x, int steps) {
  if (steps < 0) throw PreconditionError("negative step count");
  std::vector<QuadraticSurd> ray{x};
  for (int i = 0; i < steps; ++i) ray.push_back(f_step(ray.back()));
  return ray;
}

}  // namespace acs
