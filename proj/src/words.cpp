#include "acs/words.hpp"

#include <sstream>

#include "acs/error.hpp"

namespace acs {

Presentation::Presentation(GeneratingSet genset) : genset_(std::move(genset)) {
  const int n = genset_.n;
  for (std::size_t i = 0; i < genset_.pairs.size(); ++i) {
    const auto& pr = genset_.pairs[i];
    const bool inv = pr.t.mask == complement(pr.s.mask, n);
    involution_.push_back(inv);
    alphabet_.push_back({static_cast<int>(i), +1});
    if (!inv) alphabet_.push_back({static_cast<int>(i), -1});
  }
}

Letter Presentation::inverse(Letter l) const {
  if (involution(l.gen)) return l;
  return {l.gen, -l.sign};
}

Transfer transfer(Letter letter, const Presentation& p) {
  if (letter.gen < 0 || letter.gen >= p.generators()) {
    throw PreconditionError("generator index " + std::to_string(letter.gen) + " out of range");
  }
  const auto& pr = p.genset().pairs[static_cast<std::size_t>(letter.gen)];
  if (letter.sign > 0) return {pr.s.mask, pr.t.mask};
  return {pr.t.mask, pr.s.mask};
}

bool is_reduced(const Word& w, const Presentation& p) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen < 0 || w[i].gen >= p.generators()) return false;
    if (p.involution(w[i].gen) && w[i].sign != +1) return false;
    if (i > 0 && w[i] == p.inverse(w[i - 1])) return false;
  }
  return true;
}

Mask step_labels(Mask from, Transfer t, int n) {
  Mask out = 0;
  if (from & t.x) out |= t.y;
  if (from & ~t.x) out |= complement(t.y, n);
  return out;
}

LabelSet propagate(const Word& w, LabelSet start, const Presentation& p) {
  const int n = p.pieces();
  Mask cur = start.mask & full_mask(n);
  for (const Letter& l : w) cur = step_labels(cur, transfer(l, p), n);
  return {cur};
}

std::optional<BadPair> is_bad(const Word& w, const Presentation& p) {
  if (w.empty()) return std::nullopt;  // a single label is both ends
  const int n = p.pieces();
  std::vector<Mask> reach(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) reach[static_cast<std::size_t>(m)] = propagate(w, {Mask{1} << m}, p).mask;
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if (!(reach[static_cast<std::size_t>(m)] & (Mask{1} << k))) return BadPair{k, m};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> lex_least_labeling(const std::vector<Transfer>& steps, int n, Mask first,
                                                   Mask last) {
  const Mask full = full_mask(n);
  // feasible[i]: labels at position i from which some label in `last` is reachable.
  std::vector<Mask> feasible(steps.size() + 1);
  feasible[steps.size()] = last & full;
  for (std::size_t i = steps.size(); i-- > 0;) {
    const Transfer t = steps[i];
    const Mask next = feasible[i + 1];
    Mask cur = 0;
    if (next & t.y) cur |= t.x;
    if (next & ~t.y & full) cur |= complement(t.x, n);
    feasible[i] = cur;
  }
  std::vector<int> labels;
  labels.reserve(steps.size() + 1);
  Mask allowed = first & feasible[0];
  for (std::size_t i = 0;; ++i) {
    if (allowed == 0) return std::nullopt;
    int label = 0;
    while (!(allowed & (Mask{1} << label))) ++label;
    labels.push_back(label);
    if (i == steps.size()) break;
    allowed = step_labels(Mask{1} << label, steps[i], n) & feasible[i + 1];
  }
  return labels;
}

std::optional<std::vector<int>> lex_least_labeling(const Word& w, const Presentation& p, Mask first,
                                                   Mask last) {
  std::vector<Transfer> steps;
  steps.reserve(w.size());
  for (const Letter& l : w) steps.push_back(transfer(l, p));
  return lex_least_labeling(steps, p.pieces(), first, last);
}

void for_each_reduced(const Presentation& p, int length, const std::function<void(const Word&)>& visit) {
  if (length < 0) throw PreconditionError("negative word length");
  Word w;
  w.reserve(static_cast<std::size_t>(length));
  const auto& alphabet = p.alphabet();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(w.size()) == length) {
      visit(w);
      return;
    }
    for (const Letter& l : alphabet) {
      if (!w.empty() && l == p.inverse(w.back())) continue;
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

std::vector<Word> enumerate_reduced(const Presentation& p, int length) {
  std::vector<Word> out;
  for_each_reduced(p, length, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::uint64_t reduced_word_count(const Presentation& p, int length) {
  if (length == 0) return 1;
  const std::uint64_t letters = p.alphabet().size();
  if (letters == 0) return 0;
  // Every letter has exactly one forbidden successor (its inverse).
  std::uint64_t count = letters;
  for (int i = 1; i < length; ++i) count *= letters - 1;
  return count;
}

namespace {

struct BadState {
  Word word;
  std::vector<Mask> reach;  // per starting label
};

bool state_is_bad(const std::vector<Mask>& reach, Mask full) {
  for (Mask r : reach) {
    if (r != full) return true;
  }
  return false;
}

}  // namespace

BadWordBound bad_word_bound(const Presentation& p, int cap, const std::function<void(const Word&)>& on_bad) {
  const int n = p.pieces();
  const Mask full = full_mask(n);
  BadWordBound out;
  out.bad_counts.push_back(0);  // the empty word is never bad
  if (p.generators() == 0) return out;

  std::vector<BadState> level;
  {
    BadState root;
    for (int m = 0; m < n; ++m) root.reach.push_back(Mask{1} << m);
    level.push_back(std::move(root));
  }
  for (int len = 1; len <= cap; ++len) {
    std::vector<BadState> next;
    for (const BadState& s : level) {
      for (const Letter& l : p.alphabet()) {
        if (!s.word.empty() && l == p.inverse(s.word.back())) continue;
        const Transfer t = transfer(l, p);
        BadState child;
        child.reach.reserve(s.reach.size());
        for (Mask r : s.reach) child.reach.push_back(step_labels(r, t, n));
        if (!state_is_bad(child.reach, full)) continue;
        child.word = s.word;
        child.word.push_back(l);
        if (on_bad) on_bad(child.word);
        next.push_back(std::move(child));
      }
    }
    out.bad_counts.push_back(next.size());
    if (next.empty()) {
      out.r = len;
      return out;
    }
    level = std::move(next);
  }
  throw NoBoundError("bad words persist through length " + std::to_string(cap),
                     word_to_string(level.front().word));
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'g' << w[i].gen;
    if (w[i].sign < 0) os << '\'';
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 'g') throw ParseError("bad word token '" + tok + "'");
    int sign = +1;
    std::string digits = tok.substr(1);
    if (digits.back() == '\'') {
      sign = -1;
      digits.pop_back();
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad word token '" + tok + "'");
    }
    w.push_back({std::stoi(digits), sign});
  }
  return w;
}

}  // namespace acs
