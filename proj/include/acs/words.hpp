#pragma once

// Reduced words in free products of Z and Z/2Z factors, one factor per
// relation pair, and the piece-labeling constraints they induce.
//
// Words are stored innermost-first: letters[0] is applied first. The text
// form lists letters in the same order, e.g. "g0 g1' g0".

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acs/congruence.hpp"

namespace acs {

/// A possibly empty or full set of pieces.
struct LabelSet {
  Mask mask = 0;
  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

struct Letter {
  int gen = 0;
  int sign = +1;  // involution generators always carry +1

  friend bool operator==(const Letter&, const Letter&) = default;
  /// Generator index first, then + before -.
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;
  }
};

using Word = std::vector<Letter>;

class Presentation {
 public:
  Presentation() = default;
  /// Derives the involution flags from the pairs (T_i == ~S_i).
  explicit Presentation(GeneratingSet genset);

  int pieces() const { return genset_.n; }
  int generators() const { return static_cast<int>(genset_.pairs.size()); }
  bool involution(int gen) const { return involution_.at(static_cast<std::size_t>(gen)); }
  const GeneratingSet& genset() const { return genset_; }

  /// Letters in lex order: g0, g0', g1, ... (involutions contribute one letter).
  const std::vector<Letter>& alphabet() const { return alphabet_; }

  Letter inverse(Letter l) const;

 private:
  GeneratingSet genset_;
  std::vector<bool> involution_;
  std::vector<Letter> alphabet_;
};

/// X/Y sets of a letter: n_i in X iff n_{i+1} in Y.
struct Transfer {
  Mask x = 0;
  Mask y = 0;
};

Transfer transfer(Letter letter, const Presentation& p);

bool is_reduced(const Word& w, const Presentation& p);

/// One labeling step: the labels reachable after `t` from any label in `from`.
Mask step_labels(Mask from, Transfer t, int n);

/// Feasible final labels over all labelings whose first label lies in `start`.
LabelSet propagate(const Word& w, LabelSet start, const Presentation& p);

struct BadPair {
  int k = 0;  // final label
  int m = 0;  // initial label
  friend bool operator==(const BadPair&, const BadPair&) = default;
};

/// Lex-least (k, m) such that no labeling runs from m to k, if any. The
/// empty word is never bad.
std::optional<BadPair> is_bad(const Word& w, const Presentation& p);

/// Lex-least labeling n_0..n_l of `w` with n_0 in `first` and n_l in `last`.
std::optional<std::vector<int>> lex_least_labeling(const std::vector<Transfer>& steps, int n,
                                                   Mask first, Mask last);
std::optional<std::vector<int>> lex_least_labeling(const Word& w, const Presentation& p,
                                                   Mask first, Mask last);

/// Calls `visit` on every reduced word of exactly `length` letters, in lex order.
void for_each_reduced(const Presentation& p, int length, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_reduced(const Presentation& p, int length);

/// Number of reduced words of the given length, by the growth recurrence.
std::uint64_t reduced_word_count(const Presentation& p, int length);

struct BadWordBound {
  int r = 0;
  /// bad_counts[L] is the number of bad reduced words of length L, 0 <= L <= r.
  std::vector<std::uint64_t> bad_counts;
};

/// Least r >= 1 with no bad reduced word of length r (r = 0 without
/// generators). Extends only bad words, since extensions of non-bad words are
/// never bad. Throws NoBoundError if bad words persist through length `cap`.
/// `on_bad` sees every bad word found, shortest first.
BadWordBound bad_word_bound(const Presentation& p, int cap,
                            const std::function<void(const Word&)>& on_bad = {});

std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);

}  // namespace acs
