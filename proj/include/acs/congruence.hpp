#pragma once

// Abstract systems of congruences on the proper subsets of {0..n-1}.
//
// Subsets are bitmasks (bit i set <=> piece i in the subset). A system is
// stored as a flat representative table indexed by mask; the representative
// of a class is its numerically least member.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acs {

using Mask = std::uint32_t;

constexpr int kMinPieces = 2;
constexpr int kMaxPieces = 16;

/// Mask with the low n bits set.
constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

/// Complement of `m` inside {0..n-1}.
constexpr Mask complement(Mask m, int n) { return full_mask(n) & ~m; }

/// True iff `m` is nonempty and not all of {0..n-1}.
constexpr bool is_proper(Mask m, int n) { return m != 0 && m != full_mask(n); }

/// Throws CapacityError unless 2 <= n <= 16.
void check_piece_count(int n);

/// Set-builder text form, e.g. "{0,2}".
std::string mask_to_string(Mask m);

/// A nonempty proper subset of the pieces.
struct PieceSubset {
  Mask mask = 0;
  int n = 0;

  PieceSubset() = default;
  /// Validates properness; throws PreconditionError otherwise.
  PieceSubset(Mask m, int pieces);
  static PieceSubset of(std::initializer_list<int> pieces, int n);

  PieceSubset complemented() const { return PieceSubset(complement(mask, n), n); }
  friend bool operator==(const PieceSubset&, const PieceSubset&) = default;
};

struct RelationPair {
  PieceSubset s;
  PieceSubset t;
  friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

struct GeneratingSet {
  int n = 0;
  std::vector<RelationPair> pairs;
  friend bool operator==(const GeneratingSet&, const GeneratingSet&) = default;
};

/// Chain V_0 E W_0 <= V_1 E W_1 <= ... <= V_k E W_k < V_0 (last inclusion strict).
struct ExpansionWitness {
  std::vector<Mask> v;
  std::vector<Mask> w;
  std::size_t length() const { return v.size(); }
};

class CongruenceSystem {
 public:
  /// The identity system: every proper subset is its own class.
  explicit CongruenceSystem(int n);

  /// Builds from an explicit class list. Validates that the classes partition
  /// the proper subsets and are complement-closed.
  static CongruenceSystem from_classes(int n, const std::vector<std::vector<Mask>>& classes);

  int pieces() const { return n_; }
  Mask representative(Mask m) const { return rep_[m]; }
  bool related(Mask a, Mask b) const { return rep_[a] == rep_[b]; }

  /// Classes in ascending order of representative; members ascending.
  std::vector<std::vector<Mask>> classes() const;

  /// Every member of the class of `m`, ascending.
  std::vector<Mask> class_of(Mask m) const;

  friend bool operator==(const CongruenceSystem&, const CongruenceSystem&) = default;

 private:
  friend CongruenceSystem closure(int n, const std::vector<RelationPair>& pairs);
  int n_;
  std::vector<Mask> rep_;  // indexed by mask; entries 0 and full are unused
};

/// Least complement-closed equivalence relation containing `pairs`.
CongruenceSystem closure(int n, const std::vector<RelationPair>& pairs);

bool is_non_complementing(const CongruenceSystem& e);

struct ExpansionResult {
  bool non_expanding = true;
  std::optional<ExpansionWitness> witness;
};

/// Searches for an expansion chain. The returned witness has minimal length,
/// ties broken by least V_0 and then least W_k.
ExpansionResult is_non_expanding(const CongruenceSystem& e);

/// Standalone re-check of a chain against `e`.
bool validate_witness(const CongruenceSystem& e, const ExpansionWitness& w);

/// All pairs (U, ~U) with U E ~U, reported once each with U < ~U.
std::vector<RelationPair> complementary_pairs(const CongruenceSystem& e);

/// Complementary pairs of `e` followed by the seed pairs that survive greedy
/// removal in list order.
GeneratingSet minimize_good_generating(const CongruenceSystem& e, const GeneratingSet& seed);

enum class Preset { kDivisibility, kParadoxical };

struct PresetSystem {
  CongruenceSystem system;
  GeneratingSet generators;
};

PresetSystem preset(Preset name, int n);

/// Parses "divisibility" / "paradoxical".
Preset parse_preset(const std::string& name);

}  // namespace acs
