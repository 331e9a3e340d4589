#include "acs/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "acs/error.hpp"

namespace acs {

void check_piece_count(int n) {
  if (n < kMinPieces || n > kMaxPieces) {
    throw CapacityError("piece count " + std::to_string(n) + " outside [2,16]");
  }
}

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (m & (Mask{1} << i)) {
      if (!first) os << ',';
      os << i;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

PieceSubset::PieceSubset(Mask m, int pieces) : mask(m), n(pieces) {
  check_piece_count(pieces);
  if (!is_proper(m, pieces)) {
    throw PreconditionError("subset " + mask_to_string(m) + " is not a nonempty proper subset of " +
                            std::to_string(pieces) + " pieces");
  }
}

PieceSubset PieceSubset::of(std::initializer_list<int> pieces, int n) {
  Mask m = 0;
  for (int p : pieces) m |= Mask{1} << p;
  return PieceSubset(m, n);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), Mask{0});
  }
  Mask find(Mask x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller root so that roots end up as class minima.
  void unite(Mask a, Mask b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<Mask> parent_;
};

void check_pair(int n, const RelationPair& p) {
  if (p.s.n != n || p.t.n != n) throw PreconditionError("relation pair over a different piece count");
  if (!is_proper(p.s.mask, n) || !is_proper(p.t.mask, n)) {
    throw PreconditionError("relation pair contains an improper subset");
  }
}

}  // namespace

CongruenceSystem::CongruenceSystem(int n) : n_(n) {
  check_piece_count(n);
  rep_.resize(std::size_t{1} << n);
  std::iota(rep_.begin(), rep_.end(), Mask{0});
}

CongruenceSystem CongruenceSystem::from_classes(int n, const std::vector<std::vector<Mask>>& classes) {
  CongruenceSystem e(n);
  const Mask full = full_mask(n);
  std::vector<int> seen(std::size_t{1} << n, 0);
  for (const auto& cls : classes) {
    if (cls.empty()) throw ParseError("empty class");
    Mask least = *std::min_element(cls.begin(), cls.end());
    for (Mask m : cls) {
      if (!is_proper(m, n)) throw ParseError("class member " + std::to_string(m) + " is not proper");
      if (seen[m]++) throw ParseError("mask " + std::to_string(m) + " listed twice");
      e.rep_[m] = least;
    }
  }
  for (Mask m = 1; m < full; ++m) {
    if (!seen[m]) throw ParseError("mask " + std::to_string(m) + " missing from classes");
  }
  for (Mask m = 1; m < full; ++m) {
    Mask r = e.rep_[m];
    if (e.rep_[complement(m, n)] != e.rep_[complement(r, n)]) {
      throw ParseError("classes are not closed under complement");
    }
  }
  return e;
}

std::vector<std::vector<Mask>> CongruenceSystem::classes() const {
  const Mask full = full_mask(n_);
  std::vector<std::vector<Mask>> out;
  std::vector<int> index(rep_.size(), -1);
  for (Mask m = 1; m < full; ++m) {
    Mask r = rep_[m];
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(index[r])].push_back(m);
  }
  return out;
}

std::vector<Mask> CongruenceSystem::class_of(Mask m) const {
  std::vector<Mask> out;
  const Mask full = full_mask(n_);
  for (Mask x = 1; x < full; ++x) {
    if (rep_[x] == rep_[m]) out.push_back(x);
  }
  return out;
}

CongruenceSystem closure(int n, const std::vector<RelationPair>& pairs) {
  check_piece_count(n);
  UnionFind uf(std::size_t{1} << n);
  // Uniting both (S,T) and (~S,~T) suffices: any chain between U and V maps
  // to a chain between ~U and ~V under complementation.
  for (const auto& p : pairs) {
    check_pair(n, p);
    uf.unite(p.s.mask, p.t.mask);
    uf.unite(complement(p.s.mask, n), complement(p.t.mask, n));
  }
  CongruenceSystem e(n);
  const Mask full = full_mask(n);
  for (Mask m = 1; m < full; ++m) e.rep_[m] = uf.find(m);
  return e;
}

bool is_non_complementing(const CongruenceSystem& e) {
  const int n = e.pieces();
  const Mask full = full_mask(n);
  for (Mask m = 1; m < full; ++m) {
    if (e.related(m, complement(m, n))) return false;
  }
  return true;
}

namespace {

struct ClassIndex {
  std::vector<int> of;                    // mask -> class id
  std::vector<std::vector<Mask>> members;  // class id -> ascending masks
};

ClassIndex index_classes(const CongruenceSystem& e) {
  ClassIndex ci;
  ci.members = e.classes();
  ci.of.assign(std::size_t{1} << e.pieces(), -1);
  for (std::size_t c = 0; c < ci.members.size(); ++c) {
    for (Mask m : ci.members[c]) ci.of[m] = static_cast<int>(c);
  }
  return ci;
}

struct Candidate {
  std::size_t k = 0;
  Mask v0 = 0;
  Mask wk = 0;
  int cls = -1;
};

bool strictly_inside(Mask w, Mask v) { return (w & ~v) == 0 && w != v; }

}  // namespace

ExpansionResult is_non_expanding(const CongruenceSystem& e) {
  const int n = e.pieces();
  const Mask full = full_mask(n);
  const ClassIndex ci = index_classes(e);
  const std::size_t num_classes = ci.members.size();

  std::optional<Candidate> best;
  std::optional<ExpansionWitness> best_witness;

  std::vector<int> depth(num_classes);
  std::vector<Mask> parent_w(num_classes);
  std::vector<Mask> via_v(num_classes);

  for (Mask v0 = 1; v0 < full; ++v0) {
    std::fill(depth.begin(), depth.end(), -1);
    const int c0 = ci.of[v0];
    depth[static_cast<std::size_t>(c0)] = 0;
    via_v[static_cast<std::size_t>(c0)] = v0;
    std::vector<int> frontier{c0};
    std::optional<Candidate> found;
    for (std::size_t k = 0; !frontier.empty(); ++k) {
      if (best && k >= best->k) break;
      for (int c : frontier) {
        for (Mask w : ci.members[static_cast<std::size_t>(c)]) {
          if (!strictly_inside(w, v0)) continue;
          if (!found || w < found->wk) found = Candidate{k, v0, w, c};
          break;  // members are ascending
        }
      }
      if (found) break;
      std::vector<int> next;
      for (int c : frontier) {
        for (Mask w : ci.members[static_cast<std::size_t>(c)]) {
          const Mask rest = complement(w, n);
          // Enumerate every superset V = w | s of w, s a submask of ~w.
          for (Mask s = rest;; s = (s - 1) & rest) {
            const Mask v = w | s;
            if (v != full) {
              const int d = ci.of[v];
              if (depth[static_cast<std::size_t>(d)] < 0) {
                depth[static_cast<std::size_t>(d)] = static_cast<int>(k) + 1;
                parent_w[static_cast<std::size_t>(d)] = w;
                via_v[static_cast<std::size_t>(d)] = v;
                next.push_back(d);
              }
            }
            if (s == 0) break;
          }
        }
      }
      frontier = std::move(next);
    }
    if (!found) continue;

    ExpansionWitness wit;
    Mask w = found->wk;
    int c = found->cls;
    for (;;) {
      wit.w.push_back(w);
      wit.v.push_back(via_v[static_cast<std::size_t>(c)]);
      if (c == c0 && depth[static_cast<std::size_t>(c)] == 0) break;
      w = parent_w[static_cast<std::size_t>(c)];
      c = ci.of[w];
    }
    std::reverse(wit.v.begin(), wit.v.end());
    std::reverse(wit.w.begin(), wit.w.end());
    best = found;
    best_witness = std::move(wit);
  }

  ExpansionResult out;
  if (best_witness) {
    out.non_expanding = false;
    out.witness = std::move(best_witness);
  }
  return out;
}

bool validate_witness(const CongruenceSystem& e, const ExpansionWitness& w) {
  const int n = e.pieces();
  if (w.v.empty() || w.v.size() != w.w.size()) return false;
  for (std::size_t i = 0; i < w.v.size(); ++i) {
    if (!is_proper(w.v[i], n) || !is_proper(w.w[i], n)) return false;
    if (!e.related(w.v[i], w.w[i])) return false;
    if (i + 1 < w.v.size() && (w.w[i] & ~w.v[i + 1]) != 0) return false;
  }
  return strictly_inside(w.w.back(), w.v.front());
}

std::vector<RelationPair> complementary_pairs(const CongruenceSystem& e) {
  const int n = e.pieces();
  const Mask full = full_mask(n);
  std::vector<RelationPair> out;
  for (Mask m = 1; m < full; ++m) {
    const Mask c = complement(m, n);
    if (m < c && e.related(m, c)) out.push_back({PieceSubset(m, n), PieceSubset(c, n)});
  }
  return out;
}

GeneratingSet minimize_good_generating(const CongruenceSystem& e, const GeneratingSet& seed) {
  const int n = e.pieces();
  if (seed.n != 0 && seed.n != n) throw PreconditionError("seed generating set has a different piece count");
  const std::vector<RelationPair> forced = complementary_pairs(e);
  auto is_forced = [&](const RelationPair& p) {
    return std::any_of(forced.begin(), forced.end(), [&](const RelationPair& f) {
      return (f.s == p.s && f.t == p.t) || (f.s == p.t && f.t == p.s);
    });
  };
  std::vector<RelationPair> kept;
  for (const auto& p : seed.pairs) {
    if (!is_forced(p)) kept.push_back(p);
  }
  auto generates = [&](const std::vector<RelationPair>& optional_pairs) {
    std::vector<RelationPair> all = forced;
    all.insert(all.end(), optional_pairs.begin(), optional_pairs.end());
    return closure(n, all) == e;
  };
  if (!generates(kept)) throw GenerationError("seed together with the complementary pairs does not generate the system");
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<RelationPair> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates(trial)) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  GeneratingSet out{n, forced};
  out.pairs.insert(out.pairs.end(), kept.begin(), kept.end());
  return out;
}

PresetSystem preset(Preset name, int n) {
  switch (name) {
    case Preset::kDivisibility: {
      check_piece_count(n);
      GeneratingSet g{n, {}};
      for (int i = 0; i + 1 < n; ++i) {
        g.pairs.push_back({PieceSubset::of({i}, n), PieceSubset::of({i + 1}, n)});
      }
      return {closure(n, g.pairs), g};
    }
    case Preset::kParadoxical: {
      if (n != 4) throw PreconditionError("the paradoxical preset is defined for n = 4 only");
      GeneratingSet g{4,
                      {{PieceSubset::of({0}, 4), PieceSubset::of({0, 1, 2}, 4)},
                       {PieceSubset::of({1}, 4), PieceSubset::of({0, 1, 3}, 4)}}};
      return {closure(4, g.pairs), g};
    }
  }
  throw PreconditionError("unknown preset");
}

Preset parse_preset(const std::string& name) {
  if (name == "divisibility") return Preset::kDivisibility;
  if (name == "paradoxical") return Preset::kParadoxical;
  throw PreconditionError("unsupported preset '" + name + "'");
}

}  // namespace acs
