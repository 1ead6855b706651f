// Copyright 2026 The Pokerforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hand/hand_eval.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "script/script.h"

namespace pokerforge {
namespace {

// A card with its wildcard resolved (or still open when `wild` and
// suit < 0).
struct ECard {
  int suit = -1;
  int value = -1;
  int special = -1;
  bool wild = false;
  bool null = false;
};

struct CAtom {
  AtomKind kind = AtomKind::kSameValue;
  int size = 0;
  std::vector<char> value_in;
  int special = -1;
  Comparison cmp = Comparison::kEqual;
};

struct CUnit {
  std::vector<CAtom> atoms;
  int size = 0;
  int sig = 0;
  bool consecutive = false;
  bool same_value = false;
};

struct CComb {
  const CombinationDef* def = nullptr;
  std::vector<CUnit> top;     // each independent
  std::vector<CUnit> groups;  // pairwise disjoint
  bool distinct = false;
  std::vector<CAtom> whole;   // ValueIn / CountSpecial over the whole hand
};

struct Candidate {
  unsigned mask = 0;
  std::vector<int> key;
  int value = -1;  // shared value of a same-value unit
};

struct Realized {
  std::vector<int> tiebreak;
  int high_rank = -1;
};

constexpr int kMaxCards = 16;

const std::vector<unsigned>& MasksOf(int n, int k) {
  static const auto table = [] {
    std::vector<std::vector<std::vector<unsigned>>> t(kMaxCards + 1);
    for (int m = 0; m <= kMaxCards; ++m) {
      t[m].resize(m + 1);
      for (unsigned mask = 0; mask < (1u << m); ++mask) t[m][std::popcount(mask)].push_back(mask);
    }
    return t;
  }();
  return table[n][k];
}

void ForEachCombination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Evaluator {
 public:
  Evaluator(const GameSpec& spec, const RankingStrategy& st) : spec_(spec), st_(st) {
    const int nv = static_cast<int>(spec.value_spec.ordered_values.size());
    rank_.resize(nv);
    for (int v = 0; v < nv; ++v) rank_[v] = v + 1;
    if (nv > 0 && st.AceLow()) rank_[nv - 1] = 0;
    suit_class_.assign(spec.suit_spec.suits.size(), 0);
    for (std::size_t c = 0; c < spec.suit_spec.rank_classes.size(); ++c) {
      for (const auto& sym : spec.suit_spec.rank_classes[c]) {
        for (std::size_t s = 0; s < spec.suit_spec.suits.size(); ++s) {
          if (spec.suit_spec.suits[s] == sym) suit_class_[s] = static_cast<int>(c);
        }
      }
    }
    for (const auto& def : st.combinations) {
      combs_.push_back(Compile(def));
      for (auto k : def.tiebreak) {
        if (k == TiebreakKey::kSuits && spec.suit_spec.rank_classes.size() > 1) suits_matter_ = true;
      }
    }
    key_ = StrategyKey(st);
  }

  const GameSpec& spec() const { return spec_; }
  const RankingStrategy& strategy() const { return st_; }
  std::uint64_t key() const { return key_; }
  int Rank(int value) const { return rank_[value]; }

  ECard Decode(const Card& card) const {
    auto hit = decoded_.find(card.token);
    if (hit != decoded_.end()) return hit->second;
    auto d = DecodeCard(spec_, card.token);
    if (!d) Fail(ErrorCode::kInvalidArgument, "unknown card '" + card.token + "'");
    ECard e;
    if (d->IsSpecial()) {
      e.special = d->special;
      if (spec_.specials[d->special].kind == SpecialKind::kWildcard) {
        e.wild = true;
      } else {
        e.null = true;
      }
    } else {
      e.suit = d->suit;
      e.value = d->value;
    }
    decoded_.emplace(card.token, e);
    return e;
  }

  // Tiebreak orientation: true when `a` is strictly better than `b`.
  bool BetterTiebreak(const std::vector<int>& a, const std::vector<int>& b) const {
    return st_.TiebreakLowerIsBetter() ? a < b : a > b;
  }

  int CompareRaw(int ca, const std::vector<int>& ta, int cb, const std::vector<int>& tb) const {
    if (ca != cb) {
      bool a_better = st_.CategoryLowerIsBetter() ? ca < cb : ca > cb;
      return a_better ? 1 : -1;
    }
    if (ta == tb) return 0;
    return BetterTiebreak(ta, tb) ? 1 : -1;
  }

  // Match with every wildcard already resolved.
  std::optional<Realized> Match(const std::vector<ECard>& cards, int comb) const {
    const CComb& cc = combs_[comb];
    const int n = static_cast<int>(cards.size());
    const unsigned full = n == 0 ? 0u : ((1u << n) - 1u);
    for (const auto& a : cc.whole) {
      if (!AtomOk(a, cards, full, nullptr)) return std::nullopt;
    }
    std::vector<std::vector<Candidate>> top(cc.top.size()), grp(cc.groups.size());
    for (std::size_t u = 0; u < cc.top.size(); ++u) {
      top[u] = Candidates(cc.top[u], cards);
      if (top[u].empty()) return std::nullopt;
    }
    for (std::size_t u = 0; u < cc.groups.size(); ++u) {
      grp[u] = Candidates(cc.groups[u], cards);
      if (grp[u].empty()) return std::nullopt;
    }
    std::optional<Realized> best;
    std::vector<const Candidate*> pick_top(cc.top.size()), pick_grp(cc.groups.size());

    std::function<void(std::size_t, unsigned)> choose_group;
    auto finish = [&](unsigned group_used) {
      unsigned used = group_used;
      for (auto* c : pick_top) used |= c->mask;
      Realized r;
      r.tiebreak = Tiebreak(cc, cards, pick_top, pick_grp, used);
      r.high_rank = HighRank(cards);
      if (!best || BetterTiebreak(r.tiebreak, best->tiebreak)) best = std::move(r);
    };
    choose_group = [&](std::size_t g, unsigned used) {
      if (g == cc.groups.size()) {
        finish(used);
        return;
      }
      for (const auto& c : grp[g]) {
        if (c.mask & used) continue;
        if (cc.distinct && c.value >= 0) {
          bool clash = false;
          for (std::size_t h = 0; h < g; ++h) {
            if (pick_grp[h]->value == c.value) clash = true;
          }
          if (clash) continue;
        }
        pick_grp[g] = &c;
        choose_group(g + 1, used | c.mask);
      }
    };
    std::function<void(std::size_t)> choose_top = [&](std::size_t t) {
      if (t == cc.top.size()) {
        choose_group(0, 0);
        return;
      }
      for (const auto& c : top[t]) {
        pick_top[t] = &c;
        choose_top(t + 1);
      }
    };
    choose_top(0);
    return best;
  }

  int NumCombinations() const { return static_cast<int>(combs_.size()); }

  // Candidate (suit, value) pairs for one wildcard. `reduced` keeps only the
  // suits present among the regular cards plus enough absent ones to be
  // distinct; absent suits are interchangeable unless suit ranks matter.
  std::vector<std::pair<int, int>> WildOptions(const std::vector<ECard>& cards, bool reduced) const {
    const int ns = static_cast<int>(spec_.suit_spec.suits.size());
    const int nv = static_cast<int>(spec_.value_spec.ordered_values.size());
    std::vector<int> suits;
    if (!reduced || suits_matter_) {
      for (int s = 0; s < ns; ++s) suits.push_back(s);
    } else {
      std::vector<char> present(ns, 0);
      int wilds = 0;
      for (const auto& c : cards) {
        if (c.wild) ++wilds;
        else if (c.suit >= 0) present[c.suit] = 1;
      }
      int absent_taken = 0;
      for (int s = 0; s < ns; ++s) {
        if (present[s]) {
          suits.push_back(s);
        } else if (absent_taken < wilds) {
          suits.push_back(s);
          ++absent_taken;
        }
      }
    }
    std::vector<std::pair<int, int>> out;
    for (int s : suits) {
      for (int v = 0; v < nv; ++v) out.push_back({s, v});
    }
    return out;
  }

  // Calls fn(resolved cards) for every assignment of the wildcards.
  template <typename Fn>
  void ForEachAssignment(const std::vector<ECard>& cards, bool reduced, Fn&& fn) const {
    std::vector<int> wild_pos;
    for (std::size_t i = 0; i < cards.size(); ++i) {
      if (cards[i].wild) wild_pos.push_back(static_cast<int>(i));
    }
    if (wild_pos.empty()) {
      fn(cards);
      return;
    }
    auto options = WildOptions(cards, reduced);
    std::vector<std::size_t> odo(wild_pos.size(), 0);
    std::vector<ECard> work = cards;
    while (true) {
      for (std::size_t w = 0; w < wild_pos.size(); ++w) {
        work[wild_pos[w]].suit = options[odo[w]].first;
        work[wild_pos[w]].value = options[odo[w]].second;
      }
      fn(work);
      std::size_t w = 0;
      while (w < odo.size() && ++odo[w] == options.size()) odo[w++] = 0;
      if (w == odo.size()) return;
    }
  }

  RankedHand Build(int comb, const Realized& r, const Cards& cards,
                   const std::vector<ECard>& resolved) const {
    RankedHand h;
    h.combination = comb;
    h.name = st_.combinations[comb].name;
    h.cards = cards;
    h.tiebreak = r.tiebreak;
    h.high_rank = r.high_rank;
    h.strategy_key = key_;
    for (std::size_t i = 0; i < cards.size(); ++i) {
      if (resolved[i].wild) {
        h.wildcard_assignment.push_back({cards[i], MakeCard(spec_, resolved[i].suit, resolved[i].value)});
      }
    }
    return h;
  }

  std::optional<RankedHand> MatchBest(const Cards& cards, int comb, bool reduced) const {
    std::vector<ECard> ecards = DecodeAll(cards);
    std::optional<RankedHand> best;
    ForEachAssignment(ecards, reduced, [&](const std::vector<ECard>& resolved) {
      auto r = Match(resolved, comb);
      if (!r) return;
      if (!best || BetterTiebreak(r->tiebreak, best->tiebreak)) best = Build(comb, *r, cards, resolved);
    });
    return best;
  }

  RankedHand Classify(const Cards& cards, bool reduced) const {
    std::vector<ECard> ecards = DecodeAll(cards);
    std::optional<RankedHand> best;
    ForEachAssignment(ecards, reduced, [&](const std::vector<ECard>& resolved) {
      for (int c = NumCombinations() - 1; c >= 0; --c) {
        auto r = Match(resolved, c);
        if (!r) continue;
        if (!best || CompareRaw(c, r->tiebreak, best->combination, best->tiebreak) > 0) {
          best = Build(c, *r, cards, resolved);
        }
        break;
      }
    });
    if (!best) Fail(ErrorCode::kNoLegalHand, "no combination matched; missing catch-all");
    return *best;
  }

  std::vector<ECard> DecodeAll(const Cards& cards) const {
    if (cards.size() > static_cast<std::size_t>(kMaxCards)) {
      Fail(ErrorCode::kInvalidArgument, "too many cards in one hand");
    }
    std::vector<ECard> out;
    out.reserve(cards.size());
    for (const auto& c : cards) out.push_back(Decode(c));
    return out;
  }

 private:
  CAtom CompileAtom(const Atom& a) const {
    CAtom c;
    c.kind = a.kind;
    c.size = a.size;
    c.cmp = a.comparison;
    if (a.kind == AtomKind::kValueIn) {
      const auto& vals = spec_.value_spec.ordered_values;
      c.value_in.assign(vals.size(), 0);
      for (const auto& v : a.values) {
        auto it = std::find(vals.begin(), vals.end(), v);
        if (it != vals.end()) c.value_in[it - vals.begin()] = 1;
      }
    }
    if (a.kind == AtomKind::kCountSpecial) {
      for (std::size_t i = 0; i < spec_.specials.size(); ++i) {
        if (spec_.specials[i].symbol == a.symbol) c.special = static_cast<int>(i);
      }
    }
    return c;
  }

  CUnit CompileUnit(const std::vector<Atom>& atoms) const {
    CUnit u;
    for (const auto& a : atoms) {
      u.atoms.push_back(CompileAtom(a));
      if (a.IsSized()) u.size = a.size;
      if (a.kind == AtomKind::kConsecutive) u.consecutive = true;
      if (a.kind == AtomKind::kSameValue) u.same_value = true;
    }
    return u;
  }

  CComb Compile(const CombinationDef& def) const {
    CComb cc;
    cc.def = &def;
    for (const auto& a : def.predicates) {
      if (a.kind == AtomKind::kGroups) {
        cc.distinct = cc.distinct || a.distinct_group_values;
        std::vector<const std::vector<Atom>*> sigs;
        for (const auto& g : a.groups) {
          CUnit u = CompileUnit(g);
          auto it = std::find_if(sigs.begin(), sigs.end(), [&](auto* s) { return *s == g; });
          u.sig = static_cast<int>(it - sigs.begin());
          if (it == sigs.end()) sigs.push_back(&g);
          cc.groups.push_back(std::move(u));
        }
      } else if (a.IsSized()) {
        cc.top.push_back(CompileUnit({a}));
      } else {
        cc.whole.push_back(CompileAtom(a));
      }
    }
    return cc;
  }

  // Top of the run the masked cards form, or -1.
  int RunTop(const std::vector<ECard>& cards, unsigned mask) const {
    const int nv = static_cast<int>(rank_.size());
    int ranks[kMaxCards];
    int k = 0;
    int top_pos = -1;
    for (int i = 0; mask >> i; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (cards[i].value < 0) return -1;
      if (cards[i].value == nv - 1) top_pos = k;
      ranks[k++] = rank_[cards[i].value];
    }
    auto run_top = [&](int* r) {
      int lo = r[0], hi = r[0];
      for (int i = 1; i < k; ++i) {
        lo = std::min(lo, r[i]);
        hi = std::max(hi, r[i]);
      }
      if (hi - lo != k - 1) return -1;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (r[i] == r[j]) return -1;
        }
      }
      return hi;
    };
    int best = run_top(ranks);
    if (st_.wrap_straights && top_pos >= 0) {
      ranks[top_pos] = ranks[top_pos] == 0 ? nv : 0;
      int alt = run_top(ranks);
      if (alt >= 0 && (best < 0 || (st_.TiebreakLowerIsBetter() ? alt < best : alt > best))) {
        best = alt;
      }
    }
    return best;
  }

  bool AtomOk(const CAtom& a, const std::vector<ECard>& cards, unsigned mask, int* run_top) const {
    int first_suit = -2, first_value = -2;
    unsigned long long seen_suits = 0, seen_values = 0;
    int count = 0;
    for (int i = 0; mask >> i; ++i) {
      if (!(mask >> i & 1u)) continue;
      const ECard& c = cards[i];
      switch (a.kind) {
        case AtomKind::kSameValue:
          if (c.value < 0 || (first_value != -2 && c.value != first_value)) return false;
          first_value = c.value;
          break;
        case AtomKind::kSameSuit:
          if (c.suit < 0 || (first_suit != -2 && c.suit != first_suit)) return false;
          first_suit = c.suit;
          break;
        case AtomKind::kDistinctSuits:
          if (c.suit < 0 || (seen_suits >> c.suit & 1ull)) return false;
          seen_suits |= 1ull << c.suit;
          break;
        case AtomKind::kDistinctValues:
          if (c.value < 0 || (seen_values >> c.value & 1ull)) return false;
          seen_values |= 1ull << c.value;
          break;
        case AtomKind::kValueIn:
          if (c.value < 0 || !a.value_in[c.value]) return false;
          break;
        case AtomKind::kCountSpecial:
          if (c.special == a.special) ++count;
          break;
        case AtomKind::kConsecutive:
        case AtomKind::kGroups:
          break;
      }
    }
    if (a.kind == AtomKind::kConsecutive) {
      int top = RunTop(cards, mask);
      if (top < 0) return false;
      if (run_top) *run_top = top;
    }
    if (a.kind == AtomKind::kCountSpecial) {
      switch (a.cmp) {
        case Comparison::kEqual: return count == a.size;
        case Comparison::kAtMost: return count <= a.size;
        case Comparison::kAtLeast: return count >= a.size;
      }
    }
    return true;
  }

  std::vector<Candidate> Candidates(const CUnit& u, const std::vector<ECard>& cards) const {
    std::vector<Candidate> out;
    const int n = static_cast<int>(cards.size());
    if (u.size < 1 || u.size > n) return out;
    for (unsigned mask : MasksOf(n, u.size)) {
      int top = -1;
      bool ok = true;
      for (const auto& a : u.atoms) {
        if (!AtomOk(a, cards, mask, &top)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Candidate c;
      c.mask = mask;
      if (u.same_value) c.value = cards[std::countr_zero(mask)].value;
      if (u.consecutive) {
        c.key = {top};
      } else if (u.same_value) {
        c.key = {rank_[c.value]};
      } else {
        c.key = RanksDesc(cards, mask);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<int> RanksDesc(const std::vector<ECard>& cards, unsigned mask) const {
    std::vector<int> r;
    for (int i = 0; mask >> i; ++i) {
      if ((mask >> i & 1u) && cards[i].value >= 0) r.push_back(rank_[cards[i].value]);
    }
    std::sort(r.rbegin(), r.rend());
    return r;
  }

  int HighRank(const std::vector<ECard>& cards) const {
    int hi = -1;
    for (const auto& c : cards) {
      if (c.value >= 0) hi = std::max(hi, rank_[c.value]);
    }
    return hi;
  }

  std::vector<int> Tiebreak(const CComb& cc, const std::vector<ECard>& cards,
                            const std::vector<const Candidate*>& top,
                            const std::vector<const Candidate*>& grp, unsigned used) const {
    const int n = static_cast<int>(cards.size());
    const unsigned full = n == 0 ? 0u : ((1u << n) - 1u);
    std::vector<int> out;
    for (auto key : cc.def->tiebreak) {
      switch (key) {
        case TiebreakKey::kGroups: {
          for (auto* c : top) out.insert(out.end(), c->key.begin(), c->key.end());
          std::vector<std::vector<int>> keys;
          for (auto* c : grp) keys.push_back(c->key);
          // Interchangeable groups list their keys strongest-first.
          for (std::size_t i = 0; i < cc.groups.size(); ++i) {
            std::vector<std::size_t> same;
            for (std::size_t j = 0; j < cc.groups.size(); ++j) {
              if (cc.groups[j].sig == cc.groups[i].sig) same.push_back(j);
            }
            if (same.size() < 2 || same.front() != i) continue;
            std::vector<std::vector<int>> vals;
            for (auto j : same) vals.push_back(keys[j]);
            std::sort(vals.rbegin(), vals.rend());
            for (std::size_t k = 0; k < same.size(); ++k) keys[same[k]] = vals[k];
          }
          for (const auto& k : keys) out.insert(out.end(), k.begin(), k.end());
          break;
        }
        case TiebreakKey::kKickers: {
          auto r = RanksDesc(cards, full & ~used);
          out.insert(out.end(), r.begin(), r.end());
          break;
        }
        case TiebreakKey::kValues: {
          auto r = RanksDesc(cards, full);
          out.insert(out.end(), r.begin(), r.end());
          break;
        }
        case TiebreakKey::kSuits: {
          std::vector<int> s;
          for (const auto& c : cards) {
            if (c.suit >= 0) s.push_back(suit_class_[c.suit]);
          }
          std::sort(s.rbegin(), s.rend());
          out.insert(out.end(), s.begin(), s.end());
          break;
        }
      }
    }
    return out;
  }

  const GameSpec& spec_;
  const RankingStrategy& st_;
  std::vector<int> rank_;
  std::vector<int> suit_class_;
  std::vector<CComb> combs_;
  bool suits_matter_ = false;
  std::uint64_t key_ = 0;
  mutable std::unordered_map<std::string, ECard> decoded_;
};

struct SubsetPlan {
  std::vector<Cards> subsets;
};

}  // namespace

std::uint64_t StrategyKey(const RankingStrategy& st) {
  std::string text = std::to_string(static_cast<int>(st.direction)) + "/" +
                     std::to_string(st.hand_size) + "/" +
                     (st.hole_exactly ? std::to_string(*st.hole_exactly) : "any") + "/" +
                     std::to_string(st.wrap_straights) + std::to_string(st.ace_low) +
                     std::to_string(static_cast<int>(st.convention)) + "/" +
                     st.qualifier.value_or("-");
  for (const auto& c : st.combinations) {
    text += "|" + c.name + "=" + RenderPredicate(c.predicates);
    for (auto k : c.tiebreak) text += std::to_string(static_cast<int>(k));
  }
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

int ValueRank(const GameSpec& spec, const RankingStrategy& strategy, int value) {
  const int nv = static_cast<int>(spec.value_spec.ordered_values.size());
  if (strategy.AceLow() && value == nv - 1) return 0;
  return value + 1;
}

std::optional<RankedHand> MatchCombination(const GameSpec& spec, const RankingStrategy& strategy,
                                           const CombinationDef& def, const Cards& cards) {
  for (std::size_t c = 0; c < strategy.combinations.size(); ++c) {
    if (strategy.combinations[c] == def) {
      Evaluator ev(spec, strategy);
      return ev.MatchBest(cards, static_cast<int>(c), /*reduced=*/false);
    }
  }
  // A definition outside the strategy: evaluate it as a one-entry ladder.
  RankingStrategy alone = strategy;
  alone.combinations = {def};
  alone.combinations[0].rank_index = 0;
  Evaluator ev(spec, alone);
  auto r = ev.MatchBest(cards, 0, false);
  if (r) r->combination = def.rank_index;
  return r;
}

RankedHand ClassifyHand(const GameSpec& spec, const RankingStrategy& strategy, const Cards& cards) {
  Evaluator ev(spec, strategy);
  return ev.Classify(cards, /*reduced=*/false);
}

namespace {

std::vector<Cards> LegalSubsets(const RankingStrategy& st, const Cards& hole, const Cards& community) {
  std::vector<Cards> out;
  const int h = static_cast<int>(hole.size());
  const int c = static_cast<int>(community.size());
  if (st.hole_exactly) {
    const int k = *st.hole_exactly;
    const int rest = st.hand_size - k;
    if (k > h || rest > c || rest < 0) Fail(ErrorCode::kNoLegalHand, "hole-card rule cannot be met");
    ForEachCombination(h, k, [&](const std::vector<int>& hi) {
      ForEachCombination(c, rest, [&](const std::vector<int>& ci) {
        Cards s;
        for (int i : hi) s.push_back(hole[i]);
        for (int i : ci) s.push_back(community[i]);
        out.push_back(std::move(s));
      });
    });
    return out;
  }
  Cards all = hole;
  all.insert(all.end(), community.begin(), community.end());
  if (st.hand_size > static_cast<int>(all.size())) {
    Fail(ErrorCode::kNoLegalHand, "fewer cards than the hand size");
  }
  ForEachCombination(static_cast<int>(all.size()), st.hand_size, [&](const std::vector<int>& idx) {
    Cards s;
    for (int i : idx) s.push_back(all[i]);
    out.push_back(std::move(s));
  });
  return out;
}

}  // namespace

RankedHand BestHand(const GameSpec& spec, const RankingStrategy& strategy, const Cards& hole,
                    const Cards& community) {
  Evaluator ev(spec, strategy);
  auto subsets = LegalSubsets(strategy, hole, community);
  if (!strategy.CategoryLowerIsBetter()) {
    // The first combination any subset realizes, from the top, is the
    // category of the best hand.
    for (int c = ev.NumCombinations() - 1; c >= 0; --c) {
      std::optional<RankedHand> best;
      for (const auto& s : subsets) {
        auto r = ev.MatchBest(s, c, /*reduced=*/true);
        if (r && (!best || ev.BetterTiebreak(r->tiebreak, best->tiebreak))) best = std::move(r);
      }
      if (best) return *best;
    }
    Fail(ErrorCode::kNoLegalHand, "no combination matched; missing catch-all");
  }
  std::optional<RankedHand> best;
  for (const auto& s : subsets) {
    RankedHand r = ev.Classify(s, /*reduced=*/true);
    if (!best || ev.CompareRaw(r.combination, r.tiebreak, best->combination, best->tiebreak) > 0) {
      best = std::move(r);
    }
  }
  return *best;
}

RankedHand OracleBestHand(const GameSpec& spec, const RankingStrategy& strategy, const Cards& hole,
                          const Cards& community) {
  Evaluator ev(spec, strategy);
  Cards all = hole;
  all.insert(all.end(), community.begin(), community.end());
  const int n = static_cast<int>(all.size());
  const int h = static_cast<int>(hole.size());
  if (n > 24) Fail(ErrorCode::kInvalidArgument, "too many cards for exhaustive search");
  std::optional<RankedHand> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != strategy.hand_size) continue;
    if (strategy.hole_exactly && std::popcount(mask & ((1u << h) - 1u)) != *strategy.hole_exactly) {
      continue;
    }
    Cards subset;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) subset.push_back(all[i]);
    }
    RankedHand r = ev.Classify(subset, /*reduced=*/false);
    if (!best || ev.CompareRaw(r.combination, r.tiebreak, best->combination, best->tiebreak) > 0) {
      best = std::move(r);
    }
  }
  if (!best) Fail(ErrorCode::kNoLegalHand, "no legal subset");
  return *best;
}

std::strong_ordering CompareHands(const RankedHand& a, const RankedHand& b,
                                  const RankingStrategy& strategy) {
  const std::uint64_t key = StrategyKey(strategy);
  if (a.strategy_key != key || b.strategy_key != key) {
    Fail(ErrorCode::kStrategyMismatch, "hands were ranked under a different strategy");
  }
  int sign;
  if (a.combination != b.combination) {
    bool a_better = strategy.CategoryLowerIsBetter() ? a.combination < b.combination
                                                     : a.combination > b.combination;
    sign = a_better ? 1 : -1;
  } else if (a.tiebreak == b.tiebreak) {
    sign = 0;
  } else {
    bool a_better = strategy.TiebreakLowerIsBetter() ? a.tiebreak < b.tiebreak : a.tiebreak > b.tiebreak;
    sign = a_better ? 1 : -1;
  }
  return sign > 0 ? std::strong_ordering::greater
                  : sign < 0 ? std::strong_ordering::less : std::strong_ordering::equal;
}

bool Qualifies(const GameSpec& spec, const RankingStrategy& strategy, const RankedHand& hand) {
  if (!strategy.qualifier) return true;
  const auto& vals = spec.value_spec.ordered_values;
  auto it = std::find(vals.begin(), vals.end(), *strategy.qualifier);
  if (it == vals.end()) return false;
  const int limit = ValueRank(spec, strategy, static_cast<int>(it - vals.begin()));
  if (hand.combination < 0 || hand.combination >= static_cast<int>(strategy.combinations.size())) {
    return false;
  }
  return strategy.combinations[hand.combination].IsCatchAll() && hand.high_rank <= limit;
}

}  // namespace pokerforge
