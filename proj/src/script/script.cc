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

#include "script/script.h"

#include <algorithm>
#include <map>
#include <set>

#include "common/strings.h"

namespace pokerforge {
namespace {

struct Section {
  std::string value;
  int line = 0;
};

struct StrategyBlock {
  std::string header;
  int line = 0;
  std::vector<std::pair<std::string, Section>> entries;  // label, value
};

const std::set<std::string>& KnownLabels() {
  static const std::set<std::string> labels = {
      "game",  "players", "bet limits", "raise cap", "starting stack", "blinds",
      "suits", "suit ranks", "values", "specials", "strategy", "flow"};
  return labels;
}

std::pair<std::string, std::string> SplitLabel(std::string_view line, int lineno) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) {
    Fail(ErrorCode::kMalformedScript,
         "expected 'label: value', got '" + std::string(Trim(line)) + "'", lineno);
  }
  return {ToLower(Trim(line.substr(0, colon))),
          std::string(Trim(line.substr(colon + 1)))};
}

std::int64_t RequireInt(std::string_view text, int line, std::string_view what) {
  auto v = ParseInt(text);
  if (!v) {
    Fail(ErrorCode::kMalformedScript,
         std::string(what) + ": expected an integer, got '" + std::string(text) + "'",
         line);
  }
  return *v;
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> out;
  for (auto& part : Split(text, ",")) {
    for (auto& w : SplitWords(part)) out.push_back(w);
  }
  return out;
}

// Splits on `sep` occurring outside [] and {} brackets.
std::vector<std::string> SplitTopLevel(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(Trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.emplace_back(Trim(cur));
  return out;
}

class PredicateParser {
 public:
  PredicateParser(const GameSpec& spec, int line) : spec_(spec), line_(line) {}

  std::vector<Atom> ParseConjunction(std::string_view text, bool in_group) {
    std::vector<Atom> atoms;
    if (ToLower(Trim(text)) == "any" && !in_group) return atoms;
    for (const auto& part : SplitTopLevel(text, '&')) {
      atoms.push_back(ParseAtom(part, in_group));
    }
    return atoms;
  }

 private:
  int SizeArg(const std::vector<std::string>& words, std::size_t idx) {
    if (words.size() != idx + 1) Malformed("expected a single count");
    return static_cast<int>(RequireInt(words[idx], line_, "atom size"));
  }

  [[noreturn]] void Malformed(const std::string& what) {
    Fail(ErrorCode::kMalformedScript, "bad predicate: " + what, line_);
  }

  Atom ParseAtom(std::string_view text, bool in_group) {
    std::string lower = ToLower(text);
    auto words = SplitWords(lower);
    if (words.empty()) Malformed("empty atom");
    Atom atom;
    if (words[0] == "same" && words.size() >= 2 && words[1] == "value") {
      atom.kind = AtomKind::kSameValue;
      atom.size = SizeArg(words, 2);
    } else if (words[0] == "same" && words.size() >= 2 && words[1] == "suit") {
      atom.kind = AtomKind::kSameSuit;
      atom.size = SizeArg(words, 2);
    } else if (words[0] == "consecutive") {
      atom.kind = AtomKind::kConsecutive;
      atom.size = SizeArg(words, 1);
    } else if (words[0] == "distinct" && words.size() >= 2 && words[1] == "suits") {
      atom.kind = AtomKind::kDistinctSuits;
      atom.size = SizeArg(words, 2);
    } else if (words[0] == "distinct" && words.size() >= 2 && words[1] == "values") {
      atom.kind = AtomKind::kDistinctValues;
      atom.size = SizeArg(words, 2);
    } else if (words[0] == "values" && words.size() >= 2 && words[1] == "in") {
      atom.kind = AtomKind::kValueIn;
      auto open = text.find('{');
      auto close = text.rfind('}');
      if (open == std::string_view::npos || close == std::string_view::npos ||
          close < open) {
        Malformed("values in needs {...}");
      }
      const auto& known = spec_.value_spec.ordered_values;
      for (auto& v : SplitList(text.substr(open + 1, close - open - 1))) {
        if (std::find(known.begin(), known.end(), v) == known.end()) {
          Fail(ErrorCode::kUnknownSymbol, "value '" + v + "'", line_);
        }
        atom.values.push_back(v);
      }
    } else if (words[0] == "special") {
      atom.kind = AtomKind::kCountSpecial;
      // Keep the symbol's original case.
      auto raw = SplitWords(text);
      if (raw.size() != 4) Malformed("special SYMBOL (=|<=|>=) N");
      atom.symbol = raw[1];
      bool known = std::any_of(spec_.specials.begin(), spec_.specials.end(),
                               [&](const SpecialCardSpec& s) { return s.symbol == atom.symbol; });
      if (!known) Fail(ErrorCode::kUnknownSymbol, "special '" + atom.symbol + "'", line_);
      if (raw[2] == "=") {
        atom.comparison = Comparison::kEqual;
      } else if (raw[2] == "<=") {
        atom.comparison = Comparison::kAtMost;
      } else if (raw[2] == ">=") {
        atom.comparison = Comparison::kAtLeast;
      } else {
        Malformed("comparison must be =, <= or >=");
      }
      atom.size = static_cast<int>(RequireInt(raw[3], line_, "special count"));
    } else if (words[0] == "groups") {
      if (in_group) Malformed("groups cannot nest");
      atom.kind = AtomKind::kGroups;
      std::string_view rest = Trim(text.substr(text.find_first_of("gG") + 6));
      if (StartsWith(ToLower(rest), "distinct")) {
        atom.distinct_group_values = true;
        rest = Trim(rest.substr(8));
      }
      while (!rest.empty()) {
        if (rest.front() != '[') Malformed("group must be bracketed");
        auto close = rest.find(']');
        if (close == std::string_view::npos) Malformed("unclosed group");
        atom.groups.push_back(ParseConjunction(rest.substr(1, close - 1), true));
        rest = Trim(rest.substr(close + 1));
      }
      if (atom.groups.empty()) Malformed("groups needs at least one group");
    } else {
      Malformed("unknown atom '" + std::string(Trim(text)) + "'");
    }
    return atom;
  }

  const GameSpec& spec_;
  int line_;
};

std::string_view TiebreakName(TiebreakKey k) {
  switch (k) {
    case TiebreakKey::kGroups: return "groups";
    case TiebreakKey::kKickers: return "kickers";
    case TiebreakKey::kValues: return "values";
    case TiebreakKey::kSuits: return "suits";
  }
  return "?";
}

std::string_view ConventionName(LowConvention c) {
  switch (c) {
    case LowConvention::kNone: return "none";
    case LowConvention::kAceToFive: return "ace-to-five";
    case LowConvention::kDeuceToSeven: return "deuce-to-seven";
    case LowConvention::kBadugi: return "badugi";
  }
  return "none";
}

CombinationDef ParseCombination(const GameSpec& spec, std::string_view text,
                                int rank, int line) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    Fail(ErrorCode::kMalformedScript, "combination needs 'Name = predicate'", line);
  }
  CombinationDef def;
  def.name = std::string(Trim(text.substr(0, eq)));
  def.rank_index = rank;
  if (def.name.empty()) Fail(ErrorCode::kMalformedScript, "combination without name", line);
  std::string_view body = text.substr(eq + 1);
  auto bar = body.find('|');
  std::string_view pred_text = Trim(body.substr(0, bar));
  if (bar != std::string_view::npos) {
    auto words = SplitWords(ToLower(body.substr(bar + 1)));
    if (words.empty() || words[0] != "ties") {
      Fail(ErrorCode::kMalformedScript, "expected '| ties KEY...'", line);
    }
    def.tiebreak.clear();
    for (std::size_t i = 1; i < words.size(); ++i) {
      bool found = false;
      for (TiebreakKey k : {TiebreakKey::kGroups, TiebreakKey::kKickers,
                            TiebreakKey::kValues, TiebreakKey::kSuits}) {
        if (TiebreakName(k) == words[i]) {
          def.tiebreak.push_back(k);
          found = true;
        }
      }
      if (!found) Fail(ErrorCode::kMalformedScript, "unknown tiebreak key '" + words[i] + "'", line);
    }
  }
  PredicateParser parser(spec, line);
  def.predicates = parser.ParseConjunction(pred_text, false);
  return def;
}

RankingStrategy ParseStrategy(const GameSpec& spec, const StrategyBlock& block) {
  RankingStrategy strategy;
  std::string dir = ToLower(block.header);
  if (dir == "high") {
    strategy.direction = Direction::kHigh;
  } else if (dir == "low") {
    strategy.direction = Direction::kLow;
  } else {
    Fail(ErrorCode::kMalformedScript, "strategy direction must be high or low", block.line);
  }
  bool explicit_ace = false;
  for (const auto& [label, sec] : block.entries) {
    const std::string value = ToLower(sec.value);
    if (label == "hand size") {
      strategy.hand_size = static_cast<int>(RequireInt(sec.value, sec.line, label));
    } else if (label == "hole cards") {
      auto words = SplitWords(value);
      if (words.size() == 1 && words[0] == "any") {
        strategy.hole_exactly.reset();
      } else if (words.size() == 2 && words[0] == "exactly") {
        strategy.hole_exactly = static_cast<int>(RequireInt(words[1], sec.line, label));
      } else {
        Fail(ErrorCode::kMalformedScript, "hole cards: any | exactly N", sec.line);
      }
    } else if (label == "straights wrap") {
      if (value != "yes" && value != "no") {
        Fail(ErrorCode::kMalformedScript, "straights wrap: yes | no", sec.line);
      }
      strategy.wrap_straights = value == "yes";
    } else if (label == "ace low") {
      if (value != "yes" && value != "no") {
        Fail(ErrorCode::kMalformedScript, "ace low: yes | no", sec.line);
      }
      strategy.ace_low = value == "yes";
      explicit_ace = true;
    } else if (label == "convention") {
      bool found = false;
      for (auto c : {LowConvention::kNone, LowConvention::kAceToFive,
                     LowConvention::kDeuceToSeven, LowConvention::kBadugi}) {
        if (ConventionName(c) == value) {
          strategy.convention = c;
          found = true;
        }
      }
      if (!found) Fail(ErrorCode::kMalformedScript, "unknown convention '" + sec.value + "'", sec.line);
    } else if (label == "qualifier") {
      if (value == "none") {
        strategy.qualifier.reset();
      } else {
        const auto& known = spec.value_spec.ordered_values;
        if (std::find(known.begin(), known.end(), sec.value) == known.end()) {
          Fail(ErrorCode::kUnknownSymbol, "value '" + sec.value + "'", sec.line);
        }
        strategy.qualifier = sec.value;
      }
    } else if (label == "combination") {
      strategy.combinations.push_back(ParseCombination(
          spec, sec.value, static_cast<int>(strategy.combinations.size()), sec.line));
    } else {
      Fail(ErrorCode::kUnknownSymbol, "strategy entry '" + label + "'", sec.line);
    }
  }
  if (!explicit_ace) {
    strategy.ace_low = strategy.convention == LowConvention::kAceToFive ||
                       strategy.convention == LowConvention::kBadugi;
  }
  return strategy;
}

}  // namespace

GameSpec ParseScript(std::string_view text) {
  std::map<std::string, Section> sections;
  std::vector<StrategyBlock> strategies;
  StrategyBlock* current = nullptr;

  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::string& raw = lines[i];
    std::string_view trimmed = Trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const bool indented = std::isspace(static_cast<unsigned char>(raw.front()));
    auto [label, value] = SplitLabel(trimmed, lineno);
    if (indented) {
      if (current == nullptr) {
        Fail(ErrorCode::kMalformedScript, "indented line outside a strategy block", lineno);
      }
      current->entries.push_back({label, Section{value, lineno}});
      continue;
    }
    current = nullptr;
    if (!KnownLabels().count(label)) {
      Fail(ErrorCode::kUnknownSymbol, "section '" + label + "'", lineno);
    }
    if (label == "strategy") {
      strategies.push_back(StrategyBlock{value, lineno, {}});
      current = &strategies.back();
      continue;
    }
    if (sections.count(label)) {
      Fail(ErrorCode::kMalformedScript, "duplicate section '" + label + "'", lineno);
    }
    sections[label] = Section{value, lineno};
  }

  for (const char* required : {"players", "bet limits", "suits", "values"}) {
    if (!sections.count(required)) Fail(ErrorCode::kMissingSection, required);
  }
  if (strategies.empty()) Fail(ErrorCode::kMissingSection, "strategy");
  if (!sections.count("flow")) Fail(ErrorCode::kMissingSection, "flow");

  GameSpec spec;
  if (sections.count("game")) spec.name = sections["game"].value;

  {
    const auto& s = sections["players"];
    spec.num_players = static_cast<int>(RequireInt(s.value, s.line, "players"));
  }
  {
    const auto& s = sections["bet limits"];
    auto words = SplitWords(s.value);
    if (words.size() != 2) Fail(ErrorCode::kMalformedScript, "bet limits: MIN MAX", s.line);
    spec.min_bet = RequireInt(words[0], s.line, "bet limits");
    spec.max_bet = RequireInt(words[1], s.line, "bet limits");
  }
  if (sections.count("raise cap")) {
    const auto& s = sections["raise cap"];
    spec.raise_cap = static_cast<int>(RequireInt(s.value, s.line, "raise cap"));
  }
  if (sections.count("starting stack")) {
    const auto& s = sections["starting stack"];
    spec.starting_stack = RequireInt(s.value, s.line, "starting stack");
  }
  if (sections.count("blinds")) {
    const auto& s = sections["blinds"];
    auto words = SplitWords(s.value);
    if (words.size() != 2) Fail(ErrorCode::kMalformedScript, "blinds: SMALL BIG", s.line);
    spec.small_blind = RequireInt(words[0], s.line, "blinds");
    spec.big_blind = RequireInt(words[1], s.line, "blinds");
  }
  {
    const auto& s = sections["suits"];
    spec.suit_spec.suits = SplitList(s.value);
    if (spec.suit_spec.suits.empty()) Fail(ErrorCode::kMalformedScript, "no suits", s.line);
  }
  if (sections.count("suit ranks")) {
    const auto& s = sections["suit ranks"];
    // Written strongest first: "L > H = D = C = S".
    for (const auto& cls : Split(s.value, ">")) {
      std::vector<std::string> members;
      for (const auto& m : Split(cls, "=")) {
        std::string sym(Trim(m));
        if (sym.empty()) Fail(ErrorCode::kMalformedScript, "empty suit in ranks", s.line);
        const auto& suits = spec.suit_spec.suits;
        if (std::find(suits.begin(), suits.end(), sym) == suits.end()) {
          Fail(ErrorCode::kUnknownSymbol, "suit '" + sym + "'", s.line);
        }
        members.push_back(sym);
      }
      spec.suit_spec.rank_classes.insert(spec.suit_spec.rank_classes.begin(), members);
    }
  } else {
    spec.suit_spec.rank_classes = {spec.suit_spec.suits};
  }
  {
    const auto& s = sections["values"];
    for (const auto& v : Split(s.value, "<")) {
      std::string sym(Trim(v));
      if (sym.empty()) Fail(ErrorCode::kMalformedScript, "empty value symbol", s.line);
      spec.value_spec.ordered_values.push_back(sym);
    }
  }
  if (sections.count("specials")) {
    const auto& s = sections["specials"];
    if (ToLower(s.value) != "none") {
      for (const auto& entry : Split(s.value, ",")) {
        auto words = SplitWords(entry);
        if (words.size() != 3) {
          Fail(ErrorCode::kMalformedScript, "special: SYMBOL (wildcard|null) COUNT", s.line);
        }
        SpecialCardSpec special;
        special.symbol = words[0];
        std::string kind = ToLower(words[1]);
        if (kind == "wildcard") {
          special.kind = SpecialKind::kWildcard;
        } else if (kind == "null") {
          special.kind = SpecialKind::kNull;
        } else {
          Fail(ErrorCode::kMalformedScript, "special kind must be wildcard or null", s.line);
        }
        special.count = static_cast<int>(RequireInt(words[2], s.line, "special count"));
        spec.specials.push_back(special);
      }
    }
  }
  for (const auto& block : strategies) spec.strategies.push_back(ParseStrategy(spec, block));
  {
    const auto& s = sections["flow"];
    for (const auto& step : Split(s.value, ",")) {
      spec.flow.push_back(ParseFlowStep(step, s.line));
    }
  }
  return spec;
}

std::string RenderPredicate(const std::vector<Atom>& predicates) {
  if (predicates.empty()) return "any";
  auto render_atom = [](const Atom& a, auto&& self) -> std::string {
    auto n = std::to_string(a.size);
    switch (a.kind) {
      case AtomKind::kSameValue: return "same value " + n;
      case AtomKind::kConsecutive: return "consecutive " + n;
      case AtomKind::kSameSuit: return "same suit " + n;
      case AtomKind::kDistinctSuits: return "distinct suits " + n;
      case AtomKind::kDistinctValues: return "distinct values " + n;
      case AtomKind::kValueIn: return "values in {" + Join(a.values, ", ") + "}";
      case AtomKind::kCountSpecial: {
        const char* cmp = a.comparison == Comparison::kEqual    ? "="
                          : a.comparison == Comparison::kAtMost ? "<="
                                                                : ">=";
        return "special " + a.symbol + " " + cmp + " " + n;
      }
      case AtomKind::kGroups: {
        std::string out = a.distinct_group_values ? "groups distinct" : "groups";
        for (const auto& g : a.groups) {
          std::vector<std::string> parts;
          for (const auto& inner : g) parts.push_back(self(inner, self));
          out += " [" + Join(parts, " & ") + "]";
        }
        return out;
      }
    }
    return "";
  };
  std::vector<std::string> parts;
  for (const auto& a : predicates) parts.push_back(render_atom(a, render_atom));
  return Join(parts, " & ");
}

std::string RenderScript(const GameSpec& spec) {
  std::string out;
  auto line = [&](const std::string& label, const std::string& value) {
    out += label + ": " + value + "\n";
  };
  line("game", spec.name);
  line("players", std::to_string(spec.num_players));
  line("bet limits", std::to_string(spec.min_bet) + " " + std::to_string(spec.max_bet));
  line("raise cap", std::to_string(spec.raise_cap));
  line("starting stack", std::to_string(spec.starting_stack));
  line("blinds", std::to_string(spec.small_blind) + " " + std::to_string(spec.big_blind));
  line("suits", Join(spec.suit_spec.suits, " "));
  {
    std::vector<std::string> classes;
    for (auto it = spec.suit_spec.rank_classes.rbegin();
         it != spec.suit_spec.rank_classes.rend(); ++it) {
      classes.push_back(Join(*it, " = "));
    }
    line("suit ranks", Join(classes, " > "));
  }
  line("values", Join(spec.value_spec.ordered_values, " < "));
  if (spec.specials.empty()) {
    line("specials", "none");
  } else {
    std::vector<std::string> parts;
    for (const auto& s : spec.specials) {
      parts.push_back(s.symbol + (s.kind == SpecialKind::kWildcard ? " wildcard " : " null ") +
                      std::to_string(s.count));
    }
    line("specials", Join(parts, ", "));
  }
  const std::vector<TiebreakKey> default_ties = CombinationDef{}.tiebreak;
  for (const auto& st : spec.strategies) {
    line("strategy", st.direction == Direction::kHigh ? "high" : "low");
    out += "  hand size: " + std::to_string(st.hand_size) + "\n";
    out += "  hole cards: " +
           (st.hole_exactly ? "exactly " + std::to_string(*st.hole_exactly) : std::string("any")) +
           "\n";
    out += std::string("  straights wrap: ") + (st.wrap_straights ? "yes" : "no") + "\n";
    out += "  convention: " + std::string(ConventionName(st.convention)) + "\n";
    out += std::string("  ace low: ") + (st.ace_low ? "yes" : "no") + "\n";
    out += "  qualifier: " + st.qualifier.value_or("none") + "\n";
    for (const auto& c : st.combinations) {
      out += "  combination: " + c.name + " = " + RenderPredicate(c.predicates);
      if (c.tiebreak != default_ties) {
        out += " | ties";
        for (auto k : c.tiebreak) out += " " + std::string(TiebreakName(k));
      }
      out += "\n";
    }
  }
  std::vector<std::string> steps;
  for (const auto& s : spec.flow) steps.push_back(RenderFlowStep(s));
  line("flow", Join(steps, ", "));
  return out;
}

}  // namespace pokerforge
