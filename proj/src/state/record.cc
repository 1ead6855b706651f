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

#include "state/record.h"

#include <algorithm>
#include <cctype>

#include "common/strings.h"

namespace pokerforge {
namespace {

const Type kIntT{Type::Kind::kInt, AtomType::kCard, nullptr, ""};
const Type kOptIntT{Type::Kind::kOptInt, AtomType::kCard, nullptr, ""};
const Type kCardT{Type::Kind::kAtom, AtomType::kCard, nullptr, ""};
const Type kStepT{Type::Kind::kAtom, AtomType::kStep, nullptr, ""};
const Type kPotT{Type::Kind::kAtom, AtomType::kPot, nullptr, ""};
const Type kShowT{Type::Kind::kAtom, AtomType::kShowdown, nullptr, ""};
const Type kMsgT{Type::Kind::kAtom, AtomType::kMessage, nullptr, ""};

const Type kCardList{Type::Kind::kList, AtomType::kCard, &kCardT, " "};
const Type kCardLists{Type::Kind::kList, AtomType::kCard, &kCardList, " | "};
const Type kIntList{Type::Kind::kList, AtomType::kCard, &kIntT, " "};
const Type kStepList{Type::Kind::kList, AtomType::kCard, &kStepT, ", "};
const Type kPotList{Type::Kind::kList, AtomType::kCard, &kPotT, " "};
const Type kShowList{Type::Kind::kList, AtomType::kCard, &kShowT, "; "};
const Type kMsgList{Type::Kind::kList, AtomType::kCard, &kMsgT, "; "};

enum Key {
  kFlowCache,
  kSeed,
  kButton,
  kDeck,
  kHole,
  kCommunity,
  kDiscards,
  kStacks,
  kStreetBets,
  kPots,
  kCurrentActor,
  kPending,
  kRaises,
  kFolded,
  kAllIn,
  kShowdown,
  kMessage,
};

[[noreturn]] void Bad(const std::string& what) { Fail(ErrorCode::kInvalidArgument, what); }

bool IsDigits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<std::vector<int>> ParseIdList(std::string_view text, char sep) {
  std::vector<int> out;
  if (Trim(text).empty()) return out;
  for (const auto& part : Split(text, std::string(1, sep))) {
    auto v = ParseInt(Trim(part));
    if (!v || *v < 0 || *v > 1000000) return std::nullopt;
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

std::string JoinIds(const std::vector<int>& ids, std::string_view sep) {
  std::vector<std::string> parts;
  for (int id : ids) parts.push_back(std::to_string(id));
  return Join(parts, sep);
}

std::string RenderCards(const Cards& cards) {
  std::vector<std::string> parts;
  for (const auto& c : cards) parts.push_back(c.token);
  return Join(parts, " ");
}

Value CardsValue(const Cards& cards) {
  Value v = Value::List();
  for (const auto& c : cards) v.items.push_back(Value::Atom(c.token));
  return v;
}

Value IntsValue(const std::vector<Chips>& xs) {
  Value v = Value::List();
  for (auto x : xs) v.items.push_back(Value::Int(x));
  return v;
}

Value IdsValue(const std::vector<int>& xs) {
  Value v = Value::List();
  for (auto x : xs) v.items.push_back(Value::Int(x));
  return v;
}

void Expect(const Value& v, Value::Kind kind, std::string_view where) {
  if (v.kind != kind) Fail(ErrorCode::kSchemaMismatch, "node kind mismatch at " + std::string(where));
}

Cards CardsOf(const Value& v, std::string_view where) {
  Expect(v, Value::Kind::kList, where);
  Cards out;
  for (const auto& item : v.items) {
    Expect(item, Value::Kind::kAtom, where);
    out.push_back(Card{item.atom});
  }
  return out;
}

std::vector<Chips> IntsOf(const Value& v, std::string_view where) {
  Expect(v, Value::Kind::kList, where);
  std::vector<Chips> out;
  for (const auto& item : v.items) {
    Expect(item, Value::Kind::kInt, where);
    out.push_back(item.number);
  }
  return out;
}

std::vector<int> IdsOf(const Value& v, std::string_view where) {
  std::vector<int> out;
  for (auto x : IntsOf(v, where)) out.push_back(static_cast<int>(x));
  return out;
}

std::vector<std::string> AtomsOf(const Value& v, std::string_view where) {
  Expect(v, Value::Kind::kList, where);
  std::vector<std::string> out;
  for (const auto& item : v.items) {
    Expect(item, Value::Kind::kAtom, where);
    out.push_back(item.atom);
  }
  return out;
}

std::string CanonicalAtom(AtomType type, std::string_view text) {
  switch (type) {
    case AtomType::kCard: {
      if (text.empty() || text.find_first_of(" \t|;,") != std::string_view::npos) {
        Bad("bad card token '" + std::string(text) + "'");
      }
      return std::string(text);
    }
    case AtomType::kStep:
      return RenderFlowStep(ParseFlowStep(text));
    case AtomType::kPot: {
      auto pot = ParsePot(text);
      if (!pot) Bad("bad pot '" + std::string(text) + "'");
      return RenderPot(*pot);
    }
    case AtomType::kShowdown: {
      auto e = ParseShowdownEntry(text);
      if (!e) Bad("bad showdown entry '" + std::string(text) + "'");
      return RenderShowdownEntry(*e);
    }
    case AtomType::kMessage: {
      auto m = ParseMessage(text);
      if (!m) Bad("bad message '" + std::string(text) + "'");
      return RenderMessage(*m);
    }
  }
  return std::string(text);
}

}  // namespace

const std::vector<KeySchema>& StateSchema() {
  static const std::vector<KeySchema> schema = {
      {"flow_cache", &kStepList}, {"seed", &kIntT},          {"button", &kIntT},
      {"deck", &kCardList},       {"hole", &kCardLists},     {"community", &kCardList},
      {"discards", &kCardLists},  {"stacks", &kIntList},     {"street_bets", &kIntList},
      {"pots", &kPotList},        {"current_actor", &kOptIntT}, {"pending", &kIntList},
      {"raises", &kIntT},         {"folded", &kIntList},     {"all_in", &kIntList},
      {"showdown", &kShowList},   {"message", &kMsgList},
  };
  return schema;
}

std::optional<int> KeyIndex(std::string_view name) {
  const auto& schema = StateSchema();
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (schema[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string RenderPot(const Pot& pot) {
  return std::to_string(pot.amount) + "{" + JoinIds(pot.eligible, ",") + "}";
}

std::optional<Pot> ParsePot(std::string_view text) {
  auto open = text.find('{');
  if (open == std::string_view::npos || text.empty() || text.back() != '}') return std::nullopt;
  std::string_view amount = text.substr(0, open);
  if (!IsDigits(amount)) return std::nullopt;
  auto ids = ParseIdList(text.substr(open + 1, text.size() - open - 2), ',');
  if (!ids) return std::nullopt;
  Pot pot;
  pot.amount = *ParseInt(amount);
  pot.eligible = *ids;
  return pot;
}

std::string RenderMessage(const Message& m) {
  std::string src = m.source == kEngine ? "engine" : std::to_string(m.source);
  std::string dst = m.target == kAllPlayers ? "all" : std::to_string(m.target);
  return src + ">" + dst + ": " + m.text;
}

std::optional<Message> ParseMessage(std::string_view text) {
  auto gt = text.find('>');
  auto colon = text.find(": ");
  if (gt == std::string_view::npos || colon == std::string_view::npos || colon < gt) {
    return std::nullopt;
  }
  Message m;
  std::string_view src = text.substr(0, gt);
  std::string_view dst = text.substr(gt + 1, colon - gt - 1);
  if (src == "engine") {
    m.source = kEngine;
  } else if (IsDigits(src)) {
    m.source = static_cast<int>(*ParseInt(src));
  } else {
    return std::nullopt;
  }
  if (dst == "all") {
    m.target = kAllPlayers;
  } else if (IsDigits(dst)) {
    m.target = static_cast<int>(*ParseInt(dst));
  } else {
    return std::nullopt;
  }
  m.text = std::string(text.substr(colon + 2));
  if (m.text.find_first_of(";\n") != std::string::npos) return std::nullopt;
  return m;
}

std::string RenderShowdownEntry(const ShowdownEntry& e) {
  return std::to_string(e.player) + "/" + std::to_string(e.strategy) + "=" + e.combination +
         "(" + RenderCards(e.cards) + ")";
}

std::optional<ShowdownEntry> ParseShowdownEntry(std::string_view text) {
  auto slash = text.find('/');
  auto eq = text.find('=');
  auto open = text.rfind('(');
  if (slash == std::string_view::npos || eq == std::string_view::npos ||
      open == std::string_view::npos || text.back() != ')' || !(slash < eq && eq < open)) {
    return std::nullopt;
  }
  std::string_view player = text.substr(0, slash);
  std::string_view strategy = text.substr(slash + 1, eq - slash - 1);
  if (!IsDigits(player) || !IsDigits(strategy)) return std::nullopt;
  ShowdownEntry e;
  e.player = static_cast<int>(*ParseInt(player));
  e.strategy = static_cast<int>(*ParseInt(strategy));
  e.combination = std::string(text.substr(eq + 1, open - eq - 1));
  if (e.combination.empty() || e.combination.find_first_of("();") != std::string::npos) {
    return std::nullopt;
  }
  for (auto& w : SplitWords(text.substr(open + 1, text.size() - open - 2))) {
    e.cards.push_back(Card{w});
  }
  return e;
}

std::string RenderValue(const Type& type, const Value& value) {
  switch (type.kind) {
    case Type::Kind::kInt:
      return std::to_string(value.number);
    case Type::Kind::kOptInt:
      return value.kind == Value::Kind::kNull ? "-" : std::to_string(value.number);
    case Type::Kind::kAtom:
      return value.atom;
    case Type::Kind::kList:
      break;
  }
  if (value.items.empty()) return type.elem->kind == Type::Kind::kList ? "" : "-";
  std::vector<std::string> parts;
  const bool cards = type.elem->kind == Type::Kind::kAtom && type.elem->atom == AtomType::kCard;
  for (std::size_t i = 0; i < value.items.size(); ++i) {
    if (cards && value.items[i].atom == kHiddenToken) {
      // A run of hidden cards renders as "?N".
      std::size_t j = i;
      while (j < value.items.size() && value.items[j].atom == kHiddenToken) ++j;
      parts.push_back(std::string(kHiddenToken) + std::to_string(j - i));
      i = j - 1;
      continue;
    }
    parts.push_back(RenderValue(*type.elem, value.items[i]));
  }
  return Join(parts, type.sep);
}

Value ParseValue(const Type& type, std::string_view raw) {
  std::string_view text = Trim(raw);
  switch (type.kind) {
    case Type::Kind::kInt: {
      auto v = ParseInt(text);
      if (!v) Bad("expected an integer, got '" + std::string(text) + "'");
      return Value::Int(*v);
    }
    case Type::Kind::kOptInt: {
      if (text == "-") return Value::Null();
      auto v = ParseInt(text);
      if (!v) Bad("expected an integer or '-', got '" + std::string(text) + "'");
      return Value::Int(*v);
    }
    case Type::Kind::kAtom:
      return Value::Atom(CanonicalAtom(type.atom, text));
    case Type::Kind::kList:
      break;
  }
  Value out = Value::List();
  const Type& elem = *type.elem;
  if (elem.kind == Type::Kind::kList) {
    if (text.empty()) return out;
    for (const auto& part : Split(text, "|")) out.items.push_back(ParseValue(elem, part));
    return out;
  }
  if (text == "-") return out;
  if (text.empty()) Bad("empty list must be written '-'");
  std::vector<std::string> parts;
  if (Trim(type.sep).empty()) {
    parts = SplitWords(text);
  } else {
    for (const auto& p : Split(text, Trim(type.sep))) parts.emplace_back(Trim(p));
  }
  for (const auto& part : parts) {
    if (part.empty()) Bad("empty list element");
    if (elem.kind == Type::Kind::kAtom && elem.atom == AtomType::kCard &&
        StartsWith(part, kHiddenToken) && part.size() > 1) {
      auto n = ParseInt(std::string_view(part).substr(1));
      if (!n || *n < 1 || *n > 100000) Bad("bad hidden run '" + part + "'");
      for (std::int64_t k = 0; k < *n; ++k) out.items.push_back(Value::Atom(std::string(kHiddenToken)));
      continue;
    }
    out.items.push_back(ParseValue(elem, part));
  }
  return out;
}

Record ToRecord(const GameState& s) {
  Record r(StateSchema().size());
  {
    Value v = Value::List();
    for (const auto& step : s.flow_cache) v.items.push_back(Value::Atom(RenderFlowStep(step)));
    r[kFlowCache] = v;
  }
  r[kSeed] = Value::Int(s.seed);
  r[kButton] = Value::Int(s.button);
  r[kDeck] = CardsValue(s.deck);
  r[kHole] = Value::List();
  for (const auto& h : s.hole) r[kHole].items.push_back(CardsValue(h));
  r[kCommunity] = CardsValue(s.community);
  r[kDiscards] = Value::List();
  for (const auto& d : s.discards) r[kDiscards].items.push_back(CardsValue(d));
  r[kStacks] = IntsValue(s.stacks);
  r[kStreetBets] = IntsValue(s.street_bets);
  r[kPots] = Value::List();
  for (const auto& p : s.pots) r[kPots].items.push_back(Value::Atom(RenderPot(p)));
  r[kCurrentActor] = s.current_actor ? Value::Int(*s.current_actor) : Value::Null();
  r[kPending] = IdsValue(s.pending);
  r[kRaises] = Value::Int(s.raises);
  r[kFolded] = IdsValue(s.folded);
  r[kAllIn] = IdsValue(s.all_in);
  r[kShowdown] = Value::List();
  for (const auto& e : s.showdown) r[kShowdown].items.push_back(Value::Atom(RenderShowdownEntry(e)));
  r[kMessage] = Value::List();
  for (const auto& m : s.messages) r[kMessage].items.push_back(Value::Atom(RenderMessage(m)));
  return r;
}

GameState FromRecord(const Record& r) {
  if (r.size() != StateSchema().size()) Fail(ErrorCode::kSchemaMismatch, "record has wrong key count");
  GameState s;
  try {
    for (const auto& a : AtomsOf(r[kFlowCache], "flow_cache")) s.flow_cache.push_back(ParseFlowStep(a));
  } catch (const Error& e) {
    Fail(ErrorCode::kSchemaMismatch, std::string("flow_cache: ") + e.what());
  }
  Expect(r[kSeed], Value::Kind::kInt, "seed");
  s.seed = r[kSeed].number;
  Expect(r[kButton], Value::Kind::kInt, "button");
  s.button = static_cast<int>(r[kButton].number);
  s.deck = CardsOf(r[kDeck], "deck");
  Expect(r[kHole], Value::Kind::kList, "hole");
  for (const auto& h : r[kHole].items) s.hole.push_back(CardsOf(h, "hole"));
  s.community = CardsOf(r[kCommunity], "community");
  Expect(r[kDiscards], Value::Kind::kList, "discards");
  for (const auto& d : r[kDiscards].items) s.discards.push_back(CardsOf(d, "discards"));
  s.stacks = IntsOf(r[kStacks], "stacks");
  s.street_bets = IntsOf(r[kStreetBets], "street_bets");
  for (const auto& a : AtomsOf(r[kPots], "pots")) {
    auto pot = ParsePot(a);
    if (!pot) Fail(ErrorCode::kSchemaMismatch, "pots: bad pot '" + a + "'");
    s.pots.push_back(*pot);
  }
  if (r[kCurrentActor].kind == Value::Kind::kInt) {
    s.current_actor = static_cast<int>(r[kCurrentActor].number);
  } else {
    Expect(r[kCurrentActor], Value::Kind::kNull, "current_actor");
  }
  s.pending = IdsOf(r[kPending], "pending");
  Expect(r[kRaises], Value::Kind::kInt, "raises");
  s.raises = static_cast<int>(r[kRaises].number);
  s.folded = IdsOf(r[kFolded], "folded");
  s.all_in = IdsOf(r[kAllIn], "all_in");
  for (const auto& a : AtomsOf(r[kShowdown], "showdown")) {
    auto e = ParseShowdownEntry(a);
    if (!e) Fail(ErrorCode::kSchemaMismatch, "showdown: bad entry '" + a + "'");
    s.showdown.push_back(*e);
  }
  for (const auto& a : AtomsOf(r[kMessage], "message")) {
    auto m = ParseMessage(a);
    if (!m) Fail(ErrorCode::kSchemaMismatch, "message: bad message '" + a + "'");
    s.messages.push_back(*m);
  }
  return s;
}

std::string RenderPath(const Path& path) {
  std::string out(StateSchema()[path.key].name);
  for (int i : path.index) out += "/" + std::to_string(i);
  return out;
}

Path ParsePath(std::string_view text) {
  auto parts = Split(text, "/");
  auto key = KeyIndex(parts[0]);
  if (!key) Bad("unknown key '" + parts[0] + "'");
  Path path;
  path.key = *key;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!IsDigits(parts[i]) || parts[i].size() > 6) Bad("bad index '" + parts[i] + "'");
    path.index.push_back(static_cast<int>(*ParseInt(parts[i])));
  }
  if (TypeAt(path) == nullptr) Bad("path '" + std::string(text) + "' descends below a leaf");
  return path;
}

const Type* TypeAt(const Path& path) {
  const Type* t = StateSchema()[path.key].type;
  for (std::size_t i = 0; i < path.index.size(); ++i) {
    if (t->kind != Type::Kind::kList) return nullptr;
    t = t->elem;
  }
  return t;
}

const Value* Resolve(const Record& record, const Path& path) {
  if (path.key < 0 || path.key >= static_cast<int>(record.size())) return nullptr;
  const Value* v = &record[path.key];
  for (int i : path.index) {
    if (v->kind != Value::Kind::kList || i < 0 || i >= static_cast<int>(v->items.size())) {
      return nullptr;
    }
    v = &v->items[i];
  }
  return v;
}

Value* Resolve(Record& record, const Path& path) {
  return const_cast<Value*>(Resolve(static_cast<const Record&>(record), path));
}

}  // namespace pokerforge
