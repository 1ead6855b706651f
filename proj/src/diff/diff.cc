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

#include "diff/diff.h"

#include <algorithm>

#include "common/error.h"
#include "common/strings.h"

namespace pokerforge {

EditOp EditOp::Set(Path p, Value v) {
  EditOp op;
  op.kind = OpKind::kSet;
  op.path = std::move(p);
  op.value = std::move(v);
  return op;
}

EditOp EditOp::Remove(Path p) {
  EditOp op;
  op.kind = OpKind::kRemove;
  op.path = std::move(p);
  return op;
}

EditOp EditOp::Append(Path p, Value v) {
  EditOp op;
  op.kind = OpKind::kAppend;
  op.path = std::move(p);
  op.value = std::move(v);
  return op;
}

EditOp EditOp::Move(Path src, int count, Path dst) {
  EditOp op;
  op.kind = OpKind::kMove;
  op.path = std::move(src);
  op.count = count;
  op.dst = std::move(dst);
  return op;
}

EditOp EditOp::Call(std::string fn, CallArgs args) {
  EditOp op;
  op.kind = OpKind::kCall;
  op.fn = std::move(fn);
  op.args = std::move(args);
  return op;
}

namespace {

std::string WithValue(std::string head, const Type& type, const Value& v) {
  std::string text = RenderValue(type, v);
  if (!text.empty()) head += " " + text;
  return head;
}

Path Child(const Path& p, int i) {
  Path c = p;
  c.index.push_back(i);
  return c;
}

bool SameListShape(const Type* a, const Type* b) {
  if (!a || !b || a->kind != Type::Kind::kList || b->kind != Type::Kind::kList) return false;
  const Type* ea = a->elem;
  const Type* eb = b->elem;
  while (ea && eb) {
    if (ea->kind != eb->kind || (ea->kind == Type::Kind::kAtom && ea->atom != eb->atom)) return false;
    ea = ea->elem;
    eb = eb->elem;
  }
  return ea == eb;
}

[[noreturn]] void Malformed(int line, const std::string& msg) { Fail(ErrorCode::kMalformedOp, msg, line); }

Path ParsePathAt(std::string_view text, int line) {
  try {
    Path p = ParsePath(text);
    if (!TypeAt(p)) Malformed(line, "path '" + std::string(text) + "' descends below a leaf");
    return p;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedOp) throw;
    Malformed(line, e.what());
  }
}

Value ParseValueAt(const Type& type, std::string_view text, int line) {
  try {
    return ParseValue(type, text);
  } catch (const Error& e) {
    Malformed(line, e.what());
  }
}

}  // namespace

std::string RenderOp(const EditOp& op) {
  switch (op.kind) {
    case OpKind::kSet:
      return WithValue("set " + RenderPath(op.path), *TypeAt(op.path), op.value);
    case OpKind::kRemove:
      return "remove " + RenderPath(op.path);
    case OpKind::kAppend:
      return WithValue("append " + RenderPath(op.path), *TypeAt(op.path), op.value);
    case OpKind::kMove:
      return "move " + RenderPath(op.path) + " " + std::to_string(op.count) + " " + RenderPath(op.dst);
    case OpKind::kCall: {
      std::string out = "call " + op.fn;
      for (const auto& a : op.args) out += " " + a.name + "=" + a.value;
      return out;
    }
  }
  return "";
}

std::string RenderDiff(const DiffScript& diff) {
  std::string out(kDiffHeader);
  out += "\n";
  for (const auto& op : diff.ops) out += RenderOp(op) + "\n";
  return out;
}

DiffScript ParseDiff(std::string_view text) {
  DiffScript out;
  int line_no = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (first && line == kDiffHeader) {
      first = false;
      continue;
    }
    first = false;
    std::size_t sp = line.find(' ');
    std::string_view word = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
    if (word == "set" || word == "append") {
      std::size_t sp2 = rest.find(' ');
      std::string_view path_text = rest.substr(0, sp2);
      std::string_view value_text = sp2 == std::string_view::npos ? std::string_view{} : rest.substr(sp2 + 1);
      if (path_text.empty()) Malformed(line_no, std::string(word) + " needs a path");
      Path path = ParsePathAt(path_text, line_no);
      const Type* type = TypeAt(path);
      if (word == "append" && type->kind != Type::Kind::kList) {
        Malformed(line_no, "append target '" + std::string(path_text) + "' is not a list");
      }
      Value v = ParseValueAt(*type, value_text, line_no);
      out.ops.push_back(word == "set" ? EditOp::Set(path, v) : EditOp::Append(path, v));
    } else if (word == "remove") {
      if (rest.empty() || rest.find(' ') != std::string_view::npos) Malformed(line_no, "remove takes one path");
      Path path = ParsePathAt(rest, line_no);
      if (path.index.empty()) Malformed(line_no, "remove needs a list element path");
      out.ops.push_back(EditOp::Remove(path));
    } else if (word == "move") {
      auto parts = SplitWords(rest);
      if (parts.size() != 3) Malformed(line_no, "move takes: source count destination");
      Path src = ParsePathAt(parts[0], line_no);
      auto count = ParseInt(parts[1]);
      if (!count || *count < 0) Malformed(line_no, "move count must be a non-negative integer");
      Path dst = ParsePathAt(parts[2], line_no);
      if (!SameListShape(TypeAt(src), TypeAt(dst))) Malformed(line_no, "move needs two lists of one shape");
      out.ops.push_back(EditOp::Move(src, static_cast<int>(*count), dst));
    } else if (word == "call") {
      auto parts = SplitWords(rest);
      if (parts.empty()) Malformed(line_no, "call needs a function name");
      if (!FindCoreFunction(parts[0])) {
        Fail(ErrorCode::kUnknownCoreFn, "unknown core function '" + parts[0] + "'", line_no);
      }
      CallArgs args;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        std::size_t eq = parts[i].find('=');
        if (eq == std::string::npos || eq == 0) Malformed(line_no, "argument '" + parts[i] + "' is not name=value");
        args.push_back({parts[i].substr(0, eq), parts[i].substr(eq + 1)});
      }
      out.ops.push_back(EditOp::Call(parts[0], std::move(args)));
    } else {
      Malformed(line_no, "unknown op '" + std::string(word) + "'");
    }
    if (end == text.size()) break;
  }
  return out;
}

namespace {

std::size_t OpsLength(const std::vector<EditOp>& ops) {
  std::size_t n = 0;
  for (const auto& op : ops) n += RenderOp(op).size() + 1;
  return n;
}

void DiffNode(const Path& path, const Type& type, const Value& a, const Value& b, std::vector<EditOp>& ops) {
  if (a == b) return;
  if (type.kind == Type::Kind::kList && a.kind == Value::Kind::kList && b.kind == Value::Kind::kList) {
    const auto& ia = a.items;
    const auto& ib = b.items;
    if (ib.size() > ia.size() && std::equal(ia.begin(), ia.end(), ib.begin())) {
      ops.push_back(EditOp::Append(path, Value::List({ib.begin() + static_cast<std::ptrdiff_t>(ia.size()), ib.end()})));
      return;
    }
    if (ia.size() == ib.size() + 1) {
      std::size_t i = 0;
      while (i < ib.size() && ia[i] == ib[i]) ++i;
      if (std::equal(ia.begin() + static_cast<std::ptrdiff_t>(i) + 1, ia.end(),
                     ib.begin() + static_cast<std::ptrdiff_t>(i))) {
        ops.push_back(EditOp::Remove(Child(path, static_cast<int>(i))));
        return;
      }
    }
    if (ia.size() == ib.size()) {
      std::vector<EditOp> sub;
      for (std::size_t i = 0; i < ia.size(); ++i) DiffNode(Child(path, static_cast<int>(i)), *type.elem, ia[i], ib[i], sub);
      EditOp whole = EditOp::Set(path, b);
      if (OpsLength(sub) < RenderOp(whole).size() + 1) {
        ops.insert(ops.end(), sub.begin(), sub.end());
      } else {
        ops.push_back(std::move(whole));
      }
      return;
    }
  }
  ops.push_back(EditOp::Set(path, b));
}

// Card lists that can receive a moved deck prefix.
std::vector<Path> CardLeaves(const Record& r) {
  std::vector<Path> out;
  out.push_back(Path{*KeyIndex("community"), {}});
  for (const char* key : {"hole", "discards"}) {
    int k = *KeyIndex(key);
    for (std::size_t i = 0; i < r[k].items.size(); ++i) out.push_back(Path{k, {static_cast<int>(i)}});
  }
  return out;
}

[[noreturn]] void BadPath(std::size_t op, const std::string& msg) {
  Fail(ErrorCode::kBadPath, "op " + std::to_string(op + 1) + ": " + msg, static_cast<int>(op + 1));
}

Value* ListAt(Record& r, const Path& p, std::size_t op) {
  Value* v = Resolve(r, p);
  if (!v) BadPath(op, "no node at " + RenderPath(p));
  if (v->kind != Value::Kind::kList) BadPath(op, RenderPath(p) + " is not a list");
  return v;
}

}  // namespace

DiffScript ComputeDiff(const GameState& prev, const GameState& next) {
  if (!prev.IsBlank() && !next.IsBlank() && prev.stacks.size() != next.stacks.size()) {
    Fail(ErrorCode::kSchemaMismatch, "states seat different numbers of players");
  }
  Record a = ToRecord(prev);
  const Record b = ToRecord(next);
  DiffScript out;
  // A deck prefix that moved to the end of one card list becomes one move.
  const int kd = *KeyIndex("deck");
  const auto& da = a[kd].items;
  const auto& db = b[kd].items;
  if (da.size() > db.size() && std::equal(db.begin(), db.end(), da.end() - static_cast<std::ptrdiff_t>(db.size()))) {
    const std::size_t k = da.size() - db.size();
    std::vector<Value> prefix(da.begin(), da.begin() + static_cast<std::ptrdiff_t>(k));
    for (const Path& leaf : CardLeaves(a)) {
      const Value* va = Resolve(a, leaf);
      const Value* vb = Resolve(b, leaf);
      if (!va || !vb || vb->items.size() != va->items.size() + k) continue;
      if (!std::equal(va->items.begin(), va->items.end(), vb->items.begin())) continue;
      if (!std::equal(prefix.begin(), prefix.end(), vb->items.begin() + static_cast<std::ptrdiff_t>(va->items.size()))) continue;
      out.ops.push_back(EditOp::Move(Path{kd, {}}, static_cast<int>(k), leaf));
      Value* dst = Resolve(a, leaf);
      dst->items.insert(dst->items.end(), prefix.begin(), prefix.end());
      a[kd].items.erase(a[kd].items.begin(), a[kd].items.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    }
  }
  const auto& schema = StateSchema();
  for (std::size_t k = 0; k < schema.size(); ++k) {
    DiffNode(Path{static_cast<int>(k), {}}, *schema[k].type, a[k], b[k], out.ops);
  }
  return out;
}

GameState Merge(const GameSpec& spec, const GameState& prev, const DiffScript& diff) {
  Record r = ToRecord(prev);
  for (std::size_t i = 0; i < diff.ops.size(); ++i) {
    const EditOp& op = diff.ops[i];
    switch (op.kind) {
      case OpKind::kSet: {
        Value* node = Resolve(r, op.path);
        if (!node) BadPath(i, "no node at " + RenderPath(op.path));
        *node = op.value;
        break;
      }
      case OpKind::kRemove: {
        if (op.path.index.empty()) BadPath(i, "remove needs a list element");
        Path parent = op.path;
        int idx = parent.index.back();
        parent.index.pop_back();
        Value* list = ListAt(r, parent, i);
        if (idx < 0 || idx >= static_cast<int>(list->items.size())) BadPath(i, "no element " + RenderPath(op.path));
        list->items.erase(list->items.begin() + idx);
        break;
      }
      case OpKind::kAppend: {
        Value* list = ListAt(r, op.path, i);
        if (op.value.kind != Value::Kind::kList) BadPath(i, "append value is not a list");
        list->items.insert(list->items.end(), op.value.items.begin(), op.value.items.end());
        break;
      }
      case OpKind::kMove: {
        Value* src = ListAt(r, op.path, i);
        if (op.count < 0 || op.count > static_cast<int>(src->items.size())) {
          BadPath(i, RenderPath(op.path) + " holds fewer than " + std::to_string(op.count) + " items");
        }
        std::vector<Value> moved(src->items.begin(), src->items.begin() + op.count);
        src->items.erase(src->items.begin(), src->items.begin() + op.count);
        Value* dst = ListAt(r, op.dst, i);
        dst->items.insert(dst->items.end(), moved.begin(), moved.end());
        break;
      }
      case OpKind::kCall: {
        GameState s;
        try {
          s = FromRecord(r);
        } catch (const Error& e) {
          BadPath(i, e.what());
        }
        try {
          s = InvokeCore(spec, op.fn, op.args, s);
        } catch (const Error& e) {
          Fail(ErrorCode::kCoreFnFailure, op.fn + ": " + e.what(), static_cast<int>(i + 1));
        }
        r = ToRecord(s);
        break;
      }
    }
  }
  try {
    return FromRecord(r);
  } catch (const Error& e) {
    BadPath(diff.ops.empty() ? 0 : diff.ops.size() - 1, e.what());
  }
}

std::string FirstDifferingKey(const GameState& a, const GameState& b) {
  const Record ra = ToRecord(a);
  const Record rb = ToRecord(b);
  const auto& schema = StateSchema();
  for (std::size_t k = 0; k < schema.size(); ++k) {
    if (!(ra[k] == rb[k])) return std::string(schema[k].name);
  }
  return "";
}

Equivalence Equivalent(const GameSpec& spec, std::string_view pred, std::string_view gold,
                       const GameState& prev) {
  Equivalence out;
  if (pred == gold) {
    out.equivalent = true;
    return out;
  }
  const GameState want = Merge(spec, prev, ParseDiff(gold));
  DiffScript p;
  try {
    p = ParseDiff(pred);
  } catch (const Error& e) {
    out.reason = "parse_error";
    out.detail = e.what();
    return out;
  }
  GameState got;
  try {
    got = Merge(spec, prev, p);
  } catch (const Error& e) {
    out.reason = "merge_error";
    out.detail = e.what();
    return out;
  }
  out.key = FirstDifferingKey(got, want);
  if (out.key.empty()) {
    out.equivalent = true;
  } else {
    out.reason = "state_mismatch";
  }
  return out;
}

}  // namespace pokerforge
