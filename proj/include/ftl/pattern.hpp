#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ftl/source.hpp"
#include "ftl/token.hpp"

namespace ftl {

enum class PatternKind { Notion, Predicate, Function };

inline const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Notion: return "notion";
    case PatternKind::Predicate: return "predicate";
    case PatternKind::Function: return "function";
  }
  return "?";
}

/// One element of a pattern shape: either an argument slot or a literal word
/// with one or more accepted spellings ("number / numbers" declares two).
struct ShapeItem {
  bool slot = false;
  std::vector<std::string> forms;  // lowercase; empty iff slot

  static ShapeItem make_slot() { return {true, {}}; }
  static ShapeItem literal(std::vector<std::string> fs) { return {false, std::move(fs)}; }

  bool accepts(const std::string& folded_word) const {
    return !slot && std::find(forms.begin(), forms.end(), folded_word) != forms.end();
  }
};

/// A phrase pattern registered by a Signature or Definition block.
///
/// Notions and adjectives have an implicit subject slot in front of the
/// shape; verb predicates carry the subject as their first explicit slot.
/// The symbol name is the first-order predicate/function this pattern maps
/// to; it is derived deterministically from the shape.
struct Pattern {
  PatternKind kind = PatternKind::Notion;
  std::vector<ShapeItem> shape;
  std::string symbol;
  bool adjective = false;   // predicate usable attributively and after "is"
  bool infix = false;       // symbolic relation, shape = [slot, SYM, slot]
  bool transitive = false;  // infix only: declared transitive
  bool well_founded = false;

  int slot_count() const {
    int c = 0;
    for (const auto& it : shape)
      if (it.slot) ++c;
    return c;
  }

  /// Number of argument positions of the first-order symbol. Notions and
  /// adjectives count their implicit subject.
  int arity() const {
    bool implicit_subject =
        kind == PatternKind::Notion || (kind == PatternKind::Predicate && adjective);
    return slot_count() + (implicit_subject ? 1 : 0);
  }

  /// Words of the shape with slots as "?", e.g. "subgroup of ?".
  std::string display() const {
    std::string out;
    for (const auto& it : shape) {
      if (!out.empty()) out += " ";
      out += it.slot ? "?" : it.forms.front();
    }
    return out;
  }
};

using PatternRef = std::shared_ptr<const Pattern>;

namespace detail {

inline std::string camel_symbol(const Pattern& p) {
  if (p.infix) {
    // symbolic relations keep their spelling as the predicate name
    for (const auto& it : p.shape)
      if (!it.slot) return it.forms.front();
  }
  std::string out;
  bool first = true;
  for (const auto& it : p.shape) {
    if (it.slot) continue;
    std::string w = it.forms.front();
    // hyphenated words contribute each part
    std::string part;
    auto flush = [&] {
      if (part.empty()) return;
      if (first) {
        first = false;
      } else {
        part[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
      }
      out += part;
      part.clear();
    };
    for (char c : w) {
      if (c == '-') {
        flush();
      } else {
        part += c;
      }
    }
    flush();
  }
  if (p.kind == PatternKind::Notion) {
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    out = "a" + out;
  }
  return out;
}

// Shapes conflict when every position pairs slot with slot or literal with a
// shared spelling; such shapes can match the same token sequence.
inline bool shapes_overlap(const std::vector<ShapeItem>& a, const std::vector<ShapeItem>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].slot != b[i].slot) return false;
    if (!a[i].slot) {
      bool shared = false;
      for (const auto& f : a[i].forms)
        if (b[i].accepts(f)) shared = true;
      if (!shared) return false;
    }
  }
  return true;
}

inline bool shapes_identical(const std::vector<ShapeItem>& a, const std::vector<ShapeItem>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].slot != b[i].slot) return false;
    if (!a[i].slot && a[i].forms != b[i].forms) return false;
  }
  return true;
}

}  // namespace detail

/// The dynamic vocabulary threaded through parsing. A value type: extending
/// it returns an updated copy, so a document prefix always parses the same
/// way regardless of what follows.
class Vocabulary {
 public:
  /// Registers a pattern, deriving its symbol name. Reports duplicates,
  /// longest-match ambiguities, and symbol-name collisions.
  Vocabulary with(Pattern p, SourcePos pos = {}, const std::string& file = "") const {
    if (p.symbol.empty()) p.symbol = detail::camel_symbol(p);
    for (const auto& q : patterns_) {
      bool same_class = q->kind == p.kind && q->adjective == p.adjective;
      if (same_class && detail::shapes_identical(q->shape, p.shape)) {
        throw VocabularyError(VocabularyError::Kind::Duplicate,
                              {file, pos, "duplicate pattern '" + p.display() + "'"});
      }
      if (same_class && detail::shapes_overlap(q->shape, p.shape)) {
        throw VocabularyError(VocabularyError::Kind::Ambiguous,
                              {file, pos,
                               "pattern '" + p.display() + "' overlaps previously registered '" +
                                   q->display() + "'"});
      }
      if (q->symbol == p.symbol && q->arity() == p.arity() &&
          (q->kind == PatternKind::Function) == (p.kind == PatternKind::Function)) {
        throw VocabularyError(VocabularyError::Kind::NameCollision,
                              {file, pos,
                               "patterns '" + p.display() + "' and '" + q->display() +
                                   "' map to the same symbol '" + p.symbol + "'"});
      }
    }
    Vocabulary v = *this;
    v.patterns_.push_back(std::make_shared<const Pattern>(std::move(p)));
    return v;
  }

  const std::vector<PatternRef>& patterns() const { return patterns_; }

  /// Candidate patterns of one class whose first literal can start a match,
  /// longest shape first (ties: registration order).
  std::vector<PatternRef> candidates(PatternKind kind, bool adjective) const {
    std::vector<PatternRef> out;
    for (const auto& p : patterns_)
      if (p->kind == kind && p->adjective == adjective && !p->infix) out.push_back(p);
    std::stable_sort(out.begin(), out.end(), [](const PatternRef& a, const PatternRef& b) {
      return a->shape.size() > b->shape.size();
    });
    return out;
  }

  PatternRef find_infix(const std::string& sym) const {
    for (const auto& p : patterns_)
      if (p->infix && p->shape.size() == 3 && p->shape[1].accepts(sym)) return p;
    return nullptr;
  }

  bool empty() const { return patterns_.empty(); }

 private:
  std::vector<PatternRef> patterns_;
};

}  // namespace ftl
