#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ftl/pattern.hpp"
#include "ftl/source.hpp"

namespace ftl {

// ---------------------------------------------------------------------------
// Surface terms

/// Value comparison: two references to structurally identical patterns are
/// the same pattern, even across independent parses.
inline bool same_pattern(const PatternRef& a, const PatternRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->symbol == b->symbol && a->adjective == b->adjective &&
         a->infix == b->infix && detail::shapes_identical(a->shape, b->shape);
}

struct STerm {
  enum class Kind { Var, App };
  Kind kind = Kind::Var;
  std::string var;       // Kind::Var
  PatternRef fn;         // Kind::App: a function pattern
  std::vector<STerm> args;

  static STerm make_var(std::string name) {
    STerm t;
    t.kind = Kind::Var;
    t.var = std::move(name);
    return t;
  }
  static STerm app(PatternRef f, std::vector<STerm> as) {
    STerm t;
    t.kind = Kind::App;
    t.fn = std::move(f);
    t.args = std::move(as);
    return t;
  }

  bool operator==(const STerm& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Var) return var == o.var;
    return same_pattern(fn, o.fn) && args == o.args;
  }
};

struct Statement;
using StmtPtr = std::shared_ptr<const Statement>;

/// Use of an adjective pattern: "prime", "divisible by m".
struct AdjUse {
  PatternRef pattern;
  std::vector<STerm> args;

  bool operator==(const AdjUse& o) const {
    return same_pattern(pattern, o.pattern) && args == o.args;
  }
};

/// "prime number p such that p divides n": base notion plus modifiers.
struct NotionPhrase {
  PatternRef base;
  std::vector<AdjUse> adjectives;
  std::vector<STerm> deps;          // dependent arguments of the base notion
  std::string var;                  // subject variable (always set when quantified)
  bool var_explicit = false;        // variable written in the source
  StmtPtr such_that;                // optional restriction

  bool operator==(const NotionPhrase& o) const;
};

enum class Quantifier { Every, Some, No };

inline const char* to_string(Quantifier q) {
  switch (q) {
    case Quantifier::Every: return "every";
    case Quantifier::Some: return "some";
    case Quantifier::No: return "no";
  }
  return "?";
}

enum class StmtKind {
  Quantified,    // quantifier + notion phrase + optional scope
  PredicateApp,  // verb pattern applied to terms
  IsNotion,      // subject is a <notion phrase>
  HasAdjective,  // subject is <adjective>
  Relation,      // subject REL term, including "="
  And,
  Or,
  Implies,
  Iff,
  Not,
};

struct Statement {
  StmtKind kind;
  SourcePos pos;

  // Quantified
  Quantifier quant = Quantifier::Every;
  NotionPhrase notion;
  StmtPtr scope;  // may be null ("there is a prime")

  // PredicateApp / Relation / HasAdjective / IsNotion
  PatternRef pattern;      // PredicateApp
  std::string rel_symbol;  // Relation ("=", "<", ...)
  std::vector<STerm> args; // PredicateApp & Relation operands; [0] is subject
  STerm subject;           // IsNotion / HasAdjective
  AdjUse adjective;        // HasAdjective

  // connectives
  std::vector<StmtPtr> children;

  // --- constructors ------------------------------------------------------

  static StmtPtr quantified(Quantifier q, NotionPhrase np, StmtPtr scope, SourcePos pos = {}) {
    auto s = std::make_shared<Statement>();
    s->kind = StmtKind::Quantified;
    s->quant = q;
    s->notion = std::move(np);
    s->scope = std::move(scope);
    s->pos = pos;
    return s;
  }
  static StmtPtr predicate(PatternRef p, std::vector<STerm> args, SourcePos pos = {}) {
    auto s = std::make_shared<Statement>();
    s->kind = StmtKind::PredicateApp;
    s->pattern = std::move(p);
    s->args = std::move(args);
    s->pos = pos;
    return s;
  }
  static StmtPtr is_notion(STerm subject, NotionPhrase np, SourcePos pos = {}) {
    auto s = std::make_shared<Statement>();
    s->kind = StmtKind::IsNotion;
    s->subject = std::move(subject);
    s->notion = std::move(np);
    s->pos = pos;
    return s;
  }
  static StmtPtr has_adjective(STerm subject, AdjUse adj, SourcePos pos = {}) {
    auto s = std::make_shared<Statement>();
    s->kind = StmtKind::HasAdjective;
    s->subject = std::move(subject);
    s->adjective = std::move(adj);
    s->pos = pos;
    return s;
  }
  static StmtPtr relation(std::string sym, STerm lhs, STerm rhs, SourcePos pos = {}) {
    auto s = std::make_shared<Statement>();
    s->kind = StmtKind::Relation;
    s->rel_symbol = std::move(sym);
    s->args = {std::move(lhs), std::move(rhs)};
    s->pos = pos;
    return s;
  }
  static StmtPtr connective(StmtKind k, std::vector<StmtPtr> cs, SourcePos pos = {}) {
    auto s = std::make_shared<Statement>();
    s->kind = k;
    s->children = std::move(cs);
    s->pos = pos;
    return s;
  }
  static StmtPtr negation(StmtPtr c, SourcePos pos = {}) {
    return connective(StmtKind::Not, {std::move(c)}, pos);
  }
};

/// Structural equality; source positions are ignored.
inline bool equal(const StmtPtr& a, const StmtPtr& b);

inline bool NotionPhrase::operator==(const NotionPhrase& o) const {
  if (!same_pattern(base, o.base) || adjectives != o.adjectives || deps != o.deps ||
      var != o.var)
    return false;
  if (!such_that != !o.such_that) return false;
  return !such_that || equal(such_that, o.such_that);
}

inline bool equal(const StmtPtr& a, const StmtPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case StmtKind::Quantified:
      return a->quant == b->quant && a->notion == b->notion && equal(a->scope, b->scope);
    case StmtKind::PredicateApp:
      return same_pattern(a->pattern, b->pattern) && a->args == b->args;
    case StmtKind::IsNotion:
      return a->subject == b->subject && a->notion == b->notion;
    case StmtKind::HasAdjective:
      return a->subject == b->subject && a->adjective == b->adjective;
    case StmtKind::Relation:
      return a->rel_symbol == b->rel_symbol && a->args == b->args;
    default:
      break;
  }
  if (a->children.size() != b->children.size()) return false;
  for (size_t i = 0; i < a->children.size(); ++i)
    if (!equal(a->children[i], b->children[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Blocks and documents

struct LetBinding {
  std::string var;
  NotionPhrase notion;
  SourcePos pos;
};

enum class ClaimKind { Theorem, Lemma, Proposition };

inline const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Theorem: return "theorem";
    case ClaimKind::Lemma: return "lemma";
    case ClaimKind::Proposition: return "proposition";
  }
  return "?";
}

struct ProofBlock;

struct ProofStep {
  // exactly one of statement / case_block is set
  StmtPtr statement;
  std::shared_ptr<ProofBlock> subproof;  // optional nested proof of the statement
  struct CaseBlock {
    StmtPtr hypothesis;
    std::vector<ProofStep> steps;
    SourcePos pos;
  };
  std::shared_ptr<CaseBlock> case_block;
  SourcePos pos;
};

struct ProofBlock {
  bool by_induction = false;
  std::vector<ProofStep> steps;
  SourcePos pos;
};

struct Block {
  enum class Kind { Signature, Definition, Axiom, Claim };
  Kind kind;
  SourcePos pos;

  // Signature: patterns registered here plus typing statements they induce
  std::vector<PatternRef> declared;
  std::vector<StmtPtr> typing;       // e.g. "A prime is a number."
  std::vector<LetBinding> lets;

  // Definition
  PatternRef defined;                // head pattern
  StmtPtr definition_head;           // head as a statement over slot variables
  StmtPtr definition_body;
  std::vector<std::string> head_vars;

  // Axiom / Claim
  StmtPtr statement;
  ClaimKind claim_kind = ClaimKind::Theorem;
  std::shared_ptr<ProofBlock> proof;

  // vocabulary and let-environment in effect for this block's statements
  Vocabulary vocab;
  std::vector<LetBinding> env;
};

struct Document {
  std::string file;
  std::vector<Block> blocks;
  Vocabulary final_vocab;
};

}  // namespace ftl
