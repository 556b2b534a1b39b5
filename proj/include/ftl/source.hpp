#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ftl {

/// 1-based line:column position inside a source file.
struct SourcePos {
  int line = 1;
  int col = 1;

  bool operator==(const SourcePos&) const = default;
  auto operator<=>(const SourcePos&) const = default;
};

inline std::string to_string(const SourcePos& p) {
  return std::to_string(p.line) + ":" + std::to_string(p.col);
}

/// A reported problem, formatted as `file:line:col: error: message`.
struct Diagnostic {
  std::string file;
  SourcePos pos;
  std::string message;
  // token classes the parser would have accepted; empty outside syntax errors
  std::vector<std::string> expected;

  std::string render() const {
    std::string out = file.empty() ? "<input>" : file;
    out += ":" + to_string(pos) + ": error: " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (size_t i = 0; i < expected.size(); ++i) {
        if (i) out += ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }
};

/// Base of all errors carrying a source position.
class FtlError : public std::runtime_error {
 public:
  explicit FtlError(Diagnostic d) : std::runtime_error(d.render()), diag_(std::move(d)) {}
  const Diagnostic& diag() const { return diag_; }

 private:
  Diagnostic diag_;
};

class IllegalCharacterError : public FtlError {
 public:
  using FtlError::FtlError;
};

class SyntaxError : public FtlError {
 public:
  using FtlError::FtlError;
};

class UnknownPatternError : public FtlError {
 public:
  using FtlError::FtlError;
};

class VocabularyError : public FtlError {
 public:
  enum class Kind { Duplicate, Ambiguous, NameCollision };
  VocabularyError(Kind k, Diagnostic d) : FtlError(std::move(d)), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class TranslationError : public FtlError {
 public:
  using FtlError::FtlError;
};

}  // namespace ftl
