#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finkan {

// Every derived structure can be built in `checked` mode (laws that are
// theorems on paper are still re-verified element by element) or `unchecked`
// mode (the formulas are trusted; only cheap structural sanity remains).
enum class Check { checked, unchecked };

class Error : public std::runtime_error {
public:
  enum class Code {
    missing_identity,
    identity_law_violation,
    composition_domain_error,
    source_target_mismatch,
    associativity_violation,
    unknown_object,
    unknown_morphism,
    identity_not_preserved,
    composition_not_preserved,
    source_target_not_preserved,
    identity_action_violation,
    functoriality_violation,
    ill_typed_action,
    naturality_violation,
    base_mismatch,
    composition_mismatch,
    not_coequalizing,
    parse_error,
    semantic_error,
    generation_exhausted,
    internal_error,
  };

  Error(Code code, const std::string& message, std::vector<std::string> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  Code code() const { return code_; }

  // The labels (morphisms, objects, elements) that witness the failure.
  const std::vector<std::string>& witness() const { return witness_; }

private:
  Code code_;
  std::vector<std::string> witness_;
};

const char* to_string(Error::Code code);

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& expected)
      : Error(Code::parse_error,
              "parse error at line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": expected " + expected,
              {std::to_string(line), std::to_string(column), expected}),
        line_(line), column_(column), expected_(expected) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

private:
  int line_;
  int column_;
  std::string expected_;
};

}  // namespace finkan
