#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegc/scalar.hpp"

namespace liegc {

enum class ClauseStatus { pass, fail, skipped };
enum class Verdict { pass, fail, inconclusive };

struct Witness {
  std::vector<int> indices;        // basis indices involved
  std::optional<Scalar> value;     // offending scalar, when there is one
  std::string note;
};

struct Clause {
  std::string id;
  ClauseStatus status = ClauseStatus::pass;
  std::optional<Witness> witness;
};

/// Structured pass/fail report: one clause per checked condition, with a
/// witness attached to every failure.
struct Certificate {
  std::vector<Clause> clauses;
  bool hypothesis_failed = false;  // makes the verdict inconclusive

  void add_pass(const std::string& id);
  void add_fail(const std::string& id, Witness w);
  void add_skip(const std::string& id, const std::string& note = "");
  const Clause* find(const std::string& id) const;
  bool clause_failed(const std::string& id) const;
  bool passed() const;
  Verdict verdict() const;
  std::string summary() const;
};

}  // namespace liegc
