#pragma once

#include "pcert/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>

namespace pcert {

/// Certificates only ever claim existence. A failed hypothesis gives
/// `inconclusive`, never a statement that the point is isolated.
enum class Verdict { certified, inconclusive, precondition_violated };

std::string to_string(Verdict v);
/// Throws std::invalid_argument on unknown names.
Verdict parse_verdict(const std::string& text);

struct AuditResult {
  bool ok = true;
  /// Name of the first field whose recomputed value disagrees.
  std::string mismatch;

  explicit operator bool() const { return ok; }
  static AuditResult pass() { return {}; }
  static AuditResult fail(std::string field) { return {false, std::move(field)}; }
};

/// max{ i : ladder[i] <= threshold }, or nullopt when ladder[0] > threshold.
std::optional<std::size_t> prefix_index(std::span<const Rational> ladder, const Rational& threshold);

} // namespace pcert
