#pragma once

// JSON encoding of instances and reports. Rationals travel as strings
// ("5", "-3/7") so nothing passes through floating point.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "quadforms/identities.hpp"
#include "quadforms/independence.hpp"
#include "quadforms/tracing.hpp"

namespace quadforms {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

[[nodiscard]] json to_json(const Rational& q);
[[nodiscard]] json to_json(const RationalVector& v);
[[nodiscard]] json to_json(const RationalMatrix& m);

/// Accepts a rational string or a JSON integer. Throws ParseError.
[[nodiscard]] Rational rational_from_json(const json& j);
/// Rows must be arrays of equal length. Throws ParseError.
[[nodiscard]] RationalMatrix matrix_from_json(const json& j);

/// {"schema": 1, "r": .., "m": .., "A": [[..], ..]}
[[nodiscard]] json instance_to_json(const LinearFormSystem& sys);

struct ParsedInstance {
  LinearFormSystem system;
  /// Present when the input listed arbitrary forms under "forms" and was
  /// brought to normal form.
  std::optional<NormalForm> normal_form;
};

/// Reads either the normal-form schema above or {"forms": [[..], ..]}.
/// Throws ParseError on malformed input or dimension mismatch.
[[nodiscard]] ParsedInstance instance_from_json(const json& j);
[[nodiscard]] ParsedInstance parse_instance(const std::string& text);

[[nodiscard]] json report_to_json(const IndependenceReport& report);
[[nodiscard]] json classification_to_json(const Cor22Classification& c);
[[nodiscard]] json normal_form_to_json(const NormalForm& nf);

/// "(coefficient)*z1^2*(a1*z1 + a2*z2)^2" for one summand, unexpanded.
[[nodiscard]] std::string summand_text(const IdentityInstance& inst, const Summand& s);
/// with_summands adds the unexpanded "lhs" text and the summand list.
[[nodiscard]] json identity_to_json(const IdentityInstance& inst, bool with_summands);
[[nodiscard]] json traced_system_to_json(const TracedSystem& sys);

/// FNV-1a 64-bit of the string, as 16 hex digits.
[[nodiscard]] std::string fnv1a_hex(const std::string& text);
/// Digest of the compact canonical instance JSON.
[[nodiscard]] std::string instance_digest(const LinearFormSystem& sys);

}  // namespace quadforms
