#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coalition {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored reduced with a positive denominator; comparisons and
/// arithmetic never round. Stability of a coalition structure hinges on
/// strict inequalities between costs, so no floating point is used anywhere.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_int_backend<>,
    boost::multiprecision::et_off>;

enum class Errc {
  InvalidRational,
  InvalidInput,
  InvalidStructure,
  EmptyValues,
  KExceedsN,
  SizesSumMismatch,
  NonPositiveLambda,
  ScriptedMoveNotImproving,
  KindModelMismatch,
  StateSpaceTooLarge,
  NotSorted,
  PreconditionViolated,
  EnumerationTooLarge,
  ModelMismatch,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidRational: return "INVALID_RATIONAL";
    case Errc::InvalidInput: return "INVALID_INPUT";
    case Errc::InvalidStructure: return "INVALID_STRUCTURE";
    case Errc::EmptyValues: return "EMPTY_VALUES";
    case Errc::KExceedsN: return "K_EXCEEDS_N";
    case Errc::SizesSumMismatch: return "SIZES_SUM_MISMATCH";
    case Errc::NonPositiveLambda: return "NON_POSITIVE_LAMBDA";
    case Errc::ScriptedMoveNotImproving: return "SCRIPTED_MOVE_NOT_IMPROVING";
    case Errc::KindModelMismatch: return "KIND_MODEL_MISMATCH";
    case Errc::StateSpaceTooLarge: return "STATE_SPACE_TOO_LARGE";
    case Errc::NotSorted: return "NOT_SORTED";
    case Errc::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case Errc::EnumerationTooLarge: return "ENUMERATION_TOO_LARGE";
    case Errc::ModelMismatch: return "MODEL_MISMATCH";
  }
  return "UNKNOWN";
}

class GameError : public std::runtime_error {
 public:
  GameError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Serializes a rational as "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& r) { return r.str(); }

namespace detail {

inline bool parse_big_int(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal with a finite expansion ("1.4"
/// becomes 7/5 exactly). Throws GameError(INVALID_RATIONAL) on anything else,
/// including a zero denominator.
inline Rational parse_rational(std::string_view text) {
  // trim surrounding whitespace
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw GameError(Errc::InvalidRational, "empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num, den;
    if (!detail::parse_big_int(text.substr(0, slash), num) ||
        !detail::parse_big_int(text.substr(slash + 1), den)) {
      throw GameError(Errc::InvalidRational, "malformed rational: " + std::string(text));
    }
    if (den == 0) throw GameError(Errc::InvalidRational, "zero denominator: " + std::string(text));
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_of("+-") != std::string_view::npos) {
      throw GameError(Errc::InvalidRational, "malformed decimal: " + std::string(text));
    }
    bool negative = !whole.empty() && whole.front() == '-';
    BigInt whole_part = 0;
    if (!whole.empty() && whole != "-" && whole != "+") {
      if (!detail::parse_big_int(whole, whole_part)) {
        throw GameError(Errc::InvalidRational, "malformed decimal: " + std::string(text));
      }
    }
    BigInt frac_part, scale = 1;
    if (!detail::parse_big_int(frac, frac_part) || frac_part < 0) {
      throw GameError(Errc::InvalidRational, "malformed decimal: " + std::string(text));
    }
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = abs(whole_part) * scale + frac_part;
    if (negative || whole_part < 0) num = -num;
    return Rational(num, scale);
  }

  BigInt value;
  if (!detail::parse_big_int(text, value)) {
    throw GameError(Errc::InvalidRational, "malformed rational: " + std::string(text));
  }
  return Rational(value);
}

}  // namespace coalition
