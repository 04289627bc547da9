#pragma once

#include <stdexcept>
#include <string>

namespace recset {

// Error taxonomy shared by the whole library. Verifier outcomes (refuted
// properties, violated hypotheses, closure escapes) are report content, not
// errors; only contract violations and malformed inputs throw.
enum class errc {
  out_of_universe,
  mixed_universe,
  arity_mismatch,
  invalid_instance,
  empty_base,
  not_a_unit,
  invalid_spec,
  dimension_mismatch,
  bad_alphabet,
  not_in_m,
  universe_too_large,
  no_closed_superset,
  description_too_long,
  invalid_input,
  value_overflow,
  parse_error,
  validation_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::out_of_universe: return "OutOfUniverse";
    case errc::mixed_universe: return "MixedUniverse";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::invalid_instance: return "InvalidInstance";
    case errc::empty_base: return "EmptyBase";
    case errc::not_a_unit: return "NotAUnit";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::bad_alphabet: return "BadAlphabet";
    case errc::not_in_m: return "NotInM";
    case errc::universe_too_large: return "UniverseTooLarge";
    case errc::no_closed_superset: return "NoClosedSuperset";
    case errc::description_too_long: return "DescriptionTooLong";
    case errc::invalid_input: return "InvalidInput";
    case errc::value_overflow: return "ValueOverflow";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Absence of an element from M comes in two flavors: proven (the saturation
// reached a fixpoint, so the element can never appear) and unknown (a
// resource limit stopped the run before the question was settled).
class not_in_m_error : public error {
 public:
  not_in_m_error(const std::string& message, bool known_absent)
      : error(errc::not_in_m, message), known_absent_(known_absent) {}

  bool known_absent() const { return known_absent_; }

 private:
  bool known_absent_;
};

}  // namespace recset
