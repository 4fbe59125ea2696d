#pragma once

#include <stdexcept>
#include <string>

namespace inversive {

enum class errc {
  char_two,
  not_prime,
  is_square,
  not_square_free,
  field_mismatch,
  division_by_zero,
  dimension_mismatch,
  space_mismatch,
  no_anisotropic_form,
  isotropic_vector_encountered,
  zero_function,
  zero_vector,
  not_a_circle,
  not_isotropic,
  isotropic_mirror,
  zero_size_circle,
  degenerate_input,
  no_rational_members,
  degenerate_quadric,
  singular_pencil,
  collinear,
  degenerate_altitudes,
  parallel_diagonal_pair,
  degenerate_conic,
  singular_restriction,
  not_enough_samples,
  unknown_suite,
  parse_error,
  unrenderable_field,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::char_two: return "CharTwo";
    case errc::not_prime: return "NotPrime";
    case errc::is_square: return "IsSquare";
    case errc::not_square_free: return "NotSquareFree";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::no_anisotropic_form: return "NoAnisotropicForm";
    case errc::isotropic_vector_encountered: return "IsotropicVectorEncountered";
    case errc::zero_function: return "ZeroFunction";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_a_circle: return "NotACircle";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::isotropic_mirror: return "IsotropicMirror";
    case errc::zero_size_circle: return "ZeroSizeCircle";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::no_rational_members: return "NoRationalMembers";
    case errc::degenerate_quadric: return "DegenerateQuadric";
    case errc::singular_pencil: return "SingularPencil";
    case errc::collinear: return "Collinear";
    case errc::degenerate_altitudes: return "DegenerateAltitudes";
    case errc::parallel_diagonal_pair: return "ParallelDiagonalPair";
    case errc::degenerate_conic: return "DegenerateConic";
    case errc::singular_restriction: return "SingularRestriction";
    case errc::not_enough_samples: return "NotEnoughSamples";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::parse_error: return "ParseError";
    case errc::unrenderable_field: return "UnrenderableField";
  }
  return "UnknownError";
}

/// Domain error carrying a machine-checkable code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace inversive
