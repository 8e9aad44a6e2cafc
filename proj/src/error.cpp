#include "bubble/error.hpp"

namespace bubble {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseSyntax: return "parse.syntax";
    case ErrorCode::ParseZeroDenominator: return "parse.zero_denominator";
    case ErrorCode::ParseExponentOverflow: return "parse.exponent_overflow";
    case ErrorCode::NoLeadingTerm: return "poly.no_leading_term";
    case ErrorCode::DivisionByZero: return "arith.division_by_zero";
    case ErrorCode::DimensionMismatch: return "linalg.dimension_mismatch";
    case ErrorCode::InvalidAdeType: return "rootsys.invalid_ade_type";
    case ErrorCode::RankCapExceeded: return "rootsys.rank_cap_exceeded";
    case ErrorCode::NotSimplyLaced: return "classify.not_simply_laced";
    case ErrorCode::Disconnected: return "classify.disconnected";
    case ErrorCode::Cycle: return "classify.cycle";
    case ErrorCode::DegreeTooHigh: return "classify.degree_too_high";
    case ErrorCode::MultipleBranchPoints: return "classify.multiple_branch_points";
    case ErrorCode::NonAdeArms: return "classify.non_ade_arms";
    case ErrorCode::NotInPolarization: return "k3.not_in_polarization";
    case ErrorCode::NotAdeCartan: return "k3.not_ade_cartan";
    case ErrorCode::InvalidPolarization: return "k3.invalid_polarization";
    case ErrorCode::NotDegenerate: return "family.not_degenerate";
    case ErrorCode::SingularGeneralFiber: return "family.singular_general_fiber";
    case ErrorCode::ZeroProjection: return "pbt.zero_projection";
    case ErrorCode::NotTypeA: return "ak.not_type_a";
    case ErrorCode::BranchSumNonzero: return "ak.branch_sum_nonzero";
    case ErrorCode::BranchNotVanishing: return "ak.branch_not_vanishing";
    case ErrorCode::BranchesNotDistinct: return "ak.branches_not_distinct";
    case ErrorCode::InvalidInput: return "input.invalid";
    case ErrorCode::InternalInvariant: return "internal.invariant";
  }
  return "unknown";
}

}  // namespace bubble
