#include "quivermod/errors.hpp"

namespace quivermod {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingEndpoint: return "DANGLING_ENDPOINT";
    case ErrorCode::HeterogeneousRelation: return "HETEROGENEOUS_RELATION";
    case ErrorCode::DuplicateName: return "DUPLICATE_NAME";
    case ErrorCode::ZeroRelation: return "ZERO_RELATION";
    case ErrorCode::VertexMismatch: return "VERTEX_MISMATCH";
    case ErrorCode::RankZero: return "RANK_ZERO";
    case ErrorCode::NonunitBaseRank: return "NONUNIT_BASE_RANK";
    case ErrorCode::PairingNonzero: return "PAIRING_NONZERO";
    case ErrorCode::ForeignPath: return "FOREIGN_PATH";
    case ErrorCode::PresentationMismatch: return "PRESENTATION_MISMATCH";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::BadVectorShape: return "BAD_VECTOR_SHAPE";
    case ErrorCode::NotSubrep: return "NOT_SUBREP";
    case ErrorCode::BadMatrixShape: return "BAD_MATRIX_SHAPE";
    case ErrorCode::NotThin: return "NOT_THIN";
    case ErrorCode::WrongDimension: return "WRONG_DIMENSION";
    case ErrorCode::BaseDimNotOne: return "BASE_DIM_NOT_ONE";
    case ErrorCode::NotSemistable: return "NOT_SEMISTABLE";
    case ErrorCode::ZeroDimension: return "ZERO_DIMENSION";
    case ErrorCode::NonToricRelations: return "NON_TORIC_RELATIONS";
    case ErrorCode::TorsionQuotient: return "TORSION_QUOTIENT";
    case ErrorCode::NoDegreeOne: return "NO_DEGREE_ONE";
    case ErrorCode::EmptyStableLocus: return "EMPTY_STABLE_LOCUS";
    case ErrorCode::NonsmoothChart: return "NONSMOOTH_CHART";
    case ErrorCode::RankMismatch: return "RANK_MISMATCH";
    case ErrorCode::NotPointed: return "NOT_POINTED";
    case ErrorCode::BadParameter: return "BAD_PARAMETER";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::UnknownArrow: return "UNKNOWN_ARROW";
    case ErrorCode::NoncomposableTerm: return "NONCOMPOSABLE_TERM";
    case ErrorCode::Usage: return "USAGE";
  }
  return "UNKNOWN";
}

bool is_mathematical_refusal(ErrorCode code) {
  switch (code) {
    case ErrorCode::PairingNonzero:
    case ErrorCode::NotThin:
    case ErrorCode::WrongDimension:
    case ErrorCode::BaseDimNotOne:
    case ErrorCode::NotSemistable:
    case ErrorCode::ZeroDimension:
    case ErrorCode::NonToricRelations:
    case ErrorCode::TorsionQuotient:
    case ErrorCode::NoDegreeOne:
    case ErrorCode::EmptyStableLocus:
    case ErrorCode::NonsmoothChart:
    case ErrorCode::NotPointed:
    case ErrorCode::RankZero:
    case ErrorCode::NonunitBaseRank:
      return true;
    default:
      return false;
  }
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(code_name(v.code)) + ": " + v.message;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : QuiverError(violations.empty() ? ErrorCode::Syntax : violations.front().code,
                  join_violations(violations)),
      violations_(std::move(violations)) {}

SyntaxError::SyntaxError(ErrorCode code, int line, int column, const std::string& message)
    : QuiverError(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + message),
      line_(line),
      column_(column) {}

}  // namespace quivermod
