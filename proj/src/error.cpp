#include "airc/error.hpp"

namespace airc {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::self_loop_rejected: return "SelfLoopRejected";
        case ErrorCode::duplicate_edge_conflict: return "DuplicateEdgeConflict";
        case ErrorCode::isolated_node_in_plain_mode: return "IsolatedNodeInPlainMode";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::non_finite_input: return "NonFiniteInput";
        case ErrorCode::convergence_failure: return "ConvergenceFailure";
        case ErrorCode::zero_matrix: return "ZeroMatrix";
        case ErrorCode::non_contractive: return "NonContractive";
        case ErrorCode::invalid_fraction: return "InvalidFraction";
        case ErrorCode::invalid_lambda_order: return "InvalidLambdaOrder";
        case ErrorCode::invalid_lambda: return "InvalidLambda";
        case ErrorCode::invalid_beta: return "InvalidBeta";
        case ErrorCode::invalid_slope: return "InvalidSlope";
        case ErrorCode::divergent_series: return "DivergentSeries";
        case ErrorCode::tape_consumed: return "TapeConsumed";
        case ErrorCode::empty_mask: return "EmptyMask";
        case ErrorCode::empty_edge_set: return "EmptyEdgeSet";
        case ErrorCode::missing_file: return "MissingFile";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::inconsistent_lengths: return "InconsistentLengths";
        case ErrorCode::label_out_of_range: return "LabelOutOfRange";
        case ErrorCode::io_error: return "IoError";
        case ErrorCode::overwrite_refused: return "OverwriteRefused";
        case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace airc
