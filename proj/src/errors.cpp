#include "kcbg/errors.hpp"

namespace kcbg {

const char* errc_name(errc code) {
    switch (code) {
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::not_surplus: return "NotSurplus";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::parse_error: return "ParseError";
        case errc::invalid_order: return "InvalidOrder";
        case errc::invalid_a: return "InvalidA";
        case errc::not_integer_a: return "NotIntegerA";
        case errc::invalid_profile_args: return "InvalidProfileArgs";
        case errc::invalid_c: return "InvalidC";
        case errc::invalid_kappa: return "InvalidKappa";
        case errc::not_sorted: return "NotSorted";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::unequal_classes: return "UnequalClasses";
        case errc::not_perfect_matching: return "NotPerfectMatching";
        case errc::adjacent_pair: return "AdjacentPair";
        case errc::same_vertex: return "SameVertex";
        case errc::adjacent_pair_in_set: return "AdjacentPairInS";
        case errc::degenerate: return "Degenerate";
        case errc::too_few_vertices: return "TooFewVertices";
        case errc::not_kcb: return "NotKCB";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace kcbg
