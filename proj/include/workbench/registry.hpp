#ifndef WORKBENCH_REGISTRY_HPP
#define WORKBENCH_REGISTRY_HPP

// Public operations and the CLI verb that reaches each of them.

#include <array>
#include <string_view>

namespace wb {

struct OpEntry {
    std::string_view module;
    std::string_view op;
    std::string_view verb;
};

inline constexpr std::array kOperations{
    OpEntry{"ordinal", "compare", "ord cmp"},
    OpEntry{"ordinal", "add", "ord add"},
    OpEntry{"ordinal", "omega_power", "ord pow"},
    OpEntry{"ordinal", "cnf_difference", "ord diff"},
    OpEntry{"ordinal", "limit_order", "ord olimit"},
    OpEntry{"ordinal", "classify", "ord classify"},
    OpEntry{"universe", "set_union", "set union"},
    OpEntry{"universe", "set_inter", "set inter"},
    OpEntry{"universe", "set_diff", "set diff"},
    OpEntry{"universe", "membership", "set member"},
    OpEntry{"universe", "restrict_below", "set below"},
    OpEntry{"universe", "restrict_above", "set above"},
    OpEntry{"universe", "stratum", "set stratum"},
    OpEntry{"universe", "check", "uni check"},
    OpEntry{"universe", "is_large", "uni large"},
    OpEntry{"universe", "star_closure", "uni star"},
    OpEntry{"universe", "stratify", "uni stratify"},
    OpEntry{"magidor", "validate", "cond validate"},
    OpEntry{"magidor", "leq", "cond leq"},
    OpEntry{"magidor", "gamma_of", "cond gamma"},
    OpEntry{"magidor", "type_of", "cond type"},
    OpEntry{"magidor", "extend", "cond extend"},
    OpEntry{"magidor", "find_type", "cond find-type"},
    OpEntry{"magidor", "unveil_type", "cond unveil"},
    OpEntry{"magidor", "split_at", "cond split"},
    OpEntry{"magidor", "join", "cond join"},
    OpEntry{"projection", "index_of", "proj index"},
    OpEntry{"projection", "pi", "proj pi"},
    OpEntry{"projection", "validate_I", "proj validate"},
    OpEntry{"projection", "leq_I", "proj leq"},
    OpEntry{"projection", "in_D", "proj in-d"},
    OpEntry{"projection", "densify", "proj densify"},
    OpEntry{"projection", "onto_construct", "proj onto"},
    OpEntry{"projection", "lift", "proj lift"},
    OpEntry{"projection", "correct_computation_check", "proj check-correct"},
    OpEntry{"projection", "refine_to_clubs", "proj refine-clubs"},
    OpEntry{"projection", "quotient_member", "proj quotient-member"},
    OpEntry{"generic", "in_filter", "gen in-filter"},
    OpEntry{"generic", "interval_otp", "gen otp"},
    OpEntry{"generic", "filter_pair_compatible", "gen compatible"},
    OpEntry{"ramsey", "homogenize", "ramsey homog"},
    OpEntry{"ramsey", "important_coordinates", "ramsey important"},
    OpEntry{"prikry", "validate_tree", "prikry validate"},
    OpEntry{"prikry", "leq_tree", "prikry leq"},
    OpEntry{"prikry", "normalize_dense", "prikry normalize"},
    OpEntry{"prikry", "validate_sequence_condition", "prikry seq-validate"},
    OpEntry{"prikry", "modified_diag", "prikry diag"},
    OpEntry{"prikry", "limit_ultrafilter_member", "prikry limit-member"},
    OpEntry{"prikry", "is_p_point", "prikry p-point"},
    OpEntry{"prikry", "apply_derivation", "prikry derive"},
    OpEntry{"prikry", "project_ultrafilter", "prikry project"},
};

}  // namespace wb

#endif
