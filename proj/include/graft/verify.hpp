#pragma once

#include "graft/graft.hpp"

namespace graft {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

struct VerifyOptions {
    /// Join enumeration refusal bound; enumeration-based checks are
    /// skipped (not failed) above it.
    int max_join_edges = 16;
    /// Path- and circuit-based checks are skipped above this vertex count.
    int max_path_vertices = 10;
    /// Cap on (minimum join, root) pairs swept by the decomposition checks.
    int max_decomposition_runs = 20000;
};

/// Run every structural check this library knows against one instance,
/// cross-validating the solver against the exhaustive oracle. Checks that
/// do not apply (e.g. comb checks on a non-bipartite graft) or exceed the
/// configured bounds report as skipped.
std::vector<CheckResult> verify_instance(const Graft& g, const VerifyOptions& opt = {});

/// True iff no check failed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace graft
