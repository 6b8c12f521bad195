#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyid/groebner.hpp"
#include "polyid/instance.hpp"

namespace polyid {

/// Machine-parsable run summary: one `key: value` line per set field in a
/// fixed order, then the command's listing lines. Unset fields are omitted,
/// so each subcommand emits a fixed set of keys.
struct RunReport {
    std::string instance;
    std::size_t cells = 0;
    ClassifyFlags flags;
    std::optional<std::size_t> lambda_size;
    std::optional<std::size_t> minor_count;
    std::optional<std::size_t> markov_count;
    std::optional<std::int64_t> steps;
    std::vector<std::string> listing;
};

std::string render_run_report(const RunReport& r);

struct VerifyOptions {
    bool force_simple = false;  // ignore the hole context and use edge intervals only
    std::int64_t max_steps = default_budget();
};

/// The interval family the subcommands share: the hole context's special path
/// when present, otherwise the simple path. Theorem-hypothesis failures
/// (nonconvex or boundary-touching Q, nonsimple P without a context) are all
/// OutOfScope.
LambdaFamily resolve_family(const Instance& inst, bool force_simple);

RunReport cmd_classify(const std::string& name, const Instance& inst);
RunReport cmd_minors(const std::string& name, const Instance& inst);
RunReport cmd_lambda(const std::string& name, const Instance& inst);
RunReport cmd_alpha(const std::string& name, const Instance& inst);
RunReport cmd_markov(const std::string& name, const Instance& inst,
                     const GroebnerOptions& opts = {});
RunReport cmd_verify(const std::string& name, const Instance& inst,
                     const VerifyOptions& opts = {});

/// cmd_verify over many instances, one worker per instance, reports merged in
/// input order regardless of completion order.
std::vector<RunReport> run_batch(const std::vector<std::pair<std::string, Instance>>& instances,
                                 const VerifyOptions& opts, int jobs);

}  // namespace polyid
