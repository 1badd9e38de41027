#pragma once

#include "mfw/dsl.hpp"

namespace mfw {

enum class OutputFormat { Json, Csv, Text };

struct RunOptions {
    OutputFormat format = OutputFormat::Json;
    int jobs = 1;
    std::size_t cap = 20000;
};

struct RunOutcome {
    std::string output;         // rendered document for stdout
    bool verify_failed = false; // some verify query did not pass
};

/// Executes the queries in order. Engine failures are rethrown with the
/// offending query index. Output is byte-identical across runs and across
/// `jobs` settings.
RunOutcome run_program(const Program& p, const RunOptions& opts = {});

/// Evaluates an MF expression against validated bindings.
MatrixFactorization eval_mfexpr(const MfExpr& e, const Bindings& b);

} // namespace mfw
