#pragma once

namespace pasa::cli {

/// Entry point for the `pasa` tool. Exit codes: 0 converged/success,
/// 1 max_iter, 2 infeasible, 3 input error, 4 line-search failure.
int run_cli(int argc, const char* const* argv);

}  // namespace pasa::cli
