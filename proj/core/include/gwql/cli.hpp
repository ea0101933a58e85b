#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwql {

/// Command line driver. `args` excludes the program name. Returns the
/// process exit code: 0 success / all-pass, 1 computation failure or a
/// failing relation suite, 2 usage errors.
///
/// Subcommands: invariant, relation, bounds, masterspace, hypergraphs,
/// graphs, hodge-table, cache. `--json` everywhere; GWQL_CACHE_DIR
/// overrides the cache directory; `--weight-seed` reproduces a draw.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwql
