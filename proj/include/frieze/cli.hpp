#pragma once

/**
 * @file cli.hpp
 * @brief Command-line interface.
 *
 * Subcommands: check (--weak|--full|--diamond|--overlap), glue, det
 * (--factor a,b), render (--rows i..j), matrix, gallery (bhj|cc|bm|
 * maldonado|random). Exit codes: 0 success, 1 check failure, 2 input or
 * usage error. All output is deterministic; randomness sits behind an
 * explicit --seed.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frieze::cli
