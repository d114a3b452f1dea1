#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "logstrain/moduli.hpp"

namespace logstrain::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// key=value lines with keys G, lambda, K, E, nu; '#' starts a comment.
ModuliInput parse_config(std::istream& in);
ModuliInput read_config_file(const std::string& path);

// Flags replace the file entirely when they already name a full pair,
// otherwise they override it key by key.
ModuliInput merge_moduli(const ModuliInput& file, const ModuliInput& flags);

}  // namespace logstrain::cli
