#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgr/verify.hpp"

namespace qgr {

enum class Format { text, json };

/// Renders verification reports: in text one line per prime plus a summary,
/// in json an array of report objects. Output is byte-stable for identical
/// reports.
void emit_report(const std::vector<VerificationReport>& reports, Format format,
                 std::ostream& out);

/// Command line entry point; args exclude the program name. Exit status 0
/// when every requested check passed, 1 for parse or validation problems
/// (reported with positions on err), 2 when verification fails.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qgr
