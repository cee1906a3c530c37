#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cantor/ladder.hpp"

namespace cantor::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInconsistent = 3;

/// Ladder spec document: {"segments": [[a, b], ...], "weights": [...], "name": "..."}.
/// Numbers may also be written as strings "p/q".
struct LadderSpec {
    std::vector<Segment> segments;
    std::vector<double> weights;
    std::optional<std::string> name;

    Ladder ladder() const { return Ladder(segments, weights); }
};

LadderSpec parse_ladder_spec(const std::string& text);
std::string format_ladder_spec(const Ladder& ladder, const std::optional<std::string>& name = {});

/// Built-in ladders: "cantor", "cantor3", "rho13-23".
LadderSpec preset(const std::string& name);
std::vector<std::string> preset_names();

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Shortest decimal form that reads back to the same double.
std::string format_real(double value);

/// Header line plus one line per row.
std::string format_csv(const OutputTable& table);

/// Parses blank-line separated CSV tables; lines starting with '#' are skipped.
std::vector<OutputTable> parse_csv(const std::string& text);

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
