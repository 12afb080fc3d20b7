#pragma once

// Subcommands of the tamejumps tool, callable without a process boundary.

#include "tamejumps/jumps.hpp"
#include "tamejumps/polytope.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace tamejumps::cli {

using Json = nlohmann::ordered_json;

struct Request {
  std::string poly;                 // equation text
  std::optional<std::string> input; // file holding the equation, used when poly is empty
  std::uint32_t prime = 2;
  std::optional<std::int64_t> degree;
  std::string form;  // vcan only
  std::optional<std::string> json_path;
  std::optional<std::string> svg_path;
  bool quiet = false;
};

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitConditional = 2;

Outcome cmd_analyze(const Request& req);
Outcome cmd_vcan(const Request& req);
Outcome cmd_basechange(const Request& req);
Outcome cmd_svg(const Request& req);

Json report_json(const std::string& input, const BivariatePoly& f, std::uint32_t p, const JumpsReport& report);
/// Newton polygon with subdivision and v labels; 40px per unit, 20px margin, y axis up.
std::string render_svg(const SubdividedPolygon& sd);

}  // namespace tamejumps::cli
