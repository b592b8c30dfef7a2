#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scherk/surface.hpp"
#include "scherk/verify.hpp"

namespace scherk {

/// Either four vertices or an (m, s, t) triple.
struct Input {
  std::optional<std::array<cplx, 4>> vertices;
  std::optional<std::array<double, 3>> params;
};

/// {"vertices": [[x,y] x4]} or {"m": .., "s": .., "t": ..}
Input parse_input_json(const std::string& text);
/// "m,s,t"
Input parse_params_flag(const std::string& text);
Input read_input_file(const std::string& path);

ScherkSurface build_surface(const Input& input, double tol_pitot = kDefaultTolPitot);

nlohmann::json input_echo(const Input& input);
nlohmann::json analysis_report(const ScherkSurface& surface, const Input& input, const std::vector<Check>& checks);

/// Sorted keys, doubles printed with 17 significant digits, LF line endings.
std::string dump_deterministic(const nlohmann::json& j, int indent = 2);

}  // namespace scherk
