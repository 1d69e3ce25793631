#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "geoburn/burning.hpp"

namespace geoburn {

/// Schedule text: an optional "model: point|anywhere" header, then one
/// source per line in ignition order, either "x y" or "step j: x y".
/// '#' lines and blank lines are skipped. `fallback` applies when the
/// header is absent. Throws ParseError.
Schedule read_schedule(std::istream& in, Model fallback = Model::Point);
Schedule load_schedule(const std::filesystem::path& path, Model fallback = Model::Point);

/// Coordinates are written with 17 significant digits so a reloaded
/// schedule is bit-identical.
void write_schedule(std::ostream& out, const Schedule& s, std::optional<int> steps = std::nullopt);
void save_schedule(const Schedule& s, const std::filesystem::path& path, std::optional<int> steps = std::nullopt);

/// "step j: x y" lines, as printed by the solve command.
void print_schedule_steps(std::ostream& out, const Schedule& s);

}  // namespace geoburn
