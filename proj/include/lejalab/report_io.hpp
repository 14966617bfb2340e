// SPDX-License-Identifier: MIT
// Serialization helpers shared by the command-line front end.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "lejalab/lebesgue.hpp"
#include "lejalab/vdm.hpp"

namespace leja::io {

using json = nlohmann::ordered_json;

/// %.17g in the "C" locale; "nan" / "inf" / "-inf" for non-finite values.
[[nodiscard]] std::string format_double(double x);

/// Finite doubles as numbers, non-finite ones as null.
[[nodiscard]] json number(double x);

/// {re, im} plus {angle_num, angle_level} when an exact dyadic angle is known.
[[nodiscard]] json complex_json(Complex z, const std::optional<DyadicAngle>& angle = std::nullopt);

/// One node of the `points` listing.
struct PointRecord {
    Index n = 0;
    MultiIndex k;
    PointS coords;
    std::vector<std::optional<DyadicAngle>> angles;
};

[[nodiscard]] json points_json(std::span<const PointRecord> rows, std::span<const std::string> compacts);
[[nodiscard]] std::string points_csv(std::span<const PointRecord> rows);

[[nodiscard]] json lebesgue_row_json(const LebesgueReport& r, const std::string& compact);
[[nodiscard]] std::string lebesgue_csv_header();
[[nodiscard]] std::string lebesgue_csv_row(const LebesgueReport& r);

[[nodiscard]] std::string convergence_csv(std::span<const ConvergenceRow> rows);
[[nodiscard]] json convergence_json(std::span<const ConvergenceRow> rows);

/// Reads a `points` listing written as JSON or CSV (detected from the first
/// non-blank character). Throws std::runtime_error on malformed input.
[[nodiscard]] std::vector<PointS> read_points(const std::string& text);

}  // namespace leja::io
