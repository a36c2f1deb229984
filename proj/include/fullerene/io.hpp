#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

/// Optional stream header of the planar_code format.
inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Parses a planar_code stream: per graph one byte n, then for each vertex
/// its clockwise neighbours as 1-based bytes terminated by 0. Only the
/// one-byte variant (n <= 255) is supported.
std::vector<PlanarGraph> parse_planar_code(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_planar_code(std::span<const PlanarGraph> graphs, bool with_header = true);

/// One line per vertex, `id: n1 n2 n3 ...` with 0-based ids and clockwise
/// neighbours. Blank lines and lines starting with `#` are ignored.
PlanarGraph parse_rotation_text(std::string_view text);

std::string emit_rotation_text(const PlanarGraph& g);

/// Several rotation-text graphs separated by lines reading `---`.
std::vector<PlanarGraph> parse_rotation_stream(std::string_view text);
std::string emit_rotation_stream(std::span<const PlanarGraph> graphs);

enum class InputFormat { Auto, PlanarCode, Rotation };

/// Auto picks planar_code when the header is present or the bytes are not
/// plain text, rotation text otherwise.
InputFormat detect_format(std::span<const std::uint8_t> bytes);

std::vector<PlanarGraph> read_graphs(std::span<const std::uint8_t> bytes, InputFormat format = InputFormat::Auto);

}  // namespace fullerene
