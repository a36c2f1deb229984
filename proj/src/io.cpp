#include "fullerene/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace fullerene {

std::vector<PlanarGraph> parse_planar_code(std::span<const std::uint8_t> bytes)
{
    std::size_t pos = 0;
    const std::string_view prefix = ">>planar_code";
    if (bytes.size() >= prefix.size() &&
        std::equal(prefix.begin(), prefix.end(), bytes.begin())) {
        // Skip up to and including the closing "<<".
        std::size_t end = prefix.size();
        while (end + 1 < bytes.size() && !(bytes[end] == '<' && bytes[end + 1] == '<')) ++end;
        if (end + 1 >= bytes.size()) throw Error(ErrorCode::TruncatedRecord, "unterminated planar_code header");
        pos = end + 2;
    }

    std::vector<PlanarGraph> graphs;
    while (pos < bytes.size()) {
        const int n = bytes[pos++];
        const std::string where = "graph " + std::to_string(graphs.size() + 1);
        if (n == 0) throw Error(ErrorCode::UnsupportedSize, where + ": two-byte planar_code records are not supported");
        std::vector<std::vector<Vertex>> rotation(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw Error(ErrorCode::TruncatedRecord, where + ": stream ends inside vertex " + std::to_string(v + 1));
                const int x = bytes[pos++];
                if (x == 0) break;
                if (x > n)
                    throw Error(ErrorCode::NeighborOutOfRange, where + ": vertex " + std::to_string(v + 1) +
                                                                   " lists " + std::to_string(x));
                rotation[v].push_back(x - 1);
            }
        }
        graphs.push_back(build_from_rotation(rotation));
    }
    return graphs;
}

std::vector<std::uint8_t> encode_planar_code(std::span<const PlanarGraph> graphs, bool with_header)
{
    std::vector<std::uint8_t> out;
    if (with_header) out.insert(out.end(), kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (const auto& g : graphs) {
        if (g.vertex_count() > 255)
            throw Error(ErrorCode::UnsupportedSize,
                        "planar_code supports at most 255 vertices, got " + std::to_string(g.vertex_count()));
        out.push_back(static_cast<std::uint8_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            for (Vertex w : g.neighbors(v)) out.push_back(static_cast<std::uint8_t>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_error(int line, const std::string& what)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view token, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        parse_error(line, "bad vertex id '" + std::string(token) + "'");
    return value;
}

struct RawLine {
    int line;
    int id;
    std::vector<int> neighbors;
};

PlanarGraph assemble(const std::vector<RawLine>& rows)
{
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<Vertex>> rotation(n);
    std::vector<char> seen(n, 0);
    for (const auto& row : rows) {
        if (row.id >= n) parse_error(row.line, "vertex id " + std::to_string(row.id) + " out of range");
        if (seen[row.id]) parse_error(row.line, "vertex " + std::to_string(row.id) + " listed twice");
        seen[row.id] = 1;
        for (int x : row.neighbors)
            if (x >= n) parse_error(row.line, "neighbor id " + std::to_string(x) + " out of range");
        rotation[row.id].assign(row.neighbors.begin(), row.neighbors.end());
    }
    return build_from_rotation(rotation);
}

std::vector<std::vector<RawLine>> split_rows(std::string_view text)
{
    std::vector<std::vector<RawLine>> blocks(1);
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = trim(text.substr(start, end - start));
        ++line_no;
        start = end + 1;
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (line == "---") {
            blocks.emplace_back();
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) parse_error(line_no, "expected 'id: neighbors'");
        RawLine row{line_no, parse_int(trim(line.substr(0, colon)), line_no), {}};
        std::string_view rest = line.substr(colon + 1);
        while (true) {
            rest = trim(rest);
            if (rest.empty()) break;
            std::size_t stop = 0;
            while (stop < rest.size() && !std::isspace(static_cast<unsigned char>(rest[stop]))) ++stop;
            row.neighbors.push_back(parse_int(rest.substr(0, stop), line_no));
            rest.remove_prefix(stop);
        }
        blocks.back().push_back(std::move(row));
        if (end == text.size()) break;
    }
    return blocks;
}

}  // namespace

PlanarGraph parse_rotation_text(std::string_view text)
{
    auto blocks = split_rows(text);
    if (blocks.size() != 1) throw Error(ErrorCode::ParseError, "expected a single graph");
    if (blocks.front().empty()) throw Error(ErrorCode::ParseError, "line 1: no vertices");
    return assemble(blocks.front());
}

std::string emit_rotation_text(const PlanarGraph& g)
{
    std::ostringstream out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (Vertex w : g.neighbors(v)) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

std::vector<PlanarGraph> parse_rotation_stream(std::string_view text)
{
    std::vector<PlanarGraph> out;
    for (const auto& block : split_rows(text))
        if (!block.empty()) out.push_back(assemble(block));
    return out;
}

std::string emit_rotation_stream(std::span<const PlanarGraph> graphs)
{
    std::string out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i) out += "---\n";
        out += emit_rotation_text(graphs[i]);
    }
    return out;
}

InputFormat detect_format(std::span<const std::uint8_t> bytes)
{
    const std::string_view prefix = ">>planar_code";
    if (bytes.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), bytes.begin()))
        return InputFormat::PlanarCode;
    for (std::uint8_t b : bytes)
        if (!(std::isprint(b) || std::isspace(b))) return InputFormat::PlanarCode;
    return InputFormat::Rotation;
}

std::vector<PlanarGraph> read_graphs(std::span<const std::uint8_t> bytes, InputFormat format)
{
    if (format == InputFormat::Auto) format = detect_format(bytes);
    if (format == InputFormat::PlanarCode) return parse_planar_code(bytes);
    return parse_rotation_stream(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace fullerene
