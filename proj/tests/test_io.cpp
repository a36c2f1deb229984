#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fullerene/io.hpp"

using namespace fullerene;
using namespace fullerene::testing;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Internal;
}

std::string squash(std::string_view s)
{
    std::string out;
    bool space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = true;
            continue;
        }
        if (space && !out.empty()) out += ' ';
        space = false;
        out += c;
    }
    return out;
}

}  // namespace

TEST_CASE("planar_code round trip keeps the rotation")
{
    std::vector<PlanarGraph> in{c20().graph()};
    auto bytes = encode_planar_code(in);
    auto out = parse_planar_code(bytes);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rotation_lists() == c20().graph().rotation_lists());
    CHECK(validate_fullerene(out[0]).p() == 20);
}

TEST_CASE("planar_code header is optional")
{
    std::vector<PlanarGraph> in{c20().graph(), c60().graph()};
    auto with = parse_planar_code(encode_planar_code(in, true));
    auto without = parse_planar_code(encode_planar_code(in, false));
    REQUIRE(with.size() == 2);
    REQUIRE(without.size() == 2);
    for (int i = 0; i < 2; ++i) CHECK(with[i].rotation_lists() == without[i].rotation_lists());
}

TEST_CASE("planar_code stream of three graphs stays in order")
{
    std::vector<PlanarGraph> in{c60().graph(), c20().graph(), c180().graph()};
    auto out = parse_planar_code(encode_planar_code(in));
    REQUIRE(out.size() == 3);
    CHECK(out[0].vertex_count() == 60);
    CHECK(out[1].vertex_count() == 20);
    CHECK(out[2].vertex_count() == 180);
    for (int i = 0; i < 3; ++i) CHECK(out[i].rotation_lists() == in[i].rotation_lists());
}

TEST_CASE("planar_code byte layout")
{
    std::vector<PlanarGraph> in{k4()};
    auto bytes = encode_planar_code(in, false);
    // n, then per vertex the 1-based rotation and a 0.
    std::vector<std::uint8_t> expect{4, 2, 4, 3, 0, 3, 4, 1, 0, 1, 4, 2, 0, 1, 2, 3, 0};
    CHECK(bytes == expect);
    auto with = encode_planar_code(in, true);
    CHECK(std::string(with.begin(), with.begin() + 15) == ">>planar_code<<");
}

TEST_CASE("planar_code errors")
{
    SUBCASE("truncated")
    {
        std::vector<std::uint8_t> b{4, 2, 4, 3, 0, 3, 4};
        CHECK(code_of([&] { parse_planar_code(b); }) == ErrorCode::TruncatedRecord);
    }
    SUBCASE("neighbor out of range")
    {
        std::vector<std::uint8_t> b{4, 2, 5, 3, 0, 3, 4, 1, 0, 1, 4, 2, 0, 1, 2, 3, 0};
        CHECK(code_of([&] { parse_planar_code(b); }) == ErrorCode::NeighborOutOfRange);
    }
    SUBCASE("asymmetric")
    {
        // 0 lists 1, 1 does not list 0.
        std::vector<std::uint8_t> b{3, 2, 3, 0, 3, 0, 1, 2, 0};
        CHECK(code_of([&] { parse_planar_code(b); }) == ErrorCode::AsymmetricAdjacency);
    }
    SUBCASE("too large to encode")
    {
        std::vector<PlanarGraph> in{c540().graph()};
        CHECK(code_of([&] { encode_planar_code(in); }) == ErrorCode::UnsupportedSize);
    }
}

TEST_CASE("rotation text parses K4")
{
    auto g = parse_rotation_text("0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
}

TEST_CASE("rotation text round trip up to whitespace")
{
    const std::string x = "0:  1 3 2\n\n1: 2 3   0\n# comment\n2: 0 3 1\n3: 0 1 2";
    CHECK(squash(emit_rotation_text(parse_rotation_text(x))) == squash("0: 1 3 2 1: 2 3 0 2: 0 3 1 3: 0 1 2"));
    const std::string c60_text = emit_rotation_text(c60().graph());
    CHECK(emit_rotation_text(parse_rotation_text(c60_text)) == c60_text);
}

TEST_CASE("rotation text errors name the line")
{
    try {
        parse_rotation_text("0: 1 3 2\n1: 2 3 0\n2: 0 9 1\n3: 0 1 2\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        parse_rotation_text("0: 1 3 2\n1 2 3 0\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    try {
        parse_rotation_text("0: 1 x 2\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK(code_of([] { parse_rotation_text("0: 1\n0: 1\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("format detection and multi-graph rotation streams")
{
    std::vector<PlanarGraph> in{c20().graph(), k4()};
    const std::string text = emit_rotation_stream(in);
    auto tb = bytes_of(text);
    CHECK(detect_format(tb) == InputFormat::Rotation);
    auto out = read_graphs(tb);
    REQUIRE(out.size() == 2);
    CHECK(out[1].rotation_lists() == k4().rotation_lists());

    auto pc = encode_planar_code(in, false);
    CHECK(detect_format(pc) == InputFormat::PlanarCode);
    auto again = read_graphs(pc);
    REQUIRE(again.size() == 2);
    CHECK(again[0].rotation_lists() == c20().graph().rotation_lists());
}
