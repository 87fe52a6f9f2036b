#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "gcii/array_io.hpp"
#include "gcii/config.hpp"
#include "helpers.hpp"

using namespace gcii;
using gcii_test::gf8;

TEST_CASE("array files parse both notations and erasure tokens") {
    auto f = gf8();
    const ArrayWord w = parse_array("a^5, 3 ,1,E,0\n7,E,a,a^-1,2\n", *f);
    REQUIRE(w.rows() == 2);
    REQUIRE(w.cols() == 5);
    REQUIRE(w.at(0, 0) == f->parse("a^5"));
    REQUIRE(w.at(0, 1) == 3);
    REQUIRE(w.at(0, 2) == 1);
    REQUIRE(w.erasures.at(0, 3));
    REQUIRE(w.at(0, 3) == 0);
    REQUIRE(w.at(1, 3) == f->parse("a^6"));
    REQUIRE(w.erasures.at(1, 1));
    REQUIRE(w.erasures.count() == 2);
}

TEST_CASE("array parse errors carry line and column") {
    auto f = gf8();
    try {
        parse_array("1,1,1\n1,9,1\n", *f);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 2);
        REQUIRE(e.col() == 2);
    }
    REQUIRE_THROWS_AS(parse_array("", *f), ParseError);
    REQUIRE_THROWS_AS(parse_array("1,1\n1,1,1\n", *f), ParseError);       // ragged
    REQUIRE_THROWS_AS(parse_array("1,1\n", *f, 3, 2), ParseError);        // wrong rows
    REQUIRE_THROWS_AS(parse_array("1,1\n1,1\n", *f, 2, 5), ParseError);   // wrong cols
}

TEST_CASE("array format round-trips in both notations") {
    auto f = gf8();
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> sym(0, 7);
    std::uniform_int_distribution<int> coin(0, 3);
    ArrayWord w(3, 6);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) {
            if (coin(rng) == 0)
                w.erasures.set(r, c);
            else
                w.set(r, c, static_cast<gf>(sym(rng)));
        }
    for (Notation n : {Notation::Power, Notation::Integer}) {
        const std::string text = format_array(w, *f, n);
        REQUIRE(text.back() == '\n');
        const ArrayWord back = parse_array(text, *f);
        REQUIRE(back == w);
        REQUIRE(format_array(back, *f, n) == text);
    }
}

TEST_CASE("mask files") {
    const ErasurePattern mask = parse_mask("0,1,0\n1,0,0\n");
    REQUIRE(mask.rows() == 2);
    REQUIRE(mask.cols() == 3);
    REQUIRE(mask.at(0, 1));
    REQUIRE(mask.at(1, 0));
    REQUIRE(mask.count() == 2);
    REQUIRE(parse_mask(format_mask(mask)) == mask);
    REQUIRE_THROWS_AS(parse_mask("0,2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_mask("0,1\n0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_mask("0,1\n", 3, 2), ParseError);
}

TEST_CASE("symbol lists accept commas, spaces and newlines") {
    auto f = gf8();
    const std::vector<gf> syms = parse_symbols("a^5, 3 7\n0,a\n", *f);
    REQUIRE(syms == std::vector<gf>{f->parse("a^5"), 3, 7, 0, 2});
    const std::string text = format_symbols(syms, *f, Notation::Integer);
    REQUIRE(text == "7,3,7,0,2\n");
    REQUIRE(parse_symbols(text, *f) == syms);
}

TEST_CASE("matrix dumps") {
    auto f = gf8();
    const Matrix h = vandermonde_h(f, 2, 5, 1);
    REQUIRE(format_matrix(h, Notation::Power) ==
            "a^4,a^3,a^2,a,1\n"
            "a,a^6,a^4,a^2,1\n");
    REQUIRE(format_matrix(h, Notation::Integer) ==
            "6,3,4,2,1\n"
            "2,5,6,4,1\n");
}

TEST_CASE("config serialization is canonical and round-trips") {
    CodeConfig cfg;
    cfg.n = 5;
    cfg.b = 3;
    cfg.poly = 0xB;
    cfg.u = {1, 1, 3, 3};

    const std::string text = config_to_json(cfg);
    REQUIRE(text == "{\"n\":5,\"b\":3,\"poly\":\"0xb\",\"u\":[1,1,3,3]}\n");
    REQUIRE(config_from_json(text) == cfg);
    REQUIRE(config_to_json(config_from_json(text)) == text);

    // flexible input forms
    REQUIRE(config_from_json("{\"u\":[1,2],\"poly\":\"0XB\",\"b\":3,\"n\":5}").poly == 0xB);
    REQUIRE(config_from_json("{\"n\":5,\"b\":3,\"poly\":11,\"u\":[1,2]}").poly == 0xB);
    REQUIRE(config_from_json("{\"n\":5,\"b\":3,\"poly\":\"11\",\"u\":[1,2]}").poly == 11);

    REQUIRE_THROWS_AS(config_from_json("{"), ParseError);
    REQUIRE_THROWS_AS(config_from_json("{\"n\":5}"), ParseError);
    REQUIRE_THROWS_AS(config_from_json("{\"n\":5,\"b\":3,\"poly\":\"0xZZ\",\"u\":[1]}"), ParseError);
}

TEST_CASE("config builds the intended code") {
    CodeConfig cfg;
    cfg.n = 5;
    cfg.b = 3;
    cfg.poly = 0xB;
    cfg.u = {1, 2, 2, 4};
    const GcCode code = make_code(cfg);
    REQUIRE(code.n() == 5);
    REQUIRE(code.m() == 4);
    REQUIRE(code.r() == 9);
    REQUIRE(code.field()->poly() == 0xB);

    cfg.poly = 0;  // pick the built-in default
    REQUIRE(make_code(cfg).field()->poly() == 0xB);
}
