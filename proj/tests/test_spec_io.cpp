#include "doctest.h"

#include "qrep/errors.hpp"
#include "qrep/spec_io.hpp"
#include "support.hpp"

using namespace qrep;
using namespace qrep::testing;

namespace {

std::string error_of(std::string_view text)
{
    try {
        parse_spec(text);
    } catch (const SpecError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("parse explicit and classic specs")
{
    const QSystem nega = parse_spec(R"({"nb": {"kind": "odd"},
        "columns": {"kind": "explicit", "list": [{"uniform": {"s": 2}}], "extend": "repeat-last"}})");
    for (Position n = 1; n <= 10; ++n) {
        CHECK(nega.rho(n) == nega_s_adic(2).rho(n));
        CHECK(nega.column(n) == Column::uniform(2));
    }

    const QSystem a = parse_spec(R"({"columns": {"kind": "classic", "name": "example-a"}})");
    const QSystem expected = make_classic(ClassicKind::example_a());
    for (Position n = 1; n <= 12; ++n) {
        CHECK(a.column(n) == expected.column(n));
        CHECK(a.rho(n) == expected.rho(n));
    }

    const QSystem gap = parse_spec(R"({"nb": {"kind": "list", "members": [1]},
        "columns": {"kind": "explicit", "list": [{"finite": ["2/4", "1/3", "1/6"]}, {"uniform": {"s": 2}}]}})");
    CHECK(gap.column(1).q(0) == r(1, 2));
    CHECK(gap.column(5) == Column::uniform(2));
    CHECK(gap.rho(1) == 1);
    CHECK(gap.rho(2) == 2);

    const QSystem geo = parse_spec(R"({"columns": {"kind": "explicit",
        "list": [{"geometric": {"c": "1/2", "r": "1/2"}}], "extend": "cycle"}})");
    CHECK(geo.column(3).q(2) == r(1, 8));

    const QSystem cantor = parse_spec(R"({"columns": {"kind": "classic", "name": "nega-cantor",
        "params": {"q": [2, 3], "extend": "repeat-last"}}})");
    CHECK(cantor.column(1) == Column::uniform(2));
    CHECK(cantor.column(9) == Column::uniform(3));
    CHECK(cantor.rho(1) == 1);

    const QSystem mixed = parse_spec(R"({"nb": {"kind": "complement", "of": {"kind": "even"}},
        "columns": {"kind": "classic", "name": "mixed", "params": {"s": 3}}})");
    CHECK(mixed.rho(1) == 1);
    CHECK(mixed.rho(2) == 2);
}

TEST_CASE("semantic errors name the offending field")
{
    const std::string geo = error_of(R"({"columns": {"kind": "explicit",
        "list": [{"geometric": {"c": "2/3", "r": "1/2"}}]}})");
    CHECK(geo.find("columns.list[0].geometric") != std::string::npos);
    CHECK(geo.find("4/3") != std::string::npos);

    const std::string sum = error_of(R"({"columns": {"kind": "explicit",
        "list": [{"uniform": {"s": 2}}, {"finite": ["1/2", "1/3"]}]}})");
    CHECK(sum.find("columns.list[1].finite") != std::string::npos);

    const std::string zero = error_of(R"({"columns": {"kind": "explicit",
        "list": [{"finite": ["1", "0"]}]}})");
    CHECK(zero.find("columns.list[0].finite[1]") != std::string::npos);

    CHECK(error_of(R"({"columns": {"kind": "explicit", "list": [{"geometric": {"c": "1/2", "r": "1"}}]}})")
              .find(".r") != std::string::npos);
    CHECK(error_of(R"({"columns": {"kind": "classic", "name": "s-adic", "params": {"s": 1}}})")
              .find("columns.params.s") != std::string::npos);
    CHECK(error_of(R"({"columns": {"kind": "classic", "name": "fibonacci"}})").find("columns.name")
          != std::string::npos);
    CHECK(error_of(R"({"nb": {"kind": "odd"}, "columns": {"kind": "classic", "name": "example-b"}})")
              .find("nb") != std::string::npos);
    CHECK(error_of(R"({"nb": {"kind": "prime"}, "columns": {"kind": "explicit", "list": [{"uniform": {"s": 2}}]}})")
              .find("nb.kind") != std::string::npos);
    CHECK(error_of(R"({"columns": {"kind": "explicit", "list": [{"finite": ["1/0"]}]}})")
              .find("columns.list[0].finite[0]") != std::string::npos);
    CHECK(error_of(R"({"columns": {"kind": "explicit", "list": []}})").find("columns.list") != std::string::npos);
    CHECK(error_of(R"({"nb": {"kind": "residues", "modulus": 4, "residues": [5]},
        "columns": {"kind": "explicit", "list": [{"uniform": {"s": 2}}]}})").find("nb") != std::string::npos);
}

TEST_CASE("syntax errors report line and column")
{
    const std::string err = error_of("{\n  \"columns\": {\n    \"kind\": \"classic\",,\n  }\n}");
    CHECK(err.find("syntax error") != std::string::npos);
    CHECK(err.find("line 3") != std::string::npos);
    CHECK(err.find("column 23") != std::string::npos);
}

TEST_CASE("missing spec file")
{
    CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), SpecError);
}

TEST_CASE("shipped spec files load")
{
    for (const char* name : {"binary", "ternary", "negabinary", "cantor", "gap", "example_a", "example_b", "mod4"}) {
        CAPTURE(name);
        CHECK_NOTHROW(load_spec(std::string(QREP_SPEC_DIR) + "/" + name + ".json"));
    }
}
