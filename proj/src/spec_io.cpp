#include "qrep/spec_io.hpp"

#include "qrep/classics.hpp"
#include "qrep/errors.hpp"

#include <fstream>
#include <sstream>

namespace qrep {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw SpecError(path + ": " + what);
}

const json& require(const json& node, const std::string& key, const std::string& path)
{
    if (!node.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = node.find(key);
    if (it == node.end()) {
        fail(path, "missing field '" + key + "'");
    }
    return *it;
}

std::uint64_t as_uint(const json& node, const std::string& path)
{
    if (!node.is_number_integer() || node.get<std::int64_t>() < 0) {
        fail(path, "expected a non-negative integer");
    }
    return node.get<std::uint64_t>();
}

std::vector<std::uint64_t> as_uint_list(const json& node, const std::string& path)
{
    if (!node.is_array()) {
        fail(path, "expected an array of integers");
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(as_uint(node[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Rational as_rational(const json& node, const std::string& path)
{
    if (node.is_number_integer()) {
        return Rational(node.get<long>());
    }
    if (!node.is_string()) {
        fail(path, "expected a rational string \"p/q\"");
    }
    try {
        return Rational::parse(node.get<std::string>());
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
}

Extension as_extension(const json& node, const std::string& path)
{
    if (node.is_string()) {
        const auto s = node.get<std::string>();
        if (s == "cycle") {
            return Extension::cycle;
        }
        if (s == "repeat-last") {
            return Extension::repeat_last;
        }
    }
    fail(path, "expected \"cycle\" or \"repeat-last\"");
}

Column parse_column(const json& node, const std::string& path)
{
    if (!node.is_object() || node.size() != 1) {
        fail(path, "column must have exactly one of 'finite', 'geometric', 'uniform'");
    }
    const auto first = node.begin();
    const std::string key = first.key();
    const json& body = first.value();
    const std::string here = path + "." + key;
    if (key == "finite") {
        if (!body.is_array() || body.empty()) {
            fail(here, "expected a non-empty array of rationals");
        }
        std::vector<Rational> entries;
        for (std::size_t i = 0; i < body.size(); ++i) {
            entries.push_back(as_rational(body[i], here + "[" + std::to_string(i) + "]"));
        }
        Column col = Column::finite(std::move(entries));
        for (const auto& d : col.check()) {
            fail(d.digit ? here + "[" + std::to_string(*d.digit) + "]" : here,
                 "condition " + std::to_string(d.condition) + ": " + d.message);
        }
        return col;
    }
    if (key == "geometric") {
        const Rational c = as_rational(require(body, "c", here), here + ".c");
        const Rational r = as_rational(require(body, "r", here), here + ".r");
        if (!(Rational(0) < r && r < Rational(1))) {
            fail(here + ".r", "ratio must satisfy 0 < r < 1, got " + r.str());
        }
        if (c.sign() <= 0) {
            fail(here + ".c", "must be positive");
        }
        const Rational sum = c / (Rational(1) - r);
        if (sum != Rational(1)) {
            fail(here, "c/(1-r) = " + sum.str() + " != 1");
        }
        return Column::geometric(c, r);
    }
    if (key == "uniform") {
        const std::uint64_t s = as_uint(require(body, "s", here), here + ".s");
        if (s == 0) {
            fail(here + ".s", "must be >= 1");
        }
        return Column::uniform(s);
    }
    fail(path, "unknown column shape '" + key + "'");
}

CantorBases parse_cantor_bases(const json& params, const std::string& path)
{
    try {
        if (params.contains("q")) {
            const Extension ext = params.contains("extend")
                                      ? as_extension(params["extend"], path + ".extend")
                                      : Extension::repeat_last;
            return CantorBases::list(as_uint_list(params["q"], path + ".q"), ext);
        }
        const std::uint64_t first = as_uint(require(params, "first", path), path + ".first");
        const std::uint64_t step = params.contains("step") ? as_uint(params["step"], path + ".step") : 0;
        return CantorBases::progression(first, step);
    } catch (const ConstructionError& e) {
        fail(path, e.what());
    }
}

QSystem parse_classic(const json& root, const json& columns)
{
    const std::string path = "columns";
    const json& name_node = require(columns, "name", path);
    if (!name_node.is_string()) {
        fail(path + ".name", "expected a string");
    }
    const auto name = name_node.get<std::string>();
    const json params = columns.contains("params") ? columns["params"] : json::object();
    const std::string ppath = path + ".params";
    const bool has_nb = root.contains("nb");

    auto base_s = [&]() {
        const std::uint64_t s = as_uint(require(params, "s", ppath), ppath + ".s");
        if (s < 2) {
            fail(ppath + ".s", "must be >= 2");
        }
        return s;
    };
    auto no_nb = [&]() {
        if (has_nb) {
            fail("nb", "classic system '" + name + "' fixes its own sign set; remove 'nb'");
        }
    };

    ClassicKind kind;
    if (name == "s-adic") {
        no_nb();
        kind = ClassicKind::s_adic(base_s());
    } else if (name == "nega-s-adic") {
        no_nb();
        kind = ClassicKind::nega_s_adic(base_s());
    } else if (name == "cantor") {
        no_nb();
        kind = ClassicKind::cantor(parse_cantor_bases(params, ppath));
    } else if (name == "nega-cantor") {
        no_nb();
        kind = ClassicKind::nega_cantor(parse_cantor_bases(params, ppath));
    } else if (name == "mixed") {
        if (!has_nb) {
            fail("nb", "classic system 'mixed' needs an explicit sign set");
        }
        kind = ClassicKind::mixed_sign_s(base_s(), parse_nb(root["nb"]));
    } else if (name == "example-a") {
        no_nb();
        kind = ClassicKind::example_a();
    } else if (name == "example-b") {
        no_nb();
        kind = ClassicKind::example_b();
    } else {
        fail(path + ".name", "unknown classic system '" + name + "'");
    }
    return make_classic(kind);
}

std::string syntax_location(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

NbSet parse_nb(const json& node, const std::string& path)
{
    const json& kind_node = require(node, "kind", path);
    if (!kind_node.is_string()) {
        fail(path + ".kind", "expected a string");
    }
    const auto kind = kind_node.get<std::string>();
    try {
        if (kind == "empty") {
            return NbSet::empty();
        }
        if (kind == "all") {
            return NbSet::all();
        }
        if (kind == "odd") {
            return NbSet::odd();
        }
        if (kind == "even") {
            return NbSet::even();
        }
        if (kind == "list") {
            return NbSet::list(as_uint_list(require(node, "members", path), path + ".members"));
        }
        if (kind == "residues") {
            const std::uint64_t modulus = as_uint(require(node, "modulus", path), path + ".modulus");
            const auto residues = as_uint_list(require(node, "residues", path), path + ".residues");
            const std::uint64_t start = node.contains("start_k") ? as_uint(node["start_k"], path + ".start_k") : 0;
            return NbSet::residues(modulus, residues, start);
        }
        if (kind == "complement") {
            return NbSet::complement_of(parse_nb(require(node, "of", path), path + ".of"));
        }
    } catch (const ConstructionError& e) {
        fail(path, e.what());
    }
    fail(path + ".kind", "unknown sign-set kind '" + kind + "'");
}

QSystem parse_spec(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::string detail = e.what();
        if (const auto colon = detail.find(": "); colon != std::string::npos) {
            detail.erase(0, colon + 2);
        }
        throw SpecError("syntax error at " + syntax_location(text, byte) + ": " + detail);
    }
    if (!root.is_object()) {
        fail("<root>", "expected an object");
    }
    const json& columns = require(root, "columns", "<root>");
    const json& kind_node = require(columns, "kind", "columns");
    if (!kind_node.is_string()) {
        fail("columns.kind", "expected a string");
    }
    const auto kind = kind_node.get<std::string>();
    if (kind == "classic") {
        return parse_classic(root, columns);
    }
    if (kind != "explicit") {
        fail("columns.kind", "expected \"explicit\" or \"classic\"");
    }
    const NbSet nb = root.contains("nb") ? parse_nb(root["nb"]) : NbSet::empty();
    const json& list = require(columns, "list", "columns");
    if (!list.is_array() || list.empty()) {
        fail("columns.list", "expected a non-empty array of columns");
    }
    std::vector<Column> cols;
    for (std::size_t i = 0; i < list.size(); ++i) {
        cols.push_back(parse_column(list[i], "columns.list[" + std::to_string(i) + "]"));
    }
    const Extension ext = columns.contains("extend") ? as_extension(columns["extend"], "columns.extend")
                                                     : Extension::repeat_last;
    return QSystem(nb, std::move(cols), ext);
}

QSystem load_spec(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecError("cannot open spec file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

} // namespace qrep
