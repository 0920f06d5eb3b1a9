#include "qrep/cli.hpp"

#include "qrep/classics.hpp"
#include "qrep/encoder.hpp"
#include "qrep/errors.hpp"
#include "qrep/spec_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>
#include <sstream>

namespace qrep::cli {

using nlohmann::json;

namespace {

struct Common {
    std::string spec;
    Position depth = default_depth;
    std::string format = "text";

    [[nodiscard]] bool machine() const { return format == "machine"; }
};

json to_json(const Rational& r)
{
    return r.str();
}

json to_json(const Enclosure& e)
{
    return json{{"lo", e.lo().str()}, {"hi", e.hi().str()}};
}

json to_json(const DigitWord& w)
{
    json arr = json::array();
    for (auto d : w) {
        arr.push_back(d);
    }
    return arr;
}

std::string word_text(const DigitWord& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i != 0 ? "," : "") << w[i];
    }
    return os.str();
}

void emit(std::ostream& out, const json& doc)
{
    out << doc.dump(2) << '\n';
}

int cmd_validate(const Common& c, const QSystem& sys, std::ostream& out)
{
    const ValidationReport rep = validate(sys, c.depth);
    if (c.machine()) {
        json failures = json::array();
        for (const auto& f : rep.failures) {
            failures.push_back({{"n", f.n},
                                {"i", f.i ? json(*f.i) : json(nullptr)},
                                {"condition", f.condition},
                                {"message", f.message}});
        }
        emit(out, {{"command", "validate"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"ok", rep.ok()},
                   {"failures", failures},
                   {"condition3", to_string(rep.condition3)},
                   {"sup_product", to_json(rep.sup_product)}});
    } else {
        out << "system: " << sys.name() << '\n';
        out << "columns checked: 1.." << c.depth << '\n';
        for (const auto& f : rep.failures) {
            out << "FAIL condition " << f.condition << " at n=" << f.n;
            if (f.i) {
                out << ", i=" << *f.i;
            }
            out << ": " << f.message << '\n';
        }
        out << "conditions 1-2: " << (rep.ok() ? "pass" : "fail") << '\n';
        out << "condition 3: " << to_string(rep.condition3) << " (product of column maxima "
            << rep.sup_product << ")\n";
    }
    return rep.ok() ? exit_ok : exit_spec;
}

int cmd_range(const Common& c, const QSystem& sys, std::ostream& out)
{
    const ValueRange r = value_range(sys, c.depth);
    if (c.machine()) {
        emit(out, {{"command", "range"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"inf", to_json(r.lo)},
                   {"sup", to_json(r.hi)}});
    } else {
        out << "inf in " << r.lo << '\n';
        out << "sup in " << r.hi << '\n';
    }
    return exit_ok;
}

int cmd_eval(const Common& c, const QSystem& sys, const DigitWord& digits, std::ostream& out)
{
    const Rational prefix = eval_prefix(sys, digits);
    const Rational weight = prefix_weight(sys, digits);
    const Enclosure enc = eval_enclosure(sys, digits, c.depth);
    if (c.machine()) {
        emit(out, {{"command", "eval"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"digits", to_json(digits)},
                   {"value", to_json(prefix)},
                   {"weight", to_json(weight)},
                   {"enclosure", to_json(enc)}});
    } else {
        out << prefix << '\n';
        out << "weight " << weight << '\n';
        out << "extensions in " << enc << '\n';
    }
    return exit_ok;
}

int cmd_encode(const Common& c, const QSystem& sys, const Rational& x, const Rational& tol,
               std::size_t max_len, std::ostream& out, std::ostream& err)
{
    const EncodeResult res = encode(sys, x, tol, max_len, c.depth);
    if (c.machine()) {
        emit(out, {{"command", "encode"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"x", to_json(x)},
                   {"tolerance", to_json(tol)},
                   {"status", to_string(res.status)},
                   {"digits", to_json(res.digits)},
                   {"residual", to_json(res.residual)},
                   {"gap_position", res.gap_position ? json(*res.gap_position) : json(nullptr)}});
    } else {
        out << "status: " << to_string(res.status) << '\n';
        out << "digits: " << word_text(res.digits) << '\n';
        out << "residual in " << res.residual << '\n';
    }
    if (res.status == EncodeResult::Status::gap) {
        err << "gap: no cylinder at position " << *res.gap_position << " contains " << x << '\n';
        return exit_domain;
    }
    return exit_ok;
}

int cmd_cylinder(const Common& c, const QSystem& sys, const DigitWord& base, Digit max_children,
                 std::ostream& out)
{
    const CylinderBounds b = cylinder_bounds(sys, base, c.depth);
    const Enclosure len = cylinder_length(sys, base, c.depth);
    const Column next = sys.column(base.size() + 1);
    const Digit count = next.alphabet_size() ? std::min<Digit>(*next.alphabet_size(), max_children) : max_children;

    json children = json::array();
    std::ostringstream text;
    for (Digit d = 0; d < count && c.depth > base.size() + 1; ++d) {
        const Enclosure ratio = metric_ratio(sys, base, d, c.depth);
        children.push_back({{"digit", d}, {"metric_ratio", to_json(ratio)}});
        text << "  next digit " << d << ": ratio in " << ratio << '\n';
    }
    if (c.machine()) {
        emit(out, {{"command", "cylinder"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"base", to_json(base)},
                   {"inf", to_json(b.inf)},
                   {"sup", to_json(b.sup)},
                   {"length", to_json(len)},
                   {"children", children}});
    } else {
        out << "inf in " << b.inf << '\n';
        out << "sup in " << b.sup << '\n';
        out << "length in " << len << '\n';
        out << text.str();
    }
    return exit_ok;
}

int cmd_placement(const Common& c, const QSystem& sys, const DigitWord& base, Digit digit, std::ostream& out)
{
    const PlacementReport r = placement(sys, base, digit, c.depth);
    if (c.machine()) {
        emit(out, {{"command", "placement"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"base", to_json(base)},
                   {"position", r.position},
                   {"digit", r.digit},
                   {"orientation", to_string(r.orientation)},
                   {"overlap_class", to_string(r.overlap)},
                   {"kappa1", to_json(r.kappa1)},
                   {"kappa2", to_json(r.kappa2)},
                   {"nu1", to_json(r.nu1)},
                   {"nu2", to_json(r.nu2)},
                   {"omega1", to_json(r.omega1)},
                   {"omega2", to_json(r.omega2)},
                   {"normalized_kappa", to_json(r.normalized_kappa)},
                   {"measure", to_json(r.measure)},
                   {"lower", {{"inf", to_json(r.lower.inf)}, {"sup", to_json(r.lower.sup)}}},
                   {"upper", {{"inf", to_json(r.upper.inf)}, {"sup", to_json(r.upper.sup)}}}});
    } else {
        out << "position " << r.position << ", digits " << r.digit << " | " << r.digit + 1 << '\n';
        out << "orientation: " << to_string(r.orientation) << '\n';
        out << "overlap: " << to_string(r.overlap) << '\n';
        out << "kappa1 in " << r.kappa1 << '\n';
        out << "kappa2 in " << r.kappa2 << '\n';
        out << "omega1 in " << r.omega1 << '\n';
        out << "omega2 in " << r.omega2 << '\n';
        const char* label = r.overlap == OverlapClass::empty ? "gap" : "measure";
        out << label << " in " << r.measure << '\n';
    }
    return exit_ok;
}

int cmd_theorem(const Common& c, const QSystem& sys, Position rank, std::ostream& out)
{
    const TheoremVerdict v = theorem_check(sys, rank, c.depth);
    if (c.machine()) {
        json checks = json::array();
        for (const auto& p : v.checks) {
            checks.push_back({{"n", p.n},
                              {"i", p.i},
                              {"status", to_string(p.status)},
                              {"left", to_json(p.left)},
                              {"right", to_json(p.right)}});
        }
        json failure = nullptr;
        if (v.failure) {
            failure = {{"n", v.failure->first}, {"i", v.failure->second}};
        }
        emit(out, {{"command", "theorem"},
                   {"system", sys.name()},
                   {"depth", c.depth},
                   {"rank", rank},
                   {"overall", to_string(v.overall)},
                   {"failure", failure},
                   {"checks", checks}});
    } else {
        out << to_string(v.overall);
        if (v.failure) {
            out << " (n=" << v.failure->first << ", i=" << v.failure->second << ")";
        }
        out << '\n';
        for (const auto& p : v.checks) {
            if (p.status != PairStatus::holds) {
                out << "  n=" << p.n << " i=" << p.i << ": " << to_string(p.status) << ", " << p.left
                    << " vs " << p.right << '\n';
            }
        }
    }
    return exit_ok;
}

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--spec", c.spec, "system spec file (JSON)")->required();
    sub->add_option("--depth", c.depth, "truncation depth D")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "machine"}));
}

} // namespace

std::vector<std::uint64_t> parse_digits(const std::string& text)
{
    std::vector<std::uint64_t> out;
    if (text.find_first_not_of(" \t") == std::string::npos) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw ParameterError("empty digit in '" + text + "'");
        }
        const std::string tok = item.substr(first, last - first + 1);
        if (tok.find_first_not_of("0123456789") != std::string::npos) {
            throw ParameterError("malformed digit '" + tok + "'");
        }
        out.push_back(std::stoull(tok));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact evaluation, cylinder geometry and encoding for sign-variable Q-representations", "qrep"};
    app.require_subcommand(1);

    Common common;
    std::string digits_text;
    std::string base_text;
    std::string x_text;
    std::string tol_text = default_tolerance().str();
    std::size_t max_len = 64;
    Digit digit = 0;
    Digit max_children = 16;
    Position rank = 10;

    auto* validate_cmd = app.add_subcommand("validate", "check conditions 1-3 on columns 1..D");
    auto* range_cmd = app.add_subcommand("range", "enclose the value range [a', a'']");
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a digit word");
    auto* encode_cmd = app.add_subcommand("encode", "encode a rational into digits");
    auto* cylinder_cmd = app.add_subcommand("cylinder", "cylinder bounds, length and metric ratios");
    auto* placement_cmd = app.add_subcommand("placement", "placement of sibling cylinders c and c+1");
    auto* theorem_cmd = app.add_subcommand("theorem", "check the representation condition system");
    for (auto* sub : {validate_cmd, range_cmd, eval_cmd, encode_cmd, cylinder_cmd, placement_cmd, theorem_cmd}) {
        add_common(sub, common);
    }
    eval_cmd->add_option("--digits", digits_text, "comma-separated digits, e.g. 1,0,2")->required();
    encode_cmd->add_option("--x", x_text, "rational to encode, p/q")->required();
    encode_cmd->add_option("--tol", tol_text, "tolerance, p/q (default 2^-30)");
    encode_cmd->add_option("--max-len", max_len, "maximum number of digits");
    cylinder_cmd->add_option("--base", base_text, "comma-separated base digits");
    cylinder_cmd->add_option("--max-children", max_children, "ratio rows for infinite alphabets");
    placement_cmd->add_option("--base", base_text, "comma-separated base digits c_1..c_{n-1}");
    placement_cmd->add_option("--digit", digit, "digit c (compared with c+1)")->required();
    theorem_cmd->add_option("--rank", rank, "check columns 1..N")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"qrep"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        err << app.help();
        return exit_usage;
    }

    try {
        const QSystem sys = load_spec(common.spec);
        if (*validate_cmd) {
            return cmd_validate(common, sys, out);
        }
        if (*range_cmd) {
            return cmd_range(common, sys, out);
        }
        if (*eval_cmd) {
            return cmd_eval(common, sys, parse_digits(digits_text), out);
        }
        if (*encode_cmd) {
            Rational x;
            Rational tol;
            try {
                x = Rational::parse(x_text);
                tol = Rational::parse(tol_text);
            } catch (const ConstructionError& e) {
                throw ParameterError(e.what());
            }
            return cmd_encode(common, sys, x, tol, max_len, out, err);
        }
        if (*cylinder_cmd) {
            return cmd_cylinder(common, sys, parse_digits(base_text), max_children, out);
        }
        if (*placement_cmd) {
            return cmd_placement(common, sys, parse_digits(base_text), digit, out);
        }
        if (*theorem_cmd) {
            return cmd_theorem(common, sys, rank, out);
        }
    } catch (const SpecError& e) {
        err << "spec error: " << e.what() << '\n';
        return exit_spec;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const InternalError& e) {
        err << "cannot certify: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}

} // namespace qrep::cli
