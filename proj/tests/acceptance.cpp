// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "qrep/classics.hpp"
#include "qrep/cylinder.hpp"
#include "qrep/encoder.hpp"
#include "qrep/expansion.hpp"
#include "qrep/system.hpp"
#include "support.hpp"

#include "json.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

using namespace qrep;
using namespace qrep::testing;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            detail << "first failure: " << what << "; ";
        }
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Digits below `cap` so infinite columns stay enumerable.
DigitWord bounded_word(std::mt19937_64& rng, const QSystem& sys, std::size_t len, Digit cap = 6)
{
    DigitWord w;
    for (std::size_t k = 0; k < len; ++k) {
        const auto size = sys.column(k + 1).alphabet_size();
        w.push_back(rng() % (size ? std::min<Digit>(*size, cap) : cap));
    }
    return w;
}

Rational geometric_sum(const Rational& first, const Rational& ratio)
{
    return first / (Rational(1) - ratio);
}

std::vector<ClassicKind> oracle_kinds()
{
    return {ClassicKind::s_adic(2),      ClassicKind::s_adic(3), ClassicKind::nega_s_adic(2),
            ClassicKind::nega_s_adic(3), cantor_kind(),          nega_cantor_kind()};
}

std::vector<QSystem> triple_systems(std::mt19937_64& rng)
{
    std::vector<QSystem> out{s_adic(2),
                             s_adic(3),
                             nega_s_adic(2),
                             nega_s_adic(3),
                             make_classic(cantor_kind()),
                             make_classic(nega_cantor_kind()),
                             make_classic(ClassicKind::mixed_sign_s(3, NbSet::residues(4, {1, 2}, 1))),
                             make_classic(ClassicKind::example_a()),
                             make_classic(ClassicKind::example_b()),
                             gap_system()};
    for (int i = 0; i < 10; ++i) {
        out.push_back(random_finite_system(rng, 1 + rng() % 4));
    }
    return out;
}

struct Triple {
    const QSystem* sys;
    DigitWord base;
    Digit c;
};

// Random (system, base, digit) with rank <= 8; `pair` asks for c + 1 valid too.
Triple random_triple(std::mt19937_64& rng, const std::vector<QSystem>& systems, bool pair)
{
    for (;;) {
        const QSystem& sys = systems[rng() % systems.size()];
        DigitWord base = bounded_word(rng, sys, rng() % 8);
        const auto size = sys.column(base.size() + 1).alphabet_size();
        const Digit limit = size ? std::min<Digit>(*size, 6) : 6;
        if (pair && limit < 2) {
            continue;
        }
        const Digit c = rng() % (pair ? limit - 1 : limit);
        return {&sys, std::move(base), c};
    }
}

Verdict criterion1()
{
    Verdict v;
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    std::size_t compared = 0;
    for (const auto& kind : oracle_kinds()) {
        const QSystem sys = make_classic(kind);
        for (std::size_t len = 0; len <= 4; ++len) {
            for_each_word(sys, len, [&](const DigitWord& w) {
                v.require(eval_prefix(sys, w) == oracle_eval(kind, w), sys.name() + " exhaustive word");
                ++compared;
            });
        }
        for (int t = 0; t < 1000; ++t) {
            const DigitWord w = random_word(rng, sys, 1 + rng() % 12);
            v.require(eval_prefix(sys, w) == oracle_eval(kind, w), sys.name() + " random word");
            ++compared;
        }
    }
    const double secs = seconds_since(start);
    v.require(secs < 10.0, "runtime");
    v.detail << compared << " words exact, " << secs << " s";
    return v;
}

Verdict criterion2()
{
    Verdict v;
    std::mt19937_64 rng(1002);
    std::size_t compared = 0;
    std::vector<QSystem> systems{s_adic(2), s_adic(3), s_adic(4), nega_s_adic(2), nega_s_adic(4),
                                 make_classic(nega_cantor_kind())};
    for (int i = 0; i < 12; ++i) {
        systems.push_back(random_finite_system(rng, 1 + rng() % 4));
    }
    for (const QSystem& sys : systems) {
        std::size_t len_max = 0;
        while (len_max < 4 && *sys.column(len_max + 1).alphabet_size() <= 4) {
            ++len_max;
        }
        for (std::size_t len = 0; len <= len_max; ++len) {
            for_each_word(sys, len, [&](const DigitWord& w) {
                v.require(eval_signed_product(sys, w) == eval_prefix(sys, w), sys.name() + " exhaustive");
                ++compared;
            });
        }
    }
    for (int t = 0; t < 1000; ++t) {
        const QSystem& sys = systems[rng() % systems.size()];
        const DigitWord w = random_word(rng, sys, 5 + rng() % 28);
        v.require(eval_signed_product(sys, w) == eval_prefix(sys, w), sys.name() + " random");
        ++compared;
    }
    v.detail << compared << " words exact";
    return v;
}

Verdict criterion3()
{
    Verdict v;
    const Rational eps = pow2_neg(40);
    // sum 2^-n over n >= 1; odd and even halves of the same series
    const Rational bin_hi = geometric_sum(r(1, 2), r(1, 2));
    const Rational nega_lo = -geometric_sum(r(1, 2), r(1, 4));
    const Rational nega_hi = geometric_sum(r(1, 4), r(1, 4));

    const ValueRange bin = value_range(s_adic(2), 40);
    const ValueRange nega = value_range(nega_s_adic(2), 40);
    v.require(bin.lo.contains(r(0)) && bin.hi.contains(bin_hi), "binary targets");
    v.require(nega.lo.contains(nega_lo) && nega.hi.contains(nega_hi), "negabinary targets");
    for (const Enclosure& e : {bin.lo, bin.hi, nega.lo, nega.hi}) {
        v.require(e.width() <= eps, "width");
    }
    // same check through the truncated tails, which never use periodicity
    const TailBounds tb = tail_bounds(s_adic(2), 0, 40, TailClosure::truncated);
    const TailBounds tn = tail_bounds(nega_s_adic(2), 0, 40, TailClosure::truncated);
    v.require(tb.max.contains(bin_hi) && tb.max.width() <= eps, "binary truncated");
    v.require(tn.min.contains(nega_lo) && tn.max.contains(nega_hi), "negabinary truncated");
    v.require(tn.min.width() <= eps && tn.max.width() <= eps, "negabinary truncated width");
    v.detail << "binary [" << bin.lo.lo() << ", " << bin.hi.hi() << "], negabinary [" << nega.lo.lo() << ", "
             << nega.hi.hi() << "] vs [" << nega_lo << ", " << nega_hi << "]";
    return v;
}

Verdict criterion4()
{
    Verdict v;
    std::mt19937_64 rng(1004);
    const auto systems = triple_systems(rng);
    for (int t = 0; t < 500; ++t) {
        const Triple tr = random_triple(rng, systems, false);
        DigitWord child = tr.base;
        child.push_back(tr.c);
        const Enclosure parent = eval_enclosure(*tr.sys, tr.base, 40);
        v.require(parent.contains(eval_enclosure(*tr.sys, child, 40)), tr.sys->name() + " nesting");
    }
    for (int t = 0; t < 500; ++t) {
        const Triple tr = random_triple(rng, systems, false);
        DigitWord child = tr.base;
        child.push_back(tr.c);
        const Enclosure ratio = metric_ratio(*tr.sys, tr.base, tr.c, 40);
        const Enclosure direct = cylinder_length(*tr.sys, child, 40) / cylinder_length(*tr.sys, tr.base, 40);
        v.require(ratio.intersects(direct), tr.sys->name() + " metric ratio");
    }
    const Enclosure half = metric_ratio(s_adic(2), DigitWord{1, 0, 1}, 1, 40);
    v.require(half.contains(r(1, 2)) && half.width() <= pow2_neg(38), "binary ratio 1/2");
    v.detail << "500 nesting + 500 ratio triples; binary ratio width " << half.width();
    return v;
}

Verdict criterion5()
{
    Verdict v;
    std::mt19937_64 rng(1005);
    const auto systems = triple_systems(rng);
    int rho1 = 0;
    for (int t = 0; t < 500; ++t) {
        const Triple tr = random_triple(rng, systems, true);
        const PlacementReport p = placement(*tr.sys, tr.base, tr.c, 40);
        const Position n = tr.base.size() + 1;
        const Column col = tr.sys->column(n);
        if (tr.sys->rho(n) == 1) {
            ++rho1;
            v.require(p.kappa1.lo() > Rational(0), tr.sys->name() + " kappa1 > 0");
        } else {
            v.require(p.kappa2.lo() > Rational(0), tr.sys->name() + " kappa2 > 0");
        }
        const Enclosure norm = p.deciding_kappa() / Enclosure(prefix_weight(*tr.sys, tr.base));
        v.require(Enclosure(-col.q(tr.c), col.q(tr.c + 1)).contains(norm), tr.sys->name() + " normalized bound");
        v.require(p.normalized_kappa.intersects(norm), tr.sys->name() + " normalized field");
    }
    const PlacementReport bin = placement(s_adic(2), DigitWord{}, 0, 40);
    const PlacementReport nega = placement(nega_s_adic(2), DigitWord{}, 0, 40);
    v.require(bin.kappa1.contains(r(0)) && bin.kappa1.width() <= pow2_neg(40), "binary abutment");
    v.require(nega.kappa2.contains(r(0)) && nega.kappa2.width() <= pow2_neg(40), "negabinary abutment");
    v.detail << "500 triples (" << rho1 << " with rho = 1), abutment kappa widths " << bin.kappa1.width() << ", "
             << nega.kappa2.width();
    return v;
}

Verdict criterion6()
{
    Verdict v;
    std::mt19937_64 rng(1006);
    constexpr Position support = 10;
    int cylinders = 0;
    for (int t = 0; t < 60; ++t) {
        const QSystem sys = truncate_support(random_finite_system(rng, 1 + rng() % 4), support);
        const DigitWord base = random_word(rng, sys, 4 + rng() % 5);
        const auto [lo, hi] = brute_extremes(sys, base, support);
        const CylinderBounds b = cylinder_bounds(sys, base, 40);
        v.require(b.inf == Enclosure(lo) && b.sup == Enclosure(hi), "exact bounds");
        ++cylinders;
    }
    v.detail << cylinders << " cylinders equal to brute force";
    return v;
}

Verdict criterion7()
{
    Verdict v;
    const auto start = Clock::now();
    std::mt19937_64 rng(1007);
    int encoded = 0;
    for (const QSystem& sys : {s_adic(2), nega_s_adic(2), make_classic(cantor_kind())}) {
        const TheoremVerdict tv = theorem_check(sys, 10, 40);
        v.require(tv.overall == TheoremVerdict::Overall::holds_to_depth, sys.name() + " theorem");
        const Enclosure range = value_range(sys, 40).hull();
        for (int t = 0; t < 1000; ++t) {
            const long den = 1 + static_cast<long>(rng() % 65536);
            const long num = static_cast<long>(rng() % (den + 1));
            const Rational x = range.lo() + range.width() * r(num, den);
            const EncodeResult e = encode(sys, x, default_tolerance(), 64, 40);
            v.require(e.status == EncodeResult::Status::converged, sys.name() + " converged");
            v.require(roundtrip_verify(sys, x, e), sys.name() + " roundtrip");
            ++encoded;
        }
    }
    const TheoremVerdict gv = theorem_check(gap_system(), 10, 40);
    v.require(gv.overall == TheoremVerdict::Overall::fails_at && gv.failure
                  && *gv.failure == std::make_pair(Position{1}, Digit{0}),
              "gap system fails-at(1,0)");
    const PlacementReport p = placement(gap_system(), DigitWord{}, 0, 40);
    v.require(p.overlap == OverlapClass::empty, "gap placement empty");
    v.require(p.measure.contains(r(1, 6)) && p.measure.width() <= pow2_neg(38), "gap length 1/6");
    const Rational mid = (p.upper.sup.hi() + p.lower.inf.lo()) / r(2);
    const EncodeResult ge = encode(gap_system(), mid, default_tolerance(), 64, 40);
    v.require(ge.status == EncodeResult::Status::gap && ge.gap_position == Position{1}, "gap(1)");
    const double secs = seconds_since(start);
    v.require(secs < 60.0, "runtime");
    v.detail << encoded << " encodes, gap midpoint " << mid << ", " << secs << " s";
    return v;
}

Verdict criterion8()
{
    Verdict v;
    for (const auto& kind : {ClassicKind::example_a(), ClassicKind::example_b()}) {
        const QSystem sys = make_classic(kind);
        const ValidationReport rep = validate(sys, 64);
        v.require(rep.failures.empty(), sys.name() + " conditions 1-2");
        v.require(rep.condition3 == Condition3::certified, sys.name() + " condition 3 certified");
        v.detail << sys.name() << ": " << rep.failures.size() << " defects, condition 3 "
                 << to_string(rep.condition3) << " (sup product " << rep.sup_product << " vs 2^-64); ";
    }
    return v;
}

std::string run_binary(const std::string& args)
{
    const std::string cmd = std::string(QREP_BINARY) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        return {};
    }
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) {
        out.append(buf.data(), n);
    }
    return out;
}

bool rationals_reparse(const nlohmann::json& node)
{
    if (node.is_string()) {
        const auto s = node.get<std::string>();
        if (s.find('/') != std::string::npos && s.find_first_not_of("-0123456789/") == std::string::npos) {
            return Rational::parse(s).str() == s;
        }
        return true;
    }
    if (node.is_structured()) {
        for (const auto& child : node) {
            if (!rationals_reparse(child)) {
                return false;
            }
        }
    }
    return true;
}

Verdict criterion9()
{
    Verdict v;
    const std::string dir = QREP_SPEC_DIR;
    const std::vector<std::string> commands{
        "validate --spec " + dir + "/example_b.json --depth 64",
        "range --spec " + dir + "/negabinary.json",
        "eval --spec " + dir + "/ternary.json --digits 1,0,2",
        "encode --spec " + dir + "/binary.json --x 3/8 --tol 1/1073741824",
        "cylinder --spec " + dir + "/cantor.json --base 1,0",
        "placement --spec " + dir + "/gap.json --digit 0",
        "theorem --spec " + dir + "/negabinary.json --rank 10",
    };
    for (const auto& c : commands) {
        const std::string first = run_binary(c + " --format machine");
        const std::string second = run_binary(c + " --format machine");
        v.require(!first.empty() && first == second, "byte-identical: " + c);
        try {
            v.require(rationals_reparse(nlohmann::json::parse(first)), "reparse: " + c);
        } catch (const nlohmann::json::exception&) {
            v.require(false, "machine output is JSON: " + c);
        }
    }
    v.detail << commands.size() << " commands run twice";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
        {"1 oracle equivalence", criterion1},  {"2 telescoping identity", criterion2},
        {"3 value ranges", criterion3},        {"4 nesting and metric ratio", criterion4},
        {"5 placement sign laws", criterion5}, {"6 brute-force cylinder bounds", criterion6},
        {"7 theorem and encoder", criterion7}, {"8 example systems validate", criterion8},
        {"9 CLI determinism", criterion9},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << "exception: " << e.what();
        }
        failed += v.pass ? 0 : 1;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << "  -- " << v.detail.str() << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
