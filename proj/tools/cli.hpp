#pragma once

// Command-line front end for the tower library. Every subcommand builds one
// Output holding both the human text and the JSON document from the same
// values, so the two modes cannot disagree on numeric content.
//
// Exit codes: 0 success, 1 domain error, 2 usage error. Errors are written to
// stderr as a single line "tower: <kind> error: <reason>".

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tower/anthyphairesis/continued_fraction.hpp"
#include "tower/anthyphairesis/euclid.hpp"
#include "tower/completion.hpp"
#include "tower/exhaustion.hpp"
#include "tower/interval.hpp"
#include "tower/laws.hpp"
#include "tower/naturals.hpp"
#include "tower/parity.hpp"
#include "tower/rational.hpp"
#include "tower/reals.hpp"

namespace tower::cli {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::optional<std::size_t> bits;
    std::optional<std::size_t> doublings;
    std::optional<std::uint64_t> max;
    std::optional<unsigned> digits;
    std::uint64_t seed = laws::default_seed;
    bool trace = false;
    bool literal = false;
};

struct Output {
    std::string text;
    json doc = json::object();
    /// Nonzero when the command ran but its verdict is negative (e.g. a law
    /// suite with a failing law); the output is still printed.
    int status = 0;
};

struct CommandHelp {
    std::string name;
    std::string synopsis;
    std::string example;
};

/// The documented surface. The doc-sync test executes every example.
inline const std::vector<CommandHelp>& command_table() {
    static const std::vector<CommandHelp> table{
        {"gcd", "greatest common measure by anthyphairesis [--trace] [--literal]", "gcd 136 6 --trace"},
        {"coprime", "whether two numbers are prime to one another", "coprime 17 3"},
        {"cf", "continued fraction of p/q or of sqrt:D", "cf 17/3"},
        {"cf-reconstruct", "rational value of a finite continued fraction", "cf-reconstruct 5 1 2"},
        {"surd", "periodic expansion of sqrt(D) [--trace shows (P, Q) states]", "surd 2"},
        {"convergents", "convergents p/q with the gap bound 1/(q_k q_(k+1)) [--max N] [--bits N]",
         "convergents sqrt:2 --max 5"},
        {"triples", "Pythagorean triples with c <= N and the six parity lemmas [--max N] [--trace]",
         "triples --max 50"},
        {"descent", "halving descent for side a and diagonal c, or search 2a^2 = c^2 up to --max",
         "descent 5 7"},
        {"pebble", "pebble diagram: odd-square N | even-square N | sum-of-odds M V", "pebble odd-square 5"},
        {"pi", "polygon bounds on pi from the hexagon [--doublings N] [--bits N] [--digits N]",
         "pi --doublings 4 --digits 6"},
        {"area", "bounds on the area of a circle of radius r [--doublings N]", "area 1 --doublings 4"},
        {"ratio-areas", "circles are as the squares on their diameters", "ratio-areas 1 2"},
        {"halving-check", "gap(k+1) < gap(k)/2 over consecutive doublings [--doublings N] [--bits N]",
         "halving-check --doublings 10 --bits 128"},
        {"zeno", "partial sums t_n of 1/2 + 1/4 + ... [--max N]", "zeno --max 8"},
        {"ruler-product", "length ab by similar triangles, exact coordinates", "ruler-product 3/2 4/3"},
        {"theodorus", "spiral of right triangles with hypotenuse sqrt(k+1) [--max N] [--bits N]",
         "theodorus --max 8"},
        {"real", "real arithmetic: add|mul|compare|between|archimedean|sup on p/q, sqrt:D, pi, m~n",
         "real between sqrt:2 3/2"},
        {"laws", "sampled law suites: ccs | group | field | ordered-field | all [--seed N] [--max N]",
         "laws field --max 200"},
        {"help", "list subcommands with examples", "help"},
    };
    return table;
}

namespace detail {

inline Natural parse_natural(const std::string& s) {
    try {
        return Natural::parse(s);
    } catch (const std::exception&) {
        throw UsageError("expected a natural number, got '" + s + "'");
    }
}

inline Natural parse_positive(const std::string& s) {
    Natural n = parse_natural(s);
    if (n.is_zero()) {
        throw UsageError("expected a positive natural number, got '" + s + "'");
    }
    return n;
}

inline Rational parse_rational(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const tower::domain_error& e) {
        // a well-formed p/0 is a domain problem; anything else is syntax
        if (s.size() > 2 && s.ends_with("/0")) {
            throw;
        }
        throw UsageError("expected p/q or an integer, got '" + s + "'");
    } catch (const std::exception&) {
        throw UsageError("expected p/q or an integer, got '" + s + "'");
    }
}

inline std::uint64_t small_natural(const Natural& n, std::uint64_t cap, const std::string& what) {
    if (!n.fits_u64() || n.to_u64() > cap) {
        throw tower::domain_error(what + " must be at most " + std::to_string(cap));
    }
    return n.to_u64();
}

inline void require_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                         const std::string& usage) {
    if (args.size() < lo || args.size() > hi) {
        throw UsageError("usage: " + usage);
    }
}

inline std::optional<Natural> surd_radicand(const std::string& s) {
    if (!s.starts_with("sqrt:")) {
        return std::nullopt;
    }
    return parse_natural(s.substr(5));
}

inline json steps_json(const AnthyphairesisTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        steps.push_back({{"dividend", s.dividend.to_string()},
                         {"quotient", s.quotient.to_string()},
                         {"divisor", s.divisor.to_string()},
                         {"remainder", s.remainder.to_string()}});
    }
    return steps;
}

inline json cf_json(const CFExpansion& e, json trace = json::array()) {
    json head = json::array();
    for (const auto& q : e.quotients) {
        head.push_back(q.to_string());
    }
    json period = nullptr;
    if (e.periodic_tail) {
        period = json::array();
        for (const auto& q : *e.periodic_tail) {
            period.push_back(q.to_string());
        }
    }
    return {{"quotients", head}, {"periodic_tail", period}, {"trace", std::move(trace)}, {"text", e.to_string()}};
}

inline json interval_json(const RationalInterval& iv) {
    return {{"lo", iv.lo().to_string()}, {"hi", iv.hi().to_string()}};
}

/// Outward-rounded decimals, as printed in text mode.
inline json interval_json(const RationalInterval& iv, unsigned digits) {
    json j = interval_json(iv);
    j["lo_decimal"] = iv.lo().to_decimal(digits, Rounding::down);
    j["hi_decimal"] = iv.hi().to_decimal(digits, Rounding::up);
    return j;
}

inline std::string pad_left(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

/// Column-aligned text table; the first row is the header.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()));
        for (std::size_t c = 0; c < r.size(); ++c) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += (c == 0 ? "" : "  ") + (c + 1 == r.size() ? r[c] : pad_right(r[c], width[c]));
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace detail

// ---- number theory ------------------------------------------------------

inline Output cmd_gcd(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 2, 2, "gcd A B [--trace] [--literal]");
    Natural a = detail::parse_positive(args[0]);
    Natural b = detail::parse_positive(args[1]);
    GcdResult r = opt.literal ? gcd_literal(a, b) : gcd(a, b);
    Output o;
    o.text = "gcd(" + a.to_string() + ", " + b.to_string() + ") = " + r.gcd.to_string() + "\n";
    o.doc = {{"command", "gcd"}, {"a", a.to_string()}, {"b", b.to_string()}, {"gcd", r.gcd.to_string()},
             {"trace", detail::steps_json(r.trace)}};
    if (opt.literal) {
        o.doc["subtractions"] = r.trace.subtractions;
        o.text += "subtractions: " + std::to_string(r.trace.subtractions) + "\n";
    }
    if (opt.trace || opt.literal) {
        o.text += format_trace_table(r.trace);
    }
    return o;
}

inline Output cmd_coprime(const std::vector<std::string>& args, const Options&) {
    detail::require_args(args, 2, 2, "coprime A B");
    Natural a = detail::parse_positive(args[0]);
    Natural b = detail::parse_positive(args[1]);
    bool c = coprime(a, b);
    Natural g = gcd_value(a, b);
    Output o;
    o.text = a.to_string() + " and " + b.to_string() + (c ? " are" : " are not") + " coprime (gcd " +
             g.to_string() + ")\n";
    o.doc = {{"command", "coprime"}, {"a", a.to_string()}, {"b", b.to_string()}, {"coprime", c},
             {"gcd", g.to_string()}};
    return o;
}

inline CFExpansion expansion_of(const std::string& arg) {
    if (auto d = detail::surd_radicand(arg)) {
        return surd_cf(*d);
    }
    Rational x = detail::parse_rational(arg);
    return cf_expand(x);
}

inline Output cmd_cf(const std::vector<std::string>& args, const Options&) {
    detail::require_args(args, 1, 1, "cf p/q | cf sqrt:D");
    CFExpansion e = expansion_of(args[0]);
    json trace = json::array();
    if (!detail::surd_radicand(args[0])) {
        Rational x = detail::parse_rational(args[0]);
        trace = detail::steps_json(tower::detail::euclid_trace(x.numerator().magnitude(), x.denominator()));
    }
    Output o;
    o.text = e.to_string() + "\n";
    o.doc = {{"command", "cf"}, {"input", args[0]}, {"expansion", detail::cf_json(e, trace)}};
    return o;
}

inline Output cmd_cf_reconstruct(const std::vector<std::string>& args, const Options&) {
    if (args.empty()) {
        throw UsageError("usage: cf-reconstruct a0 a1 ... | cf-reconstruct \"[a0; a1, ...]\"");
    }
    std::string joined;
    for (const auto& a : args) {
        joined += a + " ";
    }
    std::vector<Natural> terms;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            terms.push_back(detail::parse_natural(token));
            token.clear();
        }
    };
    for (char ch : joined) {
        if (ch == '[' || ch == ']' || ch == ';' || ch == ',' || ch == ' ') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    if (terms.empty()) {
        throw UsageError("cf-reconstruct needs at least one term");
    }
    CFExpansion e = make_finite_cf(terms);
    Rational v = cf_reconstruct(e);
    Output o;
    o.text = v.to_string() + "\n";
    o.doc = {{"command", "cf-reconstruct"}, {"expansion", detail::cf_json(e)}, {"value", v.to_string()}};
    return o;
}

inline Output cmd_surd(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 1, 1, "surd D");
    std::string arg = args[0].starts_with("sqrt:") ? args[0].substr(5) : args[0];
    Natural d = detail::parse_natural(arg);
    SurdExpansion s = surd_expand(SurdState{d, Integer(0), Integer(1)});
    const CFExpansion& e = s.expansion;
    Output o;
    std::string head;
    std::string period;
    for (const auto& q : e.quotients) {
        head += (head.empty() ? "" : ", ") + q.to_string();
    }
    for (const auto& q : *e.periodic_tail) {
        period += (period.empty() ? "" : ", ") + q.to_string();
    }
    o.text = "sqrt(" + d.to_string() + ") = " + e.to_string() + "\n";
    o.text += "head: [" + head + "]\nperiod: [" + period + "] (length " +
              std::to_string(e.periodic_tail->size()) + ")\n";
    json states = json::array();
    std::vector<std::vector<std::string>> rows{{"i", "P", "Q", "a"}};
    for (std::size_t i = 0; i < s.states.size(); ++i) {
        const auto& st = s.states[i];
        states.push_back({{"p", st.p.to_string()}, {"q", st.q.to_string()}, {"term", e.term(i).to_string()}});
        rows.push_back({std::to_string(i), st.p.to_string(), st.q.to_string(), e.term(i).to_string()});
    }
    if (opt.trace) {
        o.text += detail::table(rows);
    }
    o.doc = {{"command", "surd"}, {"radicand", d.to_string()}, {"expansion", detail::cf_json(e, states)},
             {"period_length", e.periodic_tail->size()}};
    return o;
}

inline Output cmd_convergents(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 1, 1, "convergents p/q | convergents sqrt:D [--max N] [--bits N]");
    CFExpansion e = expansion_of(args[0]);
    const std::size_t n = opt.max.value_or(5);
    const std::size_t bits = opt.bits.value_or(64);
    if (n == 0 || n > 10000) {
        throw tower::domain_error("--max must be between 1 and 10000");
    }
    auto radicand = detail::surd_radicand(args[0]);
    std::optional<RationalInterval> value;
    if (radicand) {
        value = sqrt_interval(Rational(Integer(*radicand)), bits);
    } else {
        value = RationalInterval(cf_reconstruct(e));
    }
    // one extra convergent so each row has its successor's denominator
    auto cs = convergent_pairs(e, n + 1);
    Output o;
    json rows = json::array();
    std::vector<std::vector<std::string>> text{{"k", "p/q", "bound 1/(q_k q_k+1)", "verified"}};
    for (std::size_t k = 0; k < cs.size() && k < n; ++k) {
        const Rational c = cs[k].value();
        json row{{"k", k}, {"convergent", c.to_string()}};
        std::string bound_text = "exact";
        std::string verdict = "exact";
        if (k + 1 < cs.size()) {
            Rational bound(Integer(1), cs[k].q * cs[k + 1].q);
            RationalInterval err = *value - RationalInterval(c);
            Rational worst = max(abs(err.lo()), abs(err.hi()));
            // a finite expansion meets the bound with equality at its last gap
            bool ok = worst < bound || (!e.is_periodic() && worst == bound);
            bound_text = bound.to_string();
            verdict = ok ? "yes" : "no";
            row["bound"] = bound.to_string();
            row["verified"] = ok;
            if (!ok) {
                o.status = 1;
            }
        } else {
            row["bound"] = nullptr;
            row["verified"] = c == cf_reconstruct(e);
        }
        rows.push_back(row);
        text.push_back({std::to_string(k), c.to_string(), bound_text, verdict});
    }
    o.text = detail::table(text);
    o.doc = {{"command", "convergents"}, {"input", args[0]}, {"expansion", detail::cf_json(e)},
             {"bits", bits}, {"convergents", rows}};
    return o;
}

// ---- parity -------------------------------------------------------------

inline Output cmd_triples(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 0, 0, "triples [--max N] [--trace]");
    const std::uint64_t c_max = opt.max.value_or(50);
    if (c_max > 5000) {
        throw tower::domain_error("--max for triples must be at most 5000");
    }
    ParityReport rep = check_parity_lemmas(c_max);
    Output o;
    o.text = std::to_string(rep.triples.size()) + " triples with c <= " + std::to_string(c_max) + "\n";
    json triples = json::array();
    for (const auto& t : rep.triples) {
        triples.push_back({t.a.to_string(), t.b.to_string(), t.c.to_string()});
        if (opt.trace) {
            o.text += t.to_string() + "\n";
        }
    }
    std::vector<std::vector<std::string>> rows{{"lemma", "applies", "violations", "statement"}};
    json lemmas = json::array();
    for (const auto& l : rep.lemmas) {
        rows.push_back({std::to_string(l.lemma_id), std::to_string(l.triples_checked),
                        std::to_string(l.violations.size()), l.statement});
        json viol = json::array();
        for (const auto& t : l.violations) {
            viol.push_back({t.a.to_string(), t.b.to_string(), t.c.to_string()});
        }
        lemmas.push_back({{"lemma_id", l.lemma_id}, {"statement", l.statement}, {"triples_checked", l.triples_checked},
                          {"violations", viol}});
    }
    o.text += detail::table(rows);
    o.status = rep.violation_count() == 0 ? 0 : 1;
    o.doc = {{"command", "triples"}, {"max", c_max}, {"triples", triples}, {"lemmas", lemmas}};
    return o;
}

inline Output cmd_descent(const std::vector<std::string>& args, const Options& opt) {
    if (args.empty()) {
        const std::uint64_t n = opt.max.value_or(2000);
        if (n > 20000) {
            throw tower::domain_error("--max for descent search must be at most 20000");
        }
        auto found = descent_search(n);
        Output o;
        o.text = "pairs (a, c) with a, c <= " + std::to_string(n) + " and 2a^2 = c^2: " +
                 std::to_string(found.size()) + "\n";
        json pairs = json::array();
        for (const auto& [a, c] : found) {
            pairs.push_back({std::to_string(a), std::to_string(c)});
            o.text += "(" + std::to_string(a) + ", " + std::to_string(c) + ")\n";
        }
        o.status = found.empty() ? 0 : 1;
        o.doc = {{"command", "descent"}, {"mode", "search"}, {"max", n}, {"found", pairs}};
        return o;
    }
    detail::require_args(args, 2, 2, "descent A C | descent [--max N]");
    Natural a = detail::parse_positive(args[0]);
    Natural c = detail::parse_positive(args[1]);
    DescentVerdict v = incommensurability_descent(a, c);
    Output o;
    json chain = json::array();
    for (const auto& s : v.chain) {
        chain.push_back({{"side", s.side.to_string()}, {"diagonal", s.diagonal.to_string()}});
        o.text += "(" + s.side.to_string() + ", " + s.side.to_string() + ", " + s.diagonal.to_string() + ")\n";
    }
    const bool contradiction = v.outcome == DescentOutcome::odd_diagonal_contradiction;
    std::string cmp = v.legs_square_sum < v.diagonal_square ? " < " : " > ";
    if (contradiction) {
        o.text += "contradiction: odd diagonal forces a side both odd and even\n";
    } else {
        o.text += "not a side and diagonal: 2*" + a.to_string() + "^2 = " + v.legs_square_sum.to_string() + cmp +
                  v.diagonal_square.to_string() + " = " + c.to_string() + "^2\n";
    }
    o.doc = {{"command", "descent"},
             {"mode", "chain"},
             {"side", a.to_string()},
             {"diagonal", c.to_string()},
             {"outcome", contradiction ? "contradiction" : "not-pythagorean"},
             {"twice_side_squared", v.legs_square_sum.to_string()},
             {"diagonal_squared", v.diagonal_square.to_string()},
             {"chain", chain}};
    return o;
}

inline Output cmd_pebble(const std::vector<std::string>& args, const Options&) {
    const std::string usage = "pebble odd-square N | pebble even-square N | pebble sum-of-odds M V";
    if (args.empty()) {
        throw UsageError("usage: " + usage);
    }
    const std::map<std::string, PebbleKind> kinds{{"odd-square", PebbleKind::odd_square},
                                                  {"even-square", PebbleKind::even_square},
                                                  {"sum-of-odds", PebbleKind::sum_of_odds}};
    auto it = kinds.find(args[0]);
    if (it == kinds.end()) {
        throw UsageError("usage: " + usage);
    }
    const bool two = it->second == PebbleKind::sum_of_odds;
    detail::require_args(args, two ? 3 : 2, two ? 3 : 2, usage);
    std::uint64_t n = detail::small_natural(detail::parse_natural(args[1]), pebble_budget, "pebble side");
    std::uint64_t v = two ? detail::small_natural(detail::parse_natural(args[2]), pebble_budget, "pebble value") : 0;
    PebbleDiagram d = pebble_render(it->second, n, v);
    Output o;
    o.text = d.text + d.identity + "\n";
    o.doc = {{"command", "pebble"}, {"kind", args[0]}, {"n", n}, {"identity", d.identity},
             {"verified", d.verified}, {"diagram", d.text}};
    if (two) {
        o.doc["value"] = v;
    }
    return o;
}

// ---- exhaustion ---------------------------------------------------------

inline std::size_t doublings_of(const Options& opt, std::size_t fallback) {
    std::size_t d = opt.doublings.value_or(fallback);
    if (d > max_doublings) {
        throw tower::domain_error("at most " + std::to_string(max_doublings) + " doublings are supported");
    }
    return d;
}

inline std::size_t bits_of(const Options& opt, std::size_t fallback) {
    std::size_t b = opt.bits.value_or(fallback);
    if (b == 0 || b > 4096) {
        throw tower::domain_error("--bits must be between 1 and 4096");
    }
    return b;
}

inline Output cmd_pi(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 0, 0, "pi [--doublings N] [--bits N] [--digits N]");
    const std::size_t d = doublings_of(opt, 4);
    const std::size_t bits = bits_of(opt, 64);
    const unsigned digits = opt.digits.value_or(6);
    auto rows = pi_bounds(d, bits);
    std::vector<std::vector<std::string>> text{{"sides", "lower", "upper", "gap"}};
    json jrows = json::array();
    for (const auto& r : rows) {
        text.push_back({r.sides.to_string(), r.inscribed.lo().to_decimal(digits, Rounding::down),
                        r.circumscribed.hi().to_decimal(digits, Rounding::up),
                        r.gap.to_decimal(digits, Rounding::up)});
        jrows.push_back({{"sides", r.sides.to_string()},
                         {"lower", r.inscribed.lo().to_string()},
                         {"upper", r.circumscribed.hi().to_string()},
                         {"lower_decimal", r.inscribed.lo().to_decimal(digits, Rounding::down)},
                         {"upper_decimal", r.circumscribed.hi().to_decimal(digits, Rounding::up)},
                         {"gap", r.gap.to_string()},
                         {"gap_decimal", r.gap.to_decimal(digits, Rounding::up)}});
    }
    Output o;
    o.text = detail::table(text);
    o.doc = {{"command", "pi"}, {"doublings", d}, {"bits", rows.back().bits}, {"rows", jrows}};
    return o;
}

inline Output cmd_area(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 1, 1, "area R [--doublings N] [--bits N] [--digits N]");
    Rational r = detail::parse_rational(args[0]);
    const std::size_t d = doublings_of(opt, 4);
    const unsigned digits = opt.digits.value_or(6);
    RationalInterval a = circle_area_bounds(r, d, bits_of(opt, 64));
    Output o;
    o.text = "area of circle with radius " + r.to_string() + " in [" + a.lo().to_decimal(digits, Rounding::down) +
             ", " + a.hi().to_decimal(digits, Rounding::up) + "]\n";
    o.doc = {{"command", "area"}, {"radius", r.to_string()}, {"doublings", d}, {"area", detail::interval_json(a, digits)}};
    return o;
}

inline Output cmd_ratio_areas(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 2, 2, "ratio-areas R1 R2 [--doublings N] [--bits N]");
    Rational r1 = detail::parse_rational(args[0]);
    Rational r2 = detail::parse_rational(args[1]);
    const std::size_t d = doublings_of(opt, 4);
    const unsigned digits = opt.digits.value_or(6);
    AreaRatioVerdict v = area_ratio_check(r1, r2, d, bits_of(opt, 64));
    Output o;
    o.text = "area ratio in [" + v.ratio.lo().to_decimal(digits, Rounding::down) + ", " +
             v.ratio.hi().to_decimal(digits, Rounding::up) + "]\n(d1/d2)^2 = " +
             v.diameter_square_ratio.to_string() + (v.contains ? " inside" : " OUTSIDE") + "\n";
    o.status = v.contains ? 0 : 1;
    o.doc = {{"command", "ratio-areas"},
             {"r1", r1.to_string()},
             {"r2", r2.to_string()},
             {"doublings", d},
             {"first_area", detail::interval_json(v.first_area)},
             {"second_area", detail::interval_json(v.second_area)},
             {"ratio", detail::interval_json(v.ratio, digits)},
             {"diameter_square_ratio", v.diameter_square_ratio.to_string()},
             {"contains", v.contains}};
    return o;
}

inline Output cmd_halving_check(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 0, 0, "halving-check [--doublings N] [--bits N]");
    const std::size_t d = doublings_of(opt, 10);
    auto rows = pi_bounds(d, bits_of(opt, 128));
    HalvingVerdict v = exhaustion_halving_check(rows);
    std::vector<std::vector<std::string>> text{{"sides", "gap", "gap/previous"}};
    json jrows = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string ratio = k == 0 ? "-" : (rows[k].gap / rows[k - 1].gap).to_decimal(4, Rounding::up);
        std::string gap = rows[k].gap.to_decimal(12, Rounding::up);
        text.push_back({rows[k].sides.to_string(), gap, ratio});
        json row = {{"sides", rows[k].sides.to_string()}, {"gap", rows[k].gap.to_string()}, {"gap_decimal", gap}};
        if (k > 0) {
            row["ratio_decimal"] = ratio;
        }
        jrows.push_back(row);
    }
    Output o;
    o.text = detail::table(text) + std::to_string(v.pairs_checked) + " pairs, " +
             std::to_string(v.failures.size()) + " violations\n";
    json failures = json::array();
    for (const auto& f : v.failures) {
        failures.push_back({{"index", f.index}, {"gap_before", f.gap_before.to_string()},
                            {"gap_after", f.gap_after.to_string()}, {"bits", f.bits}});
    }
    o.status = v.holds() ? 0 : 1;
    o.doc = {{"command", "halving-check"}, {"doublings", d}, {"bits", rows.back().bits},
             {"pairs_checked", v.pairs_checked}, {"rows", jrows}, {"failures", failures}, {"holds", v.holds()}};
    return o;
}

inline Output cmd_zeno(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 0, 0, "zeno [--max N]");
    const std::uint64_t n = opt.max.value_or(10);
    if (n == 0 || n > 4096) {
        throw tower::domain_error("--max for zeno must be between 1 and 4096");
    }
    auto rows = zeno_table(n);
    std::vector<std::vector<std::string>> text{{"n", "a_n", "t_n", "1 - t_n"}};
    json jrows = json::array();
    for (const auto& r : rows) {
        Rational rest = Rational(1) - r.partial;
        text.push_back({std::to_string(r.n), r.step.to_string(), r.partial.to_string(), rest.to_string()});
        jrows.push_back({{"n", r.n}, {"step", r.step.to_string()}, {"partial", r.partial.to_string()},
                         {"remainder", rest.to_string()}});
    }
    Output o;
    o.text = detail::table(text);
    o.doc = {{"command", "zeno"}, {"max", n}, {"rows", jrows}};
    return o;
}

inline Output cmd_ruler_product(const std::vector<std::string>& args, const Options&) {
    detail::require_args(args, 2, 2, "ruler-product A B");
    Rational a = detail::parse_rational(args[0]);
    Rational b = detail::parse_rational(args[1]);
    RulerCompassProduct p = ruler_compass_product(a, b);
    Output o;
    json points = json::object();
    for (const auto& pt : p.points) {
        o.text += pt.label + " = (" + pt.x.to_string() + ", " + pt.y.to_string() + ")\n";
        points[pt.label] = {pt.x.to_string(), pt.y.to_string()};
    }
    const bool exact = p.length == a * b;
    o.text += "|AD| = " + p.length.to_string() + (exact ? " = a*b" : " != a*b") + "\n";
    o.status = exact && p.similar_ratio_holds ? 0 : 1;
    o.doc = {{"command", "ruler-product"}, {"a", a.to_string()},      {"b", b.to_string()},
             {"length", p.length.to_string()}, {"points", points},    {"equals_product", exact},
             {"similar_ratio_holds", p.similar_ratio_holds}};
    return o;
}

inline Output cmd_theodorus(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 0, 0, "theodorus [--max N] [--bits N] [--digits N]");
    const std::uint64_t n = opt.max.value_or(16);
    if (n == 0 || n > 1000) {
        throw tower::domain_error("--max for theodorus must be between 1 and 1000");
    }
    const unsigned digits = opt.digits.value_or(6);
    auto verts = theodorus_vertices(n, bits_of(opt, 64));
    std::vector<std::vector<std::string>> text{{"k", "hypotenuse lower", "hypotenuse upper", "contains sqrt(k+1)"}};
    json jrows = json::array();
    bool all = true;
    for (const auto& v : verts) {
        // sqrt(k+1) lies in [lo, hi] iff lo^2 <= k+1 <= hi^2 for lo >= 0
        Rational target(static_cast<std::int64_t>(v.k + 1));
        bool ok = v.hypotenuse.lo() * v.hypotenuse.lo() <= target && target <= v.hypotenuse.hi() * v.hypotenuse.hi();
        all = all && ok;
        text.push_back({std::to_string(v.k), v.hypotenuse.lo().to_decimal(digits, Rounding::down),
                        v.hypotenuse.hi().to_decimal(digits, Rounding::up), ok ? "yes" : "no"});
        jrows.push_back({{"k", v.k}, {"x", detail::interval_json(v.x)}, {"y", detail::interval_json(v.y)},
                         {"hypotenuse", detail::interval_json(v.hypotenuse, digits)}, {"contains", ok}});
    }
    Output o;
    o.text = detail::table(text);
    o.status = all ? 0 : 1;
    o.doc = {{"command", "theodorus"}, {"max", n}, {"vertices", jrows}};
    return o;
}

// ---- reals --------------------------------------------------------------

/// Operand grammar: p/q, integer, sqrt:D, pi, or an account m~n (m minus n).
inline RealStream parse_real(const std::string& s) {
    if (s == "pi") {
        return real_pi();
    }
    if (auto d = detail::surd_radicand(s)) {
        return real_sqrt(Rational(Integer(*d)));
    }
    for (std::string_view sep : {std::string_view("~"), std::string_view("⊖")}) {
        auto at = s.find(sep);
        if (at != std::string::npos) {
            Account acc(detail::parse_positive(s.substr(0, at)), detail::parse_positive(s.substr(at + sep.size())));
            return real_from_rational(Rational(canonicalize_int(acc)));
        }
    }
    return real_from_rational(detail::parse_rational(s));
}

inline Output cmd_real(const std::vector<std::string>& args, const Options& opt) {
    const std::string usage = "real add|mul|compare|between|archimedean X Y | real sup X...";
    if (args.empty()) {
        throw UsageError("usage: " + usage);
    }
    const std::string& verb = args[0];
    const std::vector<std::string> operands(args.begin() + 1, args.end());
    const unsigned digits = opt.digits.value_or(10);
    const std::size_t budget = opt.bits.value_or(default_probe_budget);
    Output o;
    o.doc = {{"command", "real"}, {"verb", verb}, {"operands", operands}};
    if (verb == "sup") {
        if (operands.empty()) {
            throw UsageError("usage: real sup X...");
        }
        std::vector<RealStream> xs;
        for (const auto& s : operands) {
            xs.push_back(parse_real(s));
        }
        RealStream r = supremum_finite(xs);
        std::string shown = render(r, digits);
        o.text = shown + "\n";
        o.doc["value"] = shown;
        o.doc["interval"] = detail::interval_json(r.approx(4 * digits + 2));
        return o;
    }
    if (operands.size() != 2) {
        throw UsageError("usage: " + usage);
    }
    RealStream x = parse_real(operands[0]);
    RealStream y = parse_real(operands[1]);
    if (verb == "add" || verb == "mul") {
        RealStream r = verb == "add" ? real_add(x, y) : real_mul(x, y);
        std::string shown = render(r, digits);
        o.text = shown + "\n";
        o.doc["value"] = shown;
        o.doc["interval"] = detail::interval_json(r.approx(4 * digits + 2));
    } else if (verb == "compare") {
        CompareResult c = real_compare(x, y, budget);
        o.text = to_string(c.outcome) + " (precision " + std::to_string(c.precision) + ")\n";
        o.doc["outcome"] = to_string(c.outcome);
        o.doc["precision"] = c.precision;
    } else if (verb == "between") {
        Rational r = rational_between(x, y, budget);
        o.text = r.to_string() + "\n";
        o.doc["value"] = r.to_string();
    } else if (verb == "archimedean") {
        Natural n = archimedean_witness(x, y, budget);
        o.text = n.to_string() + "\n";
        o.doc["value"] = n.to_string();
    } else {
        throw UsageError("usage: " + usage);
    }
    return o;
}

// ---- laws ---------------------------------------------------------------

inline Output cmd_laws(const std::vector<std::string>& args, const Options& opt) {
    detail::require_args(args, 1, 1, "laws ccs|group|field|ordered-field|all [--seed N] [--max N]");
    std::vector<std::string> suites;
    if (args[0] == "all") {
        suites = laws::suite_names();
    } else {
        bool known = false;
        for (const auto& s : laws::suite_names()) {
            known = known || s == args[0];
        }
        if (!known) {
            throw UsageError("unknown law suite '" + args[0] + "'");
        }
        suites.push_back(args[0]);
    }
    const std::size_t samples = opt.max.value_or(laws::default_samples);
    if (samples == 0 || samples > 1000000) {
        throw tower::domain_error("--max for laws must be between 1 and 1000000");
    }
    Output o;
    json jsuites = json::array();
    std::vector<std::vector<std::string>> rows{{"suite", "carrier", "law", "expected", "result"}};
    for (const auto& name : suites) {
        laws::SuiteReport rep = laws::run_suite(name, opt.seed, samples);
        json results = json::array();
        for (const auto& r : rep.results) {
            std::string result = r.holds() ? "holds" : "fails";
            result += r.passed() ? "" : " UNEXPECTED";
            if (!r.passed() && !r.counterexample.empty()) {
                result += " at " + r.counterexample;
            }
            rows.push_back({name, r.carrier, r.law, r.expected_to_hold ? "holds" : "fails", result});
            results.push_back({{"law", r.law}, {"carrier", r.carrier}, {"samples", r.samples},
                               {"violations", r.violations}, {"expected_to_hold", r.expected_to_hold},
                               {"passed", r.passed()}, {"counterexample", r.counterexample}});
        }
        if (!rep.passed()) {
            o.status = 1;
        }
        jsuites.push_back({{"suite", name}, {"passed", rep.passed()}, {"results", results}});
    }
    o.text = detail::table(rows) + "seed " + std::to_string(opt.seed) + ", " + std::to_string(samples) +
             " samples per law: " + (o.status == 0 ? "all passed" : "FAILED") + "\n";
    o.doc = {{"command", "laws"}, {"seed", opt.seed}, {"samples", samples}, {"suites", jsuites}};
    return o;
}

inline Output cmd_help(const std::vector<std::string>&, const Options&) {
    Output o;
    o.text = "usage: tower <subcommand> [args] [--json] [--bits N] [--doublings N] [--max N] [--digits N] "
             "[--seed N] [--trace] [--literal]\n\n";
    std::vector<std::vector<std::string>> rows;
    json cmds = json::array();
    for (const auto& c : command_table()) {
        rows.push_back({c.name, c.synopsis});
        rows.push_back({"", "e.g. tower " + c.example});
        cmds.push_back({{"name", c.name}, {"synopsis", c.synopsis}, {"example", c.example}});
    }
    o.text += detail::table(rows);
    o.doc = {{"command", "help"}, {"commands", cmds}};
    return o;
}

using Handler = Output (*)(const std::vector<std::string>&, const Options&);

inline const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"gcd", cmd_gcd},
        {"coprime", cmd_coprime},
        {"cf", cmd_cf},
        {"cf-reconstruct", cmd_cf_reconstruct},
        {"surd", cmd_surd},
        {"convergents", cmd_convergents},
        {"triples", cmd_triples},
        {"descent", cmd_descent},
        {"pebble", cmd_pebble},
        {"pi", cmd_pi},
        {"area", cmd_area},
        {"ratio-areas", cmd_ratio_areas},
        {"halving-check", cmd_halving_check},
        {"zeno", cmd_zeno},
        {"ruler-product", cmd_ruler_product},
        {"theodorus", cmd_theodorus},
        {"real", cmd_real},
        {"laws", cmd_laws},
        {"help", cmd_help},
    };
    return table;
}

/// Parses argv-style arguments (without the program name) and runs one
/// subcommand. Returns the process exit code.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Options opt;
    std::string name;
    std::vector<std::string> positional;

    CLI::App app{"exact arithmetic for the number tower", "tower"};
    app.set_help_flag();
    app.allow_extras(false);
    app.add_flag("--json", opt.json, "emit one JSON document");
    app.add_option("--bits", opt.bits, "precision in bits");
    app.add_option("--doublings", opt.doublings, "polygon doublings");
    app.add_option("--max", opt.max, "upper bound or count");
    app.add_option("--digits", opt.digits, "decimal digits to print");
    app.add_option("--seed", opt.seed, "seed for sampled law suites");
    app.add_flag("--trace", opt.trace, "show intermediate steps");
    app.add_flag("--literal", opt.literal, "subtract one at a time");
    app.add_option("subcommand", name, "subcommand")->required();
    // negative integers such as -3/4 are operands, not flags
    app.add_option("args", positional, "arguments")->allow_extra_args();
    app.positionals_at_end(false);

    auto fail = [&](const std::string& kind, const std::string& what, int code) {
        err << "tower: " << kind << " error: " << what << "\n";
        if (opt.json) {
            out << json{{"error", {{"kind", kind}, {"message", what}}}}.dump(2) << "\n";
        }
        return code;
    };

    try {
        // reversed for CLI11, which consumes its argument vector from the back
        std::vector<std::string> rev(argv.rbegin(), argv.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    }
    auto it = handlers().find(name);
    if (it == handlers().end()) {
        return fail("usage", "unknown subcommand '" + name + "'; try 'tower help'", 2);
    }
    try {
        Output o = it->second(positional, opt);
        if (opt.json) {
            out << o.doc.dump(2) << "\n";
        } else {
            out << o.text;
        }
        return o.status;
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const tower::domain_error& e) {
        return fail("domain", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what(), 2);
    }
}

}  // namespace tower::cli
