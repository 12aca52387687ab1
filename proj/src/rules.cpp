#include "k3/rules.hpp"

#include "k3/exact_linalg.hpp"
#include "k3/fixed_locus.hpp"
#include "k3/singularity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3 {

const OrbitProfile& RuleContext::require_profile(const std::string& rule) const
{
    if (!profile) {
        throw std::invalid_argument(rule + ": needs a profile");
    }
    return *profile;
}

std::string partition_string(const std::vector<std::int64_t>& parts)
{
    std::string s;
    for (std::int64_t x : parts) {
        if (!s.empty()) {
            s += ",";
        }
        s += std::to_string(x);
    }
    return s;
}

std::vector<std::int64_t> parse_partition(const std::string& text)
{
    std::vector<std::int64_t> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const std::int64_t v = std::stoll(item, &used);
            if (used != item.size() || v < 1) {
                throw std::invalid_argument("");
            }
            parts.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition '" + text + "'");
        }
    }
    return parts;
}

namespace {

std::int64_t int_input(const Values& in, const std::string& key, const std::string& rule)
{
    const auto it = in.find(key);
    if (it == in.end() || !std::holds_alternative<std::int64_t>(it->second)) {
        throw std::invalid_argument(rule + ": integer input '" + key + "' required");
    }
    return std::get<std::int64_t>(it->second);
}

std::string text_input(const Values& in, const std::string& key, const std::string& rule)
{
    const auto it = in.find(key);
    if (it == in.end() || !std::holds_alternative<std::string>(it->second)) {
        throw std::invalid_argument(rule + ": text input '" + key + "' required");
    }
    return std::get<std::string>(it->second);
}

Step start(const std::string& rule, std::int64_t a, const Values& in)
{
    Step s;
    s.rule = rule;
    s.a = a;
    s.values = in;
    return s;
}

void fail(Step& s, const std::string& reason)
{
    s.verdict = Verdict::contradiction;
    s.reason = reason;
}

std::int64_t power_order(const OrderSignature& sig, std::int64_t a)
{
    return sig.order() / gcd(sig.order(), a);
}

bool symplectic_power(const OrderSignature& sig, std::int64_t a)
{
    return mod(a, sig.nonsymplectic) == 0;
}

std::int64_t invariant_curves(const std::vector<std::int64_t>& parts, std::int64_t a)
{
    std::int64_t n = 0;
    for (std::int64_t len : parts) {
        n += a % len == 0 ? 1 : 0;
    }
    return n;
}

// Euler number of the part of Fix(g^a) lying on the non-rational curve, once
// each rational curve mapped to itself has contributed 2.
std::int64_t curve_rest(const OrbitProfile& p, std::int64_t a, const std::vector<std::int64_t>& parts)
{
    return lefschetz_euler(p, a) - 2 * invariant_curves(parts, a);
}

Step euler_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-euler", a, in);
    const std::int64_t e = lefschetz_euler(ctx.require_profile(s.rule), a);
    s.values["e"] = e;
    if (in.count("expected") && int_input(in, "expected", s.rule) != e) {
        s.verdict = Verdict::mismatch;
        s.reason = "computed e(g^a) differs from the expected value";
    }
    if (in.count("expected_max") && e > int_input(in, "expected_max", s.rule)) {
        s.verdict = Verdict::mismatch;
        s.reason = "computed e(g^a) exceeds the expected bound";
    }
    return s;
}

Step structure_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-structure", a, in);
    const OrbitProfile& p = ctx.require_profile(s.rule);
    if (power_order(ctx.signature, a) != 2 || symplectic_power(ctx.signature, a)) {
        throw std::invalid_argument("R-structure: g^a must be a non-symplectic involution");
    }
    const std::int64_t e = lefschetz_euler(p, a);
    const std::int64_t bound = invariant_dim(p, a);
    const auto models = decompose_fixed_locus(e, bound, false, true);
    s.values["axiom"] = std::string("involution");
    s.values["e"] = e;
    s.values["max_curves"] = bound;
    s.values["models"] = static_cast<std::int64_t>(models.size());
    if (models.empty()) {
        fail(s, "no union of smooth curves with at most one irrational component has this Euler number");
    }
    return s;
}

Step p1_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-p1", a, in);
    const OrbitProfile& p = ctx.require_profile(s.rule);
    const auto parts = parse_partition(text_input(in, "partition", s.rule));
    const std::int64_t genus = int_input(in, "genus", s.rule);
    const std::int64_t rest = curve_rest(p, a, parts);
    s.values["e"] = lefschetz_euler(p, a);
    s.values["invariant_curves"] = invariant_curves(parts, a);
    s.values["rest"] = rest;
    if (genus < 0) {
        if (rest != 0) {
            fail(s, "rational curves alone give a different Euler number");
        }
    } else if (rest < 0 && rest != 2 - 2 * genus) {
        fail(s, "remainder is negative but is not the Euler number of the curve");
    }
    return s;
}

Step subset_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-subset", a, in);
    const OrbitProfile& p = ctx.require_profile(s.rule);
    const std::string form = text_input(in, "form", s.rule);
    if (form == "finite") {
        const std::int64_t b = int_input(in, "b", s.rule);
        if (b % a != 0 || !symplectic_power(ctx.signature, b)) {
            throw std::invalid_argument("R-subset: need a | b with g^b symplectic");
        }
        const std::int64_t points = lefschetz_euler(p, b);
        const std::int64_t e = lefschetz_euler(p, a);
        s.values["points"] = points;
        s.values["e"] = e;
        if (e < 0 || e > points) {
            fail(s, "Fix(g^a) lies in a finite set of this size");
        }
    } else if (form == "curve") {
        const auto parts = parse_partition(text_input(in, "partition", s.rule));
        const std::int64_t genus = int_input(in, "genus", s.rule);
        const std::int64_t k = int_input(in, "k", s.rule);
        const std::int64_t rest = curve_rest(p, a, parts);
        s.values["rest"] = rest;
        if (a % k == 0) {
            s.values["acts"] = std::string("trivially");
            if (rest != 2 - 2 * genus) {
                fail(s, "g^a fixes the curve pointwise but the Euler numbers disagree");
            }
        } else {
            s.values["acts"] = std::string("nontrivially");
            if (rest < 0) {
                fail(s, "g^a has finitely many fixed points on the curve but the count is negative");
            }
        }
    } else if (form == "nested") {
        const auto parts = parse_partition(text_input(in, "partition", s.rule));
        const std::int64_t k = int_input(in, "k", s.rule);
        const std::int64_t b = int_input(in, "b", s.rule);
        if (b % a != 0 || a % k == 0 || b % k == 0) {
            throw std::invalid_argument("R-subset: nested form needs a | b, both acting nontrivially");
        }
        const std::int64_t fa = curve_rest(p, a, parts);
        const std::int64_t fb = curve_rest(p, b, parts);
        s.values["fixed_a"] = fa;
        s.values["fixed_b"] = fb;
        if (fa > fb) {
            fail(s, "Fix(g^a) on the curve is not contained in Fix(g^b)");
        }
    } else {
        throw std::invalid_argument("R-subset: unknown form '" + form + "'");
    }
    return s;
}

Step rh_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-rh", a, in);
    const std::int64_t genus = int_input(in, "genus", s.rule);
    std::int64_t order = 0;
    std::int64_t fixed = 0;
    if (in.count("k")) {
        const OrbitProfile& p = ctx.require_profile(s.rule);
        const std::int64_t k = int_input(in, "k", s.rule);
        order = k / gcd(k, a);
        fixed = curve_rest(p, a, parse_partition(text_input(in, "partition", s.rule)));
    } else if (in.count("locus")) {
        // The involution fixes exactly one curve, so all of Fix(g^a) lies on it.
        const OrbitProfile& p = ctx.require_profile(s.rule);
        if (text_input(in, "locus", s.rule) != "whole") {
            throw std::invalid_argument("R-rh: unknown locus");
        }
        const std::int64_t half = ctx.signature.order() / 2;
        fixed = lefschetz_euler(p, a);
        if (fixed == 2 - 2 * genus) {
            throw std::invalid_argument("R-rh: g^a may act trivially on the curve");
        }
        order = half / gcd(half, a);
    } else {
        order = int_input(in, "order", s.rule);
        fixed = int_input(in, "fixed", s.rule);
    }
    s.values["order"] = order;
    s.values["fixed"] = fixed;
    if (!is_prime(order)) {
        throw std::invalid_argument("R-rh: order must be prime");
    }
    if (!rh_feasible(order, genus, fixed)) {
        fail(s, "Riemann-Hurwitz has no solution");
    }
    return s;
}

Step symplectic_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-symplectic", a, in);
    const OrbitProfile& p = ctx.require_profile(s.rule);
    if (!symplectic_power(ctx.signature, a)) {
        throw std::invalid_argument("R-symplectic: g^a is not symplectic");
    }
    const SymplecticDatum datum = symplectic_profile(power_order(ctx.signature, a));
    const std::int64_t e = lefschetz_euler(p, a);
    const bool matches = profile_power(p, a) == datum.profile;
    s.values["order"] = datum.order;
    s.values["points"] = datum.fixed_points;
    s.values["e"] = e;
    s.values["power"] = profile_power(p, a).str();
    if (!matches || e != datum.fixed_points) {
        fail(s, "eigenvalues of g^a differ from the symplectic table");
    }
    return s;
}

Step pointsign_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-pointsign", a, in);
    const OrbitProfile& p = ctx.require_profile(s.rule);
    const std::int64_t b = int_input(in, "b", s.rule);
    if (b % a != 0 || !symplectic_power(ctx.signature, b)) {
        throw std::invalid_argument("R-pointsign: need a | b with g^b symplectic");
    }
    const std::int64_t e = lefschetz_euler(p, a);
    s.values["e"] = e;
    if (e < 0) {
        fail(s, "a fixed locus of points and rational curves has e >= 0");
    }
    return s;
}

std::vector<Rational> parse_row(const std::string& text)
{
    std::vector<Rational> row;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        row.push_back(parse_rational(item));
    }
    return row;
}

Step linear_rule(const RuleContext&, std::int64_t a, const Values& in)
{
    Step s = start("R-linear", a, in);
    std::vector<std::vector<Rational>> rows;
    std::stringstream in_rows(text_input(in, "matrix", s.rule));
    std::string row;
    while (std::getline(in_rows, row, ';')) {
        rows.push_back(parse_row(row));
    }
    const std::vector<Rational> rhs = parse_row(text_input(in, "rhs", s.rule));
    std::vector<std::string> unknowns;
    {
        std::stringstream in_names(text_input(in, "unknowns", s.rule));
        std::string name;
        while (std::getline(in_names, name, ',')) {
            unknowns.push_back(name);
        }
    }
    if (rows.empty() || rows.size() != rhs.size() || rows.front().size() != unknowns.size()) {
        throw std::invalid_argument("R-linear: inconsistent system shape");
    }
    Matrix<Rational> m(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != unknowns.size()) {
            throw std::invalid_argument("R-linear: ragged matrix");
        }
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    const auto x = solve_unique(m, rhs);
    if (!x) {
        s.values["solution"] = std::string("none");
        fail(s, "the system has no unique solution");
        return s;
    }
    std::string text;
    bool nonnegative_integer = true;
    for (std::size_t i = 0; i < x->size(); ++i) {
        const Rational& v = (*x)[i];
        text += (i ? "," : "") + to_string(v);
        if (denominator(v) != 1 || v < 0) {
            nonnegative_integer = false;
        } else {
            s.values[unknowns[i]] = static_cast<std::int64_t>(numerator(v));
        }
    }
    s.values["solution"] = text;
    if (!nonnegative_integer) {
        fail(s, "the solution is not a nonnegative integer vector");
    }
    return s;
}

// Base analysis for an involution whose fixed locus is a section R plus a
// curve C of genus curve_genus, pulled back from the ruling of the quotient.
Step base_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-base", a, in);
    const OrbitProfile& p = ctx.require_profile(s.rule);
    const std::string form = text_input(in, "form", s.rule);
    if (form == "trivial") {
        // g^a fixes every fibre: R is fixed pointwise, and either C is too
        // or every singular point of a fibre is an isolated fixed point on C.
        const std::int64_t smin = int_input(in, "singular_min", s.rule);
        const std::int64_t genus = int_input(in, "curve_genus", s.rule);
        const std::int64_t e = lefschetz_euler(p, a);
        const std::int64_t both = 2 + 2 - 2 * genus;
        s.values["e"] = e;
        s.values["both_fixed"] = both;
        s.values["lower"] = 2 + smin;
        if (e >= 2 + smin) {
            s.values["singular_max"] = e - 2;
        } else if (e != both) {
            fail(s, "too few fixed points for a trivial action on the base");
        }
    } else if (form == "orbits") {
        // A cyclic group of order l acting on P^1 fixes two points and has
        // all other orbits of length l.
        const std::int64_t order = int_input(in, "order", s.rule);
        const std::int64_t smin = int_input(in, "singular_min", s.rule);
        const std::int64_t smax = int_input(in, "singular_max", s.rule);
        std::string feasible;
        std::int64_t count = 0;
        for (std::int64_t total = smin; total <= smax; ++total) {
            for (std::int64_t fixed = 0; fixed <= 2 && fixed <= total; ++fixed) {
                if ((total - fixed) % order == 0 && (order > 1 || fixed == 0)) {
                    feasible += (feasible.empty() ? "" : ",") + std::to_string(fixed) + "+" + std::to_string(order)
                        + "x" + std::to_string((total - fixed) / order);
                    ++count;
                }
            }
        }
        s.values["feasible"] = feasible;
        s.values["count"] = count;
        if (count == 0) {
            fail(s, "the singular fibres cannot be split into orbits of the base action");
        }
    } else if (form == "fixed") {
        const std::int64_t points = int_input(in, "points", s.rule);
        const std::int64_t e = lefschetz_euler(p, a);
        s.values["e"] = e;
        if (e != points) {
            fail(s, "the fixed locus is exactly this set of points");
        }
    } else {
        throw std::invalid_argument("R-base: unknown form '" + form + "'");
    }
    return s;
}

std::vector<SingularityType> parse_types(const std::string& text)
{
    std::vector<SingularityType> out;
    std::stringstream in(text);
    std::string label;
    while (std::getline(in, label, '+')) {
        out.push_back(resolution_data(label));
    }
    return out;
}

Step singularity_rule(const RuleContext& ctx, std::int64_t a, const Values& in)
{
    Step s = start("R-singularity", a, in);
    if (power_order(ctx.signature, a) != 5 || symplectic_power(ctx.signature, a)) {
        throw std::invalid_argument("R-singularity: g^a must be non-symplectic of order 5");
    }
    const std::string form = text_input(in, "form", s.rule);
    const auto types = parse_types(text_input(in, "types", s.rule));
    if (form == "counts") {
        try {
            const CountSolution sol = solve_counts(int_input(in, "rho", s.rule), types, int_input(in, "total", s.rule));
            for (const auto& [label, c] : sol.counts) {
                s.values["count " + label] = c;
            }
            s.values["k_squared"] = to_string(sol.k_squared);
        } catch (const InfeasibleSystem& e) {
            fail(s, e.what());
        }
    } else if (form == "integrality") {
        const auto verdicts = integrality_scan({{text_input(in, "curve", s.rule), types}});
        s.values["values"] = join_values(verdicts.front().values);
        if (verdicts.front().contradiction) {
            fail(s, "K_Y . C' must be an integer");
        }
    } else {
        throw std::invalid_argument("R-singularity: unknown form '" + form + "'");
    }
    return s;
}

Step case_rule(const RuleContext&, std::int64_t a, const Values& in)
{
    Step s = start("case", a, in);
    text_input(in, "hypothesis", s.rule);
    s.verdict = Verdict::assume;
    return s;
}

Step split_rule(const RuleContext&, std::int64_t a, const Values& in)
{
    Step s = start("split", a, in);
    text_input(in, "kind", s.rule);
    if (int_input(in, "cases", s.rule) < 0) {
        throw std::invalid_argument("split: negative case count");
    }
    return s;
}

}  // namespace

const std::map<std::string, Rule>& rule_registry()
{
    static const std::map<std::string, Rule> rules = [] {
        std::map<std::string, Rule> m;
        auto add = [&](Rule r) { m.emplace(r.name, std::move(r)); };
        add({"R-euler", {"expected", "expected_max"}, true, euler_rule});
        add({"R-structure", {}, true, structure_rule});
        add({"R-p1", {"partition", "genus"}, true, p1_rule});
        add({"R-subset", {"form", "b", "partition", "genus", "k"}, true, subset_rule});
        add({"R-rh", {"order", "genus", "fixed", "partition", "k", "locus"}, true, rh_rule});
        add({"R-symplectic", {}, true, symplectic_rule});
        add({"R-pointsign", {"b"}, true, pointsign_rule});
        add({"R-linear", {"matrix", "rhs", "unknowns", "equations"}, false, linear_rule});
        add({"R-base", {"form", "singular_min", "singular_max", "curve_genus", "order", "points"}, true, base_rule});
        add({"R-singularity", {"form", "rho", "total", "types", "curve"}, false, singularity_rule});
        add({"case", {"hypothesis"}, false, case_rule});
        add({"split", {"kind", "cases"}, false, split_rule});
        return m;
    }();
    return rules;
}

Step apply_rule(const std::string& rule, const RuleContext& ctx, std::int64_t a, const Values& inputs)
{
    const auto& reg = rule_registry();
    const auto it = reg.find(rule);
    if (it == reg.end()) {
        throw std::invalid_argument("unknown rule '" + rule + "'");
    }
    for (const auto& [k, v] : inputs) {
        (void)v;
        if (std::find(it->second.inputs.begin(), it->second.inputs.end(), k) == it->second.inputs.end()) {
            throw std::invalid_argument(rule + ": '" + k + "' is not an input");
        }
    }
    return it->second.evaluate(ctx, a, inputs);
}

std::optional<std::string> recheck_step(const RuleContext& ctx, const Step& step)
{
    const auto& reg = rule_registry();
    const auto it = reg.find(step.rule);
    if (it == reg.end()) {
        return "unknown rule '" + step.rule + "'";
    }
    // R-rh records order and fixed as outputs when k or locus is present.
    Values inputs;
    for (const auto& key : it->second.inputs) {
        const auto v = step.values.find(key);
        if (v != step.values.end()) {
            inputs.emplace(key, v->second);
        }
    }
    if (step.rule == "R-rh" && (inputs.count("k") || inputs.count("locus"))) {
        inputs.erase("order");
        inputs.erase("fixed");
    }
    if (step.rule == "R-base" && inputs.count("form") && std::get_if<std::string>(&inputs.at("form"))
        && std::get<std::string>(inputs.at("form")) == "trivial") {
        inputs.erase("singular_max");
    }
    Step replayed;
    try {
        replayed = it->second.evaluate(ctx, step.a, inputs);
    } catch (const std::exception& e) {
        return step.rule + " at a=" + std::to_string(step.a) + ": " + e.what();
    }
    if (replayed.values != step.values) {
        for (const auto& [k, v] : replayed.values) {
            const auto r = step.values.find(k);
            if (r == step.values.end() || r->second != v) {
                return step.rule + " at a=" + std::to_string(step.a) + ": value '" + k + "' recomputes to "
                    + to_string(v) + ", recorded " + (r == step.values.end() ? "nothing" : to_string(r->second));
            }
        }
        return step.rule + " at a=" + std::to_string(step.a) + ": recorded values carry extra keys";
    }
    if (replayed.verdict != step.verdict) {
        return step.rule + " at a=" + std::to_string(step.a) + ": verdict recomputes to " + to_string(replayed.verdict)
            + ", recorded " + to_string(step.verdict);
    }
    return std::nullopt;
}

Step case_step(const std::string& hypothesis)
{
    return apply_rule("case", {}, 0, {{"hypothesis", hypothesis}});
}

Step split_step(const std::string& kind, std::int64_t cases)
{
    return apply_rule("split", {}, 0, {{"kind", kind}, {"cases", cases}});
}

}  // namespace k3
