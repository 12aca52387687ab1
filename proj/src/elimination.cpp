#include "k3/elimination.hpp"

#include "k3/fixed_locus.hpp"
#include "k3/rules.hpp"
#include "k3/singularity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k3 {

namespace {

// Picard number of X / <g^12> for signature 1.60, taken as an input fact.
constexpr std::int64_t quotient_picard_number = 6;

// Elliptic fibration on X: singular fibres are nodal or cuspidal, so
// a + 2b = 24 with a + b >= 12.
constexpr std::int64_t min_singular_fibres = 12;

Certificate node_for(const RuleContext& ctx)
{
    Certificate c;
    c.profile = ctx.profile ? ctx.profile->str() : "";
    c.signature = ctx.signature.str();
    return c;
}

// Appends a step; true when it closes the node.
bool record(Certificate& node, Step s)
{
    const bool dead = s.verdict == Verdict::contradiction;
    node.steps.push_back(std::move(s));
    return dead;
}

bool lemma60_applies(const OrbitProfile& p, const OrderSignature& sig)
{
    if (sig.order() != 60) {
        return false;
    }
    const std::string s = p.str();
    return s == "1^2 12^1 60^1" || s == "1^1 2^1 12^1 60^1";
}

bool symplectic_stage(Certificate& node, const RuleContext& ctx)
{
    const std::int64_t n = ctx.signature.nonsymplectic;
    if (record(node, apply_rule("R-symplectic", ctx, n))) {
        return true;
    }
    bool dead = false;
    for (std::int64_t a : divisors(n)) {
        if (a == n) {
            continue;
        }
        dead = record(node, apply_rule("R-subset", ctx, a, {{"form", std::string("finite")}, {"b", n}})) || dead;
        dead = record(node, apply_rule("R-pointsign", ctx, a, {{"b", n}})) || dead;
    }
    return dead;
}

void quotient_stage(Certificate& node, const RuleContext& ctx)
{
    const std::int64_t a = 12;
    const Values counts_in = {{"form", std::string("counts")}, {"rho", quotient_picard_number},
        {"total", lefschetz_euler(*ctx.profile, a)}, {"types", std::string("1/5(3,3)+1/5(2,4)")}};
    if (record(node, apply_rule("R-singularity", ctx, a, counts_in))) {
        return;
    }
    const auto assignments = fixed_point_assignments();
    node.steps.push_back(split_step("point-types", static_cast<std::int64_t>(assignments.size())));
    for (const auto& pa : assignments) {
        Certificate child = node_for(ctx);
        child.steps.push_back(case_step(pa.label));
        for (const auto& curve : pa.curves) {
            std::string types;
            for (const auto& t : curve.points) {
                types += (types.empty() ? "" : "+") + t.label;
            }
            record(child, apply_rule("R-singularity", ctx, a,
                {{"form", std::string("integrality")}, {"curve", curve.curve}, {"types", types}}));
        }
        node.branches.push_back(std::move(child));
    }
}

// Fix(g^30) = R + C10 with R a section and C10 a 3-section of the invariant
// elliptic fibration; split on the order of the action of g on its base.
void base_stage(Certificate& node, const RuleContext& ctx, bool quotient)
{
    const std::int64_t half = ctx.signature.order() / 2;
    const std::int64_t curve_genus = 10;
    const auto orders = divisors(half);
    node.steps.push_back(split_step("base-order", static_cast<std::int64_t>(orders.size())));
    for (std::int64_t l : orders) {
        Certificate child = node_for(ctx);
        child.steps.push_back(case_step("order of g on the base: " + std::to_string(l)));
        std::int64_t smax = 24;
        if (l < half) {
            Step t = apply_rule("R-base", ctx, l,
                {{"form", std::string("trivial")}, {"singular_min", min_singular_fibres}, {"curve_genus", curve_genus}});
            if (t.has("singular_max")) {
                smax = std::min(smax, t.integer("singular_max"));
            }
            if (record(child, std::move(t))) {
                node.branches.push_back(std::move(child));
                continue;
            }
        }
        Step orbits = apply_rule("R-base", ctx, 1,
            {{"form", std::string("orbits")}, {"order", l}, {"singular_min", min_singular_fibres}, {"singular_max", smax}});
        const std::int64_t ways = orbits.integer("count");
        const std::string feasible = orbits.text("feasible");
        if (record(child, std::move(orbits)) || ways != 1 || smax != min_singular_fibres) {
            node.branches.push_back(std::move(child));
            continue;
        }
        // Exactly min_singular_fibres singular fibres: solve for the types.
        const Step linear = apply_rule("R-linear", ctx, l,
            {{"equations", std::string("nodal + 2 cuspidal = 24; 2 + nodal + cuspidal = e(g^a)")},
                {"matrix", std::string("1,2;1,1")}, {"rhs", "24," + std::to_string(smax)},
                {"unknowns", std::string("nodal,cuspidal")}});
        if (record(child, linear)) {
            node.branches.push_back(std::move(child));
            continue;
        }
        // The fixed base points carry cuspidal fibres; each meets R once and
        // C10 only at its cusp. g^12 still moves the base, so its fixed
        // points lie over the same two base points.
        const std::int64_t points = 2 * std::stoll(feasible.substr(0, feasible.find('+')));
        bool dead = record(child, apply_rule("R-base", ctx, 1, {{"form", std::string("fixed")}, {"points", points}}));
        if (!dead && 12 % l != 0) {
            dead = record(child, apply_rule("R-base", ctx, 12, {{"form", std::string("fixed")}, {"points", points}}));
        }
        if (!dead && quotient) {
            quotient_stage(child, ctx);
        }
        node.branches.push_back(std::move(child));
    }
}

void curve_order_stage(Certificate& node, const RuleContext& ctx, const std::string& partition, std::int64_t genus,
    const FixedLocusModel& model)
{
    const std::int64_t half = ctx.signature.order() / 2;
    const auto exps = divisors(half);
    node.steps.push_back(split_step("curve-order", static_cast<std::int64_t>(exps.size())));
    for (std::int64_t k : exps) {
        Certificate child = node_for(ctx);
        child.steps.push_back(case_step("order of g on the genus " + std::to_string(genus) + " curve: " + std::to_string(k)));
        bool dead = false;
        for (auto it = exps.rbegin(); it != exps.rend() && !dead; ++it) {
            const std::int64_t a = *it;
            if (a == half) {
                continue;
            }
            dead = record(child, apply_rule("R-subset", ctx, a,
                {{"form", std::string("curve")}, {"partition", partition}, {"genus", genus}, {"k", k}}));
            if (!dead && a % k != 0 && is_prime(k / gcd(k, a))) {
                dead = record(child, apply_rule("R-rh", ctx, a, {{"partition", partition}, {"genus", genus}, {"k", k}}));
            }
        }
        for (std::int64_t a : exps) {
            for (std::int64_t b : exps) {
                if (dead || a >= b || b == half || b % a != 0 || a % k == 0 || b % k == 0) {
                    continue;
                }
                dead = record(child, apply_rule("R-subset", ctx, a,
                    {{"form", std::string("nested")}, {"partition", partition}, {"k", k}, {"b", b}}));
            }
        }
        if (!dead && lemma60_applies(*ctx.profile, ctx.signature) && model.rational_curves() == 1 && genus == 10) {
            base_stage(child, ctx, ctx.signature.symplectic == 1);
        }
        node.branches.push_back(std::move(child));
    }
}

bool involution_applies(const OrderSignature& sig)
{
    const std::int64_t n = sig.order();
    return n % 2 == 0 && mod(n / 2, sig.nonsymplectic) != 0;
}

void involution_stage(Certificate& node, const RuleContext& ctx)
{
    const OrbitProfile& p = *ctx.profile;
    const std::int64_t half = ctx.signature.order() / 2;
    record(node, apply_rule("R-euler", ctx, half));
    if (record(node, apply_rule("R-structure", ctx, half))) {
        return;
    }
    const auto models = decompose_fixed_locus(lefschetz_euler(p, half), invariant_dim(p, half), false, true);
    node.steps.push_back(split_step("fixed-locus", static_cast<std::int64_t>(models.size())));
    for (const auto& model : models) {
        Certificate child = node_for(ctx);
        child.steps.push_back(case_step("Fix(g^" + std::to_string(half) + ") = " + model.str()));
        const std::int64_t genus = model.irrational_curves() == 0 ? -1 : model.curves.back().genus;
        const auto partitions = orbit_partitions(model.rational_curves(), half);
        child.steps.push_back(split_step("rational-orbits", static_cast<std::int64_t>(partitions.size())));
        for (const auto& parts : partitions) {
            const std::string partition = partition_string(parts);
            Certificate leaf = node_for(ctx);
            leaf.steps.push_back(case_step("orbit lengths on rational curves: (" + partition + ")"));
            bool dead = false;
            const auto exps = divisors(half);
            for (auto it = exps.rbegin(); it != exps.rend() && !dead; ++it) {
                if (*it != half) {
                    dead = record(leaf, apply_rule("R-p1", ctx, *it, {{"partition", partition}, {"genus", genus}}));
                }
            }
            if (!dead && genus >= 0) {
                curve_order_stage(leaf, ctx, partition, genus, model);
            }
            child.branches.push_back(std::move(leaf));
        }
        node.branches.push_back(std::move(child));
    }
}

void finish(Certificate& cert)
{
    sort_branches(cert);
    finalize_status(cert);
}

Certificate with_case(Certificate cert, const std::string& hypothesis, const std::vector<Step>& extra = {})
{
    std::vector<Step> steps = {case_step(hypothesis)};
    steps.insert(steps.end(), extra.begin(), extra.end());
    steps.insert(steps.end(), cert.steps.begin(), cert.steps.end());
    cert.steps = std::move(steps);
    return cert;
}

std::vector<OrbitProfile> family_members(const std::vector<std::vector<std::int64_t>>& bases, std::int64_t sign_slots)
{
    std::vector<OrbitProfile> out;
    for (const auto& base : bases) {
        for (std::int64_t minus = 0; minus <= sign_slots; ++minus) {
            OrbitProfile p;
            p.add(1).add(60);
            for (std::int64_t d : base) {
                p.add(d);
            }
            p.add(1, sign_slots - minus).add(2, minus);
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.str() < y.str(); });
    return out;
}

const OrderSignature sig160{1, 60};

Certificate family_certificate(const ClaimFamily& fam)
{
    Certificate root;
    root.signature = sig160.str();
    root.steps.push_back(split_step("family", static_cast<std::int64_t>(fam.members.size())));
    for (const auto& p : fam.members) {
        const RuleContext ctx{p, sig160};
        std::vector<Step> expected;
        for (auto [a, e] : fam.expected) {
            expected.push_back(apply_rule("R-euler", ctx, a, {{"expected", e}}));
        }
        for (auto [a, e] : fam.expected_max) {
            expected.push_back(apply_rule("R-euler", ctx, a, {{"expected_max", e}}));
        }
        const auto extra = fam.member_expected.find(p.str());
        if (extra != fam.member_expected.end()) {
            for (auto [a, e] : extra->second) {
                expected.push_back(apply_rule("R-euler", ctx, a, {{"expected", e}}));
            }
        }
        root.branches.push_back(with_case(eliminate(p, sig160), "[g*] = " + p.str(), expected));
    }
    return root;
}

Certificate lemma60_certificate()
{
    Certificate root;
    root.signature = sig160.str();
    const std::vector<OrbitProfile> members = family_members({{12}}, 1);
    root.steps.push_back(split_step("sign", static_cast<std::int64_t>(members.size())));
    for (const auto& p : members) {
        const RuleContext ctx{p, sig160};
        Certificate c = node_for(ctx);
        c.steps.push_back(case_step("[g*] = " + p.str()));
        record(c, apply_rule("R-euler", ctx, 30, {{"expected", std::int64_t{-16}}}));
        record(c, apply_rule("R-euler", ctx, 10, {{"expected", std::int64_t{14}}}));
        record(c, apply_rule("R-euler", ctx, 12, {{"expected", std::int64_t{4}}}));
        record(c, apply_rule("R-euler", ctx, 5));
        record(c, apply_rule("R-euler", ctx, 1));
        record(c, apply_rule("R-structure", ctx, 30));
        const auto models = decompose_fixed_locus(lefschetz_euler(p, 30), invariant_dim(p, 30), false, true);
        c.steps.push_back(split_step("fixed-locus", static_cast<std::int64_t>(models.size())));
        for (FixedLocusModel model : models) {
            Certificate child = node_for(ctx);
            if (model.rational_curves() == 0) {
                child.steps.push_back(case_step("Fix(g^30) = " + model.str()));
                record(child, apply_rule("R-rh", ctx, 10, {{"locus", std::string("whole")}, {"genus", model.curves.front().genus}}));
            } else {
                model.curves[0].role = CurveRole::section;
                model.curves[1].role = CurveRole::multisection;
                model.curves[1].section_degree = 3;
                child.steps.push_back(case_step("Fix(g^30) = " + model.str()));
                base_stage(child, ctx, false);
            }
            c.branches.push_back(std::move(child));
        }
        root.branches.push_back(std::move(c));
    }
    return root;
}

}  // namespace

Certificate eliminate(const OrbitProfile& profile, const OrderSignature& signature)
{
    if (profile.dimension() != k3_b2) {
        throw std::invalid_argument("eliminate: profile must have dimension 22, got " + profile.str());
    }
    if (profile.exponent() != signature.order()) {
        throw std::invalid_argument("eliminate: eigenvalue orders of " + profile.str() + " do not generate order "
            + std::to_string(signature.order()));
    }
    const RuleContext ctx{profile, signature};
    Certificate cert = node_for(ctx);
    bool dead = false;
    if (signature.symplectic > 1) {
        dead = symplectic_stage(cert, ctx);
    }
    if (!dead && involution_applies(signature)) {
        involution_stage(cert, ctx);
    }
    finish(cert);
    return cert;
}

Certificate eliminate_all(const OrderSignature& signature)
{
    const auto profiles = enumerate_profiles(signature);
    Certificate cert;
    cert.signature = signature.str();
    cert.steps.push_back(split_step("profile", static_cast<std::int64_t>(profiles.size())));
    for (const auto& p : profiles) {
        cert.branches.push_back(with_case(eliminate(p, signature), "[g*] = " + p.str()));
    }
    finish(cert);
    return cert;
}

const std::vector<ClaimFamily>& claim_families()
{
    static const std::vector<ClaimFamily> families = [] {
        std::vector<ClaimFamily> f;
        f.push_back({"claim1", family_members({{10}, {5}}, 1), {{30, -8}, {2, 1}}, {{5, 8}}, {}});
        f.push_back({"claim2", family_members({{6}, {3}}, 3), {{30, -8}, {2, 3}, {10, 13}}, {{5, 7}}, {}});
        f.push_back({"claim3", family_members({{6, 6}, {3, 3}, {6, 3}}, 1), {{30, -8}, {2, 0}, {10, 10}}, {},
            {{"1^1 2^1 3^2 60^1", {{1, 0}, {15, 6}, {5, 0}}}}});
        f.push_back({"claim4", family_members({{4, 6}, {4, 3}}, 1), {{30, -12}, {2, -1}}, {}, {}});
        f.push_back({"claim5", family_members({{4, 4}}, 1), {{30, -16}, {2, -2}}, {}, {}});
        f.push_back({"claim6", family_members({{4}}, 3), {{30, -12}, {2, 2}, {10, 12}}, {}, {}});
        f.push_back({"claim7", family_members({{}}, 5), {{30, -8}, {2, 6}, {10, 16}}, {}, {}});
        f.push_back({"zeta12", family_members({{12}}, 1), {{30, -16}, {10, 14}, {12, 4}}, {},
            {{"1^2 12^1 60^1", {{1, 4}}}, {"1^1 2^1 12^1 60^1", {{1, 2}, {5, 2}}}}});
        return f;
    }();
    return families;
}

std::vector<std::string> replay_ids()
{
    return {"claim1", "claim2", "claim3", "claim4", "claim5", "claim6", "claim7", "claim8", "lemma512", "lemma60",
        "lemma160"};
}

Certificate replay(const std::string& id)
{
    Certificate cert;
    const auto& fams = claim_families();
    const auto fam = std::find_if(fams.begin(), fams.end(), [&](const ClaimFamily& f) { return f.id == id; });
    if (fam != fams.end() && id != "zeta12") {
        cert = family_certificate(*fam);
    } else if (id == "claim8") {
        const OrbitProfile p = OrbitProfile::parse("1^2 12^1 60^1");
        const RuleContext ctx{p, sig160};
        cert = node_for(ctx);
        record(cert, apply_rule("R-euler", ctx, 12, {{"expected", std::int64_t{4}}}));
        quotient_stage(cert, ctx);
    } else if (id == "lemma60") {
        cert = lemma60_certificate();
    } else if (id == "lemma512") {
        return eliminate_all(OrderSignature{5, 12});
    } else if (id == "lemma160") {
        std::set<std::string> covered;
        for (const auto& f : fams) {
            for (const auto& p : f.members) {
                covered.insert(p.str());
            }
        }
        std::set<std::string> enumerated;
        for (const auto& p : enumerate_profiles(sig160)) {
            enumerated.insert(p.str());
        }
        if (covered != enumerated) {
            throw std::logic_error("lemma160: claim families do not cover the enumerated profiles");
        }
        cert.signature = sig160.str();
        cert.steps.push_back(split_step("claim", static_cast<std::int64_t>(fams.size())));
        for (const auto& f : fams) {
            cert.branches.push_back(with_case(family_certificate(f), f.id));
        }
    } else {
        throw std::invalid_argument("unknown replay id '" + id + "'");
    }
    finish(cert);
    return cert;
}

namespace {

void check_node(const Certificate& c, const std::string& inherited, const std::string& path, CheckReport& report)
{
    auto error = [&](const std::string& what) {
        report.ok = false;
        report.errors.push_back((path.empty() ? std::string("root") : path) + ": " + what);
    };
    RuleContext ctx;
    const std::string sig_text = c.signature.empty() ? inherited : c.signature;
    try {
        ctx.signature = OrderSignature::parse(sig_text);
        if (!c.profile.empty()) {
            ctx.profile = OrbitProfile::parse(c.profile);
        }
    } catch (const std::exception& e) {
        error(e.what());
        return;
    }
    const Step* split = nullptr;
    const auto& reg = rule_registry();
    for (const auto& s : c.steps) {
        ++report.steps;
        const auto rule = reg.find(s.rule);
        if (rule != reg.end() && rule->second.needs_profile && !ctx.profile) {
            error(s.rule + " used on a node without a profile");
            continue;
        }
        if (auto problem = recheck_step(ctx, s)) {
            error(*problem);
        }
        if (s.rule == "split") {
            if (split) {
                error("more than one split");
            }
            split = &s;
        }
    }
    if (split) {
        try {
            if (split->integer("cases") != static_cast<std::int64_t>(c.branches.size())) {
                error("split announces " + std::to_string(split->integer("cases")) + " cases, found "
                    + std::to_string(c.branches.size()));
            }
        } catch (const std::exception& e) {
            error(e.what());
        }
    } else if (!c.branches.empty()) {
        error("branches without a split");
    }
    bool all_eliminated = !c.branches.empty();
    for (std::size_t i = 0; i < c.branches.size(); ++i) {
        const auto& b = c.branches[i];
        if (b.hypothesis().empty()) {
            error("branch " + std::to_string(i) + " does not start with a case");
        }
        if (i > 0 && c.branches[i - 1].hypothesis() > b.hypothesis()) {
            error("branches out of order at " + std::to_string(i));
        }
        all_eliminated = all_eliminated && b.status == Status::eliminated;
        check_node(b, sig_text, path + "/" + b.hypothesis(), report);
    }
    const Status expected = c.has_contradiction() || all_eliminated ? Status::eliminated : Status::survives;
    if (expected != c.status) {
        error("status recorded as " + to_string(c.status) + ", tree gives " + to_string(expected));
    }
}

}  // namespace

CheckReport check_certificate(const Certificate& cert)
{
    CheckReport report;
    check_node(cert, cert.signature, "", report);
    return report;
}

}  // namespace k3
