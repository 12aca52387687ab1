#pragma once

// Named inference rules of the elimination engine.
//
// A rule is evaluated from the profile, the signature, an exponent a and a
// small set of recorded inputs; everything else in a step is recomputed.
// The certificate checker replays each step this way and compares.

#include "k3/certificate.hpp"
#include "k3/cyclotomic.hpp"
#include "k3/profile_space.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3 {

struct RuleContext {
    std::optional<OrbitProfile> profile;  // empty for family nodes
    OrderSignature signature;

    const OrbitProfile& require_profile(const std::string& rule) const;
};

struct Rule {
    std::string name;
    std::vector<std::string> inputs;
    bool needs_profile = true;
    std::function<Step(const RuleContext&, std::int64_t, const Values&)> evaluate;
};

const std::map<std::string, Rule>& rule_registry();

/// Evaluates a registered rule. Throws std::invalid_argument for an unknown
/// rule or a rule applied outside its hypotheses.
Step apply_rule(const std::string& rule, const RuleContext& ctx, std::int64_t a, const Values& inputs = {});

/// Replays one recorded step; returns a description of the first
/// discrepancy, or nullopt when the step reproduces exactly.
std::optional<std::string> recheck_step(const RuleContext& ctx, const Step& step);

Step case_step(const std::string& hypothesis);
Step split_step(const std::string& kind, std::int64_t cases);

std::string partition_string(const std::vector<std::int64_t>& parts);
std::vector<std::int64_t> parse_partition(const std::string& text);

}  // namespace k3
