#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace k3 {

using Value = std::variant<std::int64_t, std::string>;
using Values = std::map<std::string, Value>;

enum class Verdict { ok, contradiction, assume, mismatch };
enum class Status { eliminated, survives };

std::string to_string(Verdict v);
std::string to_string(Status s);
Verdict parse_verdict(const std::string& text);
Status parse_status(const std::string& text);

std::string to_string(const Value& v);

struct Step {
    std::string rule;
    std::int64_t a = 0;  // exponent of g the rule is about; 0 when none
    Values values;
    Verdict verdict = Verdict::ok;
    std::string reason;

    std::int64_t integer(const std::string& key) const;
    std::string text(const std::string& key) const;
    bool has(const std::string& key) const { return values.count(key) != 0; }

    friend bool operator==(const Step&, const Step&) = default;
};

/// A node of the elimination tree. Nodes spanning several profiles (family
/// splits) carry an empty profile; every branch starts with a "case" step.
struct Certificate {
    std::string profile;
    std::string signature;
    Status status = Status::survives;
    std::vector<Step> steps;
    std::vector<Certificate> branches;

    /// The hypothesis of the leading case step, or "" at the root.
    std::string hypothesis() const;
    bool has_contradiction() const;
    bool has_mismatch() const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Sets every status bottom-up: a node is eliminated when one of its own
/// steps is a contradiction, or when it has branches and all are eliminated.
void finalize_status(Certificate& cert);

/// Sorts branches by hypothesis, recursively.
void sort_branches(Certificate& cert);

/// Profiles of surviving nodes that have no surviving descendant carrying a
/// profile, deduplicated and sorted.
std::vector<std::string> survivors(const Certificate& cert);

/// Depth-first visit of every node.
template<class F>
void visit(const Certificate& cert, F&& f)
{
    f(cert);
    for (const auto& b : cert.branches) {
        visit(b, f);
    }
}

std::size_t count_steps(const Certificate& cert);

nlohmann::json to_json(const Certificate& cert);
/// Throws std::invalid_argument on a document of the wrong shape.
Certificate certificate_from_json(const nlohmann::json& doc);

}  // namespace k3
