#include "k3/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k3 {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::ok:
        return "ok";
    case Verdict::contradiction:
        return "contradiction";
    case Verdict::assume:
        return "assume";
    case Verdict::mismatch:
        return "mismatch";
    }
    return "?";
}

std::string to_string(Status s)
{
    return s == Status::eliminated ? "eliminated" : "survives";
}

Verdict parse_verdict(const std::string& text)
{
    for (Verdict v : {Verdict::ok, Verdict::contradiction, Verdict::assume, Verdict::mismatch}) {
        if (to_string(v) == text) {
            return v;
        }
    }
    throw std::invalid_argument("unknown verdict '" + text + "'");
}

Status parse_status(const std::string& text)
{
    if (text == "eliminated") {
        return Status::eliminated;
    }
    if (text == "survives") {
        return Status::survives;
    }
    throw std::invalid_argument("unknown status '" + text + "'");
}

std::string to_string(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(v);
}

std::int64_t Step::integer(const std::string& key) const
{
    const auto it = values.find(key);
    if (it == values.end() || !std::holds_alternative<std::int64_t>(it->second)) {
        throw std::invalid_argument(rule + ": missing integer value '" + key + "'");
    }
    return std::get<std::int64_t>(it->second);
}

std::string Step::text(const std::string& key) const
{
    const auto it = values.find(key);
    if (it == values.end() || !std::holds_alternative<std::string>(it->second)) {
        throw std::invalid_argument(rule + ": missing text value '" + key + "'");
    }
    return std::get<std::string>(it->second);
}

std::string Certificate::hypothesis() const
{
    if (!steps.empty() && steps.front().rule == "case" && steps.front().has("hypothesis")) {
        return steps.front().text("hypothesis");
    }
    return "";
}

bool Certificate::has_contradiction() const
{
    return std::any_of(steps.begin(), steps.end(), [](const Step& s) { return s.verdict == Verdict::contradiction; });
}

bool Certificate::has_mismatch() const
{
    bool found = false;
    visit(*this, [&](const Certificate& c) {
        for (const auto& s : c.steps) {
            found = found || s.verdict == Verdict::mismatch;
        }
    });
    return found;
}

void finalize_status(Certificate& cert)
{
    bool all_branches = !cert.branches.empty();
    for (auto& b : cert.branches) {
        finalize_status(b);
        all_branches = all_branches && b.status == Status::eliminated;
    }
    cert.status = cert.has_contradiction() || all_branches ? Status::eliminated : Status::survives;
}

void sort_branches(Certificate& cert)
{
    for (auto& b : cert.branches) {
        sort_branches(b);
    }
    std::stable_sort(cert.branches.begin(), cert.branches.end(),
        [](const Certificate& x, const Certificate& y) { return x.hypothesis() < y.hypothesis(); });
}

namespace {

// Returns true when some surviving descendant with a profile was recorded.
bool collect_survivors(const Certificate& cert, std::set<std::string>& out)
{
    if (cert.status != Status::survives) {
        return false;
    }
    bool below = false;
    for (const auto& b : cert.branches) {
        below = collect_survivors(b, out) || below;
    }
    if (!below && !cert.profile.empty()) {
        out.insert(cert.profile);
        return true;
    }
    return below;
}

}  // namespace

std::vector<std::string> survivors(const Certificate& cert)
{
    std::set<std::string> out;
    collect_survivors(cert, out);
    return {out.begin(), out.end()};
}

std::size_t count_steps(const Certificate& cert)
{
    std::size_t n = 0;
    visit(cert, [&](const Certificate& c) { n += c.steps.size(); });
    return n;
}

nlohmann::json to_json(const Certificate& cert)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : cert.steps) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto& [k, v] : s.values) {
            std::visit([&](const auto& x) { values[k] = x; }, v);
        }
        nlohmann::json step = {{"rule", s.rule}, {"a", s.a}, {"values", values}, {"verdict", to_string(s.verdict)}};
        if (!s.reason.empty()) {
            step["reason"] = s.reason;
        }
        steps.push_back(std::move(step));
    }
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& b : cert.branches) {
        branches.push_back(to_json(b));
    }
    return {{"profile", cert.profile}, {"signature", cert.signature}, {"status", to_string(cert.status)},
        {"steps", steps}, {"branches", branches}};
}

Certificate certificate_from_json(const nlohmann::json& doc)
{
    try {
        Certificate cert;
        cert.profile = doc.at("profile").get<std::string>();
        cert.signature = doc.value("signature", std::string());
        cert.status = parse_status(doc.at("status").get<std::string>());
        for (const auto& js : doc.at("steps")) {
            Step s;
            s.rule = js.at("rule").get<std::string>();
            s.a = js.at("a").get<std::int64_t>();
            s.verdict = parse_verdict(js.at("verdict").get<std::string>());
            s.reason = js.value("reason", std::string());
            for (const auto& [k, v] : js.at("values").items()) {
                if (v.is_number_integer()) {
                    s.values[k] = v.get<std::int64_t>();
                } else if (v.is_string()) {
                    s.values[k] = v.get<std::string>();
                } else {
                    throw std::invalid_argument("value '" + k + "' is neither an integer nor a string");
                }
            }
            cert.steps.push_back(std::move(s));
        }
        for (const auto& jb : doc.at("branches")) {
            cert.branches.push_back(certificate_from_json(jb));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace k3
