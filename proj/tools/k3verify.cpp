#include "k3/elimination.hpp"
#include "k3/point_count.hpp"
#include "k3/weierstrass.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

json document()
{
    json d;
    d["tool_version"] = K3_TOOL_VERSION;
    return d;
}

void emit(const json& doc, const std::string& out)
{
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) {
        throw std::invalid_argument("cannot write " + out);
    }
    f << doc.dump(2) << "\n";
}

json check_json(const k3::CheckReport& r)
{
    return {{"ok", r.ok}, {"steps", r.steps}, {"errors", r.errors}};
}

template <class Scalar>
k3::BinaryForm<Scalar> parse_form(const std::string& text, std::int64_t degree, std::uint32_t p)
{
    std::vector<Scalar> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if constexpr (std::is_same_v<Scalar, k3::Rational>) {
            c.push_back(k3::parse_rational(item));
        } else {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument("bad coefficient '" + item + "'");
            }
            c.emplace_back(v, p);
        }
    }
    if (c.empty()) {
        throw std::invalid_argument("empty coefficient list");
    }
    return k3::BinaryForm<Scalar>(degree, std::move(c));
}

json fibration_json(const k3::FibrationReport& r)
{
    json d = document();
    d["field"] = r.field;
    d["euler_sum"] = r.euler_sum;
    d["degree_sum"] = r.degree_sum;
    d["geometric_fibers"] = r.geometric_fibers;
    d["unsupported"] = r.unsupported;
    json fibers = json::array();
    auto val = [](const std::optional<std::int64_t>& v) { return v ? json(*v) : json("inf"); };
    for (const auto& f : r.fibers) {
        fibers.push_back({{"place", f.place}, {"place_degree", f.place_degree}, {"multiplicity", f.multiplicity},
            {"v_a", val(f.v_a)}, {"v_b", val(f.v_b)}, {"kodaira_type", f.kodaira_type},
            {"local_euler", f.local_euler}});
    }
    d["fibers"] = fibers;
    return d;
}

json checks_json(const std::vector<k3::ProbeCheck>& checks)
{
    json out = json::array();
    for (const auto& c : checks) {
        out.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"},
            {"kind", c.asserted ? "assertion" : "expectation"}, {"detail", c.detail}});
    }
    return out;
}

int run_profiles_enumerate(const std::string& signature)
{
    const auto sig = k3::OrderSignature::parse(signature);
    const auto profiles = k3::enumerate_profiles(sig);
    json d = document();
    d["signature"] = sig.str();
    d["count"] = profiles.size();
    json list = json::array();
    for (const auto& p : profiles) {
        list.push_back(p.str());
    }
    d["profiles"] = list;
    emit(d, "");
    std::cerr << profiles.size() << " profiles for signature " << sig.str() << "\n";
    return exit_ok;
}

int run_profiles_eliminate(const std::string& signature, const std::string& out)
{
    const auto sig = k3::OrderSignature::parse(signature);
    const k3::Certificate cert = k3::eliminate_all(sig);
    const k3::CheckReport check = k3::check_certificate(cert);
    json d = document();
    d.update(k3::to_json(cert));
    d["survivors"] = k3::survivors(cert);
    d["check"] = check_json(check);
    emit(d, out);
    std::cerr << "signature " << sig.str() << ": " << k3::survivors(cert).size() << " survivor(s), "
              << check.steps << " steps, check " << (check.ok ? "ok" : "FAILED") << "\n";
    return check.ok ? exit_ok : exit_failed;
}

int run_replay(const std::string& lemma, const std::string& check_file)
{
    json d = document();
    if (check_file.empty()) {
        const k3::Certificate cert = k3::replay(lemma);
        const k3::CheckReport check = k3::check_certificate(cert);
        d.update(k3::to_json(cert));
        d["lemma"] = lemma;
        d["survivors"] = k3::survivors(cert);
        d["check"] = check_json(check);
        emit(d, "");
        std::cerr << lemma << ": " << k3::to_string(cert.status) << ", " << check.steps << " steps, check "
                  << (check.ok ? "ok" : "FAILED") << "\n";
        return check.ok && !cert.has_mismatch() ? exit_ok : exit_failed;
    }
    std::ifstream f(check_file);
    if (!f) {
        throw std::invalid_argument("cannot read " + check_file);
    }
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("not JSON: ") + e.what());
    }
    const k3::Certificate cert = k3::certificate_from_json(doc);
    const k3::CheckReport check = k3::check_certificate(cert);
    bool ok = check.ok;
    d["file"] = check_file;
    d["check"] = check_json(check);
    if (!lemma.empty()) {
        const bool same = k3::replay(lemma) == cert;
        d["lemma"] = lemma;
        d["matches_replay"] = same;
        ok = ok && same;
    }
    emit(d, "");
    std::cerr << check_file << ": " << check.steps << " steps re-executed, " << check.errors.size() << " error(s)\n";
    for (const auto& e : check.errors) {
        std::cerr << "  " << e << "\n";
    }
    return ok ? exit_ok : exit_failed;
}

int run_fibration(const std::string& a, const std::string& b, const std::string& field_text)
{
    const k3::BaseField field = k3::BaseField::parse(field_text);
    k3::FibrationReport rep;
    if (field.p == 0) {
        rep = k3::classify_fibers(parse_form<k3::Rational>(a, 8, 0), parse_form<k3::Rational>(b, 12, 0));
    } else {
        rep = k3::classify_fibers(parse_form<k3::Fp>(a, 8, field.p), parse_form<k3::Fp>(b, 12, field.p), field.p);
    }
    emit(fibration_json(rep), "");
    std::cerr << rep.fibers.size() << " places, " << rep.geometric_fibers << " geometric fibres, euler sum "
              << rep.euler_sum << "\n";
    return rep.degree_sum == 24 ? exit_ok : exit_failed;
}

int run_invariant_forms(std::int64_t degree, std::int64_t weight, std::int64_t target, std::int64_t order)
{
    const auto js = k3::invariant_form_space(degree, weight, target, order);
    json d = document();
    d["degree"] = degree;
    d["weight"] = weight;
    d["target"] = target;
    d["order"] = order;
    d["exponents"] = js;
    json monomials = json::array();
    for (auto j : js) {
        monomials.push_back("t0^" + std::to_string(degree - j) + " t1^" + std::to_string(j));
    }
    d["monomials"] = monomials;
    d["dimension"] = js.size();
    emit(d, "");
    return exit_ok;
}

int run_count_points(std::uint32_t p, int ext, bool fermat)
{
    const k3::FieldSpec field = k3::FieldSpec::make(p, ext);
    const k3::CountReport rep = fermat ? k3::count_fermat_quartic(field) : k3::count_points(field);
    json d = document();
    d["surface"] = rep.surface;
    d["p"] = field.p;
    d["ext"] = field.ext;
    if (field.ext == 2) {
        d["nu"] = field.nu;
    }
    d["q"] = rep.q;
    d["N"] = rep.n;
    d["trace"] = rep.trace;
    json fibers = json::array();
    for (const auto& f : rep.fibers) {
        fibers.push_back({{"t", f.t}, {"count", f.count}, {"kind", f.kind}});
    }
    if (!fermat) {
        d["fibers"] = fibers;
    }
    d["checks"] = checks_json(rep.checks);
    d["status"] = rep.ok() ? "PASS" : "FAIL";
    emit(d, "");
    std::cerr << rep.surface << " over F_" << rep.q << ": N = " << rep.n << ", trace = " << rep.trace << "\n";
    return rep.ok() ? exit_ok : exit_failed;
}

int run_orders(std::int64_t p, std::int64_t max)
{
    if (p != 0 && !k3::is_prime(p)) {
        throw std::invalid_argument("--p must be 0 or a prime");
    }
    if (max < 1) {
        throw std::invalid_argument("--max must be positive");
    }
    std::vector<std::int64_t> feasible;
    for (std::int64_t n = 1; n <= max; ++n) {
        if (k3::nonsymplectic_order_feasible(p, n)) {
            feasible.push_back(n);
        }
    }
    json d = document();
    d["p"] = p;
    d["max"] = max;
    d["feasible"] = feasible;
    d["max_feasible"] = feasible.empty() ? json(nullptr) : json(feasible.back());
    emit(d, "");
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of K3 automorphism classification steps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(K3_TOOL_VERSION));

    auto* profiles = app.add_subcommand("profiles", "Eigenvalue profiles on H^2");
    profiles->require_subcommand(1);
    std::string signature, out;
    auto* enumerate = profiles->add_subcommand("enumerate", "List candidate profiles");
    enumerate->add_option("--signature", signature, "m.n")->required();
    auto* eliminate = profiles->add_subcommand("eliminate", "Eliminate every candidate profile");
    eliminate->add_option("--signature", signature, "m.n")->required();
    eliminate->add_option("--out", out, "write the certificate here");

    auto* replay = app.add_subcommand("replay", "Replay or check an elimination certificate");
    std::string lemma, check_file;
    auto* lemma_opt = replay->add_option("--lemma", lemma, "claim1..claim8, lemma60, lemma512, lemma160");
    replay->add_option("--check", check_file, "certificate JSON to re-execute");

    auto* fibration = app.add_subcommand("fibration", "Weierstrass fibrations");
    fibration->require_subcommand(1);
    std::string form_a, form_b, field = "Q";
    auto* analyze = fibration->add_subcommand("analyze", "Classify singular fibres");
    analyze->add_option("--a", form_a, "coefficients of A, index = power of t1")->required();
    analyze->add_option("--b", form_b, "coefficients of B, index = power of t1")->required();
    analyze->add_option("--field", field, "Q or Fp:<p>");

    auto* forms = app.add_subcommand("invariant-forms", "Monomials of equivariant binary forms");
    std::int64_t degree = 0, weight = 0, target = 0, order = 1;
    forms->add_option("--degree", degree)->required();
    forms->add_option("--weight", weight)->required();
    forms->add_option("--target", target)->required();
    forms->add_option("--order", order)->required();

    auto* count = app.add_subcommand("count-points", "Point counts over F_p and F_p^2");
    std::uint32_t p = 0;
    int ext = 1;
    bool fermat = false;
    count->add_option("--p", p)->required();
    count->add_option("--ext", ext)->required();
    count->add_flag("--fermat", fermat, "count the Fermat quartic instead of X60");

    auto* orders = app.add_subcommand("orders", "Feasible non-symplectic orders");
    std::int64_t char_p = 0, max = 0;
    orders->add_option("--p", char_p, "prime, or 0")->required();
    orders->add_option("--max", max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return exit_invalid;
    }

    try {
        if (enumerate->parsed()) {
            return run_profiles_enumerate(signature);
        }
        if (eliminate->parsed()) {
            return run_profiles_eliminate(signature, out);
        }
        if (replay->parsed()) {
            if (lemma_opt->count() == 0 && check_file.empty()) {
                throw std::invalid_argument("replay needs --lemma or --check");
            }
            return run_replay(lemma, check_file);
        }
        if (analyze->parsed()) {
            return run_fibration(form_a, form_b, field);
        }
        if (forms->parsed()) {
            return run_invariant_forms(degree, weight, target, order);
        }
        if (count->parsed()) {
            return run_count_points(p, ext, fermat);
        }
        if (orders->parsed()) {
            return run_orders(char_p, max);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: value out of range: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
