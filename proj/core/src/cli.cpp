#include "ellpic/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellpic/certificate.hpp"
#include "ellpic/parse.hpp"

namespace ellpic {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

Json group_json(const FgAbelianGroup& g) {
    Json j;
    j["rank"] = g.free_rank;
    Json t = Json::array();
    for (const auto& d : g.invariant_factors) t.push_back(d.str());
    j["torsion"] = t;
    j["rendered"] = g.str();
    return j;
}

std::string point_str(const FqPoint& P) {
    if (P.infinity) return "O";
    return "(" + P.x.str() + "," + P.y.str() + ")";
}

struct CommonArgs {
    std::string curve;
    long q = 5;
    int degree_bound = 2;       // default per the class-group search design
    int norm_budget = -1;       // -1: 2 * degree_bound + 6
    long long max_candidates = 400'000'000;
    std::string format = "text";

    bool json() const { return format == "json"; }
    int budget() const { return norm_budget > 0 ? norm_budget : 2 * degree_bound + 6; }
    FqCurve make_curve() const { return parse_curve(curve, field_for_order(q)); }
};

int run_mw(const CommonArgs& c, std::ostream& out) {
    FqCurve E = c.make_curve();
    MWGroup G = group_structure(E);
    long trace = c.q + 1 - G.point_count;
    double s = 2 * std::sqrt(static_cast<double>(c.q));
    bool hasse = std::llabs(trace) <= static_cast<long long>(s);

    Json j;
    j["command"] = "mw";
    j["q"] = c.q;
    j["curve"] = c.curve;
    j["point_count"] = G.point_count;
    j["trace"] = trace;
    j["hasse_ok"] = hasse;
    j["group"] = group_json(G.group);
    Json gens = Json::array();
    for (const auto& g : G.generators) gens.push_back(point_str(g));
    j["generators"] = gens;
    j["j_invariant"] = E.j_invariant().str();

    if (c.json()) {
        out << j.dump(2) << "\n";
    } else {
        out << "#E(F_" << c.q << ") = " << G.point_count << ", trace = " << trace
            << (hasse ? " (Hasse bound ok)" : " (HASSE BOUND VIOLATED)") << "\n";
        out << "group: " << G.group.str() << "\n";
        out << "generators:";
        for (const auto& g : G.generators) out << " " << point_str(g);
        out << "\n";
        out << "j-invariant: " << E.j_invariant().str() << "\n";
    }
    return hasse ? kOk : kMathFailure;
}

int run_picard(const CommonArgs& c, const std::string& oracle, std::ostream& out) {
    FqCurve E = c.make_curve();
    HarvestOptions opts;
    opts.max_candidates = c.max_candidates;

    Json j;
    j["command"] = "picard";
    j["q"] = c.q;
    j["curve"] = c.curve;

    bool want_ideal = oracle == "both" || oracle == "ideal";
    bool want_law = oracle == "both" || oracle == "grouplaw";

    std::string ideal_str, law_str;
    bool stable = true;
    FgAbelianGroup ideal_group, law_group;
    if (want_ideal) {
        auto r = picard_bruteforce(E, c.degree_bound, c.budget(), opts);
        ideal_group = r.group;
        stable = r.stable;
        ideal_str = r.group.str();
        j["ideal_class_group"] = group_json(r.group);
        j["stable"] = r.stable;
        j["generators"] = static_cast<long>(r.generators.size());
        j["relations"] = r.relations;
    }
    if (want_law) {
        MWGroup G = group_structure(E);
        law_group = G.group;
        law_str = G.group.str();
        j["mordell_weil"] = group_json(G.group);
        j["point_count"] = G.point_count;
    }

    int code = kOk;
    std::string verdict;
    if (oracle == "both") {
        if (!stable) {
            verdict = "INCONCLUSIVE (relation harvest not stable; raise --norm-budget)";
            code = kBudget;
        } else if (is_isomorphic(ideal_group, law_group)) {
            verdict = "ISOMORPHIC";
        } else {
            verdict = "MISMATCH";
            code = kMathFailure;
        }
        j["verdict"] = verdict;
    }

    if (c.json()) {
        out << j.dump(2) << "\n";
    } else {
        if (want_ideal)
            out << "ideal-theoretic class group: " << ideal_str << (stable ? " (stable)" : " (UNSTABLE)")
                << "\n";
        if (want_law) out << "group-law Mordell-Weil:      " << law_str << "\n";
        if (!verdict.empty()) out << "verdict: " << verdict << "\n";
    }
    return code;
}

int run_overring(const CommonArgs& c, const std::string& remove, std::ostream& out) {
    FqCurve E = c.make_curve();
    std::vector<ClosedPoint> W = parse_point_set(remove, E);
    int D = c.degree_bound;
    for (const auto& P : W) D = std::max(D, P.degree());
    OverringSpec spec = make_overring(E, W);
    HarvestOptions opts;
    opts.max_candidates = c.max_candidates;
    RelationHarvest H = harvest_relations(E, D, c.norm_budget > 0 ? c.norm_budget : 2 * D + 6, opts);
    OverringPicardReport rep = overring_report(spec, H);

    Json j;
    j["command"] = "overring";
    j["q"] = c.q;
    j["curve"] = c.curve;
    Json rm = Json::array();
    for (const auto& P : W) rm.push_back(P.str());
    j["removed"] = rm;
    j["kernel"] = group_json(rep.kernel);
    j["kernel_order"] = rep.kernel_order.str();
    j["picard_quotient"] = group_json(rep.quotient);
    j["picard_direct"] = group_json(rep.direct);
    j["direct_stable"] = rep.direct_stable;
    j["curve_order"] = rep.curve_order.str();
    j["order_identity"] = rep.order_identity;
    bool ok = rep.isomorphic && rep.order_identity && rep.direct_stable;
    j["verdict"] = ok ? "EXACT" : (rep.direct_stable ? "MISMATCH" : "INCONCLUSIVE");

    if (c.json()) {
        out << j.dump(2) << "\n";
    } else {
        out << "removed primes (" << W.size() << "):";
        for (const auto& P : W) out << " " << P.str();
        out << "\n";
        out << "<Phi(W)>: " << rep.kernel.str() << " (order " << rep.kernel_order.str() << ")\n";
        out << "Pic(S) via quotient:         " << rep.quotient.str() << "\n";
        out << "Pic(S) via relation surgery: " << rep.direct.str()
            << (rep.direct_stable ? " (stable)" : " (UNSTABLE)") << "\n";
        out << "|Pic(S)| * |<Phi(W)>| = " << (rep.quotient.torsion_order() * rep.kernel_order).str()
            << ", #E = " << rep.curve_order.str() << (rep.order_identity ? " (exact)" : " (BROKEN)")
            << "\n";
        out << "verdict: " << j["verdict"].get<std::string>() << "\n";
    }
    if (!rep.direct_stable) return kBudget;
    return ok ? kOk : kMathFailure;
}

int run_replete(const CommonArgs& c, int max_degree, bool closed_flag, std::ostream& out) {
    FqCurve E = c.make_curve();
    WeakRepletenessReport weak = weak_repleteness_check(E);
    RepletenessReport rep = repleteness_check(E, max_degree, closed_flag);

    Json j;
    j["command"] = "replete";
    j["q"] = c.q;
    j["curve"] = c.curve;
    j["weakly_replete"] = weak.passed;
    j["degree_bound"] = rep.degree_bound;
    const char* verdict = rep.verdict == RepletenessVerdict::replete_with_witnesses
                              ? "replete-with-witnesses"
                              : rep.verdict == RepletenessVerdict::not_replete ? "not-replete"
                                                                               : "unknown-at-bound";
    j["verdict"] = verdict;
    j["classes_total"] = rep.classes_total;
    j["classes_witnessed"] = rep.classes_witnessed;
    if (rep.conjugate_pair_x0) j["conjugate_pair_x0"] = *rep.conjugate_pair_x0;
    Json wl = Json::array();
    bool witnesses_sound = true;
    for (const auto& w : rep.witnesses) {
        Json e;
        e["class"] = w.group_element;
        e["prime"] = w.prime;
        e["degree"] = w.degree;
        e["recomputed"] = w.recomputed_class_matches;
        witnesses_sound = witnesses_sound && w.recomputed_class_matches;
        wl.push_back(e);
    }
    j["witnesses"] = wl;

    if (c.json()) {
        out << j.dump(2) << "\n";
    } else {
        out << "weakly replete: " << (weak.passed ? "yes" : "NO") << " (" << weak.class_to_prime.size()
            << " degree-1 prime classes)\n";
        out << "repleteness at degree <= " << rep.degree_bound << ": " << verdict << " ("
            << rep.classes_witnessed << "/" << rep.classes_total << " classes)\n";
        if (rep.conjugate_pair_x0)
            out << "conjugate-pair witness: x0 = " << *rep.conjugate_pair_x0 << "\n";
        for (const auto& w : rep.witnesses)
            out << "  class " << w.group_element << " <- " << w.prime << " (degree " << w.degree
                << (w.recomputed_class_matches ? ")" : ", RECOMPUTATION MISMATCH)") << "\n";
    }
    return weak.passed && witnesses_sound ? kOk : kMathFailure;
}

int run_tower(int height, bool check_level1, long bound, bool json_mode, std::ostream& out) {
    Curve<Rational> E0 = rank_zero_base_curve();
    TowerLevel level = tower_group(E0, height);

    Json j;
    j["command"] = "tower";
    j["base"] = "y^2+y=x^3-49x-86 over Q";
    j["j_invariant"] = E0.j_invariant().str();
    j["height"] = level.height;
    j["group"] = group_json(level.group);
    j["generators"] = level.generator_names;

    bool checks_ok = true;
    Json checks = Json::array();
    if (check_level1) {
        auto F = lift_to_function_field(E0);
        FnPoint<Rational> G = generic_point(F);
        auto record = [&](const std::string& name, bool ok) {
            Json e;
            e["check"] = name;
            e["passed"] = ok;
            checks.push_back(e);
            checks_ok = checks_ok && ok;
        };
        auto d = decompose(F, G, bound);
        record("decompose(generic) = (O, 1)", d.constant.infinity && d.multiple == 1);
        FnPoint<Rational> acc = G;
        for (long m = 2; m <= bound; ++m) {
            acc = ff_add(F, acc, G);
            bool deg_ok = !acc.infinity && acc.x.num_a().degree() == m * m &&
                          acc.x.den().degree() == m * m - 1;
            record("[" + std::to_string(m) + "](x,y): x-degrees " + std::to_string(m * m) + "/" +
                       std::to_string(m * m - 1),
                   deg_ok);
            auto dm = decompose(F, acc, bound);
            record("decompose([" + std::to_string(m) + "](x,y)) = (O, " + std::to_string(m) + ")",
                   dm.constant.infinity && dm.multiple == m);
        }
        j["level1_checks"] = checks;
    }

    if (json_mode) {
        out << j.dump(2) << "\n";
    } else {
        out << "base: y^2+y = x^3-49x-86 over Q (j = " << E0.j_invariant().str() << ")\n";
        out << "E(K_" << height << ") = " << level.group.str();
        if (!level.generator_names.empty()) {
            out << ", generators";
            for (const auto& n : level.generator_names) out << " " << n;
        }
        out << "\n";
        if (check_level1)
            for (const auto& e : checks)
                out << "  " << e["check"].get<std::string>() << ": "
                    << (e["passed"].get<bool>() ? "ok" : "FAIL") << "\n";
    }
    return checks_ok ? kOk : kMathFailure;
}

int run_realize(const std::string& group, const std::string& out_path, bool demo, long q_max,
                bool json_mode, std::ostream& out) {
    GroupSpec spec = parse_group_spec(group);
    RealizeOptions opts;
    opts.attach_demo = demo;
    opts.demo_q_max = q_max;
    Certificate cert = realize(spec, opts);

    if (!out_path.empty()) save_certificate(cert, out_path);

    Json j;
    j["command"] = "realize";
    j["target"] = spec.str();
    j["normalized"] = group_json(spec.normalized());
    j["tower_height"] = cert.tower_height;
    Json kg = Json::array();
    for (const auto& rp : cert.removed_points) kg.push_back(rp.name);
    j["kill_generators"] = kg;
    j["matches_target"] = cert.matches_target;
    j["has_demo"] = cert.demo.has_value();
    if (cert.demo) {
        j["demo_q"] = cert.demo->q;
        j["demo_group"] = group_json(cert.demo->quotient);
    }
    if (!out_path.empty()) j["certificate"] = out_path;

    if (json_mode) {
        out << j.dump(2) << "\n";
    } else {
        out << "target: " << spec.str() << " (normalized " << spec.normalized().str() << ")\n";
        out << "tower height: " << cert.tower_height << "\n";
        out << "kill subgroup: <";
        for (size_t i = 0; i < cert.removed_points.size(); ++i)
            out << (i ? ", " : "") << cert.removed_points[i].name;
        out << ">\n";
        out << "SNF check: " << cert.computed_group.str()
            << (cert.matches_target ? " -- matches target" : " -- MISMATCH") << "\n";
        if (cert.demo)
            out << "finite demo: F_" << cert.demo->q << " with Pic(S) = " << cert.demo->quotient.str()
                << "\n";
        else
            out << "finite demo: none" << (demo ? " found" : " requested") << "\n";
        if (!out_path.empty()) out << "certificate written to " << out_path << "\n";
    }
    return cert.matches_target ? kOk : kMathFailure;
}

int run_verify(const std::string& path, bool json_mode, std::ostream& out) {
    Certificate cert = load_certificate(path);
    VerifyReport rep = verify_certificate(cert);

    Json j;
    j["command"] = "verify";
    j["file"] = path;
    Json steps = Json::array();
    for (const auto& s : rep.steps) {
        Json e;
        e["step"] = s.name;
        e["passed"] = s.passed;
        if (!s.detail.empty()) e["detail"] = s.detail;
        steps.push_back(e);
    }
    j["steps"] = steps;
    j["passed"] = rep.passed;
    if (!rep.passed) j["first_failure"] = rep.first_failure;

    if (json_mode) {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : rep.steps)
            out << "  " << s.name << std::string(s.name.size() < 24 ? 24 - s.name.size() : 1, ' ')
                << (s.passed ? "ok" : "FAIL") << (s.detail.empty() ? "" : "  [" + s.detail + "]")
                << "\n";
        out << "verdict: " << (rep.passed ? "VERIFIED" : "REJECTED at " + rep.first_failure) << "\n";
    }
    return rep.passed ? kOk : kMathFailure;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"class groups of elliptic coordinate rings and their overrings"};
    app.require_subcommand(1);

    CommonArgs common;
    auto add_common = [&](CLI::App* cmd, bool with_curve = true) {
        if (with_curve) {
            cmd->add_option("--curve", common.curve, "curve equation, e.g. y^2=x^3+1x+1 or a1=..,a3=..")
                ->required();
            cmd->add_option("--q", common.q, "field order (prime power)")->required();
        }
        cmd->add_option("--format", common.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* mw = app.add_subcommand("mw", "Mordell-Weil group by point enumeration");
    add_common(mw);

    CLI::App* picard = app.add_subcommand("picard", "class group, ideal-theoretic and/or group-law");
    add_common(picard);
    std::string oracle = "both";
    picard->add_option("--oracle", oracle, "both | ideal | grouplaw")
        ->check(CLI::IsMember({"both", "ideal", "grouplaw"}));
    picard->add_option("--degree-bound", common.degree_bound, "closed-point degree bound D");
    picard->add_option("--norm-budget", common.norm_budget, "norm degree budget B (default 2D+6)");
    picard->add_option("--max-candidates", common.max_candidates, "harvest candidate budget");

    CLI::App* overring = app.add_subcommand("overring", "class group of an overring, both routes");
    add_common(overring);
    std::string remove;
    overring->add_option("--remove", remove, "removed primes, e.g. \"(2,1);(4,0);[x^2+2; y=3x+1]\"")
        ->required();
    overring->add_option("--degree-bound", common.degree_bound, "closed-point degree bound D");
    overring->add_option("--norm-budget", common.norm_budget, "norm degree budget B");
    overring->add_option("--max-candidates", common.max_candidates, "harvest candidate budget");

    CLI::App* replete = app.add_subcommand("replete", "weak repleteness and repleteness witnesses");
    add_common(replete);
    int max_degree = 3;
    bool closed_flag = false;
    replete->add_option("--max-degree", max_degree, "witness degree bound");
    replete->add_flag("--algebraically-closed", closed_flag,
                      "assume an algebraically closed base field");

    CLI::App* tower = app.add_subcommand("tower", "function-field tower over the rank-zero base");
    add_common(tower, false);
    int height = 1;
    bool check_level1 = false;
    long level1_bound = 4;
    tower->add_option("--height", height, "tower height n")->required();
    tower->add_flag("--check-level1", check_level1, "verify the level-1 splitting symbolically");
    tower->add_option("--bound", level1_bound, "multiple bound for the level-1 checks");

    CLI::App* realize_cmd = app.add_subcommand("realize", "emit a realization certificate");
    add_common(realize_cmd, false);
    std::string group, out_path;
    bool no_demo = false;
    long q_max = 13;
    realize_cmd->add_option("--group", group, "target group, e.g. Z^2+Z/4+Z/12")->required();
    realize_cmd->add_option("--out", out_path, "certificate output path");
    realize_cmd->add_flag("--no-demo", no_demo, "skip the finite-field demo search");
    realize_cmd->add_option("--q-max", q_max, "largest field order for the demo search");

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-derive every claim in a certificate");
    add_common(verify_cmd, false);
    std::string cert_path;
    verify_cmd->add_option("file", cert_path, "certificate file")->required();

    std::vector<const char*> argv;
    argv.push_back("ellpic");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(mw)) return run_mw(common, out);
        if (app.got_subcommand(picard)) return run_picard(common, oracle, out);
        if (app.got_subcommand(overring)) return run_overring(common, remove, out);
        if (app.got_subcommand(replete)) return run_replete(common, max_degree, closed_flag, out);
        if (app.got_subcommand(tower))
            return run_tower(height, check_level1, level1_bound, common.json(), out);
        if (app.got_subcommand(realize_cmd))
            return run_realize(group, out_path, !no_demo, q_max, common.json(), out);
        if (app.got_subcommand(verify_cmd)) return run_verify(cert_path, common.json(), out);
    } catch (const budget_error& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsage;
    }
    err << "no subcommand\n";
    return kUsage;
}

}  // namespace ellpic
