#include "ellpic/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ellpic {

namespace {

using Json = nlohmann::ordered_json;

Json int_vec(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

std::vector<Int> int_vec_from(const Json& a) {
    std::vector<Int> out;
    for (const auto& x : a) out.emplace_back(x.get<std::string>());
    return out;
}

Json group_json(const FgAbelianGroup& g) {
    Json j;
    j["rank"] = g.free_rank;
    j["torsion"] = int_vec(g.invariant_factors);
    return j;
}

FgAbelianGroup group_from(const Json& j) {
    FgAbelianGroup g;
    g.free_rank = j.at("rank").get<long>();
    g.invariant_factors = int_vec_from(j.at("torsion"));
    return g;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
    Json j;
    j["version"] = c.version;

    Json base;
    base["field"] = "Q";
    Json curve;
    const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
    for (size_t i = 0; i < 5; ++i) curve[names[i]] = c.base_coeffs[i];
    base["curve"] = curve;
    base["j_invariant"] = c.base_j;
    j["base"] = base;

    j["tower_height"] = c.tower_height;

    Json kg = Json::array();
    for (const auto& row : c.kill_generators) kg.push_back(int_vec(row));
    j["kill_generators"] = kg;

    Json rps = Json::array();
    for (const auto& rp : c.removed_points) {
        Json r;
        r["name"] = rp.name;
        r["negation"] = rp.negation;
        r["vector"] = int_vec(rp.vector);
        r["neg_vector"] = int_vec(rp.neg_vector);
        rps.push_back(r);
    }
    j["removed_points"] = rps;

    j["sigma_stable"] = c.sigma_stable;

    Json target;
    target["rank"] = c.target.free_rank;
    target["torsion"] = int_vec(c.target.torsion);
    j["target"] = target;

    Json axioms = Json::array();
    for (const auto& a : c.axioms) {
        Json ax;
        ax["statement"] = a.statement;
        ax["citation"] = a.citation;
        axioms.push_back(ax);
    }
    j["axioms"] = axioms;

    Json transcript;
    Json snf;
    snf["diagonal"] = int_vec(c.snf_diagonal);
    snf["group"] = group_json(c.computed_group);
    snf["matches_target"] = c.matches_target;
    transcript["snf"] = snf;
    Json quad;
    quad["trace_y"] = c.trace_y;
    quad["norm_y"] = c.norm_y;
    transcript["quadratic"] = quad;
    Json tower;
    tower["generators"] = c.tower_generators;
    transcript["tower"] = tower;
    j["transcript"] = transcript;

    if (c.demo) {
        const FiniteDemo& d = *c.demo;
        Json dj;
        dj["q"] = d.q;
        dj["curve"] = d.curve_coeffs;
        dj["curve_group"] = group_json(d.curve_group);
        Json rem = Json::array();
        for (auto& [x, y] : d.removed_xy) rem.push_back(Json::array({x, y}));
        dj["removed"] = rem;
        dj["quotient"] = group_json(d.quotient);
        dj["direct"] = group_json(d.direct);
        dj["agree"] = d.agree;
        dj["sigma_stable"] = d.sigma_stable;
        dj["pid_all_principal"] = d.pid_all_principal;
        dj["integral_closure"] = d.integral_closure_pass;
        j["demo"] = dj;
    }
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: malformed JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.version = j.at("version").get<int>();
        if (c.version != 1)
            throw std::invalid_argument("certificate: unknown version " + std::to_string(c.version));

        const Json& base = j.at("base");
        const Json& curve = base.at("curve");
        c.base_coeffs = {curve.at("a1").get<long>(), curve.at("a2").get<long>(),
                         curve.at("a3").get<long>(), curve.at("a4").get<long>(),
                         curve.at("a6").get<long>()};
        c.base_j = base.at("j_invariant").get<std::string>();

        c.tower_height = j.at("tower_height").get<int>();
        for (const auto& row : j.at("kill_generators")) c.kill_generators.push_back(int_vec_from(row));
        for (const auto& r : j.at("removed_points")) {
            Certificate::RemovedPoint rp;
            rp.name = r.at("name").get<std::string>();
            rp.negation = r.at("negation").get<std::string>();
            rp.vector = int_vec_from(r.at("vector"));
            rp.neg_vector = int_vec_from(r.at("neg_vector"));
            c.removed_points.push_back(std::move(rp));
        }
        c.sigma_stable = j.at("sigma_stable").get<bool>();
        c.target.free_rank = j.at("target").at("rank").get<long>();
        c.target.torsion = int_vec_from(j.at("target").at("torsion"));
        for (const auto& a : j.at("axioms"))
            c.axioms.push_back(
                CertificateAxiom{a.at("statement").get<std::string>(), a.at("citation").get<std::string>()});

        const Json& transcript = j.at("transcript");
        c.snf_diagonal = int_vec_from(transcript.at("snf").at("diagonal"));
        c.computed_group = group_from(transcript.at("snf").at("group"));
        c.matches_target = transcript.at("snf").at("matches_target").get<bool>();
        c.trace_y = transcript.at("quadratic").at("trace_y").get<std::string>();
        c.norm_y = transcript.at("quadratic").at("norm_y").get<std::string>();
        for (const auto& g : transcript.at("tower").at("generators"))
            c.tower_generators.push_back(g.get<std::string>());

        if (j.contains("demo")) {
            const Json& dj = j.at("demo");
            FiniteDemo d;
            d.q = dj.at("q").get<long>();
            d.curve_coeffs = dj.at("curve").get<std::vector<long>>();
            d.curve_group = group_from(dj.at("curve_group"));
            for (const auto& xy : dj.at("removed"))
                d.removed_xy.emplace_back(xy.at(0).get<long>(), xy.at(1).get<long>());
            d.quotient = group_from(dj.at("quotient"));
            d.direct = group_from(dj.at("direct"));
            d.agree = dj.at("agree").get<bool>();
            d.sigma_stable = dj.at("sigma_stable").get<bool>();
            d.pid_all_principal = dj.at("pid_all_principal").get<bool>();
            d.integral_closure_pass = dj.at("integral_closure").get<bool>();
            c.demo = std::move(d);
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: missing or mistyped field: ") + e.what());
    }
}

void save_certificate(const Certificate& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("save_certificate: cannot open " + path);
    out << certificate_to_json(c);
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_certificate: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return certificate_from_json(ss.str());
}

}  // namespace ellpic
