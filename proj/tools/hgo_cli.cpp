#include <hgo/io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hgo::io::json;

constexpr int kConsistent = 0;
constexpr int kFinding = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::string algebra_path;
    std::string painted;
    std::string metric_path;
    std::string vector_path;
    std::size_t probes = 200;
    std::uint64_t seed = 42;
    std::string format = "json";
    bool dot = false;
    std::string theorem = "all";
    std::string classification = "oracle";
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_painted(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("--painted expects comma-separated positive integers, got '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw UsageError("--painted is empty");
    return out;
}

void require_file(const std::string& path, const char* flag) {
    if (!std::filesystem::is_regular_file(path)) throw UsageError(std::string(flag) + ": no such file " + path);
}

void validate_paths(const RunConfig& c) {
    require_file(c.algebra_path, "--algebra");
    if (!c.metric_path.empty()) require_file(c.metric_path, "--metric");
    if (!c.vector_path.empty()) require_file(c.vector_path, "--vector");
}

hgo::PaintedDiagram diagram(const RunConfig& c) {
    hgo::PaintedDiagram d{hgo::io::algebra_from_json(hgo::io::read_json_file(c.algebra_path)), parse_painted(c.painted)};
    hgo::validate(d);
    return d;
}

std::shared_ptr<const hgo::MSpace> mspace(const RunConfig& c) { return hgo::MSpace::build(diagram(c)); }

hgo::MetricOperator metric(const RunConfig& c, const std::shared_ptr<const hgo::MSpace>& m) {
    hgo::MetricSpec spec = c.metric_path.empty() ? hgo::MetricSpec::standard(*m)
                                                 : hgo::io::metric_from_json(hgo::io::read_json_file(c.metric_path));
    return hgo::MetricOperator(m, spec);
}

hgo::ProbeConfig probe_config(const RunConfig& c) {
    hgo::ProbeConfig p;
    p.random = c.probes;
    p.seed = c.seed;
    return p;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_describe(const RunConfig& c) {
    auto m = mspace(c);
    json j = hgo::io::describe(*m);
    if (c.format == "text") {
        std::cout << j["name"].get<std::string>() << "\n"
                  << "dim g " << j["dim_g"] << ", |R_K+| " << j["R_K_positive"] << ", |R_M+| " << j["R_M_positive"] << "\n"
                  << "s " << j["s"] << ", dim s " << j["dim_s"] << ", dim m " << j["dim_m"] << ", dim k1 " << j["k1"]["dim"]
                  << "\n";
        for (const auto& s : j["summands"])
            std::cout << "m" << s["id"] << " " << s["troot"].dump() << " dim " << s["dim"]
                      << (s["reducible"].get<bool>() ? " reducible" : " irreducible") << "\n";
        return kConsistent;
    }
    emit(j);
    return kConsistent;
}

int cmd_troots(const RunConfig& c) {
    auto f = hgo::FlagManifold::build(diagram(c));
    json j = hgo::io::troots(*f);
    bool finding = f->num_summands() >= 3 && j["components"].get<std::size_t>() != 1;
    if (finding) j["finding"] = "t-roots of a space with at least three summands are not connected";
    emit(j);
    return finding ? kFinding : kConsistent;
}

int cmd_graph(const RunConfig& c) {
    auto f = hgo::FlagManifold::build(diagram(c));
    if (c.dot || c.format == "dot") {
        std::cout << hgo::io::dot(*f);
        return kConsistent;
    }
    emit(hgo::io::troots(*f)["graph"]);
    return kConsistent;
}

int cmd_decompose(const RunConfig& c) {
    auto m = mspace(c);
    json j = hgo::io::decompose(*m);
    std::vector<std::string> findings;
    for (const auto& s : j["summands"])
        for (const auto& f : s["findings"]) findings.push_back("m" + s["id"].dump() + ": " + f.get<std::string>());
    for (const auto& p : j["cross_summand_couplings"])
        findings.push_back("m" + p[0].dump() + " and m" + p[1].dump() + " are equivalent under K1");
    j["findings"] = findings;
    emit(j);
    return findings.empty() ? kConsistent : kFinding;
}

int cmd_check_go(const RunConfig& c) {
    auto m = mspace(c);
    hgo::MetricOperator op = metric(c, m);
    hgo::Verdict v = hgo::check_go_metric(op, probe_config(c));
    const hgo::LieAlgebra& g = m->algebra();
    json j{{"space", m->flag().diagram().name()}, {"metric", hgo::io::to_json(op.spec())}, {"seed", c.seed}};
    json vj = hgo::io::to_json(g, v);
    for (auto it = vj.begin(); it != vj.end(); ++it) j[it.key()] = it.value();
    std::vector<std::string> findings;
    if (v.status == hgo::Status::Refuted) {
        bool ok = hgo::replay_certificate(op, *v.counterexample, *v.certificate);
        j["certificate_replayed"] = ok;
        if (!ok) findings.push_back("certificate does not replay");
        if (op.spec().is_standard_up_to_scale()) findings.push_back("a multiple of the standard metric was refuted");
    }
    j["findings"] = findings;
    emit(j);
    return findings.empty() ? kConsistent : kFinding;
}

int cmd_find_geodesic(const RunConfig& c) {
    auto m = mspace(c);
    hgo::MetricOperator op = metric(c, m);
    const hgo::LieAlgebra& g = m->algebra();
    hgo::AlgebraElement x = c.vector_path.empty()
                                ? hgo::random_probes(*m, 1, c.seed).front()
                                : hgo::io::element_from_json(g, hgo::io::read_json_file(c.vector_path));
    if (!m->in_n(x)) throw hgo::OutOfSubspace("--vector is not in n");
    if (x.is_zero()) throw hgo::ZeroVector("--vector is zero");
    hgo::Verdict v = hgo::go_feasibility(op, x);
    json j{{"space", m->flag().diagram().name()}, {"metric", hgo::io::to_json(op.spec())}, {"x", hgo::io::to_json(g, x)}};
    json vj = hgo::io::to_json(g, v);
    for (auto it = vj.begin(); it != vj.end(); ++it) j[it.key()] = it.value();
    std::vector<std::string> findings;
    if (v.status == hgo::Status::Feasible) {
        hgo::AlgebraElement geo = *v.witness + x;
        hgo::Verdict gv = hgo::is_geodesic_vector(op, geo);
        j["geodesic_vector"] = hgo::io::to_json(g, geo);
        j["geodesic_check"] = hgo::to_string(gv.status);
        if (!hgo::replay_witness(op, x, *v.witness)) findings.push_back("witness does not replay");
        if (gv.status != hgo::Status::Geodesic) findings.push_back("witness yields a non-geodesic vector");
    } else {
        bool ok = hgo::replay_certificate(op, x, *v.certificate);
        j["certificate_replayed"] = ok;
        if (!ok) findings.push_back("certificate does not replay");
    }
    j["findings"] = findings;
    emit(j);
    return findings.empty() ? kConsistent : kFinding;
}

int cmd_refute(const RunConfig& c) {
    auto m = mspace(c);
    std::vector<hgo::Theorem> ths;
    if (c.theorem == "all") {
        ths = hgo::all_theorems();
    } else if (auto t = hgo::parse_theorem(c.theorem)) {
        ths.push_back(*t);
    } else {
        throw UsageError("unknown theorem '" + c.theorem + "'");
    }
    hgo::Classification cls =
        c.classification == "criterion" ? hgo::Classification::Criterion : hgo::Classification::Oracle;
    json reports = json::array();
    bool consistent = true;
    for (hgo::Theorem t : ths) {
        hgo::TheoremReport r = hgo::verify_theorem(m, t, probe_config(c), cls);
        consistent = consistent && r.consistent;
        reports.push_back(hgo::io::to_json(m->algebra(), r, cls));
    }
    emit(json{{"space", m->flag().diagram().name()}, {"seed", c.seed}, {"reports", reports}, {"consistent", consistent}});
    return consistent ? kConsistent : kFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesic orbit checks on M-spaces of generalized flag manifolds"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub, bool with_metric) {
        sub->add_option("--algebra", cfg.algebra_path, "algebra descriptor JSON, e.g. {\"family\":\"A\",\"rank\":3}")->required();
        sub->add_option("--painted", cfg.painted, "painted simple roots, e.g. 1,2")->required();
        if (with_metric) {
            sub->add_option("--metric", cfg.metric_path, "metric JSON (default: standard metric)");
            sub->add_option("--probes", cfg.probes, "number of random probes")->check(CLI::PositiveNumber);
            sub->add_option("--seed", cfg.seed, "probe seed");
        }
    };
    auto* describe = app.add_subcommand("describe", "dimensions and summands of G/K1");
    common(describe, false);
    describe->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* troots = app.add_subcommand("troots", "t-roots, fibers and connectedness");
    common(troots, false);
    auto* decompose = app.add_subcommand("decompose", "K1-decomposition of the isotropy summands");
    common(decompose, false);
    auto* graph = app.add_subcommand("graph", "t-root adjacency graph");
    common(graph, false);
    graph->add_flag("--dot", cfg.dot, "DOT output");
    graph->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    auto* check = app.add_subcommand("check-go", "sampled geodesic orbit check of a metric");
    common(check, true);
    auto* find = app.add_subcommand("find-geodesic", "geodesic vector k + x through a vector x of n");
    common(find, true);
    find->add_option("--vector", cfg.vector_path, "element JSON (default: one seeded random vector)");
    auto* refute = app.add_subcommand("refute", "instance checks of the classification theorems");
    common(refute, true);
    refute->add_option("--theorem", cfg.theorem, "T1, CC1, T2_1, T2_2, T2_3, T3_2, C2 or all");
    refute->add_option("--classification", cfg.classification, "reducibility used by the hypotheses")
        ->check(CLI::IsMember({"oracle", "criterion"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    try {
        validate_paths(cfg);
        if (describe->parsed()) return cmd_describe(cfg);
        if (troots->parsed()) return cmd_troots(cfg);
        if (decompose->parsed()) return cmd_decompose(cfg);
        if (graph->parsed()) return cmd_graph(cfg);
        if (check->parsed()) return cmd_check_go(cfg);
        if (find->parsed()) return cmd_find_geodesic(cfg);
        if (refute->parsed()) return cmd_refute(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const hgo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFinding;
    }
    return kUsage;
}
