#pragma once

#include "theorems.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgo::io {

using json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

inline json rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from(const json& j, const std::string& what) {
    if (!j.is_string()) throw FormatError(what + " must be a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError(what + ": " + e.what());
    }
}

inline json troot_json(const TRoot& t) { return json(t); }

// Algebra descriptor {"family":"A","rank":3}.
inline json to_json(const RootSystemType& t) { return json{{"family", std::string(1, t.family)}, {"rank", t.rank}}; }

inline RootSystemType algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("rank"))
        throw FormatError("algebra descriptor needs \"family\" and \"rank\"");
    const json& f = j.at("family");
    const json& r = j.at("rank");
    if (!f.is_string() || f.get<std::string>().size() != 1) throw FormatError("family must be a one-letter string");
    if (!r.is_number_integer()) throw FormatError("rank must be an integer");
    RootSystemType t{f.get<std::string>()[0], r.get<int>()};
    validate(t);
    return t;
}

// Elements are lists of {"g": basis index, "name": generator, "c": coefficient}.
inline json to_json(const LieAlgebra& g, const AlgebraElement& x) {
    json out = json::array();
    for (const auto& [idx, c] : x.terms()) out.push_back(json{{"g", idx}, {"name", g.generator_name(idx)}, {"c", rational_json(c)}});
    return out;
}

inline AlgebraElement element_from_json(const LieAlgebra& g, const json& j) {
    if (!j.is_array()) throw FormatError("element must be an array of terms");
    AlgebraElement x;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("g") || !t.contains("c")) throw FormatError("term needs \"g\" and \"c\"");
        if (!t.at("g").is_number_unsigned()) throw FormatError("basis index must be a non-negative integer");
        std::size_t idx = t.at("g").get<std::size_t>();
        if (idx >= g.dim()) throw FormatError("basis index " + std::to_string(idx) + " out of range");
        if (t.contains("name") && t.at("name") != g.generator_name(idx))
            throw FormatError("term name does not match basis index " + std::to_string(idx));
        x += AlgebraElement::basis(idx, rational_from(t.at("c"), "coefficient"));
    }
    return x;
}

inline json to_json(const SummandParams& p, std::size_t id) {
    if (p.kind == SummandParams::Kind::Scalar)
        return json{{"id", id}, {"kind", "scalar"}, {"lambda", rational_json(p.lambda)}};
    return json{{"id", id},
                {"kind", "split"},
                {"mu1", rational_json(p.mu1)},
                {"mu2", rational_json(p.mu2)},
                {"coupling", rational_json(p.coupling)}};
}

inline json to_json(const MetricSpec& m) {
    json rows = json::array();
    for (const auto& r : m.s_block) {
        json row = json::array();
        for (const auto& v : r) row.push_back(rational_json(v));
        rows.push_back(row);
    }
    json sums = json::array();
    for (std::size_t i = 0; i < m.summands.size(); ++i) sums.push_back(to_json(m.summands[i], i + 1));
    return json{{"s_block", rows}, {"summands", sums}};
}

inline MetricSpec metric_from_json(const json& j) {
    if (!j.is_object() || !j.contains("s_block") || !j.contains("summands"))
        throw FormatError("metric needs \"s_block\" and \"summands\"");
    MetricSpec m;
    const json& sb = j.at("s_block");
    if (!sb.is_array()) throw FormatError("s_block must be an array of rows");
    for (const auto& row : sb) {
        if (!row.is_array()) throw FormatError("s_block rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from(v, "s_block entry"));
        m.s_block.push_back(std::move(r));
    }
    const json& ss = j.at("summands");
    if (!ss.is_array()) throw FormatError("summands must be an array");
    std::vector<std::optional<SummandParams>> slots(ss.size());
    for (const auto& e : ss) {
        if (!e.is_object() || !e.contains("id") || !e.contains("kind")) throw FormatError("summand needs \"id\" and \"kind\"");
        if (!e.at("id").is_number_unsigned()) throw FormatError("summand id must be a positive integer");
        std::size_t id = e.at("id").get<std::size_t>();
        if (id < 1 || id > ss.size()) throw FormatError("summand id " + std::to_string(id) + " out of range");
        if (slots[id - 1]) throw FormatError("summand id " + std::to_string(id) + " repeated");
        const json& kind = e.at("kind");
        if (kind == "scalar") {
            if (!e.contains("lambda")) throw FormatError("scalar summand needs \"lambda\"");
            slots[id - 1] = SummandParams::scalar(rational_from(e.at("lambda"), "lambda"));
        } else if (kind == "split") {
            for (const char* k : {"mu1", "mu2", "coupling"})
                if (!e.contains(k)) throw FormatError(std::string("split summand needs \"") + k + "\"");
            slots[id - 1] = SummandParams::split(rational_from(e.at("mu1"), "mu1"), rational_from(e.at("mu2"), "mu2"),
                                                 rational_from(e.at("coupling"), "coupling"));
        } else {
            throw FormatError("summand kind must be \"scalar\" or \"split\"");
        }
    }
    for (auto& s : slots) m.summands.push_back(*s);
    return m;
}

inline json diagram_json(const PaintedDiagram& d) {
    return json{{"algebra", to_json(d.algebra)}, {"name", d.name()}, {"painted", d.painted}};
}

inline json describe(const MSpace& m) {
    const FlagManifold& f = m.flag();
    const LieAlgebra& g = m.algebra();
    json out = diagram_json(f.diagram());
    out["dim_g"] = g.dim();
    out["rank"] = g.rank();
    out["R_K_positive"] = f.rk_positive().size();
    out["R_M_positive"] = f.rm_positive().size();
    out["s"] = f.num_summands();
    out["dim_s"] = m.dim_s();
    out["dim_m"] = m.dim_m();
    out["dim_n"] = m.dim_n();
    json sums = json::array();
    for (std::size_t i = 0; i < f.num_summands(); ++i) {
        const SummandReport& r = m.report(i);
        sums.push_back(json{{"id", i + 1},
                            {"troot", troot_json(f.troots()[i])},
                            {"dim", r.dim},
                            {"reducible", r.reducible},
                            {"criterion", r.criterion}});
    }
    out["summands"] = sums;
    json simple = json::array();
    for (int k : f.simple_k()) simple.push_back(k + 1);
    json gens = json::array();
    for (const auto& k : m.k1_lie_generators()) gens.push_back(to_json(g, k));
    out["k1"] = json{{"dim", m.dim_k1()}, {"dim_a1", m.a1_basis().size()}, {"simple_roots", simple}, {"generators", gens}};
    return out;
}

inline json troots(const FlagManifold& f) {
    const RootSystem& rs = f.roots();
    json out = diagram_json(f.diagram());
    out["s"] = f.num_summands();
    json fibers = json::array();
    for (std::size_t i = 0; i < f.num_summands(); ++i) {
        json roots = json::array();
        for (std::size_t r : f.fiber(i)) roots.push_back(rs.root(r));
        fibers.push_back(json{{"troot", troot_json(f.troots()[i])}, {"roots", roots}});
    }
    out["fibers"] = fibers;
    TRootGraph gr = f.troot_graph();
    out["components"] = gr.num_components;
    json nodes = json::array(), edges = json::array();
    for (const auto& n : gr.nodes) nodes.push_back(troot_json(n));
    for (const auto& [a, b] : gr.edges) edges.push_back(json::array({a, b}));
    out["graph"] = json{{"nodes", nodes}, {"edges", edges}, {"component", gr.component}};
    return out;
}

inline std::string dot(const FlagManifold& f) {
    TRootGraph gr = f.troot_graph();
    std::ostringstream o;
    o << "graph troots {\n";
    for (std::size_t i = 0; i < gr.nodes.size(); ++i) o << "  n" << i << " [label=\"" << to_string_troot(gr.nodes[i]) << "\"];\n";
    for (const auto& [a, b] : gr.edges) o << "  n" << a << " -- n" << b << ";\n";
    o << "}\n";
    return o.str();
}

// Pairs of distinct summands admitting a nonzero K1-equivariant map.
inline std::vector<std::pair<std::size_t, std::size_t>> cross_couplings(const MSpace& m) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const FlagManifold& f = m.flag();
    for (std::size_t i = 0; i < f.num_summands(); ++i)
        for (std::size_t j = i + 1; j < f.num_summands(); ++j) {
            if (f.summand_dim(i) != f.summand_dim(j)) continue;
            if (!m.equivariant_maps(f.summand_generators(i), f.summand_generators(j), false).empty()) out.emplace_back(i, j);
        }
    return out;
}

inline json decompose(const MSpace& m) {
    const FlagManifold& f = m.flag();
    const LieAlgebra& g = m.algebra();
    const RootSystem& rs = g.roots();
    json out = diagram_json(f.diagram());
    json sums = json::array();
    for (std::size_t i = 0; i < f.num_summands(); ++i) {
        const SummandReport& r = m.report(i);
        json s{{"id", i + 1}, {"troot", troot_json(f.troots()[i])}, {"dim", r.dim}, {"reducible", r.reducible},
               {"criterion", r.criterion}};
        json oracle{{"irreducible", r.oracle.irreducible}, {"smallest_orbit", r.oracle.smallest_orbit}};
        oracle["commutant"] = r.oracle.commutant ? json(*r.oracle.commutant) : json(nullptr);
        s["oracle"] = oracle;
        s["seed_roots"] = json::array({rs.root(r.extremes.lowest), rs.root(r.extremes.highest)});
        if (r.split) {
            s["split_dims"] = json::array({r.split->n1.size(), r.split->n2.size()});
            s["seeds"] = json::array({to_json(g, r.split->seed1), to_json(g, r.split->seed2)});
            s["equivalence"] = to_json(g, r.split->h);
        } else {
            s["split_dims"] = nullptr;
        }
        s["findings"] = r.findings;
        sums.push_back(s);
    }
    out["summands"] = sums;
    json cc = json::array();
    for (const auto& [i, j] : cross_couplings(m)) cc.push_back(json::array({i + 1, j + 1}));
    out["cross_summand_couplings"] = cc;
    return out;
}

inline json to_json(const LieAlgebra& g, const Verdict& v) {
    json out{{"status", to_string(v.status)}, {"probes_run", v.probes_run}};
    if (v.witness) out["witness"] = to_json(g, *v.witness);
    if (v.counterexample) out["counterexample"] = to_json(g, *v.counterexample);
    if (v.certificate) out["certificate"] = to_json(g, *v.certificate);
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

inline json to_json(const LieAlgebra& g, const TheoremReport& r, Classification cls) {
    json out{{"theorem", to_string(r.theorem)},
             {"space", r.space},
             {"classification", cls == Classification::Oracle ? "oracle" : "criterion"},
             {"applicable", r.applicable}};
    if (!r.reason.empty()) out["reason"] = r.reason;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json j{{"metric", to_json(e.metric)}, {"expectation", to_string(e.expectation)}};
        if (!e.skipped.empty()) {
            j["skipped"] = e.skipped;
        } else {
            j["verdict"] = to_json(g, e.verdict);
            if (e.verdict.status == Status::Refuted) j["certificate_replayed"] = e.certificate_replayed;
            if (e.expectation == Expectation::CrossCheck) j["disagreements"] = e.disagreements;
        }
        j["consistent"] = e.consistent;
        entries.push_back(j);
    }
    out["entries"] = entries;
    out["consistent"] = r.consistent;
    return out;
}

}  // namespace hgo::io
