#include "hypertile/report.hpp"

#include <algorithm>
#include <cmath>

namespace hypertile {

using nlohmann::json;

namespace {

json quads(const std::vector<Quad> &qs)
{
    json out = json::array();
    for (const auto &q : qs)
        out.push_back({q[0], q[1], q[2], q[3]});
    return out;
}

json triples(const std::vector<Triple> &ts)
{
    json out = json::array();
    for (const auto &t : ts)
        out.push_back({t[0], t[1], t[2]});
    return out;
}

json estimate(const ClosenessEstimate &e)
{
    return {{"y", e.y},       {"count", e.count}, {"low", e.low},   {"high", e.high},
            {"hits", e.hits}, {"samples", e.samples}, {"seed", e.seed}, {"close", e.close},
            {"annotation", e.annotation}};
}

json bridge(const BridgeStats &b)
{
    return {{"edges_linking_both", b.edges_linking_both},
            {"balanced_k4", b.balanced_k4},
            {"xyy_edges_into_x", b.xyy_edges_into_x},
            {"xxy_edges_into_y", b.xxy_edges_into_y},
            {"bridges_len1", b.bridges_len1}};
}

json absorber_params(const AbsorberParams &p)
{
    json j = {{"i", p.i},
              {"m", p.absorber_size()},
              {"eta", p.eta},
              {"seed", p.seed},
              {"index_samples", p.index_samples},
              {"node_budget", p.node_budget}};
    j["override_sample_count"] = p.override_sample_count ? json(*p.override_sample_count) : json(nullptr);
    return j;
}

} // namespace

json to_json(const VertexSet &s) { return s.to_vector(); }

json to_json(const FactorResult &r)
{
    return {{"status", to_string(r.status)},
            {"tiles", quads(r.tiles)},
            {"nodes", r.nodes_explored},
            {"uncovered", to_json(r.uncovered)},
            {"optimal", r.optimal}};
}

json to_json(const Tiling &t)
{
    return {{"t1", quads(t.t1)}, {"t2", triples(t.t2)}, {"weight", weight(t)}};
}

json to_json(const MoveRecord &m)
{
    return {{"kind", to_string(m.kind)},
            {"removed_copies", quads(m.removed_copies)},
            {"removed_edges", triples(m.removed_edges)},
            {"added_copies", quads(m.added_copies)},
            {"added_edges", triples(m.added_edges)},
            {"delta_w", m.delta_w}};
}

json to_json(const GreedyResult &r, bool with_trace)
{
    json j = {{"tiling", to_json(r.tiling)},
              {"copies", r.tiling.t1.size()},
              {"target", r.target},
              {"min_codegree", r.min_codegree},
              {"seed", r.seed},
              {"reached_target", r.reached_target},
              {"hypothesis_holds", r.hypothesis_holds},
              {"counterexample", r.counterexample},
              {"diagnostics", r.diagnostics},
              {"iterations", r.iterations()},
              {"weights", r.weights}};
    if (with_trace) {
        json trace = json::array();
        for (const auto &m : r.trace)
            trace.push_back(to_json(m));
        j["trace"] = std::move(trace);
    }
    return j;
}

json to_json(const ClosenessReport &r)
{
    json classes = json::array();
    for (const auto &c : r.classes)
        classes.push_back({{"members", to_json(c.members)},
                           {"level", c.level},
                           {"eta", c.eta},
                           {"size_lower_bound", c.size_lower_bound},
                           {"seed_vertex", c.seed_vertex},
                           {"growth", c.growth}});
    json close1 = json::array(), close2 = json::array();
    for (const auto &s : r.close1)
        close1.push_back(to_json(s));
    for (const auto &s : r.close2)
        close2.push_back(to_json(s));
    json sampled = json::array();
    for (const auto &[x, e] : r.sampled2) {
        json item = estimate(e);
        item["x"] = x;
        sampled.push_back(std::move(item));
    }
    json bridges = json::array();
    for (const auto &b : r.bridges)
        bridges.push_back({{"class_index", b.class_index}, {"stats", bridge(b.stats)}});

    const double n = r.n;
    json thresholds = json::array();
    for (std::size_t i = 0; i < r.eta.size(); ++i)
        thresholds.push_back({{"level", i + 1},
                              {"eta", r.eta[i]},
                              {"connectors", r.eta[i] * std::pow(n, 4.0 * double(i + 1) - 1.0)}});
    return {{"n", r.n},
            {"min_codegree", r.min_codegree},
            {"gamma", r.gamma},
            {"eta", r.eta},
            {"thresholds", thresholds},
            {"hypothesis_holds", r.hypothesis_holds},
            {"warnings", r.warnings},
            {"classes", classes},
            {"labels", r.labels},
            {"connectors", r.connectors},
            {"close1", close1},
            {"close2", close2},
            {"sampled2", sampled},
            {"bridges", bridges},
            {"seed", r.seed}};
}

json to_json(const AbsorberFamily &f)
{
    json members = json::array();
    for (const auto &m : f.members)
        members.push_back(to_json(m));
    json index = json::array();
    for (const auto &e : f.index)
        index.push_back({{"t", {e.t[0], e.t[1], e.t[2], e.t[3]}}, {"members", e.members}});
    return {{"m", f.m},
            {"members", members},
            {"U", to_json(f.U)},
            {"index", index},
            {"params", absorber_params(f.params)},
            {"expected_count", f.expected_count},
            {"draws", f.draws},
            {"discarded_intersecting", f.discarded_intersecting},
            {"discarded_unfactorable", f.discarded_unfactorable}};
}

json to_json(const PipelineReport &r, bool with_timings)
{
    json assignment = json::array();
    for (const auto &[q, k] : r.assignment)
        assignment.push_back({{"block", {q[0], q[1], q[2], q[3]}}, {"member", k}});
    json j = {{"n", r.n},
              {"min_codegree", r.min_codegree},
              {"hypothesis_holds", r.hypothesis_holds},
              {"warnings", r.warnings},
              {"success", r.success},
              {"failed_stage", r.failed_stage.empty() ? json(nullptr) : json(r.failed_stage)},
              {"error", r.error.empty() ? json(nullptr) : json(r.error)},
              {"family", r.family ? to_json(*r.family) : json(nullptr)},
              {"u_size", r.u_size},
              {"tiling", to_json(r.tiling)},
              {"tiling_target", r.tiling_target},
              {"guaranteed_copies", r.guaranteed_copies},
              {"tiling_iterations", r.tiling_iterations},
              {"leftover", to_json(r.leftover)},
              {"assignment", assignment},
              {"factor", quads(r.factor)},
              {"verified", r.verified},
              {"config",
               {{"gamma", r.config.gamma},
                {"absorber", absorber_params(r.config.absorber)},
                {"tile_seed", r.config.tile_seed}}}};
    if (with_timings) {
        json t = json::array();
        for (const auto &s : r.timings)
            t.push_back({{"stage", s.stage}, {"millis", s.millis}});
        j["timings"] = std::move(t);
    }
    return j;
}

json stats_json(const Hypergraph3 &h)
{
    json j = {{"n", h.n()}, {"m", h.edge_count()}};
    if (h.n() >= 2) {
        int lo = h.n(), hi = 0;
        std::int64_t total = 0;
        for (int u = 0; u < h.n(); ++u)
            for (int v = u + 1; v < h.n(); ++v) {
                const int c = h.codegree(u, v);
                lo = std::min(lo, c);
                hi = std::max(hi, c);
                total += c;
            }
        const double pairs = h.n() * (h.n() - 1) / 2.0;
        j["min_codegree"] = lo;
        j["max_codegree"] = hi;
        j["mean_codegree"] = double(total) / pairs;
    }
    json copies = json::object();
    for (Pattern4 p : {Pattern4::K4, Pattern4::K4MinusE, Pattern4::K4Minus2E, Pattern4::K4Minus3E})
        copies[pattern_name(p)] = pattern_copies(h, p).size();
    j["pattern_copies"] = copies;
    if (h.n() >= 2) {
        const auto ext = edge_extension_check(h);
        j["edge_extension"] = {{"holds", ext.holds},
                               {"has_edges", ext.has_edges},
                               {"worst_edge", {ext.worst_edge[0], ext.worst_edge[1], ext.worst_edge[2]}},
                               {"worst_link_size", ext.worst_link_size},
                               {"slack", ext.slack}};
    }
    return j;
}

} // namespace hypertile
