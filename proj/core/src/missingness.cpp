#include "psgraph/missingness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "psgraph/ps_transform.hpp"
#include "psgraph/separation.hpp"

namespace psgraph {

bool MissingnessVerdict::mar() const {
    return setting == Setting::OneSided ? (mar1 && mar0) : (mar_z1 && mar_z0);
}

bool MissingnessVerdict::lmar() const {
    return setting == Setting::OneSided ? (mar1 && lmar0) : (lmar_z1 && lmar_z0);
}

MissingnessVerdict::Label MissingnessVerdict::overall() const {
    if (!mar()) return Label::MNAR;
    return lmar() ? Label::LMARAndMAR : Label::MARNotLMAR;
}

std::string MissingnessVerdict::overall_name() const {
    switch (overall()) {
        case Label::MAR: return "MAR";
        case Label::LMARAndMAR: return "LMAR-and-MAR";
        case Label::MNAR: return "MNAR";
        case Label::MARNotLMAR: return "MAR-not-LMAR";
    }
    return "MNAR";
}

namespace {

void require_analysis_nodes(const CausalGraph& g) {
    for (NodeRole r : {NodeRole::TreatmentAssignedZ, NodeRole::TreatmentReceivedS,
                       NodeRole::OutcomeY, NodeRole::ResponseR})
        if (!g.find_role(r))
            throw std::invalid_argument("model lacks a node with role " + role_name(r));
    auto bad = validate_graph(g);
    if (!bad.empty()) throw std::invalid_argument("invalid model: " + bad.front());
}

/// Covariate/auxiliary nodes conditioned in every missingness definition,
/// in topological order, with the arm value attached to Z.
ConditioningSpec arm_spec(const CausalGraph& ps, int z) {
    std::set<std::string> cond;
    for (NodeRole r : {NodeRole::CovariateX, NodeRole::CovariateV, NodeRole::AuxiliaryW})
        for (const auto& id : ps.nodes_with_role(r)) cond.insert(id);
    std::string zid = *ps.find_role(NodeRole::TreatmentAssignedZ);
    ConditioningSpec spec;
    for (const auto& id : ps.topological_order()) {
        if (cond.count(id)) spec.push_back({id, std::nullopt});
        else if (id == zid) spec.push_back({id, z});
    }
    return spec;
}

}  // namespace

MissingnessVerdict classify_missingness(const CausalGraph& model, Setting setting) {
    require_analysis_nodes(model);
    CausalGraph ps = to_principal_graph(model);
    const std::string r = *model.find_role(NodeRole::ResponseR);
    const std::string y = *model.find_role(NodeRole::OutcomeY);
    const std::string s = *model.find_role(NodeRole::TreatmentReceivedS);

    MissingnessVerdict v;
    v.setting = setting;
    for (int z : {1, 0}) {
        ConditionalGraph cg = condition(ps, arm_spec(ps, z), setting);
        const CausalGraph& g = cg.graph;
        auto sep = [&](const std::set<std::string>& given) {
            return m_separated(g, cg.resolve(r), cg.resolve(y), given);
        };
        if (setting == Setting::TwoSided) {
            bool mar = sep({cg.resolve(s)});
            bool lmar = sep({cg.resolve("C")});
            (z == 1 ? v.mar_z1 : v.mar_z0) = mar;
            (z == 1 ? v.lmar_z1 : v.lmar_z0) = lmar;
        } else if (z == 1) {
            v.mar1 = sep({cg.resolve(s)});
        } else {
            v.mar0 = sep({});
            v.lmar0 = sep({cg.resolve("C")});
        }
    }
    return v;
}

namespace {

/// Directed reachability from -> to where interior nodes must avoid `blocked`.
bool directed_path_avoiding(const CausalGraph& g, const std::string& from, const std::string& to,
                            const std::set<std::string>& blocked) {
    if (from == to) return true;
    std::set<std::string> seen{from};
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (const auto& c : g.children(v)) {
            if (c == to) return true;
            if (blocked.count(c) || !seen.insert(c).second) continue;
            queue.push_back(c);
        }
    }
    return false;
}

std::set<std::string> analysis_absorbers(const CausalGraph& g) {
    std::set<std::string> a;
    for (NodeRole r : {NodeRole::CovariateX, NodeRole::CovariateV, NodeRole::TreatmentAssignedZ,
                       NodeRole::TreatmentReceivedS})
        for (const auto& id : g.nodes_with_role(r)) a.insert(id);
    return a;
}

ButterflyReport butterfly_at(const CausalGraph& g, const std::string& center,
                             const std::string& y, const std::string& r) {
    ButterflyReport rep;
    rep.center = center;
    for (const auto& e : g.edges()) {
        if (e.kind == EdgeKind::Dashed || e.to != center) continue;
        if (g.node(e.from).role != NodeRole::Unobserved) continue;
        if (g.has_edge(Edge::causal(e.from, y))) rep.y_side.push_back(e.from);
        if (g.has_edge(Edge::causal(e.from, r))) rep.r_side.push_back(e.from);
    }
    std::sort(rep.y_side.begin(), rep.y_side.end());
    std::sort(rep.r_side.begin(), rep.r_side.end());
    rep.present = !rep.y_side.empty() && !rep.r_side.empty();
    return rep;
}

}  // namespace

StructureReport detect_structures(const CausalGraph& model) {
    if (model.kind() != GraphKind::Dag) throw std::invalid_argument("expected a DAG");
    auto r = model.find_role(NodeRole::ResponseR);
    if (!r) throw std::invalid_argument("model lacks a response node");
    auto y = model.find_role(NodeRole::OutcomeY);
    if (!y) throw std::invalid_argument("model lacks an outcome node");

    StructureReport rep;
    rep.has_direct_path = model.has_edge(Edge::causal(*y, *r));
    for (const auto& n : model.nodes()) {
        if (n.role != NodeRole::Unobserved) continue;
        bool to_y = model.has_edge(Edge::causal(n.id, *y));
        bool to_r = model.has_edge(Edge::causal(n.id, *r));
        if (to_y && to_r) {
            if (model.parents(n.id).empty()) rep.triangles.push_back(n.id);
            else rep.downstream_nonignorable.push_back(n.id);
        }
    }

    for (NodeRole role : {NodeRole::CovariateX, NodeRole::CovariateV}) {
        for (const auto& x : model.nodes_with_role(role)) {
            auto b = butterfly_at(model, x, *y, *r);
            if (b.present) {
                rep.x_butterfly = b;
                break;
            }
            if (rep.x_butterfly.center.empty()) rep.x_butterfly = b;
        }
        if (rep.x_butterfly.present) break;
    }
    if (auto s = model.find_role(NodeRole::TreatmentReceivedS))
        rep.s_butterfly = butterfly_at(model, *s, *y, *r);
    for (const auto& w : model.nodes_with_role(NodeRole::AuxiliaryW))
        rep.w_butterflies.push_back(butterfly_at(model, w, *y, *r));
    return rep;
}

namespace {

struct BoxContext {
    const CausalGraph& g;
    std::string y, r;
    std::set<std::string> absorbers;      // roles conditioned in the MAR statement
    std::set<std::string> path_blockers;  // absorbers plus w_set when the box credits blocking
    std::set<std::string> w_set;
    int box;

    bool effectively_latent(const std::string& id) const {
        auto role = g.node(id).role;
        if (role == NodeRole::Unobserved) return true;
        return role == NodeRole::AuxiliaryW && w_set.count(id) == 0;
    }
};

BoxCondition direct_path_condition(const BoxContext& c) {
    BoxCondition cond{"i", "no direct path", true, true, true, {}};
    if (directed_path_avoiding(c.g, c.y, c.r, c.path_blockers)) {
        cond.pass = false;
        cond.witnesses.push_back(c.y + " -> " + c.r);
    }
    return cond;
}

BoxCondition triangle_condition(const BoxContext& c) {
    BoxCondition cond{"ii", "no shared cause of Y and R", true, true, true, {}};
    for (const auto& n : c.g.nodes()) {
        if (!c.effectively_latent(n.id)) continue;
        // box 2 credits only membership in w_set, not blocking by it
        const auto& avoid = (c.box == 3) ? c.path_blockers : c.absorbers;
        if (directed_path_avoiding(c.g, n.id, c.y, avoid) &&
            directed_path_avoiding(c.g, n.id, c.r, avoid))
            cond.witnesses.push_back(n.id);
    }
    cond.pass = cond.witnesses.empty();
    return cond;
}

/// Wings of a butterfly centering `center`: latents that reach the center and
/// one of the endpoints through unblocked paths.
std::pair<std::vector<std::string>, std::vector<std::string>> wings(const BoxContext& c,
                                                                    const std::string& center) {
    const auto& avoid = (c.box == 3) ? c.path_blockers : c.absorbers;
    std::set<std::string> avoid_center = avoid;
    avoid_center.insert(center);
    std::vector<std::string> y_side, r_side;
    for (const auto& n : c.g.nodes()) {
        if (!c.effectively_latent(n.id) || n.id == center) continue;
        if (!directed_path_avoiding(c.g, n.id, center, avoid)) continue;
        if (directed_path_avoiding(c.g, n.id, c.y, avoid_center)) y_side.push_back(n.id);
        if (directed_path_avoiding(c.g, n.id, c.r, avoid_center)) r_side.push_back(n.id);
    }
    return {y_side, r_side};
}

BoxCondition butterfly_condition(const BoxContext& c, const std::string& id,
                                 const std::string& label,
                                 const std::vector<std::string>& centers) {
    BoxCondition cond{id, label, true, true, true, {}};
    for (const auto& center : centers) {
        auto [ys, rs] = wings(c, center);
        if (!ys.empty() && !rs.empty()) {
            cond.pass = false;
            for (const auto& u : ys) cond.witnesses.push_back(center + ":" + u + "~Y");
            for (const auto& u : rs) cond.witnesses.push_back(center + ":" + u + "~R");
        }
    }
    return cond;
}

}  // namespace

BoxReport check_box(const CausalGraph& model, int box, const std::set<std::string>& w_set,
                    Setting setting) {
    if (box < 1 || box > 3) throw std::invalid_argument("box must be 1, 2, or 3");
    if (box == 1 && !w_set.empty())
        throw std::invalid_argument("box 1 takes no auxiliary variables");
    for (const auto& w : w_set) {
        if (!model.has_node(w)) throw std::invalid_argument("unknown node '" + w + "'");
        if (model.node(w).role != NodeRole::AuxiliaryW || !model.node(w).observed)
            throw std::invalid_argument("'" + w + "' is not an observed auxiliary variable");
    }
    auto y = model.find_role(NodeRole::OutcomeY);
    auto r = model.find_role(NodeRole::ResponseR);
    auto s = model.find_role(NodeRole::TreatmentReceivedS);
    if (!y || !r || !s) throw std::invalid_argument("model lacks Y, R, or S");

    BoxContext c{model, *y, *r, analysis_absorbers(model), {}, w_set, box};
    c.path_blockers = c.absorbers;
    for (const auto& w : w_set) c.path_blockers.insert(w);

    BoxReport rep;
    rep.box = box;
    rep.conditions.push_back(direct_path_condition(c));
    rep.conditions.push_back(triangle_condition(c));

    std::vector<std::string> xcenters;
    for (NodeRole role : {NodeRole::CovariateX, NodeRole::CovariateV})
        for (const auto& id : model.nodes_with_role(role)) xcenters.push_back(id);
    rep.conditions.push_back(butterfly_condition(c, "iii", "no X-butterfly", xcenters));

    auto iv = butterfly_condition(c, "iv", "no S-butterfly", {*s});
    if (setting == Setting::OneSided) iv.applies_z0 = false;  // control arm holds S constant
    rep.conditions.push_back(iv);

    if (box >= 2) {
        std::vector<std::string> wcenters(w_set.begin(), w_set.end());
        rep.conditions.push_back(butterfly_condition(c, "v", "no W-butterfly", wcenters));
    }

    rep.pass_z1 = rep.pass_z0 = true;
    for (const auto& cond : rep.conditions) {
        if (!cond.pass && cond.applies_z1) rep.pass_z1 = false;
        if (!cond.pass && cond.applies_z0) rep.pass_z0 = false;
    }
    return rep;
}

std::vector<MnarFinding> mnar_severity(const StructureReport& r) {
    std::vector<MnarFinding> out;
    if (r.has_direct_path)
        out.push_back({0, "direct-path", {},
                       "a direct effect of the outcome on its missingness can only be blocked by "
                       "mediators, which are rarely available"});
    if (!r.triangles.empty() || !r.downstream_nonignorable.empty()) {
        std::vector<std::string> nodes = r.triangles;
        nodes.insert(nodes.end(), r.downstream_nonignorable.begin(),
                     r.downstream_nonignorable.end());
        out.push_back({1, "shared-cause", nodes,
                       "a shared unobserved cause of outcome and missingness; auxiliary variables "
                       "on its arrows may block the path"});
    }
    auto add_butterfly = [&out](const ButterflyReport& b, const std::string& kind) {
        if (!b.present) return;
        std::vector<std::string> nodes = b.y_side;
        nodes.insert(nodes.end(), b.r_side.begin(), b.r_side.end());
        out.push_back({2, kind, nodes,
                       "collider-induced dependence is indirect and tends to be weaker than "
                       "dependence from a shared cause; blocking one wing suffices"});
    };
    add_butterfly(r.x_butterfly, "x-butterfly");
    add_butterfly(r.s_butterfly, "s-butterfly");
    for (const auto& b : r.w_butterflies) add_butterfly(b, "w-butterfly");
    std::stable_sort(out.begin(), out.end(),
                     [](const MnarFinding& a, const MnarFinding& b) { return a.rank < b.rank; });
    return out;
}

std::set<std::string> w_prime(const CausalGraph& model, const std::set<std::string>& w_set,
                              Setting setting) {
    auto passes = [&](const std::set<std::string>& ws) {
        auto rep = check_box(model, 3, ws, setting);
        std::map<std::string, bool> by_id;
        for (const auto& c : rep.conditions) by_id[c.id] = c.pass;
        return by_id;
    };
    auto full = passes(w_set);
    std::set<std::string> keep;
    for (const auto& w : w_set) {
        std::set<std::string> without = w_set;
        without.erase(w);
        auto reduced = passes(without);
        bool needed_elsewhere = false;
        for (const auto& id : {"i", "ii", "iii", "v"})
            if (full.at(id) && !reduced.at(id)) needed_elsewhere = true;
        bool s_butterfly_only = !needed_elsewhere && full.at("iv") && !reduced.at("iv");
        if (!s_butterfly_only) keep.insert(w);
    }
    return keep;
}

}  // namespace psgraph
