#include "psgraph/conditioning.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace psgraph {

std::string ConditionalGraph::resolve(const std::string& id) const {
    auto it = merged.find(id);
    return it == merged.end() ? id : it->second;
}

namespace {

void check_spec(const CausalGraph& g, const ConditioningSpec& spec, Setting setting) {
    std::set<std::string> seen;
    for (const auto& st : spec) {
        if (!g.has_node(st.node)) throw std::invalid_argument("unknown node '" + st.node + "'");
        if (!g.node(st.node).observed)
            throw std::invalid_argument("cannot condition on latent node '" + st.node + "'");
        if (!seen.insert(st.node).second)
            throw std::invalid_argument("node '" + st.node + "' conditioned twice");
        if (st.value && *st.value != 0 && *st.value != 1)
            throw std::invalid_argument("conditioning values must be 0 or 1");
    }
    // order must respect the causal order among the listed nodes
    for (std::size_t i = 0; i < spec.size(); ++i) {
        auto anc = g.ancestors(spec[i].node);
        std::set<std::string> anc_set(anc.begin(), anc.end());
        for (std::size_t j = i + 1; j < spec.size(); ++j)
            if (anc_set.count(spec[j].node))
                throw std::invalid_argument("conditioning order violates the causal order: '" +
                                            spec[j].node + "' is upstream of '" + spec[i].node +
                                            "'");
    }
    if (setting == Setting::OneSided) {
        bool z0 = false, s1 = false;
        for (const auto& st : spec) {
            auto role = g.node(st.node).role;
            if (role == NodeRole::TreatmentAssignedZ && st.value && *st.value == 0) z0 = true;
            if (role == NodeRole::TreatmentReceivedS && st.value && *st.value == 1) s1 = true;
        }
        if (z0 && s1)
            throw std::invalid_argument(
                "inconsistent values: one-sided control arm forces S = 0");
    }
}

/// Dash every pair of remaining nodes that points into {v} + ancestors(v).
void add_induced_dashes(CausalGraph& g, const std::string& v) {
    std::set<std::string> fan;
    fan.insert(v);
    for (const auto& a : g.ancestors(v)) fan.insert(a);

    std::set<std::string> attach;
    for (const auto& e : g.edges()) {
        if (e.kind == EdgeKind::Dashed) {
            if (fan.count(e.to) && e.from != v) attach.insert(e.from);
            if (fan.count(e.from) && e.to != v) attach.insert(e.to);
        } else if (fan.count(e.to) && e.from != v) {
            attach.insert(e.from);
        }
    }
    std::vector<std::string> pts(attach.begin(), attach.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!g.has_edge(Edge::dashed(pts[i], pts[j]))) g.add_dashed(pts[i], pts[j]);
}

bool merge_one_to_one(CausalGraph& g, std::map<std::string, std::string>& merged) {
    auto c = g.find_role(NodeRole::PrincipalStratumC);
    auto s = g.find_role(NodeRole::TreatmentReceivedS);
    if (!c || !s) return false;
    auto det = g.det_parents(*s);
    if (det != std::vector<std::string>{*c}) return false;
    if (!g.parents(*s).empty() && g.parents(*s) != det) return false;

    const std::string merged_id = "C_eq_S";
    if (g.has_node(merged_id))
        throw std::invalid_argument("node id 'C_eq_S' is reserved for the merged node");

    std::vector<Edge> rewired;
    for (const auto& e : g.edges()) {
        if ((e.from == *c && e.to == *s) || (e.from == *s && e.to == *c)) continue;
        Edge ne = e;
        if (ne.from == *c || ne.from == *s) ne.from = merged_id;
        if (ne.to == *c || ne.to == *s) ne.to = merged_id;
        if (ne.kind == EdgeKind::Dashed) ne = Edge::dashed(ne.from, ne.to);
        if (ne.from != e.from || ne.to != e.to) rewired.push_back(ne);
    }
    g.add_node(merged_id, NodeRole::TreatmentReceivedS);
    g.remove_node(*c);
    g.remove_node(*s);
    for (const auto& e : rewired)
        if (!g.has_edge(e)) g.add_edge(e);
    merged[*c] = merged_id;
    merged[*s] = merged_id;
    return true;
}

}  // namespace

ConditionalGraph condition(const CausalGraph& g, const ConditioningSpec& spec, Setting setting) {
    check_spec(g, spec, setting);

    CausalGraph work = g;
    work.set_kind(GraphKind::Conditional);
    ConditionalGraph out;
    out.provenance = spec;

    std::optional<int> z_value;
    for (const auto& st : spec) {
        if (work.node(st.node).role == NodeRole::TreatmentAssignedZ) z_value = st.value;
        add_induced_dashes(work, st.node);
        work.remove_node(st.node);
    }

    // declutter to fixpoint: (a) constants, (b) one-to-one merges,
    // (c) latent unique causes, (d) latent non-causes
    bool changed = true;
    while (changed) {
        changed = false;

        if (setting == Setting::OneSided && z_value && *z_value == 0) {
            if (auto s = work.find_role(NodeRole::TreatmentReceivedS)) {
                work.remove_node(*s);
                out.dropped.push_back(*s);
                changed = true;
                continue;
            }
        }
        for (const auto& n : work.nodes()) {
            if (n.role == NodeRole::Constant) {
                work.remove_node(n.id);
                out.dropped.push_back(n.id);
                changed = true;
                break;
            }
        }
        if (changed) continue;

        if (setting == Setting::OneSided && z_value && *z_value == 1) {
            if (merge_one_to_one(work, out.merged)) {
                changed = true;
                continue;
            }
        }

        for (const auto& n : work.nodes()) {
            if (n.role != NodeRole::Unobserved) continue;
            auto kids = work.children(n.id);
            bool unconnected = work.parents(n.id).empty() && work.dashed_neighbors(n.id).empty();
            if (kids.empty() || (kids.size() == 1 && unconnected)) {
                work.remove_node(n.id);
                out.dropped.push_back(n.id);
                changed = true;
                break;
            }
        }
    }

    out.graph = std::move(work);
    return out;
}

std::vector<std::string> collider_fan(const CausalGraph& g, const std::string& v) {
    return g.ancestors(v);
}

ConditioningSpec parse_spec(const std::string& text) {
    ConditioningSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            spec.push_back({item, std::nullopt});
        } else {
            std::string node = item.substr(0, eq);
            std::string val = item.substr(eq + 1);
            if (val != "0" && val != "1")
                throw std::invalid_argument("conditioning value must be 0 or 1 in '" + item + "'");
            spec.push_back({node, val == "1" ? 1 : 0});
        }
    }
    if (spec.empty()) throw std::invalid_argument("empty conditioning spec");
    return spec;
}

}  // namespace psgraph
