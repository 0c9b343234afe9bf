#include "psgraph/separation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace psgraph {

namespace {

struct Incidence {
    std::string other;
    Edge edge;
    bool head_here;   // arrowhead at this node
    bool head_other;  // arrowhead at the other end
};

std::map<std::string, std::vector<Incidence>> build_adjacency(const CausalGraph& g) {
    std::map<std::string, std::vector<Incidence>> adj;
    for (const auto& n : g.nodes()) adj[n.id];
    for (const auto& e : g.edges()) {
        if (e.kind == EdgeKind::Dashed) {
            adj[e.from].push_back({e.to, e, true, true});
            adj[e.to].push_back({e.from, e, true, true});
        } else {
            adj[e.from].push_back({e.to, e, false, true});
            adj[e.to].push_back({e.from, e, true, false});
        }
    }
    for (auto& [id, v] : adj)
        std::sort(v.begin(), v.end(), [](const Incidence& a, const Incidence& b) {
            if (a.other != b.other) return a.other < b.other;
            return a.edge.kind < b.edge.kind;
        });
    return adj;
}

void check_query(const CausalGraph& g, const std::string& a, const std::string& b,
                 const std::set<std::string>& given) {
    if (!g.has_node(a)) throw std::invalid_argument("unknown node '" + a + "'");
    if (!g.has_node(b)) throw std::invalid_argument("unknown node '" + b + "'");
    for (const auto& k : given)
        if (!g.has_node(k)) throw std::invalid_argument("unknown node '" + k + "'");
    if (a == b) throw std::invalid_argument("query endpoints coincide: '" + a + "'");
    if (given.count(a) || given.count(b))
        throw std::invalid_argument("query endpoint is in the conditioning set");
}

/// has_cond_desc[v]: v itself or some directed descendant is (effectively) conditioned.
std::map<std::string, bool> conditioned_descendants(const CausalGraph& g,
                                                    const std::set<std::string>& closure) {
    std::map<std::string, bool> has;
    auto order = g.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        bool h = closure.count(*it) > 0;
        if (!h)
            for (const auto& c : g.children(*it))
                if (has[c]) { h = true; break; }
        has[*it] = h;
    }
    return has;
}

}  // namespace

std::string Path::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out += nodes[i];
        if (i + 1 < edges.size() + 1 && i < edges.size()) {
            const Edge& e = edges[i];
            if (e.kind == EdgeKind::Dashed) out += " -- ";
            else if (e.from == nodes[i]) out += (e.kind == EdgeKind::Deterministic ? " => " : " -> ");
            else out += (e.kind == EdgeKind::Deterministic ? " <= " : " <- ");
        }
    }
    return out;
}

std::string path_type_name(PathType t) {
    switch (t) {
        case PathType::Type1Direct: return "type1-direct";
        case PathType::Type2UnobservedCommonCause: return "type2-unobserved-common-cause";
        case PathType::Type3ViaSOrC: return "type3-via-S-or-C";
        case PathType::Other: return "other";
    }
    return "other";
}

std::set<std::string> determinism_closure(const CausalGraph& g,
                                          const std::set<std::string>& given) {
    std::set<std::string> closure = given;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& n : g.nodes()) {
            if (closure.count(n.id)) continue;
            auto det = g.det_parents(n.id);
            if (det.empty()) continue;
            bool all = std::all_of(det.begin(), det.end(),
                                   [&](const std::string& p) { return closure.count(p) > 0; });
            if (all) {
                closure.insert(n.id);
                changed = true;
            }
        }
    }
    return closure;
}

bool m_separated(const CausalGraph& g, const std::string& a, const std::string& b,
                 const std::set<std::string>& given) {
    check_query(g, a, b, given);
    auto closure = determinism_closure(g, given);
    auto has_cond_desc = conditioned_descendants(g, closure);
    auto adj = build_adjacency(g);

    // states: (node, arrived-through-arrowhead?)
    std::set<std::pair<std::string, bool>> visited;
    std::deque<std::pair<std::string, bool>> queue;
    for (const auto& inc : adj[a]) {
        if (inc.other == b) return false;
        auto st = std::make_pair(inc.other, inc.head_other);
        if (visited.insert(st).second) queue.push_back(st);
    }
    while (!queue.empty()) {
        auto [v, head_in] = queue.front();
        queue.pop_front();
        for (const auto& inc : adj[v]) {
            bool collider = head_in && inc.head_here;
            bool pass = collider ? has_cond_desc[v] : closure.count(v) == 0;
            if (!pass) continue;
            if (inc.other == b) return false;
            auto st = std::make_pair(inc.other, inc.head_other);
            if (visited.insert(st).second) queue.push_back(st);
        }
    }
    return true;
}

std::vector<Path> enumerate_active_paths(const CausalGraph& g, const std::string& a,
                                         const std::string& b,
                                         const std::set<std::string>& given) {
    check_query(g, a, b, given);
    auto closure = determinism_closure(g, given);
    auto has_cond_desc = conditioned_descendants(g, closure);
    auto adj = build_adjacency(g);

    std::vector<Path> found;
    std::vector<std::string> nodes{a};
    std::vector<Incidence> trail;
    std::set<std::string> on_path{a};

    auto path_active = [&]() {
        for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
            bool collider = trail[i - 1].head_other && trail[i].head_here;
            if (collider) {
                if (!has_cond_desc[nodes[i]]) return false;
            } else {
                if (closure.count(nodes[i])) return false;
            }
        }
        return true;
    };

    std::function<void(const std::string&)> dfs = [&](const std::string& v) {
        if (v == b) {
            if (path_active()) {
                Path p;
                p.nodes = nodes;
                for (const auto& t : trail) p.edges.push_back(t.edge);
                p.collider.assign(nodes.size(), false);
                for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
                    p.collider[i] = trail[i - 1].head_other && trail[i].head_here;
                found.push_back(std::move(p));
            }
            return;
        }
        for (const auto& inc : adj[v]) {
            if (on_path.count(inc.other)) continue;
            nodes.push_back(inc.other);
            trail.push_back(inc);
            on_path.insert(inc.other);
            dfs(inc.other);
            on_path.erase(inc.other);
            trail.pop_back();
            nodes.pop_back();
        }
    };
    dfs(a);
    return found;
}

PathType classify_path(const CausalGraph& g, const Path& p) {
    if (p.nodes.size() < 2) throw std::invalid_argument("path too short");
    auto role_of = [&](const std::string& id) { return g.node(id).role; };
    auto is_list_end = [&](const std::string& id, NodeRole r) { return role_of(id) == r; };
    const std::string& first = p.nodes.front();
    const std::string& last = p.nodes.back();
    bool ry = is_list_end(first, NodeRole::ResponseR) && is_list_end(last, NodeRole::OutcomeY);
    bool yr = is_list_end(first, NodeRole::OutcomeY) && is_list_end(last, NodeRole::ResponseR);
    if (!ry && !yr)
        throw std::invalid_argument("path is not between the response and outcome nodes");

    if (p.nodes.size() == 2 && p.edges.size() == 1) {
        const Edge& e = p.edges.front();
        if (e.kind == EdgeKind::Causal && role_of(e.from) == NodeRole::OutcomeY &&
            role_of(e.to) == NodeRole::ResponseR)
            return PathType::Type1Direct;
    }
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
        NodeRole r = role_of(p.nodes[i]);
        if (r == NodeRole::TreatmentReceivedS || r == NodeRole::PrincipalStratumC)
            return PathType::Type3ViaSOrC;
    }
    bool all_unobserved = p.nodes.size() > 2;
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i)
        if (role_of(p.nodes[i]) != NodeRole::Unobserved) all_unobserved = false;
    if (all_unobserved) return PathType::Type2UnobservedCommonCause;
    return PathType::Other;
}

}  // namespace psgraph
