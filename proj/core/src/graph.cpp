#include "psgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace psgraph {

bool default_observed(NodeRole role) {
    switch (role) {
        case NodeRole::Unobserved:
        case NodeRole::PrincipalStratumC:
            return false;
        default:
            return true;
    }
}

std::string role_name(NodeRole role) {
    switch (role) {
        case NodeRole::CovariateX: return "covariate";
        case NodeRole::CovariateV: return "aux_v";
        case NodeRole::AuxiliaryW: return "aux_w";
        case NodeRole::TreatmentAssignedZ: return "treatment_assigned";
        case NodeRole::TreatmentReceivedS: return "treatment_received";
        case NodeRole::OutcomeY: return "outcome";
        case NodeRole::ResponseR: return "response";
        case NodeRole::PrincipalStratumC: return "stratum";
        case NodeRole::Unobserved: return "unobserved";
        case NodeRole::Constant: return "constant";
    }
    return "unobserved";
}

std::optional<NodeRole> role_from_name(const std::string& name) {
    static const std::unordered_map<std::string, NodeRole> table = {
        {"covariate", NodeRole::CovariateX},
        {"aux_v", NodeRole::CovariateV},
        {"aux_w", NodeRole::AuxiliaryW},
        {"treatment_assigned", NodeRole::TreatmentAssignedZ},
        {"treatment_received", NodeRole::TreatmentReceivedS},
        {"outcome", NodeRole::OutcomeY},
        {"response", NodeRole::ResponseR},
        {"stratum", NodeRole::PrincipalStratumC},
        {"unobserved", NodeRole::Unobserved},
        {"constant", NodeRole::Constant},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

bool valid_identifier(const std::string& id) {
    if (id.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_')) return false;
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Edge Edge::causal(std::string a, std::string b) {
    return Edge{EdgeKind::Causal, std::move(a), std::move(b)};
}

Edge Edge::deterministic(std::string a, std::string b) {
    return Edge{EdgeKind::Deterministic, std::move(a), std::move(b)};
}

Edge Edge::dashed(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return Edge{EdgeKind::Dashed, std::move(a), std::move(b)};
}

void CausalGraph::check_node(const std::string& id) const {
    if (!has_node(id)) throw std::invalid_argument("unknown node '" + id + "'");
}

void CausalGraph::add_node(const std::string& id, NodeRole role) {
    if (!valid_identifier(id)) throw std::invalid_argument("invalid node id '" + id + "'");
    if (has_node(id)) throw std::invalid_argument("duplicate node '" + id + "'");
    index_[id] = nodes_.size();
    nodes_.push_back(Node{id, role, default_observed(role)});
}

const Node& CausalGraph::node(const std::string& id) const {
    check_node(id);
    return nodes_[index_.at(id)];
}

void CausalGraph::add_edge(const Edge& e) {
    check_node(e.from);
    check_node(e.to);
    if (e.from == e.to) throw std::invalid_argument("self edge on '" + e.from + "'");
    if (has_edge(e)) throw std::invalid_argument("duplicate edge " + e.from + " - " + e.to);
    edges_.push_back(e);
}

bool CausalGraph::has_edge(const Edge& e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

void CausalGraph::remove_edge(const Edge& e) {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) throw std::invalid_argument("no such edge " + e.from + " - " + e.to);
    edges_.erase(it);
}

void CausalGraph::remove_node(const std::string& id) {
    check_node(id);
    edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                                [&](const Edge& e) { return e.from == id || e.to == id; }),
                 edges_.end());
    std::size_t pos = index_.at(id);
    nodes_.erase(nodes_.begin() + static_cast<std::ptrdiff_t>(pos));
    index_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i].id] = i;
}

std::vector<std::string> CausalGraph::parents(const std::string& id) const {
    check_node(id);
    std::set<std::string> out;
    for (const auto& e : edges_)
        if (e.kind != EdgeKind::Dashed && e.to == id) out.insert(e.from);
    return {out.begin(), out.end()};
}

std::vector<std::string> CausalGraph::det_parents(const std::string& id) const {
    check_node(id);
    std::set<std::string> out;
    for (const auto& e : edges_)
        if (e.kind == EdgeKind::Deterministic && e.to == id) out.insert(e.from);
    return {out.begin(), out.end()};
}

std::vector<std::string> CausalGraph::children(const std::string& id) const {
    check_node(id);
    std::set<std::string> out;
    for (const auto& e : edges_)
        if (e.kind != EdgeKind::Dashed && e.from == id) out.insert(e.to);
    return {out.begin(), out.end()};
}

std::vector<std::string> CausalGraph::dashed_neighbors(const std::string& id) const {
    check_node(id);
    std::set<std::string> out;
    for (const auto& e : edges_) {
        if (e.kind != EdgeKind::Dashed) continue;
        if (e.from == id) out.insert(e.to);
        if (e.to == id) out.insert(e.from);
    }
    return {out.begin(), out.end()};
}

namespace {

std::vector<std::string> reach(const CausalGraph& g, const std::string& start, bool forward) {
    std::set<std::string> seen;
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        auto next = forward ? g.children(v) : g.parents(v);
        for (const auto& w : next)
            if (seen.insert(w).second) queue.push_back(w);
    }
    seen.erase(start);
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<std::string> CausalGraph::ancestors(const std::string& id) const {
    check_node(id);
    return reach(*this, id, /*forward=*/false);
}

std::vector<std::string> CausalGraph::descendants(const std::string& id) const {
    check_node(id);
    return reach(*this, id, /*forward=*/true);
}

std::vector<std::string> CausalGraph::topological_order() const {
    std::unordered_map<std::string, int> indeg;
    for (const auto& n : nodes_) indeg[n.id] = 0;
    for (const auto& e : edges_)
        if (e.kind != EdgeKind::Dashed) ++indeg[e.to];
    // stable: process in insertion order among ready nodes
    std::vector<std::string> order;
    std::vector<bool> done(nodes_.size(), false);
    while (order.size() < nodes_.size()) {
        bool progressed = false;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            if (done[i] || indeg[nodes_[i].id] != 0) continue;
            done[i] = true;
            progressed = true;
            order.push_back(nodes_[i].id);
            for (const auto& c : children(nodes_[i].id)) --indeg[c];
        }
        if (!progressed) throw std::invalid_argument("directed part of graph is cyclic");
    }
    return order;
}

bool CausalGraph::directed_part_acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<std::string> CausalGraph::nodes_with_role(NodeRole role) const {
    std::vector<std::string> out;
    for (const auto& n : nodes_)
        if (n.role == role) out.push_back(n.id);
    return out;
}

std::optional<std::string> CausalGraph::find_role(NodeRole role) const {
    for (const auto& n : nodes_)
        if (n.role == role) return n.id;
    return std::nullopt;
}

bool CausalGraph::operator==(const CausalGraph& o) const {
    if (kind_ != o.kind_ || nodes_.size() != o.nodes_.size() || edges_.size() != o.edges_.size())
        return false;
    auto key = [](const Node& n) { return std::make_tuple(n.id, n.role, n.observed); };
    std::vector<std::tuple<std::string, NodeRole, bool>> a, b;
    for (const auto& n : nodes_) a.push_back(key(n));
    for (const auto& n : o.nodes_) b.push_back(key(n));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    auto ekey = [](const Edge& e) { return std::make_tuple(e.kind, e.from, e.to); };
    std::vector<std::tuple<EdgeKind, std::string, std::string>> ea, eb;
    for (const auto& e : edges_) ea.push_back(ekey(e));
    for (const auto& e : o.edges_) eb.push_back(ekey(e));
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

std::vector<std::string> validate_graph(const CausalGraph& g) {
    std::vector<std::string> bad;
    for (const auto& n : g.nodes()) {
        if (!valid_identifier(n.id)) bad.push_back("invalid node id '" + n.id + "'");
        if (n.observed != default_observed(n.role))
            bad.push_back("node '" + n.id + "' has observed flag inconsistent with role " +
                          role_name(n.role));
    }
    for (const auto& e : g.edges()) {
        if (!g.has_node(e.from) || !g.has_node(e.to))
            bad.push_back("edge with missing endpoint " + e.from + " - " + e.to);
    }
    if (!g.directed_part_acyclic()) bad.push_back("cycle in directed edges");

    for (NodeRole r : {NodeRole::TreatmentAssignedZ, NodeRole::TreatmentReceivedS,
                       NodeRole::OutcomeY, NodeRole::ResponseR, NodeRole::PrincipalStratumC}) {
        if (g.nodes_with_role(r).size() > 1)
            bad.push_back("more than one node with role " + role_name(r));
    }

    if (g.kind() != GraphKind::Conditional) {
        for (const auto& e : g.edges())
            if (e.kind == EdgeKind::Dashed)
                bad.push_back("dashed edge " + e.from + " -- " + e.to +
                              " outside a conditional graph");
    }

    auto s = g.find_role(NodeRole::TreatmentReceivedS);
    for (const auto& e : g.edges()) {
        if (e.kind == EdgeKind::Deterministic) {
            if (g.kind() == GraphKind::Dag)
                bad.push_back("deterministic edge " + e.from + " => " + e.to + " in a DAG");
            else if (!s || e.to != *s)
                bad.push_back("deterministic edge into '" + e.to +
                              "', which is not the treatment-received node");
        }
    }

    if (g.kind() == GraphKind::PsGraph) {
        auto cs = g.nodes_with_role(NodeRole::PrincipalStratumC);
        if (cs.size() != 1) {
            bad.push_back("ps-graph must contain exactly one stratum node");
        } else {
            const std::string& c = cs.front();
            if (g.node(c).observed) bad.push_back("stratum node '" + c + "' marked observed");
            bool ok_out = true;
            for (const auto& e : g.edges()) {
                if (e.kind == EdgeKind::Dashed) continue;
                if (e.from == c && !(e.kind == EdgeKind::Deterministic && s && e.to == *s))
                    ok_out = false;
            }
            if (!ok_out)
                bad.push_back("stratum node '" + c +
                              "' emits an edge other than the deterministic edge into S");
            if (s && !g.has_edge(Edge::deterministic(c, *s)))
                bad.push_back("ps-graph lacks the deterministic edge " + c + " => " + *s);
        }
    }
    return bad;
}

}  // namespace psgraph
