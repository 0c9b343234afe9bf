#include "psgraph/ps_transform.hpp"

#include <stdexcept>

namespace psgraph {

CausalGraph to_principal_graph(const CausalGraph& dag) {
    if (dag.kind() != GraphKind::Dag)
        throw std::invalid_argument("input is not a DAG (already transformed?)");
    auto z = dag.find_role(NodeRole::TreatmentAssignedZ);
    auto s = dag.find_role(NodeRole::TreatmentReceivedS);
    if (!z) throw std::invalid_argument("graph has no treatment-assigned node");
    if (!s) throw std::invalid_argument("graph has no treatment-received node");
    if (dag.find_role(NodeRole::PrincipalStratumC))
        throw std::invalid_argument("graph already contains a stratum node");
    if (dag.has_node("C"))
        throw std::invalid_argument("node id 'C' is reserved for the stratum node");
    auto bad = validate_graph(dag);
    if (!bad.empty()) throw std::invalid_argument("invalid graph: " + bad.front());

    CausalGraph out(GraphKind::PsGraph);
    for (const auto& n : dag.nodes()) out.add_node(n.id, n.role);
    out.add_node("C", NodeRole::PrincipalStratumC);
    for (const auto& e : dag.edges()) {
        if (e.kind == EdgeKind::Causal && e.to == *s) {
            if (e.from != *z) out.add_causal(e.from, "C");
            // the Z -> S arrow is subsumed by the deterministic edge
        } else {
            out.add_edge(e);
        }
    }
    out.add_deterministic("C", *s);
    out.add_deterministic(*z, *s);
    return out;
}

std::vector<std::string> validate_principal(const CausalGraph& g) {
    std::vector<std::string> bad;
    if (g.kind() != GraphKind::PsGraph) {
        bad.push_back("graph is not tagged as a ps-graph");
        return bad;
    }
    for (auto& v : validate_graph(g)) bad.push_back(std::move(v));
    return bad;
}

}  // namespace psgraph
