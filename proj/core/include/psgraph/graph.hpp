#ifndef PSGRAPH_GRAPH_HPP
#define PSGRAPH_GRAPH_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace psgraph {

/// Role a node plays in the analysis set.
enum class NodeRole {
    CovariateX,          ///< baseline covariate in the ignorability set
    CovariateV,          ///< extra baseline covariate (identification only)
    AuxiliaryW,          ///< auxiliary variable for missingness
    TreatmentAssignedZ,
    TreatmentReceivedS,
    OutcomeY,
    ResponseR,           ///< outcome-observed indicator
    PrincipalStratumC,   ///< derived stratum node, only in ps/conditional graphs
    Unobserved,
    Constant,
};

/// Whether a role is observed by default (C and Unobserved are latent).
bool default_observed(NodeRole role);

std::string role_name(NodeRole role);
std::optional<NodeRole> role_from_name(const std::string& name);

struct Node {
    std::string id;
    NodeRole role = NodeRole::Unobserved;
    bool observed = false;
};

enum class EdgeKind {
    Causal,         ///< directed arrow
    Deterministic,  ///< directed, target is an exact function of its deterministic sources
    Dashed,         ///< undirected marker of conditioning-induced dependence
};

struct Edge {
    EdgeKind kind = EdgeKind::Causal;
    std::string from;
    std::string to;

    static Edge causal(std::string a, std::string b);
    static Edge deterministic(std::string a, std::string b);
    static Edge dashed(std::string a, std::string b);  // canonicalized so from < to

    bool operator==(const Edge& o) const { return kind == o.kind && from == o.from && to == o.to; }
};

enum class GraphKind { Dag, PsGraph, Conditional };

/// Mixed causal graph over named nodes. Value type; operations elsewhere treat
/// graphs as immutable and return new ones.
class CausalGraph {
public:
    CausalGraph() = default;
    explicit CausalGraph(GraphKind kind) : kind_(kind) {}

    GraphKind kind() const { return kind_; }
    void set_kind(GraphKind k) { kind_ = k; }

    /// Adds a node; observed flag follows the role. Throws on duplicate id or
    /// an id that is not an identifier token.
    void add_node(const std::string& id, NodeRole role);

    bool has_node(const std::string& id) const { return index_.count(id) > 0; }
    const Node& node(const std::string& id) const;
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }

    void add_edge(const Edge& e);
    void add_causal(const std::string& a, const std::string& b) { add_edge(Edge::causal(a, b)); }
    void add_deterministic(const std::string& a, const std::string& b) { add_edge(Edge::deterministic(a, b)); }
    void add_dashed(const std::string& a, const std::string& b) { add_edge(Edge::dashed(a, b)); }

    bool has_edge(const Edge& e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    void remove_edge(const Edge& e);
    /// Removes the node and every incident edge.
    void remove_node(const std::string& id);

    /// Sources of directed (Causal or Deterministic) edges into id, sorted.
    std::vector<std::string> parents(const std::string& id) const;
    /// Sources of Deterministic edges into id, sorted.
    std::vector<std::string> det_parents(const std::string& id) const;
    /// Targets of directed edges out of id, sorted.
    std::vector<std::string> children(const std::string& id) const;
    std::vector<std::string> dashed_neighbors(const std::string& id) const;

    /// Strict ancestors / descendants along directed edges.
    std::vector<std::string> ancestors(const std::string& id) const;
    std::vector<std::string> descendants(const std::string& id) const;

    /// Topological order of the directed part. Throws if cyclic.
    std::vector<std::string> topological_order() const;
    bool directed_part_acyclic() const;

    std::vector<std::string> nodes_with_role(NodeRole role) const;
    /// Id of the unique node with this role, if present (first by insertion).
    std::optional<std::string> find_role(NodeRole role) const;

    bool operator==(const CausalGraph& o) const;

private:
    void check_node(const std::string& id) const;

    GraphKind kind_ = GraphKind::Dag;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Edge> edges_;
};

/// Checks every structural invariant and returns the violations (empty = valid).
/// Violations are data, not exceptions: acyclicity of the directed part, edge
/// endpoints, role cardinalities, observed flags, dashed edges only in
/// conditional graphs, deterministic edges only into the treatment-received
/// node, and ps-graph constraints on the stratum node.
std::vector<std::string> validate_graph(const CausalGraph& g);

bool valid_identifier(const std::string& id);

}  // namespace psgraph

#endif
