#ifndef PSGRAPH_SEPARATION_HPP
#define PSGRAPH_SEPARATION_HPP

#include <set>
#include <string>
#include <vector>

#include "psgraph/graph.hpp"

namespace psgraph {

/// Simple path with per-node collider annotation (endpoints are never colliders).
struct Path {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    std::vector<bool> collider;  // aligned with nodes

    std::string to_string() const;
};

enum class PathType {
    Type1Direct,                ///< the single edge Y -> R
    Type2UnobservedCommonCause, ///< interior nodes all unobserved, no S/C on the path
    Type3ViaSOrC,               ///< passes through S, C, or the merged C=S node
    Other,
};

std::string path_type_name(PathType t);

/// Nodes treated as conditioned: `given` plus every node whose deterministic
/// sources all lie in the closure (fixpoint).
std::set<std::string> determinism_closure(const CausalGraph& g, const std::set<std::string>& given);

/// m-separation on mixed graphs. Dashed edges carry arrowheads at both ends
/// (a latent common cause), deterministic edges traverse like causal arrows,
/// and the conditioning set is expanded by the determinism closure. Implemented
/// as head/tail reachability over walks, not path enumeration.
bool m_separated(const CausalGraph& g, const std::string& a, const std::string& b,
                 const std::set<std::string>& given);

/// All simple active paths between a and b under the same semantics; empty
/// exactly when m_separated holds.
std::vector<Path> enumerate_active_paths(const CausalGraph& g, const std::string& a,
                                         const std::string& b, const std::set<std::string>& given);

/// Classifies a path between the response node and outcome node.
PathType classify_path(const CausalGraph& g, const Path& p);

}  // namespace psgraph

#endif
