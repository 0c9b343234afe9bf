#ifndef PSGRAPH_CONDITIONING_HPP
#define PSGRAPH_CONDITIONING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psgraph/graph.hpp"
#include "psgraph/presets.hpp"

namespace psgraph {

/// One conditioning step: a node held at a symbolic value (nullopt) or at a
/// fixed binary value.
struct ConditionStep {
    std::string node;
    std::optional<int> value;  // nullopt = symbolic
};

using ConditioningSpec = std::vector<ConditionStep>;

/// Result of conditioning: the residual graph plus bookkeeping for nodes that
/// were merged (one-to-one pairs) or dropped by decluttering.
struct ConditionalGraph {
    CausalGraph graph;
    std::map<std::string, std::string> merged;  // original id -> merged id
    std::vector<std::string> dropped;           // decluttered nodes
    ConditioningSpec provenance;

    /// Resolves an original node id through the merged-node map.
    std::string resolve(const std::string& id) const;
};

/// Derives the conditional graph. Steps must follow the causal order and name
/// observed nodes. Per step, every pair of remaining nodes with an arrow or
/// dash into the step node or one of its ancestors is joined by a dashed edge
/// (the induced non-causal dependence), then the node is dropped. Afterwards
/// the graph is decluttered to a fixpoint: constants drop (S in the one-sided
/// control arm), one-to-one adjacent pairs merge (C and S in the one-sided
/// treated arm, merged as C_eq_S), and latent nodes that became unique causes
/// or non-causes drop. The stratum node is never decluttered.
ConditionalGraph condition(const CausalGraph& g, const ConditioningSpec& spec, Setting setting);

/// All causes of v, direct and indirect: the group rendered mutually dependent
/// by conditioning on v alone.
std::vector<std::string> collider_fan(const CausalGraph& g, const std::string& v);

/// Parses "X,Z=1,S=0" into a spec.
ConditioningSpec parse_spec(const std::string& text);

}  // namespace psgraph

#endif
