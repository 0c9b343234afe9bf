#ifndef PSGRAPH_PS_TRANSFORM_HPP
#define PSGRAPH_PS_TRANSFORM_HPP

#include <string>
#include <vector>

#include "psgraph/graph.hpp"

namespace psgraph {

/// Rewrites a DAG into the principal-stratification form: a latent stratum
/// node C absorbs every parent of S other than Z, and S becomes an exact
/// function of (C, Z) via deterministic edges. Throws if the input is not a
/// valid DAG with Z and S, or already carries a stratum node, or a node named
/// "C" is present.
CausalGraph to_principal_graph(const CausalGraph& dag);

/// Violations of the ps-graph contract (empty = valid): exactly one stratum
/// node, latent, emitting only the deterministic edge into S.
std::vector<std::string> validate_principal(const CausalGraph& g);

}  // namespace psgraph

#endif
