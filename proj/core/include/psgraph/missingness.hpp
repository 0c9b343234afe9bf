#ifndef PSGRAPH_MISSINGNESS_HPP
#define PSGRAPH_MISSINGNESS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psgraph/conditioning.hpp"
#include "psgraph/graph.hpp"
#include "psgraph/presets.hpp"

namespace psgraph {

/// Per-arm missingness flags. One-sided: mar1, mar0, lmar0. Two-sided:
/// mar_z1/mar_z0 and lmar_z1/lmar_z0.
struct MissingnessVerdict {
    Setting setting = Setting::TwoSided;
    bool mar1 = false;
    bool mar0 = false;
    bool lmar0 = false;
    bool mar_z1 = false;
    bool mar_z0 = false;
    bool lmar_z1 = false;
    bool lmar_z0 = false;

    bool mar() const;   ///< all MAR flags for the setting
    bool lmar() const;  ///< all latent-MAR flags for the setting

    enum class Label { MAR, LMARAndMAR, MNAR, MARNotLMAR };
    Label overall() const;
    std::string overall_name() const;
};

struct ButterflyReport {
    bool present = false;
    std::string center;
    std::vector<std::string> y_side;  // latent wing shared with Y
    std::vector<std::string> r_side;  // latent wing shared with R
};

struct StructureReport {
    bool has_direct_path = false;
    std::vector<std::string> triangles;                 // root latents causing both Y and R
    std::vector<std::string> downstream_nonignorable;   // non-root latents causing both Y and R
    ButterflyReport x_butterfly;
    ButterflyReport s_butterfly;
    std::vector<ButterflyReport> w_butterflies;
};

struct BoxCondition {
    std::string id;     // "i".."v"
    std::string label;
    bool applies_z1 = true;
    bool applies_z0 = true;
    bool pass = true;
    std::vector<std::string> witnesses;
};

struct BoxReport {
    int box = 1;
    std::vector<BoxCondition> conditions;
    bool pass_z1 = true;
    bool pass_z0 = true;
    bool pass() const { return pass_z1 && pass_z0; }
};

struct MnarFinding {
    int rank = 0;  // 0 = direct path, 1 = shared cause, 2 = butterfly
    std::string kind;
    std::vector<std::string> nodes;
    std::string note;
};

/// Classifies the model per arm: builds the ps-graph, conditions on the
/// observed covariates (X, V, W) and the arm, then tests R-Y separation given
/// S (MAR) and given C with determinism closure (latent MAR). The one-sided
/// control arm tests MAR0 given nothing and LMAR0 given C.
MissingnessVerdict classify_missingness(const CausalGraph& model, Setting setting);

/// Purely structural scan of a DAG for the patterns that break MAR.
StructureReport detect_structures(const CausalGraph& model);

/// Box 1: structure conditions only (w_set must be empty). Box 2: auxiliary
/// variables in w_set absorb the common causes they are. Box 3: a condition
/// also passes when w_set blocks every offending path. Condition (iv) holds
/// automatically for the one-sided control arm.
BoxReport check_box(const CausalGraph& model, int box, const std::set<std::string>& w_set,
                    Setting setting);

/// Findings ordered by severity: direct path, then shared causes, then
/// butterfly structures.
std::vector<MnarFinding> mnar_severity(const StructureReport& r);

/// Subset of w_set after removing members whose only contribution to the Box-3
/// conditions is breaking the S-butterfly in the treated arm; used for the
/// one-sided control-arm recovery.
std::set<std::string> w_prime(const CausalGraph& model, const std::set<std::string>& w_set,
                              Setting setting);

}  // namespace psgraph

#endif
