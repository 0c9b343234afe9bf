#ifndef PSGRAPH_PRESETS_HPP
#define PSGRAPH_PRESETS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psgraph/graph.hpp"

namespace psgraph {

enum class Setting { OneSided, TwoSided };

std::string setting_name(Setting s);
std::optional<Setting> setting_from_name(const std::string& name);

/// Named model families. DM is the combined main + semi-saturated missingness
/// model; DM_a/b/c are its nested submodels. GeneralMain adds shared latent
/// causes between X and S/Y; ThirdMain shares them between X and Z instead.
enum class PresetId {
    D,
    DM,
    DM_a,
    DM_b,
    DM_c,
    GeneralMain,
    GeneralMain_i,
    GeneralMain_ii,
    GeneralMain_iii,
    GeneralMain_iv,
    ThirdMain,
    DownstreamIgnorable,
    DownstreamNonIgnorable,
    ER,
    PI_1,
    PI_2,
    CanonicalW,
    InstrumentalW,
};

std::string preset_name(PresetId id);
std::optional<PresetId> preset_from_name(const std::string& name);
std::vector<PresetId> all_presets();

/// Builds the named graph. The same structure serves both settings; the
/// setting matters downstream (conditioning, mechanisms). `variant` selects
/// the placement of W for InstrumentalW: 0 = on the latent's arrow into R,
/// 1 = on the latent's arrow into Y, 2 = mediating the direct Y->R path.
CausalGraph preset(PresetId id, Setting setting, int variant = 0);

/// Deterministic random submodel of DM or GeneralMain: a seeded coin per
/// optional element (Y->R, S->R, each latent node, each latent arrow) decides
/// removal; the main-model arrows always stay. Throws for other templates.
CausalGraph randomize_submodel(PresetId tmpl, std::uint64_t seed);

}  // namespace psgraph

#endif
