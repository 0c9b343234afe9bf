#include "psgraph/presets.hpp"

#include <random>
#include <stdexcept>

namespace psgraph {

std::string setting_name(Setting s) {
    return s == Setting::OneSided ? "one-sided" : "two-sided";
}

std::optional<Setting> setting_from_name(const std::string& name) {
    if (name == "one-sided") return Setting::OneSided;
    if (name == "two-sided") return Setting::TwoSided;
    return std::nullopt;
}

std::string preset_name(PresetId id) {
    switch (id) {
        case PresetId::D: return "D";
        case PresetId::DM: return "DM";
        case PresetId::DM_a: return "DM-a";
        case PresetId::DM_b: return "DM-b";
        case PresetId::DM_c: return "DM-c";
        case PresetId::GeneralMain: return "GeneralMain";
        case PresetId::GeneralMain_i: return "GeneralMain-i";
        case PresetId::GeneralMain_ii: return "GeneralMain-ii";
        case PresetId::GeneralMain_iii: return "GeneralMain-iii";
        case PresetId::GeneralMain_iv: return "GeneralMain-iv";
        case PresetId::ThirdMain: return "ThirdMain";
        case PresetId::DownstreamIgnorable: return "DownstreamIgnorable";
        case PresetId::DownstreamNonIgnorable: return "DownstreamNonIgnorable";
        case PresetId::ER: return "ER";
        case PresetId::PI_1: return "PI-1";
        case PresetId::PI_2: return "PI-2";
        case PresetId::CanonicalW: return "CanonicalW";
        case PresetId::InstrumentalW: return "InstrumentalW";
    }
    return "?";
}

std::optional<PresetId> preset_from_name(const std::string& name) {
    for (PresetId id : all_presets())
        if (preset_name(id) == name) return id;
    return std::nullopt;
}

std::vector<PresetId> all_presets() {
    return {PresetId::D,
            PresetId::DM,
            PresetId::DM_a,
            PresetId::DM_b,
            PresetId::DM_c,
            PresetId::GeneralMain,
            PresetId::GeneralMain_i,
            PresetId::GeneralMain_ii,
            PresetId::GeneralMain_iii,
            PresetId::GeneralMain_iv,
            PresetId::ThirdMain,
            PresetId::DownstreamIgnorable,
            PresetId::DownstreamNonIgnorable,
            PresetId::ER,
            PresetId::PI_1,
            PresetId::PI_2,
            PresetId::CanonicalW,
            PresetId::InstrumentalW};
}

namespace {

// Arrows shared by every main model: X -> Z,S,Y; Z -> S,Y; S -> Y.
void add_main(CausalGraph& g, bool z_to_y = true, bool z_to_s = true) {
    g.add_node("X", NodeRole::CovariateX);
    g.add_node("Z", NodeRole::TreatmentAssignedZ);
    g.add_node("S", NodeRole::TreatmentReceivedS);
    g.add_node("Y", NodeRole::OutcomeY);
    g.add_causal("X", "Z");
    g.add_causal("X", "S");
    g.add_causal("X", "Y");
    if (z_to_s) g.add_causal("Z", "S");
    if (z_to_y) g.add_causal("Z", "Y");
    g.add_causal("S", "Y");
}

void add_latent(CausalGraph& g, const std::string& id,
                const std::vector<std::string>& children) {
    g.add_node(id, NodeRole::Unobserved);
    for (const auto& c : children) g.add_causal(id, c);
}

CausalGraph build_dm() {
    CausalGraph g(GraphKind::Dag);
    add_main(g);
    g.add_node("R", NodeRole::ResponseR);
    g.add_causal("Y", "R");
    g.add_causal("S", "R");
    add_latent(g, "U_RX", {"X", "R"});
    add_latent(g, "U_RZ", {"Z", "R"});
    add_latent(g, "U_RS", {"S", "R"});
    add_latent(g, "U_RY", {"Y", "R"});
    add_latent(g, "U_YS", {"S", "Y"});
    add_latent(g, "U_RYS", {"S", "Y", "R"});
    return g;
}

void remove_latent(CausalGraph& g, const std::string& id) { g.remove_node(id); }

CausalGraph build_general_main() {
    CausalGraph g(GraphKind::Dag);
    add_main(g);
    g.add_node("R", NodeRole::ResponseR);
    g.add_causal("S", "R");
    add_latent(g, "U_XY", {"X", "Y"});
    add_latent(g, "U_RX", {"X", "R"});
    add_latent(g, "U_XS", {"X", "S"});
    add_latent(g, "U_RS", {"S", "R"});
    add_latent(g, "U_YS", {"S", "Y"});
    return g;
}

CausalGraph build_instrumental_w(int variant) {
    CausalGraph g(GraphKind::Dag);
    add_main(g);
    g.add_node("R", NodeRole::ResponseR);
    g.add_node("W", NodeRole::AuxiliaryW);
    g.add_causal("S", "R");
    g.add_causal("X", "R");
    switch (variant) {
        case 0:  // W sits on the latent's arrow into R
            add_latent(g, "U_RY", {"Y", "W"});
            g.add_causal("W", "R");
            break;
        case 1:  // W sits on the latent's arrow into Y
            add_latent(g, "U_RY", {"R", "W"});
            g.add_causal("W", "Y");
            break;
        case 2:  // W mediates the direct path Y -> R
            g.add_causal("Y", "W");
            g.add_causal("W", "R");
            break;
        default:
            throw std::invalid_argument("InstrumentalW variant must be 0, 1, or 2");
    }
    return g;
}

}  // namespace

CausalGraph preset(PresetId id, Setting, int variant) {
    switch (id) {
        case PresetId::D: {
            CausalGraph g(GraphKind::Dag);
            add_main(g);
            add_latent(g, "U", {"S", "Y"});
            return g;
        }
        case PresetId::DM:
            return build_dm();
        case PresetId::DM_a: {
            auto g = build_dm();
            g.remove_edge(Edge::causal("Y", "R"));
            remove_latent(g, "U_RY");
            remove_latent(g, "U_RYS");
            return g;
        }
        case PresetId::DM_b: {
            auto g = preset(PresetId::DM_a, Setting::TwoSided);
            remove_latent(g, "U_RS");
            return g;
        }
        case PresetId::DM_c: {
            auto g = preset(PresetId::DM_a, Setting::TwoSided);
            remove_latent(g, "U_YS");
            return g;
        }
        case PresetId::GeneralMain:
            return build_general_main();
        case PresetId::GeneralMain_i: {
            auto g = build_general_main();
            remove_latent(g, "U_RX");
            remove_latent(g, "U_RS");
            return g;
        }
        case PresetId::GeneralMain_ii: {
            auto g = build_general_main();
            remove_latent(g, "U_RX");
            remove_latent(g, "U_YS");
            return g;
        }
        case PresetId::GeneralMain_iii: {
            auto g = build_general_main();
            remove_latent(g, "U_XY");
            remove_latent(g, "U_RS");
            return g;
        }
        case PresetId::GeneralMain_iv: {
            auto g = build_general_main();
            remove_latent(g, "U_XY");
            remove_latent(g, "U_YS");
            return g;
        }
        case PresetId::ThirdMain: {
            CausalGraph g(GraphKind::Dag);
            add_main(g);
            g.add_node("R", NodeRole::ResponseR);
            g.add_causal("S", "R");
            add_latent(g, "U_XZ", {"X", "Z"});
            add_latent(g, "U_RS", {"S", "R"});
            add_latent(g, "U_YS", {"S", "Y"});
            return g;
        }
        case PresetId::DownstreamIgnorable: {
            // latent mediator on the Z -> S arrow that also drives R
            CausalGraph g(GraphKind::Dag);
            add_main(g, /*z_to_y=*/true, /*z_to_s=*/false);
            g.add_node("R", NodeRole::ResponseR);
            add_latent(g, "U", {"S", "Y"});
            add_latent(g, "U_D", {"S", "R"});
            g.add_causal("Z", "U_D");
            return g;
        }
        case PresetId::DownstreamNonIgnorable: {
            // latent mediator on the Z -> Y arrow that also drives R
            CausalGraph g(GraphKind::Dag);
            add_main(g, /*z_to_y=*/false, /*z_to_s=*/true);
            g.add_node("R", NodeRole::ResponseR);
            add_latent(g, "U", {"S", "Y"});
            add_latent(g, "U_D", {"Y", "R"});
            g.add_causal("Z", "U_D");
            return g;
        }
        case PresetId::ER: {
            CausalGraph g(GraphKind::Dag);
            add_main(g, /*z_to_y=*/false);
            g.add_node("R", NodeRole::ResponseR);
            add_latent(g, "U", {"S", "Y"});
            g.add_causal("X", "R");
            g.add_causal("S", "R");
            return g;
        }
        case PresetId::PI_1:
        case PresetId::PI_2: {
            CausalGraph g(GraphKind::Dag);
            add_main(g);
            g.add_node("V", NodeRole::CovariateV);
            g.add_node("R", NodeRole::ResponseR);
            g.add_causal("V", "S");
            g.add_causal("V", "Y");
            g.add_causal("X", "R");
            g.add_causal("V", "R");
            g.add_causal("S", "R");
            if (id == PresetId::PI_1) add_latent(g, "U_XS", {"X", "S"});
            else add_latent(g, "U_XY", {"X", "Y"});
            return g;
        }
        case PresetId::CanonicalW: {
            CausalGraph g(GraphKind::Dag);
            add_main(g);
            g.add_node("R", NodeRole::ResponseR);
            g.add_node("W", NodeRole::AuxiliaryW);
            add_latent(g, "U_YS", {"S", "Y"});
            g.add_causal("W", "Y");
            g.add_causal("W", "R");
            g.add_causal("S", "R");
            g.add_causal("X", "R");
            return g;
        }
        case PresetId::InstrumentalW:
            return build_instrumental_w(variant);
    }
    throw std::invalid_argument("unknown preset");
}

CausalGraph randomize_submodel(PresetId tmpl, std::uint64_t seed) {
    if (tmpl != PresetId::DM && tmpl != PresetId::GeneralMain)
        throw std::invalid_argument("randomize_submodel supports templates DM and GeneralMain");
    CausalGraph g = preset(tmpl, Setting::TwoSided);
    std::mt19937_64 rng(seed);
    auto coin = [&]() { return (rng() >> 63) != 0; };

    // fixed atom order: optional direct edges, latent nodes, latent arrows
    std::vector<Edge> optional_edges;
    if (tmpl == PresetId::DM) optional_edges.push_back(Edge::causal("Y", "R"));
    optional_edges.push_back(Edge::causal("S", "R"));

    std::vector<std::string> latent = g.nodes_with_role(NodeRole::Unobserved);

    std::vector<Edge> latent_arrows;
    for (const auto& u : latent)
        for (const auto& c : g.children(u)) latent_arrows.push_back(Edge::causal(u, c));

    for (const auto& e : optional_edges)
        if (coin() && g.has_edge(e)) g.remove_edge(e);
    for (const auto& u : latent)
        if (coin()) g.remove_node(u);
    for (const auto& e : latent_arrows)
        if (coin() && g.has_edge(e)) g.remove_edge(e);
    return g;
}

}  // namespace psgraph
