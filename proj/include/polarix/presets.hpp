#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarix/analysis.hpp"

namespace polarix {

/// One output file's worth of results. Several parts share the same columns and are
/// written one after another (e.g. the three drive-curve families).
struct PresetOutput {
    std::string name;
    std::vector<SweepResult> parts;
};

struct PresetOptions {
    unsigned threads = 1;
    /// Overrides the per-axis point count of every continuous axis.
    std::optional<int> points;
};

/// Figure presets accepted by `sweep`: fig3a fig3b fig3c figS2 figS4 figS5 figS6 figS7 figS8.
const std::vector<std::string>& sweep_preset_names();

/// The sweep behind a figure panel. figS8 expands to figS8a (gamma_e curves) and figS8b
/// (alpha-theta map); every other name maps to one spec.
std::vector<SweepSpec> preset_specs(std::string_view name, const PresetOptions& opts = {});

std::vector<PresetOutput> run_sweep_preset(std::string_view name, const PresetOptions& opts = {});

/// fig2c (theta sweep at alpha = 0) or fig2d (alpha sweep at theta = pi/4).
PresetOutput poincare_preset(std::string_view name, const PresetOptions& opts = {});

/// figS3: Omega(Delta_es) for alpha = +2, -2 and 0 with eight Delta_ge values per family.
PresetOutput drive_preset(const PresetOptions& opts = {});

/// figS1: square guide, phase difference pi/2.
PresetOutput modes_preset(const PresetOptions& opts = {});

/// The three conversions studied in the robustness figures: H->V, V->L, R->V.
std::vector<Conversion> robustness_conversions();

}  // namespace polarix
