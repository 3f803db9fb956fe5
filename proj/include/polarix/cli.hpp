#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "polarix/analysis.hpp"

namespace polarix::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,    ///< bad flags, malformed states, unknown preset
    kPhysics = 2,  ///< infeasible drive, evanescent mode, degenerate configuration
};

/// Key-value settings after overlaying defaults, the config file and command-line flags
/// (flags win). Keys mirror the configuration types: a b x y d d_lambda r_am r_bm r_m k
/// theta gamma_e alpha omega delta_ge delta_es input target model gv_correction.
struct RunConfig {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    const std::string& get(const std::string& key) const;

    /// Reads `key = value` lines; `#` starts a comment. Unknown keys are rejected.
    void overlay_file(const std::string& path);
    void set(const std::string& key, const std::string& value);

    GeometryConfig geometry() const;
    EmitterConfig emitter() const;
    /// --alpha (a number or `resonant`) or the (omega, delta_ge, delta_es) triple.
    DriveConfig drive() const;
    Model model(Model fallback) const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& config_keys();

/// Parses a complex number written as `re` or `re,im`.
Complex parse_complex(std::string_view text, std::string_view what);

/// Entry point behind the `polarix` executable. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarix::cli
