#include "polarix/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "polarix/parse.hpp"

namespace polarix {

namespace {

std::vector<std::string> columns_of(const SweepResult& r) {
    std::vector<std::string> cols;
    for (const auto& [name, value] : r.constants) cols.push_back(name);
    for (const auto& axis : r.axes) cols.push_back(axis.param);
    for (const auto& m : r.metric_names) cols.push_back(m);
    return cols;
}

std::string cell(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "both") return OutputFormat::Both;
    throw InvalidArgument("format must be csv, json or both, got '" + std::string(text) + "'");
}

void write_csv(std::ostream& os, const std::vector<SweepResult>& parts, const std::string& preset,
               bool preset_column) {
    if (parts.empty()) throw InvalidArgument("nothing to write for '" + preset + "'");
    const auto cols = columns_of(parts.front());
    for (const auto& p : parts) {
        if (columns_of(p) != cols) throw InvalidArgument("result parts of '" + preset + "' have different columns");
    }
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    if (preset_column) os << ",preset";
    os << '\n';
    for (const auto& p : parts) {
        for (std::size_t flat = 0; flat < p.size(); ++flat) {
            bool first = true;
            auto emit = [&](const std::string& text) {
                if (!first) os << ',';
                os << text;
                first = false;
            };
            for (const auto& [name, value] : p.constants) emit(cell(value));
            for (double c : p.coordinates(flat)) emit(cell(c));
            for (const auto& column : p.values) emit(cell(column[flat]));
            if (preset_column) emit(preset);
            os << '\n';
        }
    }
}

nlohmann::json sweep_document(const std::vector<SweepResult>& parts, const std::string& preset,
                              const nlohmann::json& run_config) {
    nlohmann::json doc{{"schema", kSweepSchema}, {"preset", preset}, {"run", run_config}};
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& p : parts) {
        nlohmann::json block{{"name", p.name}, {"config", p.config}};
        nlohmann::json constants = nlohmann::json::object();
        for (const auto& [name, value] : p.constants) constants[name] = value;
        block["constants"] = constants;
        nlohmann::json axes = nlohmann::json::array();
        for (const auto& axis : p.axes) axes.push_back({{"name", axis.param}, {"values", axis.values}});
        block["axes"] = axes;
        block["shape"] = p.shape();
        nlohmann::json metrics = nlohmann::json::object();
        for (std::size_t m = 0; m < p.metric_names.size(); ++m) {
            nlohmann::json values = nlohmann::json::array();
            for (double v : p.values[m]) values.push_back(number_or_null(v));
            metrics[p.metric_names[m]] = values;
        }
        block["metrics"] = metrics;
        blocks.push_back(block);
    }
    doc["parts"] = blocks;
    return doc;
}

std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir,
                                                 const std::vector<SweepResult>& parts,
                                                 const std::string& preset, OutputFormat format,
                                                 const nlohmann::json& run_config, bool preset_column) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto open = [&](const std::filesystem::path& path) {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw Error("cannot write " + path.string());
        written.push_back(path);
        return os;
    };
    if (format != OutputFormat::Json) {
        auto os = open(dir / (preset + ".csv"));
        write_csv(os, parts, preset, preset_column);
    }
    if (format != OutputFormat::Csv) {
        auto os = open(dir / (preset + ".json"));
        os << sweep_document(parts, preset, run_config).dump(2) << '\n';
    }
    return written;
}

}  // namespace polarix
