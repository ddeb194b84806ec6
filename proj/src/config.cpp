#include "ambc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ambc/errors.hpp"

namespace ambc {

namespace {

struct Entry {
    std::string value;
    int line;
};

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::vector<std::string>>& known_keys() {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"sweep", {"kind", "samples", "seed", "stream", "crn", "monte_carlo", "workers"}},
        {"system", {"M", "N", "K", "alpha", "P", "noise_var", "var1", "var_rb", "var_bc"}},
        {"axis", {"start", "stop", "points", "scale", "values"}},
        {"axis_k", {"start", "stop", "points", "scale", "values"}},
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& field, const Entry& e, const std::string& expected) {
    throw ConfigError("line " + std::to_string(e.line) + ": " + field + " = '" + e.value + "' is not " + expected,
                      e.line, field);
}

double to_double(const std::string& field, const Entry& e) {
    double v = 0.0;
    const char* end = e.value.data() + e.value.size();
    const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc{} || ptr != end) bad_value(field, e, "a number");
    return v;
}

template <typename Int>
Int to_integer(const std::string& field, const Entry& e) {
    Int v{};
    const char* end = e.value.data() + e.value.size();
    const auto [ptr, ec] = std::from_chars(e.value.data(), end, v);
    if (ec != std::errc{} || ptr != end) bad_value(field, e, "an integer");
    return v;
}

bool to_bool(const std::string& field, const Entry& e) {
    std::string v = e.value;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    bad_value(field, e, "a boolean");
}

std::vector<double> to_list(const std::string& field, const Entry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(field, {trim(item), e.line}));
    if (out.empty()) bad_value(field, e, "a comma-separated list of numbers");
    return out;
}

void apply_axis(Axis& axis, const std::string& section, const Section& entries) {
    for (const auto& [key, e] : entries) {
        const std::string field = section + "." + key;
        if (key == "start") axis.start = to_double(field, e);
        else if (key == "stop") axis.stop = to_double(field, e);
        else if (key == "points") axis.points = to_integer<int>(field, e);
        else if (key == "values") axis.values = to_list(field, e);
        else if (key == "scale") {
            if (e.value == "linear") axis.log_scale = false;
            else if (e.value == "log") axis.log_scale = true;
            else bad_value(field, e, "'linear' or 'log'");
        }
    }
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

SweepSpec parse_config_text(const std::string& text, SweepKind fallback_kind) {
    std::map<std::string, Section> sections;
    std::string current = "sweep";
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": malformed section header", line_no);
            current = trim(line.substr(1, line.size() - 2));
            if (!known_keys().contains(current)) {
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + current + "]", line_no,
                                  current);
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto& allowed = known_keys().at(current);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "' in [" + current + "]",
                              line_no, current + "." + key);
        }
        if (!sections[current].emplace(key, Entry{value, line_no}).second) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no,
                              current + "." + key);
        }
    }

    SweepKind kind = fallback_kind;
    if (const auto it = sections["sweep"].find("kind"); it != sections["sweep"].end()) {
        const auto parsed = parse_sweep_kind(it->second.value);
        if (!parsed) bad_value("sweep.kind", it->second, "one of SnrSweep, AntennaSweep, GridNK, Validate");
        kind = *parsed;
    }
    SweepSpec spec = default_spec(kind);

    for (const auto& [key, e] : sections["sweep"]) {
        const std::string field = "sweep." + key;
        if (key == "samples") spec.n_samples = to_integer<std::size_t>(field, e);
        else if (key == "seed") spec.seed.master_seed = to_integer<std::uint64_t>(field, e);
        else if (key == "stream") spec.seed.stream_index = to_integer<std::uint64_t>(field, e);
        else if (key == "crn") spec.crn = to_bool(field, e);
        else if (key == "monte_carlo") spec.monte_carlo = to_bool(field, e);
        else if (key == "workers") spec.workers = to_integer<std::size_t>(field, e);
    }
    for (const auto& [key, e] : sections["system"]) {
        const std::string field = "system." + key;
        SystemConfig& b = spec.base;
        if (key == "M") b.M = to_integer<int>(field, e);
        else if (key == "N") b.N = to_integer<int>(field, e);
        else if (key == "K") b.K = to_integer<int>(field, e);
        else if (key == "alpha") b.alpha = to_double(field, e);
        else if (key == "P") b.P = to_double(field, e);
        else if (key == "noise_var") b.noise_var = to_double(field, e);
        else if (key == "var1") b.var1 = to_double(field, e);
        else if (key == "var_rb") b.varRB = to_double(field, e);
        else if (key == "var_bc") b.varBC = to_double(field, e);
    }
    apply_axis(spec.axis, "axis", sections["axis"]);
    apply_axis(spec.axis_k, "axis_k", sections["axis_k"]);

    try {
        validate(spec);
    } catch (const ConfigError& err) {
        // Attach the line on which the offending field was set, if any.
        std::string field = err.field();
        if (!field.empty() && field.find('.') == std::string::npos) field = "system." + field;
        const auto dot = field.find('.');
        if (dot != std::string::npos) {
            const auto& sec = sections[field.substr(0, dot)];
            if (const auto it = sec.find(field.substr(dot + 1)); it != sec.end()) {
                throw ConfigError("line " + std::to_string(it->second.line) + ": " + err.what(), it->second.line,
                                  field);
            }
        }
        throw ConfigError(err.what(), 0, field);
    }
    return spec;
}

SweepSpec parse_config(const std::filesystem::path& path, SweepKind fallback_kind) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), fallback_kind);
}

namespace {

void format_axis(std::ostringstream& out, const std::string& name, const Axis& axis) {
    out << "\n[" << name << "]\n";
    out << "start = " << format_double(axis.start) << "\n";
    out << "stop = " << format_double(axis.stop) << "\n";
    out << "points = " << axis.points << "\n";
    out << "scale = " << (axis.log_scale ? "log" : "linear") << "\n";
    if (!axis.values.empty()) {
        out << "values = ";
        for (std::size_t i = 0; i < axis.values.size(); ++i) out << (i ? ", " : "") << format_double(axis.values[i]);
        out << "\n";
    }
}

}  // namespace

std::string format_spec(const SweepSpec& spec) {
    std::ostringstream out;
    const SystemConfig& b = spec.base;
    out << "[sweep]\n"
        << "kind = " << to_string(spec.kind) << "\n"
        << "samples = " << spec.n_samples << "\n"
        << "seed = " << spec.seed.master_seed << "\n"
        << "stream = " << spec.seed.stream_index << "\n"
        << "crn = " << (spec.crn ? "true" : "false") << "\n"
        << "monte_carlo = " << (spec.monte_carlo ? "true" : "false") << "\n"
        << "workers = " << spec.workers << "\n"
        << "\n[system]\n"
        << "M = " << b.M << "\n"
        << "N = " << b.N << "\n"
        << "K = " << b.K << "\n"
        << "alpha = " << format_double(b.alpha) << "\n"
        << "P = " << format_double(b.P) << "\n"
        << "noise_var = " << format_double(b.noise_var) << "\n"
        << "var1 = " << format_double(b.var1) << "\n"
        << "var_rb = " << format_double(b.varRB) << "\n"
        << "var_bc = " << format_double(b.varBC) << "\n";
    format_axis(out, "axis", spec.axis);
    format_axis(out, "axis_k", spec.axis_k);
    return out.str();
}

}  // namespace ambc
