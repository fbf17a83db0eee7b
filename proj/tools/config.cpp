// Copyright 2026 The sptmqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>

#include <json.hpp>
#include <toml.hpp>

#include "sptmqc/toymodel.hpp"

namespace sptmqc::tools {

namespace {

using nlohmann::json;
using LineMap = std::map<std::string, int>;

std::string locate(const std::string &field, const LineMap &lines) {
    auto it = lines.find(field);
    if (it == lines.end()) return field;
    return "line " + std::to_string(it->second) + ", field '" + field + "'";
}

json toml_to_json(const toml::node &node, const std::string &path, LineMap &lines) {
    if (!path.empty()) lines[path] = static_cast<int>(node.source().begin.line);
    if (auto t = node.as_table()) {
        json out = json::object();
        for (auto &&[key, value] : *t) {
            const std::string child = path.empty() ? std::string(key.str()) : path + "." + std::string(key.str());
            out[std::string(key.str())] = toml_to_json(value, child, lines);
        }
        return out;
    }
    if (auto a = node.as_array()) {
        json out = json::array();
        for (auto &&value : *a) out.push_back(toml_to_json(value, path, lines));
        return out;
    }
    if (auto v = node.as_integer()) return v->get();
    if (auto v = node.as_floating_point()) return v->get();
    if (auto v = node.as_boolean()) return v->get();
    if (auto v = node.as_string()) return v->get();
    throw ConfigError(locate(path, lines), "unsupported TOML value type");
}

double angle_value(const json &v, const std::string &field, const LineMap &lines) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>(), locate(field, lines));
    throw ConfigError(locate(field, lines), "expected a number or an angle expression");
}

std::vector<double> grid_values(const json &v, const std::string &field, const LineMap &lines) {
    if (v.is_number() || v.is_string()) return {angle_value(v, field, lines)};
    if (v.is_array()) {
        std::vector<double> out;
        for (const auto &e : v) out.push_back(angle_value(e, field, lines));
        if (out.empty()) throw ConfigError(locate(field, lines), "value list is empty");
        return out;
    }
    if (!v.is_object()) throw ConfigError(locate(field, lines), "expected a number, a list or a range table");
    for (const auto &[key, _] : v.items()) {
        if (key != "values" && key != "min" && key != "max" && key != "count" && key != "endpoint" &&
            key != "extra") {
            throw ConfigError(locate(field + "." + key, lines), "unknown key");
        }
    }
    if (v.contains("values")) {
        if (v.size() != 1) throw ConfigError(locate(field, lines), "'values' cannot be combined with a range");
        return grid_values(v.at("values"), field + ".values", lines);
    }
    for (const char *key : {"min", "max", "count"}) {
        if (!v.contains(key)) throw ConfigError(locate(field, lines), std::string("range needs '") + key + "'");
    }
    const double lo = angle_value(v.at("min"), field + ".min", lines);
    const double hi = angle_value(v.at("max"), field + ".max", lines);
    if (!v.at("count").is_number_integer()) {
        throw ConfigError(locate(field + ".count", lines), "count must be an integer");
    }
    const long long count = v.at("count").get<long long>();
    if (count < 1 || count > 1'000'000) throw ConfigError(locate(field + ".count", lines), "count must be in [1, 1e6]");
    bool endpoint = true;
    if (v.contains("endpoint")) {
        if (!v.at("endpoint").is_boolean()) throw ConfigError(locate(field + ".endpoint", lines), "expected a boolean");
        endpoint = v.at("endpoint").get<bool>();
    }
    std::vector<double> out = linspace(lo, hi, static_cast<int>(count), endpoint);
    // Isolated points of interest appended to a uniform range.
    if (v.contains("extra")) {
        const auto more = grid_values(v.at("extra"), field + ".extra", lines);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

int depth_value(const json &v, const std::string &field, const LineMap &lines) {
    if (v.is_number_integer()) {
        const long long m = v.get<long long>();
        if (m < kInfiniteDepth || m > 1'000'000) {
            throw ConfigError(locate(field, lines), "depth must be -1 (infinite) or in [0, 1e6]");
        }
        return static_cast<int>(m);
    }
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity")) return kInfiniteDepth;
    throw ConfigError(locate(field, lines), "depth must be an integer or \"inf\"");
}

std::string string_field(const json &v, const std::string &field, const LineMap &lines) {
    if (!v.is_string()) throw ConfigError(locate(field, lines), "expected a string");
    return v.get<std::string>();
}

SweepConfig config_from_tree(const json &root, const LineMap &lines) {
    if (!root.is_object()) throw ConfigError("", "configuration must be a table/object");
    SweepConfig c;
    for (const auto &[key, v] : root.items()) {
        if (key == "mode") {
            try {
                c.mode = parse_mode(string_field(v, key, lines));
            } catch (const ConfigError &e) {
                throw ConfigError(locate(key, lines), e.what());
            }
        } else if (key == "model") {
            c.model = string_field(v, key, lines);
            if (c.model != "toy" && c.model != "aklt") {
                throw ConfigError(locate(key, lines), "model must be \"toy\" or \"aklt\"");
            }
        } else if (key == "axis") {
            const std::string name = string_field(v, key, lines);
            if (name != "x" && name != "z") throw ConfigError(locate(key, lines), "axis must be \"x\" or \"z\"");
            c.axis = parse_axis(name);
        } else if (key == "theta") {
            c.thetas = grid_values(v, key, lines);
        } else if (key == "phi") {
            c.phis = grid_values(v, key, lines);
        } else if (key == "m") {
            c.m_list.clear();
            if (v.is_array()) {
                for (const auto &e : v) c.m_list.push_back(depth_value(e, key, lines));
            } else {
                c.m_list.push_back(depth_value(v, key, lines));
            }
        } else if (key == "theta_gate") {
            c.theta_gate = angle_value(v, key, lines);
        } else if (key == "seed") {
            if (!v.is_number_integer() || v.get<long long>() < 0) {
                throw ConfigError(locate(key, lines), "seed must be a non-negative integer");
            }
            c.seed = v.get<std::uint64_t>();
        } else if (key == "runs") {
            if (!v.is_number_integer()) throw ConfigError(locate(key, lines), "runs must be an integer");
            c.runs = v.get<long long>();
        } else if (key == "output") {
            c.output = string_field(v, key, lines);
        } else if (key == "format") {
            try {
                c.format = parse_format(string_field(v, key, lines));
            } catch (const ConfigError &e) {
                throw ConfigError(locate(key, lines), e.what());
            }
        } else {
            throw ConfigError(locate(key, lines), "unknown key");
        }
    }
    validate(c);
    return c;
}

}  // namespace

double parse_angle(const std::string &text, const std::string &field) {
    static const std::regex pattern(
        R"(^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\s*\*?\s*)?(pi|theta_c)?\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    static const std::regex sign_only(R"(^\s*([+-])\s*(pi|theta_c)\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    std::smatch match;
    double coefficient = 1.0;
    std::string symbol, divisor;
    if (std::regex_match(text, match, sign_only)) {
        coefficient = match[1] == "-" ? -1.0 : 1.0;
        symbol = match[2];
        divisor = match[3];
    } else if (std::regex_match(text, match, pattern) && (match[1].matched || match[2].matched)) {
        if (match[1].matched) {
            std::string number = match[1];
            if (!match[2].matched && number.find('*') != std::string::npos) {
                throw ConfigError(field, "dangling '*' in angle '" + text + "'");
            }
            number.erase(std::remove_if(number.begin(), number.end(), [](char ch) { return ch == '*' || ch == ' '; }),
                         number.end());
            coefficient = std::stod(number);
        }
        symbol = match[2];
        divisor = match[3];
    } else {
        throw ConfigError(field, "cannot parse angle '" + text + "'");
    }
    double value = coefficient;
    if (symbol == "pi") value *= std::numbers::pi;
    if (symbol == "theta_c") value *= critical_theta();
    if (!divisor.empty()) {
        const double d = std::stod(divisor);
        if (d == 0.0) throw ConfigError(field, "division by zero in '" + text + "'");
        value /= d;
    }
    return value;
}

std::vector<double> linspace(double lo, double hi, int n, bool endpoint) {
    std::vector<double> out;
    if (n == 1) return {lo};
    const double intervals = endpoint ? n - 1 : n;
    for (int k = 0; k < n; ++k) {
        out.push_back(endpoint && k == n - 1 ? hi : lo + (hi - lo) * k / intervals);
    }
    return out;
}

SweepConfig parse_toml_config(const std::string &text, const std::string &source) {
    toml::table table;
    try {
        table = toml::parse(text, source);
    } catch (const toml::parse_error &e) {
        throw ConfigError("line " + std::to_string(e.source().begin.line), std::string(e.description()));
    }
    LineMap lines;
    return config_from_tree(toml_to_json(table, "", lines), lines);
}

SweepConfig parse_json_config(const std::string &text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError("byte " + std::to_string(e.byte), "invalid JSON");
    }
    try {
        return config_from_tree(root, {});
    } catch (const json::exception &e) {
        throw ConfigError("", e.what());
    }
}

SweepConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, "cannot open configuration file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return is_json ? parse_json_config(buffer.str()) : parse_toml_config(buffer.str(), path);
}

void validate(const SweepConfig &c) {
    if (c.thetas.empty()) throw ConfigError("theta", "at least one value is required");
    if (c.phis.empty()) throw ConfigError("phi", "at least one value is required");
    if (c.m_list.empty()) throw ConfigError("m", "at least one depth is required");
    for (int m : c.m_list) {
        if (m < kInfiniteDepth) throw ConfigError("m", "depths must be >= 0 or -1 for the limit");
    }
    for (double v : c.thetas) {
        if (!std::isfinite(v)) throw ConfigError("theta", "values must be finite");
    }
    for (double v : c.phis) {
        if (!std::isfinite(v)) throw ConfigError("phi", "values must be finite");
    }
    if (!(c.theta_gate >= 0.0 && c.theta_gate < 2 * std::numbers::pi)) {
        throw ConfigError("theta_gate", "gate angle must lie in [0, 2 pi)");
    }
    if (c.runs < 1) throw ConfigError("runs", "runs must be positive");
}

Mode parse_mode(const std::string &name) {
    if (name == "fidelity") return Mode::fidelity;
    if (name == "orderparam") return Mode::orderparam;
    if (name == "lengths") return Mode::lengths;
    if (name == "protocol") return Mode::protocol;
    if (name == "point") return Mode::point;
    throw ConfigError("mode", "unknown mode '" + name + "'");
}

Format parse_format(const std::string &name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw ConfigError("format", "format must be csv or json");
}

std::string mode_name(Mode mode) {
    switch (mode) {
        case Mode::fidelity: return "fidelity";
        case Mode::orderparam: return "orderparam";
        case Mode::lengths: return "lengths";
        case Mode::protocol: return "protocol";
        case Mode::point: return "point";
    }
    return "fidelity";
}

}  // namespace sptmqc::tools
