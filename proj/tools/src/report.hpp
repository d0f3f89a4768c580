#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lamplight::cli {

/// Command report with the four fixed sections command / inputs / result
/// / witnesses. Field insertion order is preserved, so identical
/// invocations serialize byte-identically in both output forms.
///
/// Text form: one "key: value" line per field, section-prefixed
/// ("inputs.graph: ..."), with multi-line blocks (like an emitted graph
/// file) appended last under a bare "section.key:" header line.
class Report {
public:
    explicit Report(std::string command) {
        j_["command"] = std::move(command);
        j_["inputs"] = nlohmann::ordered_json::object();
        j_["result"] = nlohmann::ordered_json::object();
        j_["witnesses"] = nlohmann::ordered_json::object();
    }

    template <typename T>
    void input(const std::string& key, T&& value) {
        j_["inputs"][key] = std::forward<T>(value);
    }
    template <typename T>
    void result(const std::string& key, T&& value) {
        j_["result"][key] = std::forward<T>(value);
    }
    template <typename T>
    void witness(const std::string& key, T&& value) {
        j_["witnesses"][key] = std::forward<T>(value);
    }

    /// Multi-line result payload, rendered verbatim after the key lines.
    void result_block(const std::string& key, std::vector<std::string> lines) {
        j_["result"][key] = lines;
        blocks_.emplace_back("result." + key, std::move(lines));
    }

    std::string text() const {
        std::string out = "command: " + j_["command"].get<std::string>() + "\n";
        for (const char* section : {"inputs", "result", "witnesses"}) {
            for (const auto& [key, value] : j_[section].items()) {
                if (is_block(std::string(section) + "." + key)) continue;
                out += std::string(section) + "." + key + ": " + scalar_text(value) + "\n";
            }
        }
        for (const auto& [key, lines] : blocks_) {
            out += key + ":\n";
            for (const auto& line : lines) out += line + "\n";
        }
        return out;
    }

    std::string json_text() const { return j_.dump(2) + "\n"; }

private:
    bool is_block(const std::string& qualified) const {
        for (const auto& [key, lines] : blocks_)
            if (key == qualified) return true;
        return false;
    }

    static std::string scalar_text(const nlohmann::ordered_json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
        if (v.is_array()) {
            std::string out;
            for (const auto& item : v) {
                if (!out.empty()) out += " ";
                out += scalar_text(item);
            }
            return out;
        }
        return v.dump();
    }

    nlohmann::ordered_json j_;
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks_;
};

} // namespace lamplight::cli
