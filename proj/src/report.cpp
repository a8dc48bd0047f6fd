#include "ellcmm/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace ellcmm {

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
        nlohmann::ordered_json cell;
        cell["i"] = c.i;
        cell["j"] = c.j;
        cell["beta"] = c.beta;
        cell["order"] = c.order;
        cell["status"] = c.pass ? "pass" : "fail";
        cell["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
        cell["millis"] = c.millis;
        if (!c.label.empty()) cell["label"] = c.label;
        j["cells"].push_back(std::move(cell));
    }
    j["tower"] = tower;
    j["backend"] = backend;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json a = nlohmann::ordered_json::object();
        for (const auto& [name, v] : p) a[name] = v.to_string();
        j["points"].push_back(std::move(a));
    }
    if (seed) j["seed"] = *seed;
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::string out = identity + " [" + backend + ", " + tower;
    if (seed) out += ", seed " + std::to_string(*seed);
    out += "]\n";
    for (const auto& c : cells) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f ms", c.millis);
        out += "  " + std::string(c.pass ? "pass" : "FAIL");
        if (!c.label.empty()) out += " " + c.label;
        if (c.i >= 0) out += " i=" + std::to_string(c.i);
        if (c.j >= 0) out += " j=" + std::to_string(c.j);
        if (c.beta > 0) out += " beta=" + std::to_string(c.beta);
        out += " order=" + std::to_string(c.order) + " (" + buf + ")";
        if (c.witness) out += "\n    witness: " + *c.witness;
        out += "\n";
    }
    out += passed() ? "PASS\n" : "FAIL\n";
    return out;
}

}  // namespace ellcmm
