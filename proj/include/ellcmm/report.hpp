#ifndef ELLCMM_REPORT_HPP
#define ELLCMM_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellcmm/rational.hpp"

namespace ellcmm {

// One checked instance. i/j are -1 when the check is not indexed by them;
// `label` names sub-steps of multi-part checks.
struct CellResult {
    int i = -1, j = -1, beta = 0, order = 0;
    bool pass = false;
    std::optional<std::string> witness;
    double millis = 0;
    std::string label;
};

inline CellResult make_cell(int i, int j, int beta, int order, std::string label = {}) {
    CellResult c;
    c.i = i;
    c.j = j;
    c.beta = beta;
    c.order = order;
    c.label = std::move(label);
    return c;
}

struct VerificationReport {
    std::string identity;
    std::vector<CellResult> cells;
    std::string tower;
    std::string backend = "symbolic";
    std::vector<std::map<std::string, Rational>> points;
    std::optional<std::uint64_t> seed;  // set when points were drawn at random

    bool passed() const {
        for (const auto& c : cells)
            if (!c.pass) return false;
        return !cells.empty();
    }
    void merge(const VerificationReport& other) {
        cells.insert(cells.end(), other.cells.begin(), other.cells.end());
        points.insert(points.end(), other.points.begin(), other.points.end());
        if (other.seed) seed = other.seed;
    }
    std::string to_json() const;
    std::string to_text() const;
};

// Runs `check` (returning an empty optional on success, a witness on failure)
// and records it with its wall time.
template <class F>
CellResult timed_cell(CellResult cell, F&& check) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> witness = check();
    cell.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    cell.pass = !witness;
    cell.witness = std::move(witness);
    return cell;
}

}  // namespace ellcmm

#endif  // ELLCMM_REPORT_HPP
