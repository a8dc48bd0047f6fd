#ifndef ELLCMM_CACHE_HPP
#define ELLCMM_CACHE_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ellcmm/canonical.hpp"
#include "ellcmm/shiraishi.hpp"

namespace ellcmm {

inline const char* s_mode_name(SMode m) {
    switch (m) {
        case SMode::symbolic: return "symbolic";
        case SMode::bound: return "bound";
        case SMode::substituted: return "substituted";
    }
    return "symbolic";
}

inline SMode s_mode_from(const std::string& name) {
    if (name == "symbolic") return SMode::symbolic;
    if (name == "bound") return SMode::bound;
    if (name == "substituted") return SMode::substituted;
    throw CacheError("unknown s_mode '" + name + "'");
}

template <class K>
nlohmann::json series_to_json(const ShiraishiSeries<K>& ps, const TowerSpec& spec) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int d = 0; d <= ps.coeffs.order(); ++d) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : ps.coeffs[d].terms())
            terms.push_back({{"e1", e.first}, {"e2", e.second}, {"value", to_canonical(c, spec)}});
        coeffs.push_back({{"pdeg", d}, {"terms", std::move(terms)}});
    }
    return {{"schema", 1},         {"j", ps.j},           {"order", ps.order},
            {"tower", spec.fingerprint()}, {"s_mode", s_mode_name(ps.s_mode)}, {"coeffs", std::move(coeffs)}};
}

template <class K>
ShiraishiSeries<K> series_from_json(const nlohmann::json& doc, const TowerSpec& spec) {
    try {
        if (doc.at("schema").get<int>() != 1) throw CacheError("unsupported schema");
        if (doc.at("tower").get<std::string>() != spec.fingerprint())
            throw CacheError("tower mismatch: file has " + doc.at("tower").get<std::string>());
        ShiraishiSeries<K> ps;
        ps.j = doc.at("j").get<int>();
        ps.order = doc.at("order").get<int>();
        ps.s_mode = s_mode_from(doc.value("s_mode", std::string("symbolic")));
        const auto& coeffs = doc.at("coeffs");
        if (ps.order < 0 || coeffs.size() != static_cast<std::size_t>(ps.order) + 1)
            throw CacheError("coefficient count does not match order");
        ps.coeffs = PSeries<LaurentPoly2<K>>(ps.order);
        for (const auto& block : coeffs) {
            const int d = block.at("pdeg").get<int>();
            if (d < 0 || d > ps.order) throw CacheError("p-degree out of range");
            for (const auto& term : block.at("terms"))
                ps.coeffs[d].add(term.at("e1").get<int>(), term.at("e2").get<int>(),
                                 from_canonical<K>(term.at("value").get<std::string>(), spec));
        }
        return ps;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError(std::string("malformed cache entry: ") + e.what());
    } catch (const ParseError& e) {
        throw CacheError(std::string("unparsable coefficient: ") + e.what());
    }
}

// Directory of JSON files, one per (tower, j, order).
class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path path_for(const TowerSpec& spec, int j, int n) const {
        std::string key;
        for (char c : spec.fingerprint()) key += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
        return dir_ / (key + "_j" + std::to_string(j) + "_n" + std::to_string(n) + ".json");
    }

    template <class K>
    ShiraishiSeries<K> get(int j, int n, const Tower<K>& tw, bool* hit = nullptr) const {
        const auto path = path_for(tw.spec, j, n);
        if (std::filesystem::exists(path)) {
            if (hit) *hit = true;
            std::ifstream in(path);
            if (!in) throw CacheError("cannot read " + path.string());
            nlohmann::json doc;
            try {
                in >> doc;
            } catch (const nlohmann::json::exception& e) {
                throw CacheError(path.string() + ": " + e.what());
            }
            ShiraishiSeries<K> ps = series_from_json<K>(doc, tw.spec);
            if (ps.j != j || ps.order != n) throw CacheError(path.string() + ": key does not match contents");
            return ps;
        }
        if (hit) *hit = false;
        ShiraishiSeries<K> ps = shiraishi_series(j, n, tw);
        put(ps, tw.spec);
        return ps;
    }

    template <class K>
    void put(const ShiraishiSeries<K>& ps, const TowerSpec& spec) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw CacheError("cannot create " + dir_.string() + ": " + ec.message());
        const auto path = path_for(spec, ps.j, ps.order);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw CacheError("cannot write " + tmp);
            out << series_to_json(ps, spec).dump(1) << '\n';
        }
        std::filesystem::rename(tmp, path, ec);
        if (ec) throw CacheError("cannot move " + tmp + ": " + ec.message());
    }

private:
    std::filesystem::path dir_;
};

}  // namespace ellcmm

#endif  // ELLCMM_CACHE_HPP
