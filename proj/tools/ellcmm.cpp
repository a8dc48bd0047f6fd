// ellcmm: Macdonald polynomials, Shiraishi series and identity checks from the
// command line.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellcmm/cache.hpp"
#include "ellcmm/verify.hpp"

using namespace ellcmm;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kEnv = 3 };

struct Options {
    int i = 0, j = 0;
    std::optional<int> i_max, j_max;
    std::vector<int> betas;
    int order = 1;
    std::string backend;
    int points = 3;
    std::uint64_t seed = 1;
    int headroom = 1;
    std::string cache;
    std::string out;
    std::string format = "text";
    std::string identity;
};

template <class K>
std::string laurent_text(const LaurentPoly2<K>& f, const TowerSpec& spec) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_canonical(c, spec) + ")";
        if (e.first) out += "*X1^" + std::to_string(e.first);
        if (e.second) out += "*X2^" + std::to_string(e.second);
    }
    return out;
}

template <class K>
nlohmann::json laurent_json(const LaurentPoly2<K>& f, const TowerSpec& spec) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"e1", e.first}, {"e2", e.second}, {"value", to_canonical(c, spec)}});
    return terms;
}

std::string cache_dir_of(const Options& o) {
    const char* env = std::getenv("ELLCMM_CACHE");
    return env && *env ? env : o.cache;
}

void emit(const std::string& text, const Options& o) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw CacheError("cannot write " + o.out);
    f << text << '\n';
}

int cmd_macdonald(const Options& o) {
    TowerSpec spec;
    spec.symbols = o.betas.empty() ? std::vector<std::string>{"Q", "T"} : std::vector<std::string>{"Q"};
    if (!o.betas.empty()) spec.beta = o.betas.front();
    auto print = [&](auto tw) {
        const auto p = macdonald_A1(o.j, tw);
        if (o.format == "json")
            emit(nlohmann::json{{"j", o.j}, {"tower", spec.fingerprint()}, {"terms", laurent_json(p, spec)}}.dump(2), o);
        else
            emit(laurent_text(p, spec), o);
    };
    if (o.betas.empty())
        print(make_tower<F2>(spec));
    else
        print(make_tower<F1>(spec));
    return kPass;
}

int cmd_shiraishi(const Options& o) {
    const std::string cache_dir = cache_dir_of(o);
    const bool evaluated = o.backend == "evaluated";
    if (!o.backend.empty() && o.backend != "symbolic" && !evaluated) throw CLI::ValidationError("--backend", "symbolic or evaluated");

    TowerSpec spec;
    if (o.betas.empty())
        spec.symbols = evaluated ? std::vector<std::string>{"S"} : std::vector<std::string>{"Q", "T", "S"};
    else {
        spec.beta = o.betas.front();
        spec.symbols = evaluated ? std::vector<std::string>{"S"} : std::vector<std::string>{"Q", "S"};
    }
    if (evaluated) {
        std::mt19937_64 rng(o.seed);
        spec.bound["Q"] = random_point(rng);
        if (o.betas.empty()) spec.bound["T"] = random_point(rng);
    }

    auto run = [&](auto tw) {
        using K = std::decay_t<decltype(tw.q)>;
        ShiraishiSeries<K> ps = cache_dir.empty() ? shiraishi_series(o.j, o.order, tw)
                                                  : SeriesCache(cache_dir).get(o.j, o.order, tw);
        if (o.format == "json") {
            emit(series_to_json(ps, spec).dump(1), o);
        } else {
            std::string text = "P_" + std::to_string(o.j) + " [" + spec.fingerprint() + "]\n";
            for (int d = 0; d <= ps.coeffs.order(); ++d)
                text += "p^" + std::to_string(d) + ": " + laurent_text(ps.coeffs[d], spec) + "\n";
            emit(text, o);
        }
    };
    if (evaluated)
        run(make_tower<F1>(spec));
    else if (o.betas.empty())
        run(make_tower<F3>(spec));
    else
        run(make_tower<F2>(spec));
    return kPass;
}

int cmd_verify(const Options& o) {
    VerifyConfig cfg;
    cfg.i_max = o.i_max.value_or(o.identity == "theorem9" ? 4 : 2);
    cfg.j_max = o.j_max.value_or(o.identity == "theorem9" ? 4 : o.identity == "prop5" ? 4 : 2);
    if (o.identity == "lemma8" && !o.j_max) cfg.j_max = 3;
    if (o.identity == "cmm" && !o.i_max) cfg.i_max = 3;
    if (o.identity == "cmm" && !o.j_max) cfg.j_max = 3;
    cfg.betas = o.betas;
    cfg.order = o.order;
    cfg.backend = o.backend;
    cfg.points = o.points;
    cfg.seed = o.seed;
    cfg.headroom = o.headroom;
    cfg.cache_dir = cache_dir_of(o);
    if (cfg.order >= 2 && effective_backend(cfg) == "symbolic")
        std::cerr << "warning: symbolic order " << cfg.order << " can be slow; --backend evaluated is the default\n";
    const VerificationReport rep = verify_named(o.identity, cfg);
    const std::string body = o.format == "json" ? rep.to_json() : rep.to_text();
    emit(body, o);
    if (!o.out.empty()) std::cout << o.identity << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald polynomials, Shiraishi functions and elliptic CMM identities"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--beta", o.betas, "fix t = q^beta (repeatable)")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "write the result to FILE");
        sub->add_option("--seed", o.seed, "seed for random evaluation points");
        sub->add_option("--backend", o.backend, "symbolic or evaluated")->check(CLI::IsMember({"symbolic", "evaluated"}));
    };

    auto* mac = app.add_subcommand("macdonald", "print P_j");
    mac->add_option("--j", o.j, "degree")->required()->check(CLI::NonNegativeNumber);
    add_common(mac);

    auto* shi = app.add_subcommand("shiraishi", "print the Shiraishi series of P_j");
    shi->add_option("--j", o.j, "degree")->required()->check(CLI::NonNegativeNumber);
    shi->add_option("--order", o.order, "truncation order in p")->check(CLI::NonNegativeNumber);
    shi->add_option("--cache", o.cache, "cache directory (ELLCMM_CACHE overrides)");
    add_common(shi);

    auto* ver = app.add_subcommand("verify", "check an identity; exit 0 iff every cell passes");
    ver->add_option("identity", o.identity, "identity to check")->required()->check(CLI::IsMember(verify_names()));
    ver->add_option("--i,--imax", o.i_max, "largest i")->check(CLI::NonNegativeNumber);
    ver->add_option("--j,--jmax", o.j_max, "largest j")->check(CLI::NonNegativeNumber);
    ver->add_option("--order", o.order, "truncation order in p")->check(CLI::NonNegativeNumber);
    ver->add_option("--points", o.points, "evaluation points")->check(CLI::NonNegativeNumber);
    ver->add_option("--headroom", o.headroom, "extra orders for the p/s re-expansion")->check(CLI::PositiveNumber);
    ver->add_option("--cache", o.cache, "cache directory (ELLCMM_CACHE overrides)");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*mac) return cmd_macdonald(o);
        if (*shi) return cmd_shiraishi(o);
        return cmd_verify(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return kEnv;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "filesystem error: " << e.what() << "\n";
        return kEnv;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
