#include "ellcmm/verify.hpp"

#include <random>

#include "ellcmm/cmm.hpp"

namespace ellcmm {

namespace {

TowerSpec spec_of(std::vector<std::string> symbols, int beta = 0) {
    TowerSpec s;
    s.symbols = std::move(symbols);
    s.beta = beta;
    return s;
}

VerificationReport make_report(const std::string& identity, const std::string& tower) {
    VerificationReport rep;
    rep.identity = identity;
    rep.tower = tower;
    return rep;
}

template <class K>
std::optional<std::string> laurent_mismatch(const LaurentPoly2<K>& got, const LaurentPoly2<K>& want,
                                            const TowerSpec& spec, const std::string& what) {
    if (got == want) return std::nullopt;
    const LaurentPoly2<K> d = got - want;
    const auto& [e, c] = *d.terms().begin();
    return what + ": differs at X1^" + std::to_string(e.first) + " X2^" + std::to_string(e.second) + " by " +
           to_canonical(c, spec);
}

// Independent (q, t) or q-only points drawn from one seeded stream.
std::vector<TowerSpec> random_specs(std::vector<std::string> symbols, std::vector<std::string> bound, int beta,
                                    int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TowerSpec> out;
    for (int k = 0; k < points; ++k) {
        TowerSpec s = spec_of(symbols, beta);
        for (const auto& name : bound) s.bound[name] = random_point(rng);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<int> betas_or(const VerifyConfig& cfg, std::vector<int> fallback) {
    return cfg.betas.empty() ? fallback : cfg.betas;
}

// The first-order term of P_0 written out in full.
LaurentPoly2<F3> p0_first_order_explicit(const Tower<F3>& tw) {
    const F3 &q = tw.q, &t = tw.t, &s = *tw.s;
    const F3 side = q * (1 - t) * (1 - s * t * t) / (t * (1 - q * s * t) * (1 - q));
    const F3 mid = (1 - t) * (q - s * t * t) / (t * (1 - s * t) * (1 - q)) +
                   (1 - s * t * t) * (1 - q * s) * (1 - t) * (q - s * t) /
                       (t * (1 - q * s * t) * (1 - s * t) * (1 - q) * (1 - s));
    return LaurentPoly2<F3>::monomial(1, -1, side) + LaurentPoly2<F3>::monomial(-1, 1, side) +
           LaurentPoly2<F3>::monomial(0, 0, mid);
}

}  // namespace

std::string effective_backend(const VerifyConfig& cfg) {
    if (!cfg.backend.empty()) return cfg.backend;
    return cfg.order <= 1 ? "symbolic" : "evaluated";
}

VerificationReport verify_macdonald(int j_max) {
    const TowerSpec spec = spec_of({"Q", "T"});
    const Tower<F2> tw = make_tower<F2>(spec);
    const F2 &q = tw.q, &t = tw.t;
    VerificationReport rep = make_report("macdonald", spec.fingerprint());
    using L = LaurentPoly2<F2>;
    const F2 mid2 = (1 - t) * (1 + q) / (1 - q * t);
    const F2 mid3 = (1 - t) * (1 + q + q * q) / (1 - q * q * t);
    const std::vector<L> explicit_forms{
        L::monomial(0, 0, F2(1)),
        L::monomial(1, 0, F2(1)) + L::monomial(0, 1, F2(1)),
        L::monomial(2, 0, F2(1)) + L::monomial(1, 1, mid2) + L::monomial(0, 2, F2(1)),
        L::monomial(3, 0, F2(1)) + L::monomial(2, 1, mid3) + L::monomial(1, 2, mid3) + L::monomial(0, 3, F2(1)),
    };
    for (int j = 0; j <= 3; ++j)
        rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 0, "explicit"), [&] {
            return laurent_mismatch(macdonald_A1(j, tw), explicit_forms[j], spec, "P_" + std::to_string(j));
        }));
    for (int j = 0; j <= j_max; ++j)
        rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 0, "eigen"), [&] {
            const L p = macdonald_A1(j, tw);
            return laurent_mismatch(trig_hamiltonian_apply(p, tw), p * (1 + t * tw.q_pow(j)), spec, "H_1 P_j");
        }));
    return rep;
}

VerificationReport verify_order_zero(int j_max) {
    const TowerSpec spec = spec_of({"Q", "T", "S"});
    const Tower<F3> tw = make_tower<F3>(spec);
    VerificationReport rep = make_report("prop4", spec.fingerprint());
    for (int j = 0; j <= j_max; ++j)
        rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 0), [&] {
            return laurent_mismatch(shiraishi_series(j, 0, tw).coeffs[0], macdonald_A1(j, tw), spec, "order 0");
        }));
    return rep;
}

VerificationReport verify_first_order_expansion(const VerifyConfig& cfg) {
    const TowerSpec spec = spec_of({"Q", "T", "S"});
    const Tower<F3> tw = make_tower<F3>(spec);
    VerificationReport rep = make_report("prop5", spec.fingerprint());
    rep.cells.push_back(timed_cell(make_cell(-1, 0, 0, 1, "explicit P_0"), [&] {
        return laurent_mismatch(shiraishi_series(0, 1, tw).coeffs[1], p0_first_order_explicit(tw), spec, "p^1 of P_0");
    }));
    for (int j = 0; j <= std::min(cfg.j_max, 2); ++j)
        rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 1, "symbolic"), [&] {
            return laurent_mismatch(shiraishi_series(j, 1, tw).coeffs[1],
                                    macdonald_combination(j, prop5_coeffs(j, tw), tw), spec, "p^1");
        }));
    if (cfg.points > 0) {
        rep.backend = "symbolic+evaluated";
        rep.seed = cfg.seed;
    }
    for (const TowerSpec& ps : random_specs({"S"}, {"Q", "T"}, 0, cfg.points, cfg.seed)) {
        const Tower<F1> te = make_tower<F1>(ps);
        rep.points.push_back(ps.bound);
        for (int j = 0; j <= cfg.j_max; ++j)
            rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 1, "evaluated"), [&] {
                const auto s = shiraishi_series(j, 1, te);
                if (auto w = laurent_mismatch(s.coeffs[0], macdonald_A1(j, te), ps, "p^0")) return w;
                return laurent_mismatch(s.coeffs[1], macdonald_combination(j, prop5_coeffs(j, te), te), ps, "p^1");
            }));
    }
    return rep;
}

VerificationReport verify_vandermonde_ratio(const std::vector<int>& betas) {
    VerificationReport rep = make_report("lemma7", "Q(Q);t=q^beta");
    for (int beta : betas) {
        const TowerSpec spec = spec_of({"Q"}, beta);
        const Tower<F1> tw = make_tower<F1>(spec);
        const F1 &q = tw.q, &t = tw.t;
        rep.cells.push_back(timed_cell(make_cell(-1, -1, beta, 1), [&]() -> std::optional<std::string> {
            const ThetaSeries<F1> v = elliptic_vandermonde(1, tw);
            const SymLaurent1<F1> v0 = trig_vandermonde(tw);
            const F1 k = -(1 - t) * (t + q) / (t * (1 - q));
            const SymLaurent1<F1> ratio = SymLaurent1<F1>::monomial(1, k) + SymLaurent1<F1>::monomial(-1, k);
            if (!(v[0] == v0)) return std::string("p^0 term is not the trigonometric Vandermonde");
            if (!(v[1] == v0 * ratio)) return std::string("p^1 term is not the closed-form ratio times p^0");
            return std::nullopt;
        }));
    }
    return rep;
}

VerificationReport verify_reexpansion(const VerifyConfig& cfg) {
    VerificationReport rep = make_report("lemma8", "Q(S);Q,T bound");
    rep.backend = "evaluated";
    rep.seed = cfg.seed;
    const int h = cfg.headroom;
    for (const TowerSpec& ps : random_specs({"S"}, {"Q", "T"}, 0, cfg.points, cfg.seed)) {
        const Tower<F1> tw = make_tower<F1>(ps);
        rep.points.push_back(ps.bound);
        for (int j = 0; j <= cfg.j_max; ++j)
            rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 1), [&]() -> std::optional<std::string> {
                const auto s = shiraishi_series(j, 2 + h, tw);
                const auto a = reexpand_p_over_s(s, 1, h, tw), b = reexpand_p_over_s(s, 1, h + 1, tw);
                if (!(a.coeffs == b.coeffs))
                    return "headroom " + std::to_string(h) + " and " + std::to_string(h + 1) + " disagree";
                if (auto w = laurent_mismatch(a.coeffs[0], macdonald_A1(j, tw), ps, "p^0")) return w;
                return laurent_mismatch(a.coeffs[1], macdonald_combination(j, lemma8_coeffs(j, tw), tw), ps, "p^1");
            }));
    }
    return rep;
}

VerificationReport verify_oc_pieri(int j_max) {
    const TowerSpec spec = spec_of({"Q", "T"});
    const Tower<F2> tw = make_tower<F2>(spec);
    const F2 &q = tw.q, &t = tw.t;
    VerificationReport rep = make_report("oc-pieri", spec.fingerprint());
    for (int j = 0; j <= j_max; ++j)
        rep.cells.push_back(timed_cell(make_cell(-1, j, 0, 0), [&]() -> std::optional<std::string> {
            SymLaurent1<F2> want = macdonald_on_circle(j + 1, tw) * (tw.Q_pow(j - 1) * t * (q - 1));
            if (j >= 1)
                want -= macdonald_on_circle(j - 1, tw) *
                        (tw.Q_pow(-(j + 1)) * (1 - q) * (1 - tw.q_pow(j)) * (1 - t * t * tw.q_pow(j - 1)) /
                         ((1 - t * tw.q_pow(j)) * (1 - t * tw.q_pow(j - 1))));
            if (O_C_apply(macdonald_on_circle(j, tw), tw) == want) return std::nullopt;
            return std::string("O_C P_j differs from the two-term rule");
        }));
    return rep;
}

VerificationReport verify_classical(const VerifyConfig& cfg) {
    VerificationReport rep = make_report("cmm", "Q(Q);t=q^beta");
    for (int beta : betas_or(cfg, {1, 2, 3}))
        rep.merge(classical_cmm_check(cfg.i_max, cfg.j_max, make_tower<F1>(spec_of({"Q"}, beta))));
    return rep;
}

VerificationReport verify_elliptic(const VerifyConfig& cfg) {
    const std::string backend = effective_backend(cfg);
    EllipticOptions opt;
    opt.headroom = cfg.headroom;
    std::optional<SeriesCache> cache;
    if (!cfg.cache_dir.empty()) {
        cache.emplace(cfg.cache_dir);
        opt.cache = &*cache;
    }
    VerificationReport rep = make_report("elliptic-cmm", "");
    rep.backend = backend;
    for (int beta : betas_or(cfg, {1, 2})) {
        if (backend == "symbolic") {
            auto tw = make_tower<F2>(spec_of({"Q", "S"}, beta));
            rep.tower = tw.spec.fingerprint();
            rep.merge(elliptic_cmm_verify(cfg.i_max, cfg.j_max, cfg.order, tw, opt));
        } else if (backend == "evaluated") {
            rep.seed = cfg.seed;
            for (const TowerSpec& ps : random_specs({"S"}, {"Q"}, beta, cfg.points, cfg.seed)) {
                rep.tower = "Q(S);t=q^beta;Q bound";
                rep.merge(elliptic_cmm_verify(cfg.i_max, cfg.j_max, cfg.order, make_tower<F1>(ps), opt));
            }
        } else {
            throw Error("unknown backend '" + backend + "'");
        }
    }
    return rep;
}

VerificationReport verify_eigen(const VerifyConfig& cfg) {
    const TowerSpec spec = spec_of({"Q", "T"});
    const Tower<F2> tw = make_tower<F2>(spec);
    VerificationReport rep = make_report("eigen", spec.fingerprint());
    const int n = std::max(cfg.order, 1);
    for (int j = 0; j <= 1; ++j) rep.merge(stationary_eigencheck(stationary_candidate(j, tw), n, tw, j));
    return rep;
}

VerificationReport verify_s_limit() {
    const TowerSpec spec = spec_of({"Q", "Th", "S"});
    const Tower<F3> tw = make_tower<F3>(spec);
    VerificationReport rep = make_report("s-limit", spec.fingerprint());
    for (int j = 0; j <= 1; ++j) rep.merge(s_to_one_limit_check(j, tw));
    return rep;
}

VerificationReport verify_chain(const VerifyConfig& cfg) {
    ChainOptions opt;
    opt.i_max = cfg.i_max;
    opt.j_max = cfg.j_max;
    opt.betas = betas_or(cfg, {1, 2});
    return verify_theorem9(opt);
}

const std::vector<std::string>& verify_names() {
    static const std::vector<std::string> names{"cmm",   "elliptic-cmm", "prop5",     "lemma7",    "lemma8",
                                                "theorem9", "eigen",     "s-limit",   "macdonald", "prop4",
                                                "oc-pieri"};
    return names;
}

VerificationReport verify_named(const std::string& identity, const VerifyConfig& cfg) {
    if (identity == "cmm") return verify_classical(cfg);
    if (identity == "elliptic-cmm") return verify_elliptic(cfg);
    if (identity == "prop5") return verify_first_order_expansion(cfg);
    if (identity == "lemma7") return verify_vandermonde_ratio(betas_or(cfg, {1, 2, 3, 4}));
    if (identity == "lemma8") return verify_reexpansion(cfg);
    if (identity == "theorem9") return verify_chain(cfg);
    if (identity == "eigen") return verify_eigen(cfg);
    if (identity == "s-limit") return verify_s_limit();
    if (identity == "macdonald") return verify_macdonald(std::max(cfg.j_max, 3));
    if (identity == "prop4") return verify_order_zero(cfg.j_max);
    if (identity == "oc-pieri") return verify_oc_pieri(cfg.j_max);
    throw Error("unknown identity '" + identity + "'");
}

}  // namespace ellcmm
