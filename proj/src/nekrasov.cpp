#include "ellcmm/nekrasov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ellcmm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw Error("negative partition part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition Partition::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("partition must look like [3,2,2]: '" + text + "'");
    std::vector<int> parts;
    std::string body = text.substr(1, text.size() - 2);
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad partition part '" + item + "' in '" + text + "'");
            parts.push_back(std::stoi(item));
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

int p_degree(const Partition& lambda, const Partition& mu) {
    int d = 0;
    for (int a = 2; a <= lambda.length(); a += 2) d += lambda.part(a);
    for (int a = 1; a <= mu.length(); a += 2) d += mu.part(a);
    return d;
}

namespace {

// Partitions with parts <= max_part and length <= max_len whose alternate-index
// sum (indices with the given parity, 1-based) stays within budget.
void grow(std::vector<int>& pref, int max_part, int max_len, int parity, int budget,
          std::vector<Partition>& out) {
    out.emplace_back(pref);
    if (static_cast<int>(pref.size()) >= max_len) return;
    const int index = static_cast<int>(pref.size()) + 1;
    const int top = pref.empty() ? max_part : std::min(max_part, pref.back());
    for (int v = 1; v <= top; ++v) {
        const bool charged = index % 2 == parity;
        if (charged && v > budget) break;
        pref.push_back(v);
        grow(pref, max_part, max_len, parity, charged ? budget - v : budget, out);
        pref.pop_back();
    }
}

}  // namespace

std::vector<PartitionPair> enumerate_pairs(int j, int dmax) {
    std::vector<PartitionPair> out;
    std::vector<Partition> mus;
    std::vector<int> pref;
    grow(pref, dmax, 2 * dmax, 1, dmax, mus);
    for (const Partition& mu : mus) {
        const int budget = dmax - p_degree(Partition(), mu);
        std::vector<Partition> lambdas;
        grow(pref, mu.part(1) + j, 2 * dmax + 1, 0, budget, lambdas);
        for (auto& lambda : lambdas) out.emplace_back(std::move(lambda), mu);
    }
    return out;
}

std::vector<Monomial> nekrasov_factor_monomials(const Partition& P, const Partition& R, int k, const Monomial& u) {
    std::vector<Monomial> out;
    for (int b = 1; b <= P.length(); ++b)
        for (int a = 1; a <= b; ++a) {
            if ((b - a - k) % 2 != 0) continue;
            for (int m = 0; m < P.part(b) - P.part(b + 1); ++m)
                out.push_back(u * Monomial{m - R.part(a) + P.part(b + 1), 0, b - a});
        }
    for (int b = 1; b <= R.length(); ++b)
        for (int a = 1; a <= b; ++a) {
            if ((b - a + k + 1) % 2 != 0) continue;
            for (int m = 0; m < R.part(b) - R.part(b + 1); ++m)
                out.push_back(u * Monomial{m + P.part(a) - R.part(b), 0, a - b - 1});
        }
    return out;
}

PairFactors pair_factors(const Partition& lambda, const Partition& mu, int j) {
    const Monomial q_over_t{1, -1, 0}, one{}, y{-j, -1, -1};
    const Monomial y_inv = inverse(y);
    std::map<Monomial, int> count;
    auto add = [&](const std::vector<Monomial>& ws, int sign) {
        for (const Monomial& w : ws) count[w] += sign;
    };
    add(nekrasov_factor_monomials(lambda, lambda, 0, q_over_t), 1);
    add(nekrasov_factor_monomials(lambda, mu, 1, q_over_t * y), 1);
    add(nekrasov_factor_monomials(mu, lambda, -1, q_over_t * y_inv), 1);
    add(nekrasov_factor_monomials(mu, mu, 0, q_over_t), 1);
    add(nekrasov_factor_monomials(lambda, lambda, 0, one), -1);
    add(nekrasov_factor_monomials(lambda, mu, 1, y), -1);
    add(nekrasov_factor_monomials(mu, lambda, -1, y_inv), -1);
    add(nekrasov_factor_monomials(mu, mu, 0, one), -1);
    PairFactors f;
    for (const auto& [w, c] : count) {
        for (int i = 0; i < c; ++i) f.num.push_back(w);
        for (int i = 0; i < -c; ++i) f.den.push_back(w);
    }
    const long n = lambda.size() + mu.size();
    f.prefactor = Monomial{-n, n, 0};
    return f;
}

}  // namespace ellcmm
