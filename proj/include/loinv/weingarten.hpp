#pragma once

// Exact Haar moments of the unitary group U(m):
//   E[ U_{i1 j1} .. U_{id jd} conj(U_{i'1 j'1} .. U_{i'd j'd}) ]
//     = sum over sigma, tau in S_d with i = i' o sigma and j = j' o tau
//       of Wg(cycle type of tau sigma^{-1}; d, m)
// where the Weingarten function expands over irreducible characters as
//   Wg(mu; d, m) = (1/d!^2) sum_{lambda |- d, rows <= m}
//                  chi^lambda(1)^2 chi^lambda(mu) / s_lambda(1^m).

#include <loinv/combinat.hpp>
#include <loinv/scalar.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace loinv {

// full table of Wg(mu; d, m) over partitions mu of d (cached)
inline const std::map<Partition, Rational>& weingarten_table(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("weingarten_table: need d >= 1, m >= 1");
    static std::map<std::pair<int, int>, std::map<Partition, Rational>> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto key = std::make_pair(d, m);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;
    std::map<Partition, Rational> tbl;
    Rational dfact2 = Rational(factorial(d) * factorial(d));
    for (const auto& mu : partitions(d)) {
        Rational acc = 0;
        for (const auto& lam : partitions(d)) {
            if (static_cast<int>(lam.size()) > m) continue;  // s_lambda(1^m) = 0
            long long dim = char_dim(lam);
            acc += Rational(Int(dim) * Int(dim)) * Rational(character(lam, mu)) /
                   schur_at_ones(lam, m);
        }
        tbl[mu] = acc / dfact2;
    }
    return cache.emplace(key, std::move(tbl)).first->second;
}

inline Rational weingarten(Partition mu, int d, int m) {
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    int sum = 0;
    for (int x : mu) sum += x;
    if (sum != d) throw std::invalid_argument("weingarten: partition does not sum to d");
    return weingarten_table(d, m).at(mu);
}

// all sigma with a[t] == b[sigma[t]]; empty if the multisets differ
inline std::vector<Perm> matchings(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return {};
    std::map<int, std::vector<int>> pos_a, pos_b;
    for (size_t t = 0; t < a.size(); ++t) pos_a[a[t]].push_back(static_cast<int>(t));
    for (size_t t = 0; t < b.size(); ++t) pos_b[b[t]].push_back(static_cast<int>(t));
    if (pos_a.size() != pos_b.size()) return {};
    for (const auto& [v, pa] : pos_a) {
        auto it = pos_b.find(v);
        if (it == pos_b.end() || it->second.size() != pa.size()) return {};
    }
    std::vector<Perm> out;
    out.emplace_back(a.size());
    for (const auto& [v, pa] : pos_a) {
        std::vector<int> pb = pos_b[v];
        std::sort(pb.begin(), pb.end());
        std::vector<Perm> next;
        do {
            for (Perm base : out) {
                for (size_t i = 0; i < pa.size(); ++i) base[pa[i]] = pb[i];
                next.push_back(std::move(base));
            }
        } while (std::next_permutation(pb.begin(), pb.end()));
        out = std::move(next);
    }
    return out;
}

// exact joint moment of matrix entries under the Haar measure on U(m)
inline Rational haar_integral(const std::vector<int>& i, const std::vector<int>& j,
                              const std::vector<int>& ip, const std::vector<int>& jp, int m) {
    if (i.size() != j.size() || ip.size() != jp.size())
        throw std::invalid_argument("haar_integral: row/column tuple length mismatch");
    if (i.size() != ip.size()) return 0;  // unequal U and conj(U) counts integrate to zero
    if (i.empty()) return 1;
    for (const auto* t : {&i, &j, &ip, &jp})
        for (int x : *t)
            if (x < 0 || x >= m) throw std::invalid_argument("haar_integral: index out of range");
    auto sigmas = matchings(i, ip);
    if (sigmas.empty()) return 0;
    auto taus = matchings(j, jp);
    if (taus.empty()) return 0;
    int d = static_cast<int>(i.size());
    const auto& tbl = weingarten_table(d, m);
    Rational acc = 0;
    for (const auto& sigma : sigmas) {
        Perm sinv = inverse(sigma);
        for (const auto& tau : taus) acc += tbl.at(cycle_type(compose(tau, sinv)));
    }
    return acc;
}

}  // namespace loinv
