#pragma once

// Bosonic Fock states of n photons in m modes, in two amplitude conventions:
//   KET       c_v  : coefficients of the orthonormal number basis |v>
//   MONOMIAL  a_v  : coefficients of the monomial basis, a_v = c_v / sqrt(prod_k v_k!)
// plus the symmetric-tensor view A_{k1..kn} = a_v / multinomial(n, v).

#include <loinv/combinat.hpp>
#include <loinv/scalar.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loinv {

using Occupation = std::vector<int>;  // size m, entries >= 0, sum n

inline Int fock_dim(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("fock_dim: need n >= 0, m >= 1");
    // binom(n + m - 1, n)
    Int num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        num *= m - 1 + i;
        den *= i;
    }
    return num / den;
}

// all occupations of n photons in m modes, lexicographically descending:
// (n,0,...,0) first, (0,...,0,n) last
inline std::vector<Occupation> enumerate_occupations(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("enumerate_occupations: need n >= 0, m >= 1");
    std::vector<Occupation> out;
    Occupation cur(m, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, n);
    return out;
}

inline Int occ_factorial_product(const Occupation& v) {
    Int p = 1;
    for (int k : v) p *= factorial(k);
    return p;
}

// flattened index tuple (0^{v_0}, 1^{v_1}, ...) -- the sorted representative
inline std::vector<int> rep_tuple(const Occupation& v) {
    std::vector<int> t;
    for (size_t k = 0; k < v.size(); ++k)
        for (int c = 0; c < v[k]; ++c) t.push_back(static_cast<int>(k));
    return t;
}

inline Occupation occupation_of(const std::vector<int>& tuple, int m) {
    Occupation v(m, 0);
    for (int k : tuple) {
        if (k < 0 || k >= m) throw std::invalid_argument("occupation_of: mode index out of range");
        ++v[k];
    }
    return v;
}

enum class Convention { KET, MONOMIAL };

inline std::string to_string(Convention c) { return c == Convention::KET ? "ket" : "monomial"; }

template <class S>
struct FockState {
    int n = 0;
    int m = 1;
    Convention conv = Convention::KET;
    std::map<Occupation, S> amps;  // absent key = zero amplitude

    FockState() = default;
    FockState(int n_, int m_, Convention c) : n(n_), m(m_), conv(c) {
        if (n_ < 0 || m_ < 1) throw std::invalid_argument("FockState: need n >= 0, m >= 1");
    }

    void check_occ(const Occupation& v) const {
        if (static_cast<int>(v.size()) != m)
            throw std::invalid_argument("occupation has wrong number of modes");
        int s = 0;
        for (int k : v) {
            if (k < 0) throw std::invalid_argument("occupation entry is negative");
            s += k;
        }
        if (s != n) throw std::invalid_argument("occupation does not sum to the photon number");
    }

    void set(const Occupation& v, const S& a) {
        check_occ(v);
        if (scalar_traits<S>::is_zero(a))
            amps.erase(v);
        else
            amps[v] = a;
    }

    S get(const Occupation& v) const {
        check_occ(v);
        auto it = amps.find(v);
        return it == amps.end() ? scalar_traits<S>::zero() : it->second;
    }
};

// single basis ket |v> with coefficient one
template <class S>
FockState<S> basis_state(int n, int m, const Occupation& v) {
    FockState<S> st(n, m, Convention::KET);
    st.set(v, scalar_traits<S>::one());
    return st;
}

namespace detail {

inline GaussianRational scale_by_sqrt(const GaussianRational& a, const Int& f, bool divide,
                                      const Occupation& v) {
    if (a.is_zero()) return a;
    auto r = sqrt_exact(Rational(f));
    if (!r) {
        std::string occ;
        for (size_t i = 0; i < v.size(); ++i) occ += (i ? "," : "") + std::to_string(v[i]);
        throw std::domain_error(
            "exact convention change needs sqrt(" + f.str() + ") for occupation (" + occ +
            "), which is irrational; use the floating-point scalar type for this state");
    }
    return divide ? a / GaussianRational(*r) : a * GaussianRational(*r);
}

inline std::complex<double> scale_by_sqrt(const std::complex<double>& a, const Int& f, bool divide,
                                          const Occupation&) {
    double s = std::sqrt(static_cast<double>(f));
    return divide ? a / s : a * s;
}

}  // namespace detail

// change amplitude convention; the returned state carries `target`
template <class S>
FockState<S> convert(const FockState<S>& st, Convention target) {
    if (st.conv == target) return st;
    FockState<S> out(st.n, st.m, target);
    bool to_monomial = target == Convention::MONOMIAL;
    for (const auto& [v, a] : st.amps) {
        Int f = occ_factorial_product(v);
        out.set(v, detail::scale_by_sqrt(a, f, /*divide=*/to_monomial, v));
    }
    return out;
}

// squared norm, identical across conventions:
//   KET:       sum_v |c_v|^2
//   MONOMIAL:  sum_v (prod_k v_k!) |a_v|^2
template <class S>
typename scalar_traits<S>::real_type norm_sq(const FockState<S>& st) {
    using T = scalar_traits<S>;
    typename T::real_type acc{};
    for (const auto& [v, a] : st.amps) {
        auto term = T::abs_sq(a);
        if (st.conv == Convention::MONOMIAL) term = term * T::real_from(occ_factorial_product(v));
        acc = acc + term;
    }
    return acc;
}

// Hermitian inner product <x, y> (antilinear in x), with the same
// per-occupation weights as norm_sq; mixed conventions are converted first
template <class S>
S inner_product(const FockState<S>& x_in, const FockState<S>& y_in) {
    using T = scalar_traits<S>;
    if (x_in.n != y_in.n || x_in.m != y_in.m)
        throw std::invalid_argument("inner_product: shape mismatch");
    const FockState<S>& x = x_in;
    FockState<S> y_conv;
    const FockState<S>* y = &y_in;
    if (y_in.conv != x_in.conv) {
        y_conv = convert(y_in, x_in.conv);
        y = &y_conv;
    }
    S acc = T::zero();
    for (const auto& [v, a] : x.amps) {
        auto it = y->amps.find(v);
        if (it == y->amps.end()) continue;
        S term = T::conj(a) * it->second;
        if (x.conv == Convention::MONOMIAL) term = T::mul_int(term, occ_factorial_product(v));
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------- symmetric tensor

// order-n symmetric tensor over C^m, stored on sorted index tuples
template <class S>
struct SymmetricTensor {
    int n = 0;
    int m = 1;
    std::map<std::vector<int>, S> entries;  // key: sorted tuple of n mode indices

    S get(std::vector<int> idx) const {
        std::sort(idx.begin(), idx.end());
        auto it = entries.find(idx);
        return it == entries.end() ? scalar_traits<S>::zero() : it->second;
    }

    void set(std::vector<int> idx, const S& a) {
        std::sort(idx.begin(), idx.end());
        if (scalar_traits<S>::is_zero(a))
            entries.erase(idx);
        else
            entries[idx] = a;
    }
};

// A_{k1..kn} = a_v / multinomial(n, v), constant on index permutations
template <class S>
SymmetricTensor<S> state_to_tensor(const FockState<S>& st) {
    const FockState<S>* src = &st;
    FockState<S> converted;
    if (st.conv != Convention::MONOMIAL) {
        converted = convert(st, Convention::MONOMIAL);
        src = &converted;
    }
    SymmetricTensor<S> t;
    t.n = st.n;
    t.m = st.m;
    for (const auto& [v, a] : src->amps) {
        S w = scalar_traits<S>::div_int(a, multinomial(st.n, v));
        t.set(rep_tuple(v), w);
    }
    return t;
}

template <class S>
FockState<S> tensor_to_state(const SymmetricTensor<S>& t) {
    FockState<S> st(t.n, t.m, Convention::MONOMIAL);
    for (const auto& [idx, a] : t.entries) {
        Occupation v = occupation_of(idx, t.m);
        st.set(v, scalar_traits<S>::mul_int(a, multinomial(t.n, v)));
    }
    return st;
}

// n! * sum over all (unsorted) index tuples of |A|^2; equals the state norm
template <class S>
typename scalar_traits<S>::real_type tensor_norm_sq(const SymmetricTensor<S>& t) {
    using T = scalar_traits<S>;
    typename T::real_type acc{};
    for (const auto& [idx, a] : t.entries) {
        Occupation v = occupation_of(idx, t.m);
        acc = acc + T::abs_sq(a) * T::real_from(factorial(t.n) * multinomial(t.n, v));
    }
    return acc;
}

}  // namespace loinv
