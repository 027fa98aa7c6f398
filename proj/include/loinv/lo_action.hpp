#pragma once

// Action of an m-mode linear-optical unitary on Fock states: the creation
// operator of mode k maps to sum_j U_{jk} (mode j), i.e. the state polynomial
// substitutes x_k -> sum_j U_{jk} x_j.  This makes U -> action a homomorphism.

#include <loinv/fock.hpp>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace loinv {

template <class S>
struct ModeUnitary {
    int m = 0;
    std::vector<S> a;  // row-major m*m

    ModeUnitary() = default;
    explicit ModeUnitary(int m_) : m(m_), a(static_cast<size_t>(m_) * m_, scalar_traits<S>::zero()) {
        if (m_ < 1) throw std::invalid_argument("ModeUnitary: need m >= 1");
    }

    const S& at(int i, int j) const { return a[static_cast<size_t>(i) * m + j]; }
    S& at(int i, int j) { return a[static_cast<size_t>(i) * m + j]; }

    static ModeUnitary identity(int m) {
        ModeUnitary u(m);
        for (int i = 0; i < m; ++i) u.at(i, i) = scalar_traits<S>::one();
        return u;
    }

    ModeUnitary adjoint() const {
        ModeUnitary r(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) r.at(i, j) = scalar_traits<S>::conj(at(j, i));
        return r;
    }

    friend ModeUnitary operator*(const ModeUnitary& x, const ModeUnitary& y) {
        if (x.m != y.m) throw std::invalid_argument("matrix size mismatch");
        ModeUnitary r(x.m);
        for (int i = 0; i < x.m; ++i)
            for (int k = 0; k < x.m; ++k) {
                S acc = scalar_traits<S>::zero();
                for (int j = 0; j < x.m; ++j) acc = acc + x.at(i, j) * y.at(j, k);
                r.at(i, k) = acc;
            }
        return r;
    }
};

template <class S>
bool is_unitary(const ModeUnitary<S>& u, double tol = 1e-12) {
    auto p = u.adjoint() * u;
    for (int i = 0; i < u.m; ++i) {
        for (int j = 0; j < u.m; ++j) {
            S want = i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero();
            if constexpr (scalar_traits<S>::exact) {
                if (!(p.at(i, j) == want)) return false;
            } else {
                if (std::abs(scalar_traits<S>::to_complex(p.at(i, j)) -
                             scalar_traits<S>::to_complex(want)) > tol)
                    return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- state action

namespace detail {

// expanded coefficients of (sum_j U_{jk} x_j)^p over occupations of p photons
template <class S>
std::map<Occupation, S> column_power(const ModeUnitary<S>& u, int k, int p) {
    std::map<Occupation, S> out;
    for (const auto& w : enumerate_occupations(p, u.m)) {
        S c = scalar_traits<S>::mul_int(scalar_traits<S>::one(), multinomial(p, w));
        bool zero = false;
        for (int j = 0; j < u.m && !zero; ++j) {
            for (int t = 0; t < w[j]; ++t) {
                c = c * u.at(j, k);
                if (scalar_traits<S>::is_zero(c)) { zero = true; break; }
            }
        }
        if (!zero && !scalar_traits<S>::is_zero(c)) out[w] = c;
    }
    return out;
}

}  // namespace detail

// apply U to a state; the result keeps the input convention
template <class S>
FockState<S> apply_unitary(const FockState<S>& st_in, const ModeUnitary<S>& u) {
    if (u.m != st_in.m) throw std::invalid_argument("apply_unitary: mode count mismatch");
    Convention orig = st_in.conv;
    FockState<S> st = st_in.conv == Convention::MONOMIAL ? st_in : convert(st_in, Convention::MONOMIAL);
    FockState<S> out(st.n, st.m, Convention::MONOMIAL);
    for (const auto& [v, amp] : st.amps) {
        // expand prod_k (sum_j U_{jk} x_j)^{v_k} by occupation convolution
        std::map<Occupation, S> acc;
        acc[Occupation(st.m, 0)] = amp;
        for (int k = 0; k < st.m; ++k) {
            if (v[k] == 0) continue;
            auto factor = detail::column_power(u, k, v[k]);
            std::map<Occupation, S> next;
            for (const auto& [w1, c1] : acc) {
                for (const auto& [w2, c2] : factor) {
                    Occupation w = w1;
                    for (int j = 0; j < st.m; ++j) w[j] += w2[j];
                    S add = c1 * c2;
                    auto it = next.find(w);
                    if (it == next.end())
                        next.emplace(w, add);
                    else
                        it->second = it->second + add;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [w, c] : acc) {
            S cur = out.get(w);
            out.set(w, cur + c);
        }
    }
    return orig == Convention::MONOMIAL ? out : convert(out, orig);
}

// diagonal (phase) action: amplitude of v picks up prod_k phases[k]^{v_k},
// identically in either convention
template <class S>
FockState<S> apply_phase(const FockState<S>& st, const std::vector<S>& phases) {
    if (static_cast<int>(phases.size()) != st.m)
        throw std::invalid_argument("apply_phase: need one phase per mode");
    FockState<S> out(st.n, st.m, st.conv);
    for (const auto& [v, amp] : st.amps) {
        S c = amp;
        for (int k = 0; k < st.m; ++k)
            for (int t = 0; t < v[k]; ++t) c = c * phases[k];
        out.set(v, c);
    }
    return out;
}

inline std::vector<std::complex<double>> phases_from_angles(const std::vector<double>& theta) {
    std::vector<std::complex<double>> out;
    out.reserve(theta.size());
    for (double t : theta) out.emplace_back(std::cos(t), std::sin(t));
    return out;
}

// n-fold tensor action: A'_{i1..in} = sum_{j1..jn} U_{i1 j1} ... U_{in jn} A_{j1..jn}
template <class S>
SymmetricTensor<S> tensor_apply(const SymmetricTensor<S>& t, const ModeUnitary<S>& u) {
    if (u.m != t.m) throw std::invalid_argument("tensor_apply: mode count mismatch");
    SymmetricTensor<S> out;
    out.n = t.n;
    out.m = t.m;
    for (const auto& vo : enumerate_occupations(t.n, t.m)) {
        auto idx = rep_tuple(vo);
        S acc = scalar_traits<S>::zero();
        // iterate all j-tuples in [m]^n
        std::vector<int> j(t.n, 0);
        while (true) {
            S term = t.get(j);
            if (!scalar_traits<S>::is_zero(term)) {
                for (int tpos = 0; tpos < t.n; ++tpos) term = term * u.at(idx[tpos], j[tpos]);
                acc = acc + term;
            }
            int pos = t.n - 1;
            while (pos >= 0 && j[pos] == t.m - 1) { j[pos] = 0; --pos; }
            if (pos < 0) break;
            ++j[pos];
        }
        out.set(idx, acc);
    }
    return out;
}

// ---------------------------------------------------------------- sampling

// deterministic uniform [0,1) and standard normals from a seeded engine
// (hand-rolled so output is identical across standard libraries)
namespace detail {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double std_normal(std::mt19937_64& rng) {
    // Box-Muller; discard the second variate for simplicity
    double u1 = 0.0;
    do { u1 = uniform01(rng); } while (u1 <= 0.0);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace detail

// Haar-distributed m x m unitary: complex Ginibre matrix, then modified
// Gram-Schmidt (whose R has a positive diagonal, so Q is exactly Haar)
inline ModeUnitary<std::complex<double>> random_haar_unitary(int m, std::mt19937_64& rng) {
    using C = std::complex<double>;
    std::vector<std::vector<C>> col(m, std::vector<C>(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            col[j][i] = C(detail::std_normal(rng), detail::std_normal(rng));
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < j; ++k) {
            C dot(0, 0);
            for (int i = 0; i < m; ++i) dot += std::conj(col[k][i]) * col[j][i];
            for (int i = 0; i < m; ++i) col[j][i] -= dot * col[k][i];
        }
        double nrm = 0;
        for (int i = 0; i < m; ++i) nrm += std::norm(col[j][i]);
        nrm = std::sqrt(nrm);
        for (int i = 0; i < m; ++i) col[j][i] /= nrm;
    }
    ModeUnitary<C> u(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) u.at(i, j) = col[j][i];
    return u;
}

inline ModeUnitary<std::complex<double>> random_haar_unitary(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_haar_unitary(m, rng);
}

// ---------------------------------------------------------------- exact unitaries

namespace detail {

// Gauss-Jordan inverse over an exact field
template <class S>
ModeUnitary<S> mat_inverse(const ModeUnitary<S>& min) {
    int m = min.m;
    ModeUnitary<S> a = min, inv = ModeUnitary<S>::identity(m);
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int r = c; r < m; ++r)
            if (!scalar_traits<S>::is_zero(a.at(r, c))) { piv = r; break; }
        if (piv < 0) throw std::domain_error("matrix is singular");
        if (piv != c)
            for (int j = 0; j < m; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        S d = a.at(c, c);
        for (int j = 0; j < m; ++j) {
            a.at(c, j) = a.at(c, j) / d;
            inv.at(c, j) = inv.at(c, j) / d;
        }
        for (int r = 0; r < m; ++r) {
            if (r == c) continue;
            S f = a.at(r, c);
            if (scalar_traits<S>::is_zero(f)) continue;
            for (int j = 0; j < m; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(c, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace detail

// exactly unitary matrix with Gaussian-rational entries, via the Cayley
// transform U = (I - K)(I + K)^{-1} of a random anti-Hermitian rational K
inline ModeUnitary<GaussianRational> exact_test_unitary(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto small_rat = [&]() {
        long num = static_cast<long>(rng() % 7) - 3;   // -3..3
        long den = static_cast<long>(rng() % 4) + 1;   // 1..4
        return Rational(num, den);
    };
    ModeUnitary<GaussianRational> k(m);
    for (int i = 0; i < m; ++i) {
        k.at(i, i) = GaussianRational(Rational(0), small_rat());
        for (int j = i + 1; j < m; ++j) {
            GaussianRational z(small_rat(), small_rat());
            k.at(i, j) = z;
            k.at(j, i) = GaussianRational() - z.conj();
        }
    }
    auto id = ModeUnitary<GaussianRational>::identity(m);
    ModeUnitary<GaussianRational> a(m), b(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            a.at(i, j) = id.at(i, j) - k.at(i, j);
            b.at(i, j) = id.at(i, j) + k.at(i, j);
        }
    return a * detail::mat_inverse(b);
}

// float copy of an exact matrix
inline ModeUnitary<std::complex<double>> to_float(const ModeUnitary<GaussianRational>& u) {
    ModeUnitary<std::complex<double>> r(u.m);
    for (int i = 0; i < u.m; ++i)
        for (int j = 0; j < u.m; ++j) r.at(i, j) = u.at(i, j).to_complex();
    return r;
}

// float copy of an exact state
inline FockState<std::complex<double>> to_float(const FockState<GaussianRational>& st) {
    FockState<std::complex<double>> out(st.n, st.m, st.conv);
    for (const auto& [v, a] : st.amps) out.set(v, a.to_complex());
    return out;
}

}  // namespace loinv
