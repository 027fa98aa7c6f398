#include <catch2/catch_amalgamated.hpp>

#include <loinv/fock.hpp>

#include <complex>
#include <stdexcept>

using namespace loinv;
using C = std::complex<double>;
using G = GaussianRational;

TEST_CASE("fock space dimension", "[fock]") {
    CHECK(fock_dim(2, 2) == 3);
    CHECK(fock_dim(3, 3) == 10);
    CHECK(fock_dim(1, 5) == 5);
    CHECK(fock_dim(0, 4) == 1);
    CHECK(fock_dim(4, 2) == 5);
    CHECK(fock_dim(10, 4) == 286);
}

TEST_CASE("occupation enumeration is lexicographically descending", "[fock]") {
    auto occ = enumerate_occupations(2, 2);
    std::vector<Occupation> want = {{2, 0}, {1, 1}, {0, 2}};
    CHECK(occ == want);
    auto occ32 = enumerate_occupations(3, 2);
    std::vector<Occupation> want32 = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};
    CHECK(occ32 == want32);
    for (int n = 0; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            auto all = enumerate_occupations(n, m);
            CHECK(Int(all.size()) == fock_dim(n, m));
            for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
            for (const auto& v : all) {
                int s = 0;
                for (int k : v) s += k;
                CHECK(s == n);
            }
        }
    }
}

TEST_CASE("occupations and index tuples convert both ways", "[fock]") {
    CHECK(rep_tuple({2, 0, 1}) == std::vector<int>({0, 0, 2}));
    CHECK(occupation_of({0, 0, 2}, 3) == Occupation({2, 0, 1}));
    CHECK(occ_factorial_product({2, 0, 2}) == 4);
    CHECK(occ_factorial_product({1, 1}) == 1);
    CHECK(occ_factorial_product({3, 1}) == 6);
}

TEST_CASE("state amplitude accessors validate occupations", "[fock]") {
    FockState<G> st(2, 2, Convention::KET);
    CHECK_THROWS_AS(st.set({1, 0}, G(1)), std::invalid_argument);  // sums to 1, not 2
    CHECK_THROWS_AS(st.set({2, 0, 0}, G(1)), std::invalid_argument);
    st.set({2, 0}, G(1));
    CHECK(st.get({2, 0}) == G(1));
    CHECK(st.get({1, 1}) == G());
    st.set({2, 0}, G());  // setting zero clears the entry
    CHECK(st.amps.empty());
}

TEST_CASE("convention change divides by the root of the occupation factorial", "[fock]") {
    // |1,1>: factor sqrt(1!1!) = 1, conversion is the identity
    auto st = basis_state<G>(2, 2, {1, 1});
    auto mono = convert(st, Convention::MONOMIAL);
    CHECK(mono.conv == Convention::MONOMIAL);
    CHECK(mono.get({1, 1}) == G(1));

    // |2,0>: factor sqrt(2!) is irrational -- the exact path must refuse
    auto st20 = basis_state<G>(2, 2, {2, 0});
    CHECK_THROWS_AS(convert(st20, Convention::MONOMIAL), std::domain_error);

    // ...but the floating-point path produces 1/sqrt(2)
    auto stf = basis_state<C>(2, 2, {2, 0});
    auto monof = convert(stf, Convention::MONOMIAL);
    CHECK(std::abs(monof.get({2, 0}) - C(1.0 / std::sqrt(2.0), 0)) < 1e-15);

    // occupation (2,2): factor sqrt(2!2!) = 2 is exact
    FockState<G> st4(4, 2, Convention::KET);
    st4.set({2, 2}, G(1));
    auto mono4 = convert(st4, Convention::MONOMIAL);
    CHECK(mono4.get({2, 2}) == G(Rational(1, 2)));
    auto back = convert(mono4, Convention::KET);
    CHECK(back.get({2, 2}) == G(1));
}

TEST_CASE("squared norm weights monomial amplitudes by occupation factorials", "[fock]") {
    FockState<G> mono(2, 2, Convention::MONOMIAL);
    mono.set({1, 1}, G(1));
    CHECK(norm_sq(mono) == Rational(1));
    FockState<G> mono2(2, 2, Convention::MONOMIAL);
    mono2.set({2, 0}, G(1));
    CHECK(norm_sq(mono2) == Rational(2));

    FockState<G> ket(2, 2, Convention::KET);
    ket.set({2, 0}, G(Rational(1, 2), Rational(1, 2)));
    ket.set({0, 2}, G(Rational(1, 2)));
    CHECK(norm_sq(ket) == Rational(3, 4));

    // norm is convention independent (floating-point round trip)
    FockState<C> kf(3, 2, Convention::KET);
    kf.set({3, 0}, C(0.5, 0.25));
    kf.set({2, 1}, C(-0.125, 0.75));
    auto mf = convert(kf, Convention::MONOMIAL);
    CHECK(std::abs(norm_sq(kf) - norm_sq(mf)) < 1e-14);
}

TEST_CASE("symmetric tensor of a state divides by multinomials", "[fock]") {
    // a_{11} = 1  ->  A_{(0,1)} = 1/2
    FockState<G> mono(2, 2, Convention::MONOMIAL);
    mono.set({1, 1}, G(1));
    auto t = state_to_tensor(mono);
    CHECK(t.get({0, 1}) == G(Rational(1, 2)));
    CHECK(t.get({1, 0}) == G(Rational(1, 2)));  // symmetric access
    CHECK(t.get({0, 0}) == G());
    CHECK(t.get({1, 1}) == G());

    // one photon in mode 2 of three: A_k = a_v on single indices
    FockState<G> one(1, 3, Convention::MONOMIAL);
    one.set({0, 1, 0}, G(1));
    auto t1 = state_to_tensor(one);
    CHECK(t1.get({1}) == G(1));
    CHECK(t1.get({0}) == G());

    auto round = tensor_to_state(t);
    CHECK(round.conv == Convention::MONOMIAL);
    CHECK(round.get({1, 1}) == G(1));
    CHECK(round.amps.size() == 1);
}

TEST_CASE("tensor norm matches the state norm", "[fock]") {
    FockState<G> mono(2, 2, Convention::MONOMIAL);
    mono.set({2, 0}, G(Rational(1, 3)));
    mono.set({1, 1}, G(Rational(1, 2), Rational(-1, 5)));
    mono.set({0, 2}, G(Rational(0), Rational(2, 7)));
    CHECK(tensor_norm_sq(state_to_tensor(mono)) == norm_sq(mono));

    FockState<C> mf(3, 3, Convention::MONOMIAL);
    mf.set({3, 0, 0}, C(0.3, -0.1));
    mf.set({1, 1, 1}, C(0.2, 0.4));
    mf.set({0, 2, 1}, C(-0.6, 0.05));
    CHECK(std::abs(tensor_norm_sq(state_to_tensor(mf)) - norm_sq(mf)) < 1e-14);
}
