#include <catch2/catch_amalgamated.hpp>

#include <loinv/reach.hpp>

using namespace loinv;

namespace {

FockState<GaussianRational> monomial_state(
    int n, int m, const std::vector<std::pair<Occupation, GaussianRational>>& amps) {
    FockState<GaussianRational> st(n, m, Convention::MONOMIAL);
    for (const auto& [v, a] : amps) st.set(v, a);
    return st;
}

FockState<GaussianRational> random_exact_state(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FockState<GaussianRational> st(n, m, Convention::MONOMIAL);
    for (const auto& v : enumerate_occupations(n, m)) {
        int re = int(rng() % 5) - 2, im = int(rng() % 5) - 2;
        st.set(v, GaussianRational(Rational(re, 2), Rational(im, 3)));
    }
    return st;
}

ReachOptions no_oracle() {
    ReachOptions o;
    o.oracle_restarts = 0;
    return o;
}

}  // namespace

TEST_CASE("single photons reach every state of equal norm", "[reach]") {
    FockState<std::complex<double>> a(1, 2, Convention::KET);
    a.set({1, 0}, 1.0);
    FockState<std::complex<double>> b(1, 2, Convention::KET);
    b.set({1, 0}, 1 / std::sqrt(2.0));
    b.set({0, 1}, std::complex<double>(0, 1 / std::sqrt(2.0)));
    auto v = decide_reachability(a, b);
    CHECK(v.status == ReachStatus::REACHABLE);
    CHECK(v.method == ReachMethod::NORM_N1);
    CHECK(v.degree_explored == 1);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("single photons cannot change their norm", "[reach]") {
    auto a = monomial_state(1, 2, {{{1, 0}, GaussianRational(1)}});
    auto b = monomial_state(1, 2, {{{1, 0}, GaussianRational(Rational(1, 2))}});
    auto v = decide_reachability(a, b);
    REQUIRE(v.status == ReachStatus::UNREACHABLE);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->invariant == "squared norm");
    CHECK(v.witness->src_value == "1");
    CHECK(v.witness->dst_value == "1/4");
}

TEST_CASE("the worked two-photon pair is separated with an exact witness", "[reach]") {
    auto src = basis_state<GaussianRational>(2, 2, {1, 1});
    auto dst = monomial_state(2, 2, {{{2, 0}, GaussianRational(Rational(1, 2))}});
    auto v = decide_reachability(src, dst);
    REQUIRE(v.status == ReachStatus::UNREACHABLE);
    CHECK(v.method == ReachMethod::SINGULAR_VALUES_N2);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree == 2);
    CHECK(v.witness->src_value == "1/16");
    CHECK(v.witness->dst_value == "0");
}

TEST_CASE("the interferometer output is reachable from the balanced pair", "[reach]") {
    auto src = basis_state<GaussianRational>(2, 2, {1, 1});
    auto dst = monomial_state(2, 2, {{{2, 0}, GaussianRational(Rational(1, 2))},
                                     {{0, 2}, GaussianRational(Rational(-1, 2))}});
    auto v = decide_reachability(src, dst);
    CHECK(v.status == ReachStatus::REACHABLE);
    CHECK(v.method == ReachMethod::SINGULAR_VALUES_N2);
}

TEST_CASE("three-photon orbit membership is confirmed by an explicit unitary", "[reach]") {
    auto src = random_exact_state(3, 2, 12);
    auto u = exact_test_unitary(2, 5);
    auto dst = apply_unitary(src, u);
    auto v = decide_reachability(src, dst);
    REQUIRE(v.status == ReachStatus::REACHABLE);
    CHECK(v.method == ReachMethod::INVARIANT_COMPARISON);
    CHECK(v.degree_explored == 3);
    REQUIRE(v.unitary.has_value());
    CHECK(is_unitary(*v.unitary, 1e-8));
    auto srcf = to_float(src), dstf = to_float(dst);
    auto moved = apply_unitary(srcf, *v.unitary);
    double resid = norm_sq(moved) + norm_sq(dstf) - 2 * std::abs(inner_product(moved, dstf));
    CHECK(resid < 1e-6);
}

TEST_CASE("agreement up to the cap without a unitary stays undecided", "[reach]") {
    auto src = random_exact_state(3, 2, 21);
    auto dst = apply_unitary(src, exact_test_unitary(2, 9));
    auto v = decide_reachability(src, dst, no_oracle());
    CHECK(v.status == ReachStatus::UNDECIDED);
    CHECK(v.method == ReachMethod::INVARIANT_COMPARISON);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("three-photon norm mismatch yields a degree-one witness", "[reach]") {
    auto src = monomial_state(3, 2, {{{3, 0}, GaussianRational(1)}});
    auto dst = monomial_state(3, 2, {{{2, 1}, GaussianRational(1)}});
    // squared norms 6 versus 2
    auto v = decide_reachability(src, dst, no_oracle());
    REQUIRE(v.status == ReachStatus::UNREACHABLE);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree == 1);
}

TEST_CASE("distinct three-photon basis states are separated beyond degree one", "[reach]") {
    FockState<std::complex<double>> src(3, 2, Convention::KET);
    src.set({3, 0}, 1.0);
    FockState<std::complex<double>> dst(3, 2, Convention::KET);
    dst.set({2, 1}, 1.0);
    auto v = decide_reachability(src, dst, no_oracle());
    REQUIRE(v.status == ReachStatus::UNREACHABLE);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->degree >= 2);
    CHECK_FALSE(v.witness->invariant.empty());
}

TEST_CASE("constructed orbit pairs are never called unreachable", "[reach]") {
    std::mt19937_64 rng(808);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto src = to_float(random_exact_state(n, m, 100u * n + 10u * m + trial));
            auto dst = apply_unitary(src, random_haar_unitary(m, rng));
            auto v = decide_reachability(src, dst, no_oracle());
            CHECK(v.status != ReachStatus::UNREACHABLE);
            if (n <= 2) CHECK(v.status == ReachStatus::REACHABLE);
        }
    }
}

TEST_CASE("verdict status survives pre-composition with a unitary", "[reach]") {
    auto src = basis_state<GaussianRational>(2, 2, {1, 1});
    auto dst = monomial_state(2, 2, {{{2, 0}, GaussianRational(Rational(1, 2))}});
    auto rotated = apply_unitary(src, exact_test_unitary(2, 77));
    CHECK(decide_reachability(rotated, dst).status == decide_reachability(src, dst).status);

    auto src3 = to_float(random_exact_state(3, 2, 5));
    FockState<std::complex<double>> dst3(3, 2, Convention::KET);
    dst3.set({3, 0}, 1.0);
    std::mt19937_64 rng(4);
    auto rotated3 = apply_unitary(src3, random_haar_unitary(2, rng));
    CHECK(decide_reachability(rotated3, dst3, no_oracle()).status ==
          decide_reachability(src3, dst3, no_oracle()).status);
}

TEST_CASE("shape mismatches are rejected", "[reach]") {
    auto a = random_exact_state(2, 2, 1);
    auto b = random_exact_state(2, 3, 2);
    CHECK_THROWS_AS(decide_reachability(a, b), std::invalid_argument);
    auto c = random_exact_state(3, 2, 3);
    CHECK_THROWS_AS(decide_reachability(a, c), std::invalid_argument);
}

TEST_CASE("degree-and-tolerance overload forwards to the option set", "[reach]") {
    auto src = random_exact_state(3, 2, 61);
    auto dst = apply_unitary(src, exact_test_unitary(2, 13));
    auto v = decide_reachability(src, dst, 2, 1e-8);
    // with no explicit search configured either way, degree cap 2 still
    // agrees on everything it can see
    CHECK(v.degree_explored == 2);
    CHECK(v.status != ReachStatus::UNREACHABLE);
}

TEST_CASE("status names render for reports", "[reach]") {
    CHECK(std::string(to_string(ReachStatus::REACHABLE)) == "REACHABLE");
    CHECK(std::string(to_string(ReachStatus::UNREACHABLE)) == "UNREACHABLE");
    CHECK(std::string(to_string(ReachStatus::UNDECIDED)) == "UNDECIDED");
    CHECK(std::string(to_string(ReachMethod::NORM_N1)) == "NORM_N1");
    CHECK(std::string(to_string(ReachMethod::SINGULAR_VALUES_N2)) == "SINGULAR_VALUES_N2");
    CHECK(std::string(to_string(ReachMethod::INVARIANT_COMPARISON)) == "INVARIANT_COMPARISON");
}
