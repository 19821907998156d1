#include "catch2/catch_amalgamated.hpp"
#include "rstir/distributions.hpp"
#include "rstir/numbers.hpp"
#include "rstir/oracles.hpp"

using namespace rstir;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("rational literals", "[rational]") {
    CHECK(Q("6/4") == Rational(3, 2));
    CHECK(Q("-2") == Rational(-2));
    CHECK(Q("+7/3").str() == "7/3");
    CHECK(Q("4/2").str() == "2");
    CHECK_THROWS_AS(Q("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Q("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Q("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Q(""), std::invalid_argument);
}

TEST_CASE("rising, falling, generalized binomial", "[numbers]") {
    CHECK(rising_factorial(Q("1"), 3) == Q("6"));
    CHECK(rising_factorial(Q("0"), 0) == Q("1"));
    CHECK(rising_factorial(Q("1/2"), 2) == Q("3/4"));
    CHECK(falling_factorial(Q("3"), 2) == Q("6"));
    CHECK(falling_factorial(Q("2"), 3) == Q("0"));
    CHECK(falling_factorial(Q("1/2"), 2) == Q("-1/4"));
    CHECK(gen_binomial(Q("4"), 2) == Q("6"));
    CHECK(gen_binomial(Q("0"), 0) == Q("1"));
    CHECK(gen_binomial(Q("3/2"), 2) == Q("3/8"));
}

TEST_CASE("r-Stirling numbers", "[numbers]") {
    for (const char* r : {"0", "1/2", "3", "7/3"}) {
        CHECK(r_stirling1(2, 0, Q(r)) == Q(r) * (Q(r) + Q("1")));
        CHECK(r_stirling2(2, 0, Q(r)) == Q(r) * Q(r));
    }
    CHECK(r_stirling1(2, 1, Q("1")) == Q("3"));
    CHECK(r_stirling1(3, 3, Q("7/3")) == Q("1"));
    CHECK(r_stirling2(2, 1, Q("1/2")) == Q("2"));
    CHECK(r_stirling2(5, 5, Q("0")) == Q("1"));
    CHECK(r_stirling1(3, 4, Q("1")) == Q("0"));
    // classic rows
    CHECK(stirling1(5, 2) == Q("50"));
    CHECK(stirling2(6, 3) == Q("90"));
    // sum_j C(4,j) {j 2} 2^{4-j} = 24 + 24 + 7
    CHECK(r_stirling2(4, 2, Q("2")) == Q("55"));
}

TEST_CASE("multinomial Stirling numbers", "[numbers]") {
    CHECK(multinomial_stirling1(3, {1, 1}) == Q("6"));
    CHECK(multinomial_stirling1(2, {0, 0}) == Q("0"));
    CHECK(multinomial_stirling1(0, {0, 0}) == Q("1"));
    CHECK(multinomial_stirling2(3, {1, 1}) == Q("6"));
    CHECK(multinomial_stirling2(2, {0, 0}) == Q("0"));
    CHECK(multinomial_stirling2(0, {0, 0}) == Q("1"));
}

TEST_CASE("r-Lah numbers", "[numbers]") {
    CHECK(r_lah(2, 1, Q("0")) == Q("2"));
    CHECK(r_lah(3, 3, Q("5/2")) == Q("1"));
    CHECK(r_lah(2, 1, Q("1")) == Q("6"));
    CHECK(r_lah(4, 2, Q("0")) == Q("36"));
    CHECK(r_lah_recursive(4, 2, Q("0")) == Q("36"));
}

TEST_CASE("Eulerian and generalized Eulerian numbers", "[numbers]") {
    CHECK(eulerian(3, 1) == Q("4"));
    CHECK(eulerian(5, 0) == Q("1"));
    CHECK(eulerian(4, 4) == Q("0"));
    CHECK(eulerian(4, 1) == Q("11"));
    CHECK(gen_eulerian(1, 1, Q("1"), Q("1")) == Q("4"));
    CHECK(gen_eulerian(0, 0, Q("3/2"), Q("7")) == Q("1"));
    CHECK(gen_eulerian(2, 0, Q("0"), Q("5")) == Q("0"));
}

TEST_CASE("r-Touchard, r-Bell, harmonic", "[numbers]") {
    CHECK(r_touchard(2, Q("0"), Q("1")) == Q("2"));
    CHECK(r_touchard(0, Q("3"), Q("1/2")) == Q("1"));
    CHECK(r_touchard(2, Q("1"), Q("1")) == Q("5"));
    CHECK(r_bell(3, Q("0")) == Q("5"));
    CHECK(harmonic(3) == Q("11/6"));
    CHECK(harmonic_rs(0, Q("1"), Q("1")) == Q("0"));
    CHECK(harmonic_rs(2, Q("1"), Q("1")) == Q("5/6"));
}

TEST_CASE("EGF coefficient oracle", "[numbers]") {
    const auto r = Q("3/4");
    CHECK(egf_coefficient_check(Family::stirling2, 0, r, 2) == std::vector<Rational>{Q("1"), r, r * r});
    CHECK(egf_coefficient_check(Family::stirling1, 1, Q("0"), 3) == std::vector<Rational>{Q("0"), Q("1"), Q("1"), Q("2")});
    CHECK(egf_coefficient_check(Family::stirling2, 1, Q("1/2"), 2) == std::vector<Rational>{Q("0"), Q("1"), Q("2")});
}

TEST_CASE("Stirling polynomials in r", "[numbers]") {
    // [3 1]_r = 2 + 6r + 3r^2 and {3 1}_r = 1 + 3r + 3r^2
    CHECK(r_stirling1_poly(3, 1) == RPolynomial{Q("2"), Q("6"), Q("3")});
    CHECK(r_stirling2_poly(3, 1) == RPolynomial{Q("1"), Q("3"), Q("3")});
}

// ------------------------------------------------------------ distributions

TEST_CASE("Stirling-type pmfs", "[distributions]") {
    auto s = stir1_pmf(2, Q("1"));
    CHECK(s.prob(1) == Q("1/2"));
    CHECK(s.prob(2) == Q("1/2"));
    CHECK(stir1_pmf(1, Q("5")).prob(1) == Q("1"));
    CHECK(stir1_pmf(3, Q("1")).prob(1) == Q("1/3"));

    auto r1 = r_stir1_pmf(1, Q("2"), Q("3"));
    CHECK(r1.prob(0) == Q("3/5"));
    CHECK(r1.prob(1) == Q("2/5"));
    CHECK(r_stir1_pmf(2, Q("1"), Q("1")).prob(1) == Q("1/2"));
    CHECK(same_law(r_stir1_pmf(6, Q("3/2"), Q("0")), stir1_pmf(6, Q("3/2"))));

    auto sb = r_stir_sibuya_pmf(2, 2, Q("0"));
    CHECK(sb.prob(1) == Q("1/2"));
    CHECK(sb.prob(2) == Q("1/2"));
    auto sb1 = r_stir_sibuya_pmf(1, 3, Q("1/2"));
    CHECK(sb1.prob(0) == Q("1/7"));
    CHECK(sb1.prob(1) == Q("6/7"));
    auto sb2 = r_stir_sibuya_pmf(2, 1, Q("1"));
    CHECK(sb2.prob(0) == Q("1/4"));
    CHECK(sb2.prob(1) == Q("3/4"));

    auto g = r_stir2_pmf(2, Q("1"), Q("0"));
    CHECK(g.prob(1) == Q("1/2"));
    CHECK(g.prob(2) == Q("1/2"));
    auto g1 = r_stir2_pmf(2, Q("1"), Q("1"));
    CHECK(g1.prob(0) == Q("1/5"));
    CHECK(g1.prob(1) == Q("3/5"));
    CHECK(g1.prob(2) == Q("1/5"));
    CHECK_THROWS(r_stir2_pmf(0, Q("1"), Q("1")));
    auto g2 = r_stir2_pmf(1, Q("2"), Q("3"));
    CHECK(g2.prob(0) == Q("3/5"));
    CHECK(g2.prob(1) == Q("2/5"));
}

TEST_CASE("multinomial pmfs", "[distributions]") {
    auto m1 = mult_stir1_pmf(1, Q("3"), {Q("1/3"), Q("2/3")});
    CHECK(m1.prob({1, 0}) == Q("1/3"));
    CHECK(m1.prob({0, 1}) == Q("2/3"));
    CHECK(mult_stir1_pmf(2, Q("2"), {Q("1/2"), Q("1/2")}).prob({1, 1}) == Q("1/3"));
    auto d1 = mult_stir1_pmf(5, Q("3/2"), {Q("1")});
    auto s1 = stir1_pmf(5, Q("3/2"));
    for (long k = 1; k <= 5; ++k) CHECK(d1.prob({k}) == s1.prob(k));

    CHECK(mdir_pmf(1, {Q("1"), Q("3")}).prob({1, 0}) == Q("1/4"));
    auto md = mdir_pmf(2, {Q("1"), Q("1")});
    CHECK(md.prob({2, 0}) == Q("1/3"));
    CHECK(md.prob({1, 1}) == Q("1/3"));
    CHECK(md.prob({0, 2}) == Q("1/3"));
}

TEST_CASE("r-composition pmfs", "[distributions]") {
    CHECK(composition_joint_pmf(4, 4, Q("2")).prob({0, 1, 1, 1, 1}) == Q("1"));
    auto j = composition_joint_pmf(2, 1, Q("1"));
    CHECK(j.prob({0, 2}) == Q("1/2"));
    CHECK(j.prob({1, 1}) == Q("1/2"));
    CHECK(mean(composition_marginal_b0(3, 1, Q("1"))) == Q("1"));
    CHECK(composition_marginal_bj(5, 5, Q("1/2")).prob(1) == Q("1"));
    // (n,k,r) = (4,2,0): the three compositions 1+3, 2+2, 3+1 are equally likely;
    // b1 = b2 = 1 is impossible because b1 + b2 = 4
    auto bi = composition_bivariate(4, 2, Q("0"));
    CHECK(bi.prob({1, 1}) == Q("0"));
    CHECK(bi.prob({1, 3}) == Q("1/3"));
    CHECK(composition_marginal_bj(4, 2, Q("0")).prob(1) == Q("1/3"));
}

TEST_CASE("Lah distribution", "[distributions]") {
    auto l = lah_pmf(2, 1, Q("0"), Q("0"));
    CHECK(l.prob(1) == Q("1/2"));
    CHECK(l.prob(2) == Q("1/2"));
    CHECK(lah_pmf(7, 7, Q("1"), Q("2")).prob(7) == Q("1"));
    CHECK(same_law(lah_pmf_recursive(2, 1, Q("0"), Q("0")), l));
    CHECK(lah_pmf_recursive(1, 1, Q("3"), Q("1/2")).prob(1) == Q("1"));
    // k = 0 boundary: number of tables of an r-Ewens permutation
    auto l30 = lah_pmf(3, 0, Q("1"), Q("1"));
    auto rs = r_stir1_pmf(3, Q("1"), Q("1"));
    CHECK(same_law(l30, rs));
    CHECK(same_law(lah_pmf_recursive(3, 0, Q("1"), Q("1")), rs));
    CHECK(lah_gen_poly(2, 1, Q("1"), Q("2"), Q("1")) == r_lah(2, 1, Q("3/2")));
    CHECK(lah_gen_poly(3, 2, Q("1"), Q("1"), Q("0")) == Q("0"));
    CHECK(lah_gen_poly(2, 1, Q("0"), Q("0"), Q("2")) == Q("6"));
    CHECK(lah_mean(2, 1, Q("0"), Q("0")) == Q("3/2"));
    CHECK(lah_mean_standard(2, 1) == Q("3/2"));
    CHECK(lah_mean(6, 6, Q("1/2"), Q("1")) == Q("6"));
    for (const char* r : {"0", "1/2", "2"})
        for (const char* s : {"1/2", "1", "3"}) {
            Rational h(0);
            for (long j = 1; j <= 6; ++j) h += Q(s) / (Q(r) + Q(s) + Rational(j - 1));
            CHECK(lah_mean(6, 0, Q(r), Q(s)) == h);
        }
}

TEST_CASE("Hoppe leaf and profile laws", "[distributions]") {
    auto h = hoppe_leaves_pmf(3, Q("1"));
    CHECK(h.prob(1) == Q("1/6"));
    CHECK(h.prob(2) == Q("2/3"));
    CHECK(h.prob(3) == Q("1/6"));
    CHECK(hoppe_leaves_pmf(1, Q("5/2")).prob(1) == Q("1"));
    auto h2 = hoppe_leaves_pmf(2, Q("2"));
    CHECK(h2.prob(1) + h2.prob(2) == Q("1"));
    CHECK(h2.prob(1) == gen_eulerian(1, 1, Q("0"), Q("2")) / Q("6"));
    CHECK(h2.prob(2) == gen_eulerian(0, 2, Q("0"), Q("2")) / Q("6"));

    CHECK(subtree_leaves_pmf(5, 5, Q("2")).prob(0) == Q("1"));
    auto st = subtree_leaves_pmf(2, 1, Q("1"));
    CHECK(st.prob(0) == Q("1/2"));
    CHECK(st.prob(1) == Q("1/2"));
    CHECK(same_law(multihoppe_leaves_pmf(6, {Q("3/2")}, 1), hoppe_leaves_pmf(6, Q("3/2"))));

    CHECK(expected_profile(1, {Q("1"), Q("3")}, 2, 1) == Q("3/4"));
    CHECK(expected_profile(2, {Q("1")}, 1, 2) == Q("1/2"));
    for (long k = 1; k <= 4; ++k) CHECK(expected_profile(4, {Q("1")}, 1, k) == r_stirling1(4, k, Q("1")) / Q("24"));
}

TEST_CASE("auxiliary laws", "[distributions]") {
    auto g = geometric_pmf(1.0);
    CHECK(g.size() == 1);
    CHECK(g.prob(1) == 1.0);
    auto geo = geometric_pmf(0.3);
    auto nb = neg_binomial_pmf(1.0, 0.3);
    for (long x = 0; x < 20; ++x) CHECK(nb.prob(x) == Catch::Approx(geo.prob(x + 1)).epsilon(1e-12));
    for (long n : {1L, 4L, 9L}) CHECK(mean(beta_binomial_pmf(n, Q("2"), Q("1/3"))) == Rational(n) * Q("2") / Q("7/3"));
}

// --------------------------------------------------------------- oracles

TEST_CASE("enumeration oracles on tiny cases", "[oracles]") {
    auto e = enumerate_colored_permutations(2, {Q("1")});
    CHECK(e.to_pmf(0).prob(1) == Q("1/2"));
    CHECK(e.to_pmf(0).prob(2) == Q("1/2"));
    CHECK(e.total() == Q("1"));
    CHECK(same_law(enumerate_colored_permutations(3, {Q("1"), Q("1")}).to_vector_pmf(),
                   mult_stir1_pmf(3, Q("2"), {Q("1/2"), Q("1/2")})));

    auto ip = enumerate_incomplete_permutations(2, Q("1"), Q("1"));
    CHECK(ip.to_pmf(0).prob(0) == Q("1/3"));
    CHECK(same_law(enumerate_incomplete_permutations(5, Q("2"), Q("0")).to_pmf(0), stir1_pmf(5, Q("2"))));

    auto g1 = enumerate_incomplete_partitions_gibbs(1, Q("2"), Q("3"));
    CHECK(g1.to_pmf(0).prob(0) == Q("3/5"));
    CHECK(g1.to_pmf(0).prob(1) == Q("2/5"));
    CHECK(enumerate_incomplete_partitions_gibbs(4, Q("1"), Q("2")).total_weight == r_touchard(4, Q("2"), Q("1")));

    auto c = enumerate_incomplete_compositions(3, 1, Q("1"));
    CHECK(mean(c.to_pmf(0)) == Q("1"));

    auto forest = enumerate_attachment_histories(1, {Q("1"), Q("2")}, [](const HoppeForest& f) { return f.component_sizes(); });
    CHECK(forest.to_vector_pmf().prob({1, 0}) == Q("1/3"));
    auto lv = enumerate_attachment_histories(4, {Q("1")}, [](const HoppeForest& f) { return std::vector<long>{f.leaves()[0]}; });
    for (long k = 1; k <= 4; ++k) CHECK(lv.to_pmf(0).prob(k) == eulerian(4, k - 1) / Q("24"));

    CHECK(same_law(lah_distribution_by_enumeration(2, 1, Q("1"), Q("0")).to_pmf(0), lah_pmf(2, 1, Q("1"), Q("0"))));
    CHECK(lah_distribution_by_enumeration(4, 4, Q("1"), Q("1")).to_pmf(0).prob(4) == Q("1"));
    CHECK(same_law(lah_distribution_by_enumeration(3, 0, Q("0"), Q("1")).to_pmf(0), stir1_pmf(3, Q("1"))));
}

TEST_CASE("size guards throw", "[oracles]") {
    CHECK_THROWS_AS(enumerate_colored_permutations(9, {Q("1")}), std::length_error);
    CHECK_THROWS_AS(enumerate_attachment_histories(9, {Q("1")}, [](const HoppeForest& f) { return f.leaves(); }),
                    std::length_error);
}
