#include "catch2/catch_amalgamated.hpp"
#include "rstir/json_io.hpp"
#include "rstir/parallel.hpp"
#include "rstir/samplers.hpp"
#include "rstir/stats.hpp"

using namespace rstir;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("Philox4x32-10 known answers", "[rng]") {
    using B = Rng::Block;
    CHECK(Rng::philox(B{0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Rng::philox(B{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          B{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Rng::philox(B{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          B{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("Rng streams and draw order", "[rng]") {
    Rng a(1, 0), b(1, 0), c(1, 1), d(2, 0);
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
    // first output is words 0,1 of block 0
    const auto blk = Rng::philox({0, 0, 0, 0}, {1, 0});
    CHECK(x == (static_cast<std::uint64_t>(blk[0]) | static_cast<std::uint64_t>(blk[1]) << 32));
    CHECK(a.next_u64() == (static_cast<std::uint64_t>(blk[2]) | static_cast<std::uint64_t>(blk[3]) << 32));
    CHECK(a.draws() == 2);
    Rng e(5);
    for (int i = 0; i < 1000; ++i) {
        const double u = e.uniform_pos();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(e.below(7) < 7);
    }
    CHECK_THROWS(e.below(0));
}

TEST_CASE("InverseCdf boundaries", "[samplers]") {
    InverseCdf t({0, 1}, {Q("1"), Q("1")});
    const std::uint64_t half = std::uint64_t(1) << 63;
    CHECK(t.lookup(0) == 0);
    CHECK(t.lookup(half - 1) == 0);
    CHECK(t.lookup(half) == 0);  // boundary resolves to the lower point
    CHECK(t.lookup(half + 1) == 1);
    CHECK(t.lookup(~std::uint64_t(0)) == 1);

    InverseCdf z({0, 1, 2}, {Q("1"), Q("0"), Q("1")});
    CHECK(z.size() == 2);
    CHECK(z.lookup(half + 1) == 2);
    CHECK(z.lookup(0) == 0);

    InverseCdf one({7}, {Q("3")});
    CHECK(one.lookup(0) == 7);
    CHECK(one.lookup(~std::uint64_t(0)) == 7);

    InverseCdf zero_last({1, 2}, {Q("1"), Q("0")});
    CHECK(zero_last.lookup(~std::uint64_t(0)) == 1);

    CHECK_THROWS(InverseCdf({0}, {Q("0")}));
    CHECK_THROWS(InverseCdf({0, 1}, {Q("1"), Q("-1")}));
}

TEST_CASE("structural invariants of every sampler", "[samplers]") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng g(99, i);
        const long n = 1 + static_cast<long>(i % 12);
        auto p = crp_colored(n, {Q("1"), Q("1/2")}, g);
        p.validate();
        auto f = feller_colored(n, {Q("2")}, g);
        f.validate();
        auto e = r_ewens(n, Q("1"), Q("3/2"), g);
        e.validate();
        auto h = hoppe_forest(n, {Q("1"), Q("2"), Q("1/2")}, g);
        h.validate();
        auto t = r_hoppe_tree(n, Q("1"), Q("1"), g);
        t.forest.validate();
        auto u = urn_incomplete_partition(n, 3, Q("1/2"), g);
        u.validate();
        auto gp = gibbs_r_partition(n, Q("3/2"), Q("1"), g);
        gp.partition.validate();
        CHECK(gp.empty_urns == gp.urns - gp.partition.num_blocks());
        const long k = 1 + static_cast<long>(i % static_cast<std::uint64_t>(n));
        r_composition_dirichlet(n, k, Q("1/2"), g).validate(n);
        r_composition_polya(n, k, Q("2"), g).validate(n);
        auto chain = nested_composition_stream(n, Q("1"), g);
        for (std::size_t m = 1; m < chain.size(); ++m) REQUIRE(is_refinement(chain[m - 1], chain[m]));
        const long lah = lah_sample_composition(n, k, Q("1"), Q("1"), g);
        CHECK(lah >= k);
        CHECK(lah <= n);
        if (n <= 6) {
            sample_broder_perm(n, 2, g).validate();
            sample_broder_part(n, 2, g).validate();
        }
    }
}

TEST_CASE("degenerate parameters", "[samplers]") {
    Rng g(3);
    // r = 0: every element is white
    for (int i = 0; i < 50; ++i) {
        CHECK(r_ewens(6, Q("1"), Q("0"), g).red.empty());
        CHECK(urn_incomplete_partition(6, 1, Q("0"), g).num_blocks() == 1);
        CHECK(r_composition_dirichlet(6, 3, Q("0"), g).b[0] == 0);
    }
    auto c = r_composition_polya(5, 5, Q("2"), g);
    CHECK(c.b == std::vector<long>{0, 1, 1, 1, 1, 1});
    CHECK(lah_sample_direct(5, 5, Q("1"), Q("1"), g) == 5);
    CHECK(lah_sample_subtree(5, 5, Q("1"), Q("1"), g) == 5);
}

TEST_CASE("replicas do not depend on thread count", "[parallel]") {
    auto f = [](Rng& g) { return r_composition_dirichlet(20, 4, Q("3/2"), g).b; };
    const auto a = run_replicas<std::vector<long>>(500, 11, 1000, 1, f);
    const auto b = run_replicas<std::vector<long>>(500, 11, 1000, 4, f);
    const auto c = run_replicas<std::vector<long>>(500, 11, 1000, 7, f);
    CHECK(a == b);
    CHECK(a == c);
    auto gibbs = [](Rng& g) { return gibbs_r_partition(8, Q("1"), Q("1"), g).partition; };
    CHECK(run_replicas<IncompletePartition>(200, 5, 0, 1, gibbs) == run_replicas<IncompletePartition>(200, 5, 0, 3, gibbs));
}

TEST_CASE("distance and test statistics", "[stats]") {
    std::map<long, double> p{{1, 1.0}}, q{{2, 1.0}};
    CHECK(tv_distance(p, p) == 0.0);
    CHECK(tv_distance(p, q) == 1.0);
    CHECK(normal_cdf(0.0) == Catch::Approx(0.5));
    CHECK(normal_cdf(1.959963984540054) == Catch::Approx(0.975).epsilon(1e-9));
    std::vector<double> z;
    for (int i = 1; i < 1000; ++i) z.push_back(static_cast<double>(i) / 1000.0);
    CHECK(ks_statistic(z, [](double x) { return x; }) == Catch::Approx(0.001).margin(1e-9));
    // chi-square against the exact law itself is tiny
    std::vector<long> xs;
    for (int i = 0; i < 600; ++i) xs.push_back(i % 3);
    auto rep = chi_square_gof(xs, std::map<long, double>{{0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}}, 5.0, 1e-6, "chi");
    CHECK(rep.statistic == Catch::Approx(0.0).margin(1e-12));
    CHECK(rep.pass);
}

TEST_CASE("canonical JSON", "[json]") {
    CHECK(dump(to_json(lah_pmf(2, 1, Q("0"), Q("0")))) ==
          R"({"schema":"rstir/1","family":"lah","params":{"n":"2","k":"1","r":"0","s":"0"},"mode":"exact","support":[1,2],"probs":["1/2","1/2"]})");
    IncompleteComposition c{{1, 0, 3}};
    CHECK(dump(to_json(c)) == R"({"b":[1,0,3]})");
}
