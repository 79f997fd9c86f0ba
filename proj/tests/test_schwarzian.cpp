#include <doctest.h>

#include <teichlab/families.hpp>
#include <teichlab/schwarzian.hpp>

using namespace teichlab;

TEST_CASE("vanishes on degree-one maps") {
    auto id = LaurentSeries::identity(SeriesDomain::Exterior);
    CHECK(schwarzian(id).series.max_abs_coeff() == 0.0);

    std::vector<cxd> affine = {cxd(0.7, -0.2), cxd(1.0, 0.5)};
    auto f = LaurentSeries(SeriesDomain::Exterior, 0, 1, affine, true);
    CHECK(schwarzian(f).series.max_abs_coeff() < 1e-15);
}

TEST_CASE("leading coefficient is -6 b1") {
    for (const auto& f : {b1_map(cxd(0.3, 0.4)), bm_map(0.2, 3),
                          sigma_from_s(koebe_qc(0.25, 1, 40))}) {
        auto S = schwarzian(f).series;
        CHECK(S.hi() <= -4);
        CHECK(std::abs(S.coeff(-4) + 6.0 * f.coeff(-1)) < 1e-13);
    }
}

TEST_CASE("series of z + 0.5/z matches the frozen symbolic expansion") {
    // coefficients of z^{-4}..z^{-14} from a one-time computer-algebra run
    const double expected[] = {-3.0, 0.0,  -3.0,    0.0, -2.25,   0.0,
                               -1.5, 0.0,  -0.9375, 0.0, -0.5625};
    auto S = schwarzian(b1_map(0.5)).series;
    for (int k = 0; k < 11; ++k)
        CHECK(std::abs(S.coeff(-4 - k) - expected[k]) < 1e-12);
}

TEST_CASE("homotopy rescale identity") {
    CHECK(homotopy_schwarzian_check(LaurentSeries::identity(SeriesDomain::Exterior),
                                    cxd(0.4, 0.0)) == 0.0);
    CHECK(homotopy_schwarzian_check(b1_map(0.5), cxd(0.3, 0.0)) < 1e-12);
    for (const auto& f : {b1_map(cxd(0.2, 0.5)), bm_map(0.25, 2),
                          sigma_from_s(koebe_qc(0.3, 1, 40))})
        for (double r : {0.2, 0.5, 0.8})
            for (double th : {0.0, 1.1, 2.7})
                CHECK(homotopy_schwarzian_check(f, std::polar(r, th)) < 1e-12);
    CHECK_THROWS_AS(homotopy_schwarzian_check(b1_map(0.5), cxd(0.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("weighted sup norm estimates") {
    auto zero = SchwarzianSeries{LaurentSeries::constant(SeriesDomain::Exterior, 0.0)};
    CHECK(b_norm_estimate(zero, 20.0, 64).value == 0.0);

    // phi = z^-4: the weight (r^2-1)^2 r^-4 increases to 1; compare against a
    // one-dimensional scan oracle at the same outer radius
    auto phi = SchwarzianSeries{LaurentSeries::monomial(SeriesDomain::Exterior, 1.0, -4)};
    const double r_max = 200.0;
    double oracle = 0.0;
    for (int i = 1; i <= 200000; ++i) {
        const double r = 1.0 + (r_max - 1.0) * double(i) / 200000.0;
        oracle = std::max(oracle, std::pow(r * r - 1.0, 2) / std::pow(r, 4));
    }
    auto est = b_norm_estimate(phi, r_max, 256);
    CHECK(std::abs(est.value - oracle) < 1e-6);
    CHECK(est.value > 0.99);
    CHECK(est.value <= 1.0);

    auto S = SchwarzianSeries{schwarzian(b1_map(0.5)).series};
    auto e = b_norm_estimate(S, 20.0, 256);
    CHECK(e.value > 0.0);
    CHECK(e.refinement_delta < 1e-4);

    CHECK_THROWS_AS(b_norm_estimate(phi, 0.9, 64), std::invalid_argument);
}

TEST_CASE("degenerate series rejected") {
    auto c = LaurentSeries::constant(SeriesDomain::Exterior, 3.0);
    CHECK_THROWS_AS(schwarzian(c), std::invalid_argument);
}
