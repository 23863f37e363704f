#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pdskit/bounds.hpp"

using namespace pdskit;
using namespace pdskit::bounds;

TEST_CASE("entropy") {
    CHECK(entropy(0) == 0);
    CHECK(entropy(1) == 0);
    CHECK(entropy(0.5) == doctest::Approx(std::numbers::ln2));
    CHECK(entropy(0.25) == doctest::Approx(-0.25 * std::log(0.25) - 0.75 * std::log(0.75)));
    CHECK(entropy(0.25) == doctest::Approx(0.5623).epsilon(1e-4));
    for (double p : {0.1, 0.2, 0.3, 0.37, 0.45}) {
        CHECK(entropy(p) == doctest::Approx(entropy(1 - p)));
        CHECK(entropy(p) < entropy(0.5));
    }
    CHECK_THROWS_AS(entropy(-0.1), InputError);
    CHECK_THROWS_AS(entropy(1.5), InputError);
}

TEST_CASE("binary entropy and phi") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0) == 0);
    CHECK(phi(0.75) == 1);
    CHECK(phi(0.25) == doctest::Approx(binary_entropy(0.25)));
    CHECK(phi(0.5 - 1e-9) == doctest::Approx(phi(0.5)));
    CHECK_THROWS_AS(phi(0), InputError);
    CHECK_THROWS_AS(phi(1), InputError);
}

TEST_CASE("exact binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    CHECK(log_big(binomial(100, 50)) == doctest::Approx(std::log(1.00891344545564193334812497256e29)));
}

TEST_CASE("entropy limit") {
    CHECK(entropy_limit_check(10, 0) == 0);
    CHECK(std::fabs(entropy_limit_check(1000, 0.5) - std::numbers::ln2) < 0.01);
    CHECK(std::fabs(entropy_limit_check(200, 0.25) - entropy(0.25)) < 0.03);
    CHECK(std::fabs(entropy_limit_check(1000, 0.25) - entropy(0.25)) < 0.01);
    CHECK(std::fabs(central_binomial_ratio(1000) - 1) < 0.02);
    CHECK_THROWS_AS(entropy_limit_check(0, 0.5), InputError);
}

TEST_CASE("bound rows") {
    auto r = bound_row(6, 3);
    CHECK(r.regime == Regime::Low1);
    CHECK(r.sok_low1 == 10);
    CHECK(r.gill == 432);
    CHECK_FALSE(r.moore.has_value());

    r = bound_row(3, 2);
    CHECK(r.gill == 9);
    CHECK(r.moore == 2u);

    r = bound_row(6, 4);
    CHECK(r.regime == Regime::Low2);
    CHECK(r.sok_low2 == 6);
    CHECK(r.sok_up_factor == 3);

    r = bound_row(5, 5);
    CHECK(r.regime == Regime::None);
    CHECK_FALSE(r.phi_n.has_value());
    CHECK_THROWS_AS(bound_row(3, 1), InputError);
    CHECK_THROWS_AS(bound_row(3, 4), InputError);
}

TEST_CASE("csv output") {
    CHECK(csv_header() == "n,k,regime,moore,gill,sok_low1,sok_low2,sok_up_factor,phi_n,tn_asym,sn_asym");
    const auto row = csv_row(bound_row(3, 2));
    CHECK(row.rfind("3,2,low2,2,9,2,1,1,3,", 0) == 0);
    CHECK(csv_row(bound_row(5, 5)).find(",,") != std::string::npos);

    const auto table = bounds_table(4, 6, TableRule{});
    CHECK(table.rfind("# ", 0) == 0);
    CHECK(table.find("\n" + csv_header() + "\n") != std::string::npos);
    CHECK(table.find("\n4,2,") != std::string::npos);
    CHECK(table.find("\n6,3,") != std::string::npos);
    TableRule fixed;
    fixed.fixed_k = 3;
    CHECK(bounds_table(3, 4, fixed).find("\n4,3,") != std::string::npos);
    CHECK_THROWS_AS(bounds_table(5, 4, TableRule{}), InputError);
}
