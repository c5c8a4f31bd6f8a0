#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zv/special.hpp"
#include "zv/zero_count.hpp"
#include "zv/zeta.hpp"

using namespace zv;

namespace {
// References computed independently with mpmath at 30 digits.
constexpr double kGramM1 = 9.6669080561301921;
constexpr double kGram0 = 17.8455995404108608;
constexpr double kZero1 = 14.1347251417346938;
constexpr double kZero2 = 21.0220396387715550;
constexpr double kZero3 = 25.0108575801456888;
}  // namespace

TEST_CASE("gram points match references and their defining equation") {
    CHECK(gram_point(-1).g == doctest::Approx(kGramM1).epsilon(1e-10));
    CHECK(gram_point(0).g == doctest::Approx(kGram0).epsilon(1e-10));
    double prev = 0.0;
    for (long n : {-1L, 0L, 5L, 100L, 2000L, 10000L}) {
        const GramPoint gp = gram_point(n);
        CHECK(std::abs(theta(gp.g) - n * kPi) < 1e-10);
        CHECK(gp.g > prev);
        prev = gp.g;
    }
    CHECK_THROWS_AS(gram_point(-2), DomainError);
}

TEST_CASE("scan finds no sign change below the first zero") {
    CHECK(scan_sign_changes(0.0, 10.0).brackets.empty());
}

TEST_CASE("scan brackets the first zero in [14, 15]") {
    const ScanResult r = scan_sign_changes(14.0, 15.0);
    REQUIRE(r.brackets.size() == 1);
    CHECK(r.brackets[0].t_lo < kZero1);
    CHECK(r.brackets[0].t_hi > kZero1);
}

TEST_CASE("scan count on [0, 100] is 29 and stable under a finer grid") {
    CHECK(scan_sign_changes(0.0, 100.0).brackets.size() == 29);
    ScanConfig fine;
    fine.base_grid = 32;
    CHECK(scan_sign_changes(0.0, 100.0, fine).brackets.size() == 29);
}

TEST_CASE("located zeros match references within 1e-6") {
    const auto recs = zero_table(0.0, 30.0);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].t == doctest::Approx(kZero1).epsilon(1e-9));
    CHECK(recs[1].t == doctest::Approx(kZero2).epsilon(1e-9));
    CHECK(recs[2].t == doctest::Approx(kZero3).epsilon(1e-9));
    double prev = 0.0;
    for (const ZeroRecord& r : recs) {
        CHECK(r.width <= 1e-9);
        CHECK(r.residual <= 1e-6);
        CHECK(r.t > prev);
        CHECK(r.t_lo <= r.t);
        CHECK(r.t <= r.t_hi);
        prev = r.t;
    }
}

TEST_CASE("located zeros are method independent") {
    // At these heights the order-3 remainder is itself below 1e-7, so both
    // methods must land on the same abscissa to that accuracy.
    const ScanResult scan = scan_sign_changes(500.0, 510.0);
    for (const Bracket& b : scan.brackets) {
        const ZeroRecord em = locate_zero(b, Method::euler_maclaurin);
        const ZeroRecord rs = locate_zero(b, Method::riemann_siegel);
        CHECK(std::abs(em.t - rs.t) < 1e-7);
    }
}

TEST_CASE("locate_zero rejects a sign-agreeing bracket") {
    CHECK_THROWS_AS(locate_zero(Bracket{1.0, 2.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("tracked argument approaches -pi as T -> 0+") {
    CHECK(arg_zeta_tracked(1e-4).value == doctest::Approx(-kPi).epsilon(1e-3));
}

TEST_CASE("tracked argument is stable under finer initial stepping") {
    // Restarting the walk at a shifted height must land on the same branch.
    const double a = arg_zeta_tracked(100.0).value;
    const double b = arg_zeta_tracked(100.0 + 1e-9).value;
    CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("Backlund counts at anchor heights") {
    CHECK(backlund_count(10.0).count == 0);
    CHECK(backlund_count(50.0).count == 10);
    CHECK(backlund_count(100.0).count == 29);
    CHECK(backlund_count(100.0).distance < 0.05);
}

TEST_CASE("verification reports at anchor heights") {
    const VerificationReport r100 = verify_equality(100.0);
    CHECK(r100.equal);
    CHECK(r100.n_argument == 29);
    CHECK(r100.n0_signchanges == 29);
    CHECK(r100.lemma_residual < 1e-9);

    const VerificationReport r5 = verify_equality(5.0);
    CHECK(r5.equal);
    CHECK(r5.n_argument == 0);
    CHECK(r5.n0_signchanges == 0);
}

TEST_CASE("Backlund count is monotone over random pairs") {
    std::mt19937 rng(20260825);
    std::uniform_real_distribution<double> dist(20.0, 300.0);
    for (int i = 0; i < 50; ++i) {
        double a = dist(rng), b = dist(rng);
        if (a > b) std::swap(a, b);
        CHECK(backlund_count(a).count <= backlund_count(b).count);
    }
}

TEST_CASE("parity and lower-bound invariants at random heights") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(20.0, 200.0);
    for (int i = 0; i < 10; ++i) {
        const VerificationReport rep = verify_equality(dist(rng));
        CHECK(rep.n0_signchanges <= rep.n_argument);
        CHECK((rep.n_argument - rep.n0_signchanges) % 2 == 0);
        CHECK(rep.equal == (rep.n_argument == rep.n0_signchanges));
    }
}

TEST_CASE("omega diagnostics on [0, 50]") {
    const OmegaDiagnostics d = omega_diagnostics(0.0, 50.0);
    CHECK(d.omega0_in_band);
    CHECK(d.t_m > 0.0);
    CHECK(d.t_m < 50.0);
    // floor(omega(T)/pi + 1/2) counts the zeros past t_m; one more lies below.
    CHECK(d.n0 - d.floor_count <= 1);
    CHECK(d.floor_count <= d.n0);
    // sign(cos omega) = sign(Z) wherever the modulus is healthy.
    for (const auto& [t, w] : d.samples) {
        const TwoReDecomposition dec = two_re_decomposition(t);
        if (dec.r > 1e-6 && std::abs(std::cos(w)) > 1e-6)
            CHECK(std::signbit(std::cos(w)) == std::signbit(dec.z_direct));
    }
    CHECK_THROWS_AS(omega_diagnostics(0.0, 250.0), DomainError);
}
