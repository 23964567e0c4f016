#include "interlace/proofcheck.hpp"
#include "interlace/tridiag.hpp"

#include <doctest.h>

#include <cmath>

using namespace interlace;

TEST_CASE("factor matrices at n=2") {
    auto f = build_proof_factors(2);

    // R = sqrt(1/6) * I, parity blocks the off-diagonal entry.
    CHECK(f.R(0, 0) == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-15));
    CHECK(f.R(1, 1) == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-15));
    CHECK(f.R(0, 1) == 0.0);
    CHECK(f.R(1, 0) == 0.0);

    CHECK(f.L(0, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(f.L(1, 0) == doctest::Approx(-std::sqrt(0.5)));
    CHECK(f.L(1, 1) == doctest::Approx(std::sqrt(1.5)));
    CHECK(f.L(2, 1) == doctest::Approx(-std::sqrt(2.0)));
    CHECK(f.L(2, 2) == 0.0);

    CHECK(f.S(0, 0) == doctest::Approx(std::sqrt(3.0)));
    CHECK(f.S(0, 1) == -1.0);
    CHECK(f.S(1, 0) == 0.0);
    CHECK(f.S(1, 1) == 2.0);

    CHECK_THROWS_AS(build_proof_factors(1), std::invalid_argument);
}

TEST_CASE("R sparsity: same parity and upper triangular only") {
    for (std::size_t n = 2; n <= 40; n += 5) {
        auto f = build_proof_factors(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (f.R(i - 1, j - 1) != 0.0) {
                    CHECK((i + j) % 2 == 0);
                    CHECK(j >= i);
                }
    }
}

TEST_CASE("identities at n=2 are near exact") {
    auto r = verify_proof_identities(2);
    CHECK(r.similarity_R == 0.0); // B = A and R is scalar
    CHECK(r.factorization_L <= 1e-14);
    CHECK(r.similarity_S <= 1e-14);
    CHECK(r.d_entry_deviation <= 1e-14);
}

TEST_CASE("identities hold up to n=40") {
    for (std::size_t n = 2; n <= 40; ++n) {
        auto r = verify_proof_identities(n);
        CHECK(r.pass(1e-10));
        CHECK(r.d_entry_deviation <= 1e-12);
    }
}

TEST_CASE("trace of D° equals trace of A(n)") {
    for (std::size_t n = 2; n <= 40; n += 3) {
        auto f = build_proof_factors(n);
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += f.D(i, i);
        CHECK(tr == doctest::Approx(double(n * (n - 1))).epsilon(1e-12));
        CHECK(f.D(n, n) == double(2 * n));
    }
}
