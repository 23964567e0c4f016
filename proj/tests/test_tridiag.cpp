#include "interlace/eig.hpp"
#include "interlace/tridiag.hpp"

#include <doctest.h>

#include <cmath>

using namespace interlace;

TEST_CASE("build_A explicit entries") {
    auto A2 = build_A(2);
    CHECK(A2.diag == std::vector<double>{1.0, 1.0});
    CHECK(A2.offdiag == std::vector<double>{1.0});

    auto A3 = build_A(3);
    CHECK(A3.diag == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(A3.offdiag[0] == 1.0);
    CHECK(A3.offdiag[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

    CHECK_THROWS_AS(build_A(1), std::invalid_argument);
    CHECK_THROWS_AS(build_A(0), std::invalid_argument);
}

TEST_CASE("build_A is Jacobian with trace n(n-1)") {
    for (std::size_t n = 2; n <= 100; ++n) {
        auto A = build_A(n);
        CHECK(A.is_jacobian());
        double tr = 0.0;
        for (double d : A.diag) tr += d;
        CHECK(tr == double(n * (n - 1)));
        for (double b : A.offdiag) CHECK(b > 0.0);
    }
}

TEST_CASE("build_B_spring = A + I with negated off-diagonals") {
    auto B2 = build_B_spring(2);
    CHECK(B2.diag == std::vector<double>{2.0, 2.0});
    CHECK(B2.offdiag == std::vector<double>{-1.0});

    auto B3 = build_B_spring(3);
    CHECK(B3.diag == std::vector<double>{3.0, 3.0, 3.0});
    CHECK(B3.offdiag[0] == -1.0);
    CHECK(B3.offdiag[1] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-15));

    CHECK_THROWS_AS(build_B_spring(1), std::invalid_argument);
}

TEST_CASE("build_W entries and parameter checks") {
    auto W = build_W(TestMatrixSpec(2, 0.0, 1.0));
    CHECK(W.diag == std::vector<double>{1.0, 1.0});
    CHECK(W.offdiag == std::vector<double>{-1.0});

    auto W3 = build_W(TestMatrixSpec(3, 1.0, 2.0));
    CHECK(W3.diag == std::vector<double>{5.0, 5.0, 5.0});
    CHECK(W3.offdiag[0] == -2.0);
    CHECK(W3.offdiag[1] == doctest::Approx(-2.0 * std::sqrt(3.0)).epsilon(1e-15));
    auto lam = eigenvalues(W3, 1e-12).values;
    CHECK(lam[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lam[1] == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(lam[2] == doctest::Approx(9.0).epsilon(1e-9));
    auto mu = eigenvalues(leading_principal_submatrix(W3), 1e-12).values;
    CHECK(mu[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(mu[1] == doctest::Approx(7.0).epsilon(1e-9));

    CHECK_THROWS_AS(TestMatrixSpec(3, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(TestMatrixSpec(3, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(TestMatrixSpec(1, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("build_W equals a0*I + c*normalize_signs(A) entrywise") {
    for (std::size_t n : {2, 5, 17, 60}) {
        for (double a0 : {-3.0, 0.0, 2.5}) {
            for (double c : {0.5, 1.0, 4.0}) {
                auto W = build_W(TestMatrixSpec(n, a0, c));
                auto A = build_A(n);
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(W.diag[i] == a0 + c * double(n - 1));
                for (std::size_t i = 0; i + 1 < n; ++i)
                    CHECK(W.offdiag[i] == -c * A.offdiag[i]);
            }
        }
    }
}

TEST_CASE("build_kac conventions") {
    auto K1 = build_kac(1, 0.0);
    CHECK(K1.order() == 2);
    CHECK(K1.diag == std::vector<double>{0.0, 0.0});
    CHECK(K1.superdiag == std::vector<double>{1.0});
    CHECK(K1.subdiag == std::vector<double>{1.0});

    auto K2 = build_kac(2, 0.0);
    CHECK(K2.superdiag == std::vector<double>{2.0, 1.0});
    CHECK(K2.subdiag == std::vector<double>{1.0, 2.0});
    auto s = eigenvalues(K2, 1e-12).values;
    CHECK(s[0] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(0.0).scale(1).epsilon(1e-9));
    CHECK(s[2] == doctest::Approx(2.0).epsilon(1e-9));

    CHECK_THROWS_AS(build_kac(0, 0.0), std::invalid_argument);
}

TEST_CASE("kac shift translates the spectrum") {
    for (std::size_t n : {1, 2, 7, 23}) {
        for (double shift : {0.0, 2.0, -1.5}) {
            auto base = eigenvalues(build_kac(n, 0.0), 1e-12).values;
            auto shifted = eigenvalues(build_kac(n, shift), 1e-12).values;
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(shifted[k] == doctest::Approx(base[k] + shift).scale(1.0 + n).epsilon(1e-10));
        }
    }
}

TEST_CASE("leading_principal_submatrix") {
    auto A3 = build_A(3);
    auto sub = leading_principal_submatrix(A3);
    CHECK(sub.diag == std::vector<double>{2.0, 2.0});
    CHECK(sub.offdiag == std::vector<double>{1.0});

    auto one = leading_principal_submatrix(build_A(2));
    CHECK(one.order() == 1);
    CHECK(one.diag[0] == 1.0);
    CHECK_THROWS_AS(leading_principal_submatrix(one), std::invalid_argument);
}

TEST_CASE("sign_flip") {
    auto A2 = build_A(2);
    auto f = sign_flip(A2, 1);
    CHECK(f.diag == A2.diag);
    CHECK(f.offdiag == std::vector<double>{-1.0});
    CHECK(sign_flip(f, 1) == A2); // self-inverse

    auto f32 = sign_flip(build_A(3), 2);
    CHECK(f32.offdiag[0] == 1.0);
    CHECK(f32.offdiag[1] == doctest::Approx(-std::sqrt(3.0)));

    CHECK_THROWS_AS(sign_flip(A2, 0), std::out_of_range);
    CHECK_THROWS_AS(sign_flip(A2, 2), std::out_of_range);
}

TEST_CASE("normalize_signs") {
    auto norm = normalize_signs(build_A(2));
    CHECK(norm.offdiag == std::vector<double>{-1.0});
    CHECK(normalize_signs(norm) == norm); // idempotent

    auto mixed = sign_flip(build_A(3), 1); // offdiag (-1, sqrt 3)
    auto fixed = normalize_signs(mixed);
    CHECK(fixed.offdiag[0] == -1.0);
    CHECK(fixed.offdiag[1] == doctest::Approx(-std::sqrt(3.0)));

    SymmetricTridiagonal not_jacobian({1.0, 1.0}, {0.0});
    CHECK_THROWS_AS(normalize_signs(not_jacobian), std::invalid_argument);
}

TEST_CASE("sign operations preserve both spectra") {
    for (std::size_t n : {3, 8, 20}) {
        auto A = build_A(n);
        auto flipped = sign_flip(A, n / 2);
        auto norm = normalize_signs(flipped);
        auto base = eigenvalues(A, 1e-12).values;
        auto base_sub = eigenvalues(leading_principal_submatrix(A), 1e-12).values;
        for (const auto& M : {flipped, norm}) {
            auto s = eigenvalues(M, 1e-12).values;
            auto ss = eigenvalues(leading_principal_submatrix(M), 1e-12).values;
            for (std::size_t i = 0; i < n; ++i)
                CHECK(s[i] == doctest::Approx(base[i]).scale(1.0 + n).epsilon(1e-10));
            for (std::size_t i = 0; i + 1 < n; ++i)
                CHECK(ss[i] == doctest::Approx(base_sub[i]).scale(1.0 + n).epsilon(1e-10));
        }
    }
}

TEST_CASE("malformed constructions are rejected") {
    CHECK_THROWS_AS(SymmetricTridiagonal({1.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricTridiagonal({}, {}), std::invalid_argument);
    double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(SymmetricTridiagonal({1.0, inf}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralTridiagonal({1.0, 2.0}, {1.0, 2.0}, {1.0}), std::invalid_argument);
}
