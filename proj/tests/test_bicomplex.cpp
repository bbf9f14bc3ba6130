#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bcx/bicomplex.hpp"
#include "support.hpp"

using namespace bcx;
using bcxtest::Rng;

TEST_CASE("cartesian construction", "[bicomplex]") {
    SECTION("e1 from its cartesian coordinates") {
        const BiComplex x = BiComplex::from_cartesian(0.5, 0, 0, 0.5);
        CHECK(x == e1);
        CHECK(x.minus() == Complex(1, 0));
        CHECK(x.plus() == Complex(0, 0));
    }
    SECTION("zero") {
        CHECK(BiComplex::from_cartesian(0, 0, 0, 0) == BiComplex());
    }
    SECTION("1 + i2: substitute z1 = 1, z2 = 1") {
        const BiComplex x = BiComplex::from_cartesian(1, 0, 1, 0);
        CHECK(x.minus() == Complex(1, -1));
        CHECK(x.plus() == Complex(1, 1));
    }
    SECTION("non-finite input is rejected") {
        CHECK_THROWS_AS(BiComplex::from_cartesian(std::nan(""), 0, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(BiComplex::from_cartesian(0, 0, HUGE_VAL, 0), std::invalid_argument);
    }
}

TEST_CASE("complex pair construction", "[bicomplex]") {
    CHECK(BiComplex::from_complex_pair(1.0, 0.0) == join(1.0, 1.0));
    CHECK(BiComplex::from_complex_pair(0.0, 1.0) == join(Complex(0, -1), Complex(0, 1)));
    CHECK(BiComplex::from_complex_pair(0.0, 1.0) == i2);
    CHECK(BiComplex::from_complex_pair(1.0, 1.0) == join(Complex(1, -1), Complex(1, 1)));
}

TEST_CASE("idempotent join and split", "[bicomplex]") {
    CHECK(join(1.0, 1.0) == BiComplex(1.0));
    CHECK(join(1.0, 0.0) == e1);

    const BiComplex x = join(2.0, 3.0);
    const auto u = x.cartesian();
    CHECK(u[0] == 2.5);
    CHECK(u[1] == 0.0);
    CHECK(u[2] == 0.0);
    CHECK(u[3] == -0.5);

    const auto [m, p] = split(x);
    CHECK(m == Complex(2, 0));
    CHECK(p == Complex(3, 0));
}

TEST_CASE("idempotent identities hold exactly", "[bicomplex]") {
    CHECK(e1 + e2 == BiComplex(1.0));
    CHECK(e1 * e2 == BiComplex());
    CHECK(e2 * e1 == BiComplex());
    CHECK(e1 * e1 == e1);
    CHECK(e2 * e2 == e2);
    CHECK(i1 * i1 == BiComplex(-1.0));
    CHECK(i2 * i2 == BiComplex(-1.0));
    CHECK(i1 * i2 == i2 * i1);
}

TEST_CASE("multiplication is componentwise", "[bicomplex]") {
    CHECK(join(2.0, 3.0) * join(5.0, 7.0) == join(10.0, 21.0));

    Rng rng(2024);
    for (int k = 0; k < 200; ++k) {
        const BiComplex x = bcxtest::random_bicomplex(rng);
        CHECK(x * BiComplex(1.0) == x);
        const BiComplex y = bcxtest::random_bicomplex(rng);
        const BiComplex xy = x * y;
        CHECK(xy.minus() == x.minus() * y.minus());
        CHECK(xy.plus() == x.plus() * y.plus());
    }
}

TEST_CASE("componentwise product agrees with the cartesian expansion", "[bicomplex]") {
    Rng rng(77);
    for (int k = 0; k < 1000; ++k) {
        const BiComplex x = bcxtest::random_bicomplex(rng);
        const BiComplex y = bcxtest::random_bicomplex(rng);
        const BiComplex via_idempotent = x * y;
        const BiComplex via_cartesian = bcxtest::cartesian_mul_oracle(x, y);
        CHECK(std::abs(via_idempotent.minus() - via_cartesian.minus()) <= 1e-12);
        CHECK(std::abs(via_idempotent.plus() - via_cartesian.plus()) <= 1e-12);
    }
}

TEST_CASE("additive structure", "[bicomplex]") {
    CHECK(join(1.0, 2.0) + join(3.0, 4.0) == join(4.0, 6.0));

    Rng rng(31);
    for (int k = 0; k < 100; ++k) {
        const BiComplex x = bcxtest::random_bicomplex(rng);
        CHECK(x + BiComplex() == x);
        CHECK(BiComplex(-1.0) * x == -x);
        CHECK(x - x == BiComplex());
    }
}

TEST_CASE("ring axioms on random inputs", "[bicomplex]") {
    Rng rng(5150);
    const auto close = [](const BiComplex& a, const BiComplex& b) {
        return std::abs(a.minus() - b.minus()) <= 1e-12 &&
               std::abs(a.plus() - b.plus()) <= 1e-12;
    };
    for (int k = 0; k < 300; ++k) {
        const BiComplex x = bcxtest::random_bicomplex(rng, -3, 3);
        const BiComplex y = bcxtest::random_bicomplex(rng, -3, 3);
        const BiComplex z = bcxtest::random_bicomplex(rng, -3, 3);
        CHECK(close((x + y) + z, x + (y + z)));
        CHECK(close(x + y, y + x));
        CHECK(close((x * y) * z, x * (y * z)));
        CHECK(close(x * y, y * x));
        CHECK(close(x * (y + z), x * y + x * z));
    }
}

TEST_CASE("scalar multiplication by complex numbers", "[bicomplex]") {
    const Complex alpha(2, -1);
    const BiComplex x = join(Complex(1, 1), Complex(3, 0));
    const BiComplex ax = BiComplex(alpha) * x;
    CHECK(ax.minus() == alpha * Complex(1, 1));
    CHECK(ax.plus() == alpha * Complex(3, 0));
}

TEST_CASE("classification of scalars", "[bicomplex]") {
    CHECK(classify(e1) == ScalarClass::ZeroDivisor);
    CHECK(classify(e2) == ScalarClass::ZeroDivisor);
    CHECK(classify(BiComplex()) == ScalarClass::Zero);
    CHECK(classify(join(2.0, 3.0)) == ScalarClass::Invertible);
    CHECK(classify(join(5.0, 0.0)) == ScalarClass::ZeroDivisor);

    // threshold is configurable per call
    CHECK(classify(join(1e-12, 1.0)) == ScalarClass::ZeroDivisor);
    CHECK(classify(join(1e-12, 1.0), 1e-15) == ScalarClass::Invertible);
}

TEST_CASE("scalar inverse", "[bicomplex]") {
    CHECK(inverse(join(2.0, 4.0)) == join(0.5, 0.25));
    CHECK(inverse(BiComplex(1.0)) == BiComplex(1.0));

    SECTION("zero divisors carry their classification") {
        try {
            inverse(e1);
            FAIL("expected NotInvertibleError");
        } catch (const NotInvertibleError& err) {
            REQUIRE(err.scalar_classification().has_value());
            CHECK(*err.scalar_classification() == ScalarClass::ZeroDivisor);
        }
        try {
            inverse(BiComplex());
            FAIL("expected NotInvertibleError");
        } catch (const NotInvertibleError& err) {
            CHECK(*err.scalar_classification() == ScalarClass::Zero);
        }
    }

    SECTION("x * inverse(x) is 1 within 1e-12") {
        Rng rng(99);
        int checked = 0;
        while (checked < 100) {
            const BiComplex x = bcxtest::random_bicomplex(rng);
            if (classify(x) != ScalarClass::Invertible) continue;
            const BiComplex prod = x * inverse(x);
            CHECK(std::abs(prod.minus() - 1.0) < 1e-12);
            CHECK(std::abs(prod.plus() - 1.0) < 1e-12);
            ++checked;
        }
    }

    SECTION("division by an invertible scalar") {
        const BiComplex q = join(10.0, 21.0) / join(5.0, 7.0);
        CHECK(std::abs(q.minus() - 2.0) < 1e-15);
        CHECK(std::abs(q.plus() - 3.0) < 1e-15);
    }
}

TEST_CASE("cartesian round-trip stays within 4 ulps per coordinate", "[bicomplex]") {
    Rng rng(4242);
    for (int k = 0; k < 500; ++k) {
        const double u1 = bcxtest::uniform(rng, -10, 10);
        const double u2 = bcxtest::uniform(rng, -10, 10);
        const double u3 = bcxtest::uniform(rng, -10, 10);
        const double u4 = bcxtest::uniform(rng, -10, 10);
        const auto round_tripped = BiComplex::from_cartesian(u1, u2, u3, u4).cartesian();
        const double scale = std::max({std::abs(u1), std::abs(u2), std::abs(u3), std::abs(u4)});
        const double budget = 4.0 * bcxtest::ulp_of(scale);
        CHECK(std::abs(round_tripped[0] - u1) <= budget);
        CHECK(std::abs(round_tripped[1] - u2) <= budget);
        CHECK(std::abs(round_tripped[2] - u3) <= budget);
        CHECK(std::abs(round_tripped[3] - u4) <= budget);
    }
}

TEST_CASE("idempotent round-trip through the complex pair is exact-ish", "[bicomplex]") {
    Rng rng(555);
    for (int k = 0; k < 500; ++k) {
        const BiComplex x = bcxtest::random_bicomplex(rng);
        const BiComplex back = BiComplex::from_complex_pair(x.z1(), x.z2());
        CHECK(bcxtest::ulp_distance(back.minus().real(), x.minus().real()) <= 4.0);
        CHECK(bcxtest::ulp_distance(back.minus().imag(), x.minus().imag()) <= 4.0);
        CHECK(bcxtest::ulp_distance(back.plus().real(), x.plus().real()) <= 4.0);
        CHECK(bcxtest::ulp_distance(back.plus().imag(), x.plus().imag()) <= 4.0);
    }
}
