#include <doctest.h>

#include <stdexcept>

#include "qrm/field.hpp"

using qrm::Field;
using qrm::is_prime;

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK(is_prime(17));
    CHECK(is_prime(1009));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(15));
    CHECK_FALSE(is_prime(1001)); // 7 * 11 * 13
}

TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(Field(4), std::domain_error);
    CHECK_THROWS_AS(Field(9), std::domain_error);
    CHECK_THROWS_AS(Field(2), std::domain_error); // prime but below 5
    CHECK_THROWS_AS(Field(3), std::domain_error);
    CHECK_NOTHROW(Field(5));
    CHECK_NOTHROW(Field(17));
}

TEST_CASE("reduce maps any integer into range") {
    Field f(7);
    CHECK(f.reduce(0) == 0);
    CHECK(f.reduce(13) == 6);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.reduce(-13) == 1);
    CHECK(f.reduce(7000000000LL) == 0);
}

TEST_CASE("field arithmetic and inverses") {
    for (int d : {5, 7, 11, 13, 17}) {
        Field f(d);
        for (int a = 0; a < d; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            for (int b = 0; b < d; ++b) {
                CHECK(f.add(a, b) == (a + b) % d);
                CHECK(f.mul(a, b) == (a * b) % d);
                CHECK(f.sub(a, b) == ((a - b) % d + d) % d);
            }
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, d - 1) == 1); // Fermat
            }
        }
        CHECK(f.pow(0, 0) == 1);
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
        CHECK_THROWS_AS(f.inv(d), std::domain_error);
    }
}
