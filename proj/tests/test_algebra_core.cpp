#include <doctest.h>

#include <stdexcept>

#include "rbdq/dual_quaternion.hpp"
#include "rbdq/errors.hpp"
#include "rbdq/json_io.hpp"
#include "rbdq/sampling.hpp"
#include "rbdq/scalar.hpp"
#include "rbdq/structure_table.hpp"
#include "support.hpp"

using namespace rbdq;

namespace {

DualQuaternion dq(Scalar a, Scalar b, Scalar c, Scalar d) { return DualQuaternion{{a, b, c, d}}; }

}  // namespace

TEST_CASE("scalars are kept in lowest terms") {
    CHECK(Scalar(6, 4).to_string() == "3/2");
    CHECK(Scalar(-6, 4).to_string() == "-3/2");
    CHECK(Scalar(6, -4).to_string() == "-3/2");
    CHECK(Scalar(0, -7).to_string() == "0");
    CHECK(Scalar(8, 4).to_string() == "2");
    CHECK(Scalar(8, 4).is_integer());
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse("10/4") == Scalar(5, 2));
    CHECK(Scalar::parse("-7") == Scalar(-7));
    CHECK(Scalar::parse(" 3/9 ") == Scalar(1, 3));
    CHECK(Scalar::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1.5"), ParseError);
}

TEST_CASE("scalar arithmetic is exact") {
    const Scalar third(1, 3);
    CHECK(third + third + third == Scalar(1));
    CHECK(Scalar(1, 10) * Scalar(10) == Scalar(1));
    CHECK(Scalar(3, 4) - Scalar(1, 4) == Scalar(1, 2));
    CHECK(Scalar(3, 4) / Scalar(3, 2) == Scalar(1, 2));
    CHECK(Scalar(2, 3).inverse() == Scalar(3, 2));
    CHECK(Scalar(-2, 3).pow(3) == Scalar(-8, 27));
    CHECK(Scalar(-1, 2) < Scalar(0));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(static_cast<void>(Scalar(0).inverse()), std::domain_error);
}

TEST_CASE("scalar field axioms on random samples") {
    Sampler s(11);
    for (int n = 0; n < 200; ++n) {
        const Scalar a = s.scalar(), b = s.scalar(), c = s.scalar();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
        }
        // Agrees with GMP's own rational arithmetic.
        CHECK((a * b + c).raw() == a.raw() * b.raw() + c.raw());
    }
}

TEST_CASE("multiply: documented and derived examples") {
    const auto e = [](std::size_t i) { return DualQuaternion::basis(i); };
    CHECK(multiply(e(1), e(2)).is_zero());
    CHECK(multiply(e(2), e(1)).is_zero());
    const auto x = dq(1, 2, 0, 0);
    const auto y = dq(3, 0, 4, 0);
    CHECK(multiply(x, y) == dq(3, 6, 4, 0));
    Sampler s(12);
    for (int n = 0; n < 20; ++n) {
        const auto z = s.element();
        CHECK(multiply(e(0), z) == z);
        CHECK(multiply(z, e(0)) == z);
    }
}

TEST_CASE("multiply agrees with the dual-number oracle") {
    Sampler s(13);
    for (int n = 0; n < 100; ++n) {
        const auto x = s.element();
        const auto y = s.element();
        CHECK(oracle::from(multiply(x, y)) == oracle::product(oracle::from(x), oracle::from(y)));
    }
}

TEST_CASE("add, scale and decompose") {
    CHECK(DualQuaternion::basis(1) + DualQuaternion::basis(2) == dq(0, 1, 1, 0));
    CHECK(dq(1, 2, 3, 4) + dq(4, 3, 2, 1) == dq(5, 5, 5, 5));
    CHECK(scale(Scalar(1, 2), dq(2, 4, 6, 8)) == dq(1, 2, 3, 4));
    Sampler s(14);
    for (int n = 0; n < 20; ++n) {
        const auto x = s.element();
        CHECK(x + DualQuaternion::zero() == x);
        CHECK(scale(Scalar(0), x).is_zero());
        CHECK(scale(Scalar(1), x) == x);
        const auto parts = decompose(x);
        CHECK(parts.real + parts.pure == x);
        CHECK(parts.real[1].is_zero());
        CHECK(parts.pure[0].is_zero());
    }
    const auto parts = decompose(dq(5, 1, 2, 3));
    CHECK(parts.real == dq(5, 0, 0, 0));
    CHECK(parts.pure == dq(0, 1, 2, 3));
    CHECK(decompose(DualQuaternion::basis(0)).pure.is_zero());
    CHECK(decompose(DualQuaternion::zero()).real.is_zero());
    CHECK(to_string(dq(Scalar(1, 2), -3, 0, 1)) == "(1/2, -3, 0, 1)");
}

TEST_CASE("algebra laws") {
    const auto e = [](std::size_t i) { return DualQuaternion::basis(i); };
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            CHECK(multiply(e(i), e(j)) == multiply(e(j), e(i)));
            for (std::size_t k = 0; k < kDim; ++k) {
                CHECK(multiply(multiply(e(i), e(j)), e(k)) == multiply(e(i), multiply(e(j), e(k))));
            }
        }
    }
    Sampler s(15);
    for (int n = 0; n < 100; ++n) {
        const auto x = s.element(), x2 = s.element(), y = s.element();
        CHECK(multiply(x, y) == multiply(y, x));
        CHECK(multiply(decompose(x).pure, decompose(y).pure).is_zero());
        CHECK(multiply(x + x2, y) == multiply(x, y) + multiply(x2, y));
    }
}

TEST_CASE("structure table path matches the closed form") {
    const auto table = StructureTable::dual_quaternion();
    CHECK(table.at(0, 2, 2) == Scalar(1));
    CHECK(table.at(2, 0, 2) == Scalar(1));
    CHECK(table.at(1, 2, 0).is_zero());
    Sampler s(16);
    for (int n = 0; n < 100; ++n) {
        const auto x = s.element(), y = s.element();
        CHECK(table.multiply(x, y) == multiply(x, y));
    }
}

TEST_CASE("table_check") {
    const auto report = table_check(StructureTable::dual_quaternion());
    CHECK(report.unital);
    CHECK(report.commutative);
    CHECK(report.associative);

    // e1 e1 = e0: (e1 e1) e2 = e2 while e1 (e1 e2) = 0.
    auto corrupted = StructureTable::dual_quaternion();
    corrupted.set(1, 1, 0, Scalar(1));
    const auto bad = table_check(corrupted);
    CHECK(bad.unital);
    CHECK(bad.commutative);
    CHECK_FALSE(bad.associative);

    // Identity-only table built by hand equals the dual quaternion table.
    StructureTable identity_only;
    for (std::size_t q = 0; q < kDim; ++q) {
        identity_only.set(0, q, q, Scalar(1));
        identity_only.set(q, 0, q, Scalar(1));
    }
    CHECK(identity_only == StructureTable::dual_quaternion());

    auto lopsided = StructureTable::dual_quaternion();
    lopsided.set(1, 2, 3, Scalar(1));
    CHECK_FALSE(table_check(lopsided).commutative);
}

TEST_CASE("corrupted table fixture") {
    const auto table = structure_table_from_json(parse_json_text(oracle::read_data("corrupted_table.json")));
    CHECK(table.at(1, 1, 0) == Scalar(1));
    CHECK_FALSE(table_check(table).associative);
}

TEST_CASE("dual quaternion JSON round trip") {
    Sampler s(17);
    for (int n = 0; n < 50; ++n) {
        const auto x = s.element();
        const auto j = to_json(x);
        CHECK(dual_quaternion_from_json(parse_json_text(j.dump())) == x);
    }
    CHECK(to_json(dq(Scalar(1, 2), 0, -3, Scalar(4, 6))).dump() == R"({"coords":["1/2","0","-3","2/3"]})");
    CHECK_THROWS_AS(dual_quaternion_from_json(parse_json_text(R"({"coords":["1","2"]})")), ParseError);
    CHECK_THROWS_AS(dual_quaternion_from_json(parse_json_text(R"({"coords":["1","2","x","4"]})")), ParseError);
    CHECK_THROWS_AS(parse_json_text("{"), ParseError);
}
