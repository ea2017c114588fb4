#include "regular7/series.hpp"

#include <random>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"

using namespace regular7;

namespace {

Series from_ints(long offset, std::vector<long> v) {
    std::vector<mpz_class> c(v.begin(), v.end());
    return Series(offset, std::move(c));
}

// Window-aware random series for property tests.
Series random_series(std::mt19937& rng) {
    std::uniform_int_distribution<long> off(-4, 4);
    std::uniform_int_distribution<long> len(1, 10);
    std::uniform_int_distribution<long> val(-9, 9);
    long o = off(rng), l = len(rng);
    std::vector<mpz_class> c(static_cast<size_t>(l));
    for (auto& x : c) x = val(rng);
    return Series(o, std::move(c));
}

}  // namespace

TEST_CASE("euler_product matches the brute-force expansion") {
    // f_1 to order 7: 1 - q - q^2 + q^5 + q^7
    Series f1 = euler_product(1, 8);
    CHECK(f1.offset() == 0);
    CHECK(f1.prec() == 8);
    auto naive = oracles::naive_euler(1, 8, 8);
    for (long n = 0; n < 8; ++n) CHECK(f1.coeff(n) == naive[static_cast<size_t>(n)]);
    CHECK(f1.coeff(0) == 1);
    CHECK(f1.coeff(1) == -1);
    CHECK(f1.coeff(2) == -1);
    CHECK(f1.coeff(5) == 1);
    CHECK(f1.coeff(7) == 1);

    Series f7 = euler_product(7, 8);
    for (long n = 0; n < 8; ++n) CHECK(f7.coeff(n) == (n == 0 ? 1 : n == 7 ? -1 : 0));

    CHECK(euler_product(1, 1).coeff(0) == 1);

    CHECK_THROWS_AS(euler_product(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(euler_product(-3, 5), std::invalid_argument);
    CHECK_THROWS_AS(euler_product(1, 0), std::invalid_argument);
}

TEST_CASE("add/mul/neg windows and values") {
    Series a = from_ints(0, {1, 1});   // 1 + q
    Series b = from_ints(0, {1, -1});  // 1 - q
    Series prod = mul(a, b);
    CHECK(prod.offset() == 0);
    CHECK(prod.prec() == 2);  // min(2+0, 2+0)
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);

    Series s = from_ints(-2, {3, 0, -5, 7});
    Series z = add(s, neg(s));
    for (long n = z.offset(); n < z.prec(); ++n) CHECK(z.coeff(n) == 0);

    Series f1 = euler_product(1, 5);
    CHECK(equal_on_common_window(mul(f1, inverse(f1)), Series::one(5)));

    // mul window with shifted operands
    Series c = shift(from_ints(0, {2}), 2);             // 2q^2, window [2,3)
    Series d = from_ints(-5, {1, 0, 0, 0, 0, 4});       // q^-5 + 4, window [-5,1)
    Series cd = mul(c, d);
    CHECK(cd.offset() == -3);
    CHECK(cd.prec() == -2);  // min(3 + -5, 1 + 2)
    CHECK(cd.coeff(-3) == 2);
}

TEST_CASE("empty windows propagate") {
    // An empty window [3,3) still claims "zero below 3"; adding keeps the
    // knowledge that survives, multiplying by it yields nothing.
    Series e(3, {});
    CHECK(e.empty_window());
    CHECK(e.coeff(2) == 0);
    Series sum = add(e, Series::one(5));
    CHECK(sum.offset() == 0);
    CHECK(sum.prec() == 3);
    CHECK(sum.coeff(0) == 1);
    Series prod = mul(e, Series::one(5));
    CHECK(prod.empty_window());
    Series both = mul(e, e);
    CHECK(both.empty_window());
}

TEST_CASE("inverse: geometric series, partition numbers, shifted unit") {
    Series geo = inverse(from_ints(0, {1, -1, 0, 0, 0, 0}));  // 1/(1-q)
    for (long n = 0; n < 6; ++n) CHECK(geo.coeff(n) == 1);

    // 1/f_1 = sum p(n) q^n, against the DP oracle
    const long N = 40;
    Series pgen = inverse(euler_product(1, N));
    auto dp = oracles::dp_partitions(N);
    CHECK(pgen.offset() == 0);
    CHECK(pgen.prec() == N);
    for (long n = 0; n < N; ++n) CHECK(pgen.coeff(n) == dp[static_cast<size_t>(n)]);

    // inverse(q^2 (1+q)) = q^-2 (1 - q + q^2 - ...)
    Series shifted = inverse(shift(from_ints(0, {1, 1, 0, 0}), 2));
    CHECK(shifted.offset() == -2);
    CHECK(shifted.coeff(-2) == 1);
    CHECK(shifted.coeff(-1) == -1);
    CHECK(shifted.coeff(0) == 1);

    CHECK_THROWS_AS(inverse(from_ints(0, {2, 1})), std::domain_error);
    CHECK_THROWS_AS(inverse(from_ints(0, {0, 0, 0})), std::domain_error);
    CHECK_THROWS_AS(inverse(Series(0, {})), std::domain_error);
}

TEST_CASE("pow: binomial, negative exponents, identities") {
    Series sq = pow(from_ints(0, {1, 1, 0}), 2);
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(2) == 1);

    // pow(f_1, -1) = partition numbers 1, 1, 2, 3, 5, 7
    Series pinv = pow(euler_product(1, 6), -1);
    long expected[] = {1, 1, 2, 3, 5, 7};
    for (long n = 0; n < 6; ++n) CHECK(pinv.coeff(n) == expected[n]);

    Series s = from_ints(-1, {4, 0, 2});
    CHECK(equal_on_common_window(pow(s, 1), s));
    CHECK(pow(s, 0).coeff(0) == 1);
}

TEST_CASE("shift and huff") {
    Series s = from_ints(0, {1, 1});
    Series sh = shift(s, 3);
    CHECK(sh.offset() == 3);
    CHECK(sh.prec() == 5);
    CHECK(sh.coeff(3) == 1);
    CHECK(equal_on_common_window(shift(shift(s, 5), -5), s));
    Series neg7 = shift(Series::one(1), -7);
    CHECK(neg7.offset() == -7);
    CHECK(neg7.coeff(-7) == 1);

    // huff keeps exponents divisible by 7 in place
    Series h = Series::zero(0, 15);
    {
        std::vector<mpz_class> c(15);
        c[3] = 1;
        c[7] = 1;
        c[14] = 1;
        h = Series(0, std::move(c));
    }
    Series hh = huff(h);
    CHECK(hh.coeff(3) == 0);
    CHECK(hh.coeff(7) == 1);
    CHECK(hh.coeff(14) == 1);
    CHECK(hh.prec() == 15);
    CHECK(equal_on_common_window(huff(hh), hh));  // idempotent

    // negative exponents: -7 is kept, -1 is not
    Series neg = from_ints(-7, {1, 0, 0, 0, 0, 0, 1, 0});
    Series hneg = huff(neg);
    CHECK(hneg.coeff(-7) == 1);
    CHECK(hneg.coeff(-1) == 0);
}

TEST_CASE("extract_progression") {
    std::vector<mpz_class> c(13);
    c[0] = 1;
    c[5] = 2;
    c[12] = 3;
    Series s(0, std::move(c));
    Series e = extract_progression(s, 7, 5);
    CHECK(e.offset() == 0);
    CHECK(e.prec() == 2);
    CHECK(e.coeff(0) == 2);
    CHECK(e.coeff(1) == 3);

    CHECK(equal_on_common_window(extract_progression(s, 1, 0), s));

    // p(7n+5) = 7, 77, 490 from the DP oracle
    auto dp = oracles::dp_partitions(19);
    Series pgen = inverse(euler_product(1, 20));
    Series prog = extract_progression(pgen, 7, 5);
    CHECK(prog.coeff(0) == dp[5]);
    CHECK(prog.coeff(1) == dp[12]);
    CHECK(prog.coeff(2) == dp[19]);
    CHECK(prog.coeff(0) == 7);
    CHECK(prog.coeff(1) == 77);
    CHECK(prog.coeff(2) == 490);

    CHECK_THROWS_AS(extract_progression(s, 0, 1), std::invalid_argument);
}

TEST_CASE("expand: eta quotients") {
    // xi^{-1} = q^2 f_49 / f_1 = q^2 * sum p(n) q^n below q^49
    Series xi_inv = expand({2, {{49, 1}, {1, -1}}}, 10);
    auto dp = oracles::dp_partitions(9);
    CHECK(xi_inv.offset() == 2);
    for (long n = 2; n < 10; ++n) CHECK(xi_inv.coeff(n) == dp[static_cast<size_t>(n - 2)]);

    // T^{-1} = q^7 f_49^4 / f_7^4: only q^7 below q^14
    Series T_inv = expand_to({7, {{49, 4}, {7, -4}}}, 14);
    CHECK(T_inv.coeff(7) == 1);
    for (long n = 8; n < 14; ++n) CHECK(T_inv.coeff(n) == 0);

    // empty product
    Series one = expand({0, {}}, 5);
    CHECK(equal_on_common_window(one, Series::one(5)));

    CHECK_THROWS_AS(expand({0, {{49, 1}, {49, 1}}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(expand({0, {{0, 1}}}, 5), std::invalid_argument);
}

TEST_CASE("equality is window-aware and rejects disjoint windows") {
    Series a = from_ints(0, {1, 2, 3});
    Series b = from_ints(1, {2, 3});  // agrees on [0,3): b's q^0 is known-zero... no: a has 1
    CHECK_FALSE(equal_on_common_window(a, b));
    Series c = from_ints(1, {2, 3, 0});
    Series d = from_ints(0, {0, 2, 3});
    CHECK(equal_on_common_window(c, d));

    Series lo = from_ints(0, {1, 1});
    Series hi = from_ints(5, {1});
    CHECK_THROWS_AS(equal_on_common_window(lo, hi), std::invalid_argument);
    CHECK_THROWS_AS(equal_on_common_window(Series(0, {}), lo), std::invalid_argument);
}

TEST_CASE("series ring properties on random windows") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        Series a = random_series(rng);
        Series b = random_series(rng);
        Series c = random_series(rng);
        // commutativity
        CHECK(equal_on_common_window(add(a, b), add(b, a)));
        CHECK(equal_on_common_window(mul(a, b), mul(b, a)));
        // associativity (windows may differ; equality handles the overlap)
        CHECK(equal_on_common_window(mul(mul(a, b), c), mul(a, mul(b, c))));
        CHECK(equal_on_common_window(add(add(a, b), c), add(a, add(b, c))));
        // distributivity
        CHECK(equal_on_common_window(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
        // multiplicative identity
        CHECK(equal_on_common_window(mul(a, Series::one(20)), a));
    }
}

TEST_CASE("huff is linear, idempotent, and commutes with 7-supported factors") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<long> val(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        Series a = random_series(rng);
        Series b = random_series(rng);
        CHECK(equal_on_common_window(huff(add(a, b)), add(huff(a), huff(b))));
        CHECK(equal_on_common_window(huff(huff(a)), huff(a)));

        // a 7-supported multiplier: exponents 0, 7, 14
        std::vector<mpz_class> c(15);
        c[0] = val(rng);
        c[7] = val(rng);
        c[14] = val(rng);
        Series m7(0, std::move(c));
        CHECK(equal_on_common_window(huff(mul(m7, b)), mul(m7, huff(b))));

        // extract(a, 7, 0) carries exactly the multiples of 7 kept by huff(a)
        Series e = extract_progression(a, 7, 0);
        Series ha = huff(a);
        for (long n = a.offset(); n < a.prec(); ++n) {
            long r = ((n % 7) + 7) % 7;
            if (r == 0)
                CHECK(ha.coeff(n) == e.coeff(n / 7));
            else
                CHECK(ha.coeff(n) == 0);
        }
    }
}

TEST_CASE("series JSON serialization") {
    Series s = from_ints(-2, {1, 0, -12345});
    nlohmann::json j = series_to_json(s);
    CHECK(j["offset"] == -2);
    CHECK(j["prec"] == 1);
    CHECK(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][2] == "-12345");
}
