#include "regular7/coeffvec.hpp"

#include <doctest.h>

#include "regular7/partitions.hpp"
#include "regular7/valuation.hpp"

using namespace regular7;

TEST_CASE("x_1 and the first recursion step") {
    MTable m = MTable::oracle_base();
    CoeffVector x1 = x_vector(1, m);
    CHECK(x1.support() == 2);
    CHECK(x1.at(1) == 7);
    CHECK(x1.at(2) == 49);

    CoeffVector x2 = x_vector(2, m);
    // x_{2,i} = 7 m_{4,1+i} + 49 m_{8,2+i}
    m.ensure_rows(8);
    for (long i = 1; i <= x2.support(); ++i)
        CHECK(x2.at(i) == 7 * m.entry(4, 1 + i) + 49 * m.entry(8, 2 + i));
    CHECK(x2.at(1) == 124754);  // also p(47): the q^0 coefficient of the H2 identity
    CHECK(x2.support() == 14);

    PartitionTable p = partition_count(47);
    CHECK(x2.at(1) == p.at(47));
}

TEST_CASE("x supports grow as the matrix rows allow") {
    MTable m = MTable::oracle_base();
    CHECK(x_vector(3, m).support() == 100);
}

TEST_CASE("y_odd chain: base case and direct formula for step 2") {
    MTable m = MTable::oracle_base();
    auto chain = y_odd_chain(1, 2, m);
    CHECK(chain[0].at(1) == 7);   // y^{(1)}_1 = x_1
    CHECK(chain[0].at(2) == 49);
    CHECK(chain[0].support() == 2);

    // y^{(1)}_{2,j} = 7 m_{3,j} + 49 m_{7,j+1}
    m.ensure_rows(7);
    const CoeffVector& y2 = chain[1];
    CHECK(y2.support() == 13);
    CHECK(y2.at(1) == 70);  // = b_7(12), the q^0 coefficient of G2 at k=1, beta=0
    for (long j = 1; j <= y2.support(); ++j)
        CHECK(y2.at(j) == 7 * m.entry(3, j) + 49 * m.entry(7, j + 1));
}

TEST_CASE("y_even chain: base case and direct formula for step 2") {
    MTable m = MTable::oracle_base();
    auto chain = y_even_chain(1, 2, m);
    CHECK(chain[0].at(1) == 7);  // y^{(2)}_1 = x_1 (note the 2k-1 subscript on x)
    CHECK(chain[0].at(2) == 49);

    m.ensure_rows(8);
    const CoeffVector& y2 = chain[1];
    CHECK(y2.support() == 14);
    for (long j = 1; j <= y2.support(); ++j)
        CHECK(y2.at(j) == 7 * m.entry(4, 1 + j) + 49 * m.entry(8, 2 + j));
}

TEST_CASE("chain supports: one huffing step multiplies support by about 7") {
    MTable m = MTable::oracle_base();
    auto odd = y_odd_chain(1, 3, m);
    CHECK(odd[1].support() == 13);
    CHECK(odd[2].support() == 86);
    auto even = y_even_chain(1, 3, m);
    CHECK(even[1].support() == 14);
    CHECK(even[2].support() == 98);
}

TEST_CASE("valuation floors") {
    MTable m = MTable::oracle_base();

    CoeffVector x1 = x_vector(1, m);
    VerificationReport r1 = check_valuation_bounds(x1);  // exact: pi = 1, 2
    CHECK(r1.passed());

    CoeffVector x3 = x_vector(3, m);
    // pi(x_{3,j}) >= 2 + floor((7j-4)/4)
    CHECK(valuation_floor(x3, 1) == 2);
    CHECK(valuation_floor(x3, 2) == 4);
    for (long j = 1; j <= x3.support(); ++j)
        CHECK(pi7(x3.at(j)).at_least(2 + floor_div(7 * j - 4, 4)));
    CHECK(check_valuation_bounds(x3).passed());

    CoeffVector x2 = x_vector(2, m);
    CHECK(pi7(x2.at(1)) == Valuation::of(2));  // bound 2 + floor(1/4) = 2 is tight
    CHECK(check_valuation_bounds(x2).passed());

    auto odd = y_odd_chain(1, 3, m);
    // pi(y^{(1)}_{3,j}) >= 2 + floor((7j-7)/4)  (pi4 at k=1, beta=1)
    for (long j = 1; j <= odd[2].support(); ++j)
        CHECK(pi7(odd[2].at(j)).at_least(2 + floor_div(7 * j - 7, 4)));
    CHECK(check_valuation_bounds(odd[2]).passed());

    auto even = y_even_chain(1, 2, m);
    // pi(y^{(2)}_{2,j}) >= 2 + floor((7j-7)/4)  (pi6 at k=1, beta=1)
    for (long j = 1; j <= even[1].support(); ++j)
        CHECK(pi7(even[1].at(j)).at_least(2 + floor_div(7 * j - 7, 4)));
    CHECK(check_valuation_bounds(even[1]).passed());
}

TEST_CASE("bound checker flags a violation") {
    CoeffVector fake{Family::y_odd, 1, 3, {mpz_class(7)}};  // needs pi >= 2, has 1
    VerificationReport r = check_valuation_bounds(fake);
    CHECK_FALSE(r.passed());
    CHECK(r.discrepancies.size() == 1);
}

TEST_CASE("infeasible steps stop cleanly with a reason") {
    MTable m = MTable::oracle_base();
    SweepLimits tight;
    tight.materialize_row_cap = 60;
    tight.wave_row_cap = 60;  // step 3 of y_odd k=1 needs rows up to 4*86-1
    ChainResult cr = y_odd_chain_upto(1, 4, m, tight);
    CHECK(cr.steps.size() == 3);  // base, step 2 (rows<=7), step 3 (rows<=49)
    CHECK(!cr.stopped_reason.empty());
    CHECK(cr.rows_needed == 4 * 86 - 1);
    CHECK_THROWS_AS(y_odd_chain(1, 4, m, tight), infeasible_error);
}

TEST_CASE("labels") {
    MTable m = MTable::oracle_base();
    CHECK(x_vector(2, m).label() == "x_2");
    CHECK(y_odd_chain(2, 1, m)[0].label() == "y^(3)_1");
    CHECK(y_even_chain(1, 2, m)[1].label() == "y^(2)_2");
}
