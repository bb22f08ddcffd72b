#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "tsfrac/errors.hpp"
#include "tsfrac/expression.hpp"
#include "tsfrac/grid_function.hpp"

using namespace tsfrac;

TEST_CASE("construction checks alignment and finiteness") {
    const TimeScale ts = TimeScale::from_points({0.0, 1.0, 2.0});
    CHECK_THROWS_AS(GridFunction(ts, {1.0, 2.0}), Error);
    CHECK_THROWS_AS(GridFunction(ts, {1.0, std::nan(""), 3.0}), Error);
    const GridFunction f(ts, {1.0, 2.0, 3.0});
    CHECK(f.size() == 3);
    CHECK(!f.is_masked());
}

TEST_CASE("lincomb") {
    const TimeScale ts = TimeScale::from_points({0.0, 1.0});
    const GridFunction f(ts, {1.0, 2.0});
    const GridFunction g(ts, {3.0, 4.0});

    CHECK(lincomb(1.0, f, 0.0, g).values() == std::vector<double>{1.0, 2.0});
    CHECK(lincomb(1.0, f, 1.0, g).values() == std::vector<double>{4.0, 6.0});

    const GridFunction f2(ts, {1.0, 1.0});
    const GridFunction g2(ts, {2.0, 2.0});
    CHECK(lincomb(2.0, f2, -1.0, g2).values() == std::vector<double>{0.0, 0.0});

    const TimeScale other = TimeScale::from_points({0.0, 2.0});
    const GridFunction h(other, {1.0, 1.0});
    CHECK_THROWS_AS(lincomb(1.0, f, 1.0, h), ScaleMismatch);
}

TEST_CASE("operators reject masked input") {
    const TimeScale ts = TimeScale::from_points({0.0, 1.0, 2.0});
    const GridFunction m = GridFunction::masked(ts, {0.0, 1.0, 2.0}, {0, 1, 1});
    const GridFunction f(ts, {1.0, 1.0, 1.0});
    CHECK_THROWS_AS(lincomb(1.0, m, 1.0, f), MaskedInput);
    std::ostringstream os;
    CHECK_THROWS_AS(write_csv(m, os), MaskedInput);
}

TEST_CASE("mask propagation in mul/div") {
    const TimeScale ts = TimeScale::from_points({0.0, 1.0, 2.0});
    const GridFunction f(ts, {1.0, 2.0, 3.0});
    const GridFunction g(ts, {0.0, 2.0, 6.0});

    const GridFunction q = pointwise_div(f, g);
    CHECK(q.is_masked());
    CHECK(!q.valid(0));  // divide by zero masks
    CHECK(q[1] == 1.0);
    CHECK(q[2] == 0.5);

    const GridFunction p = pointwise_mul(q, q);
    CHECK(!p.valid(0));
    CHECK(p[2] == 0.25);
}

TEST_CASE("kappa restriction and rho shift") {
    const TimeScale ts = TimeScale::from_points({0.0, 1.0, 4.0, 9.0});
    const GridFunction f(ts, {10.0, 11.0, 12.0, 13.0});

    const GridFunction fk = kappa_restrict(f);
    CHECK(fk.scale().points() == std::vector<double>{1.0, 4.0, 9.0});
    CHECK(fk.values() == std::vector<double>{11.0, 12.0, 13.0});

    const GridFunction fr = rho_shift(f);
    CHECK(fr.scale().points() == std::vector<double>{1.0, 4.0, 9.0});
    CHECK(fr.values() == std::vector<double>{10.0, 11.0, 12.0});
}

TEST_CASE("CSV round trip is bit-faithful") {
    const TimeScale ts = TimeScale::from_points({0.0, 0.1, 1.0 / 3.0, 2.0});
    const GridFunction f(ts, {1.0 / 7.0, -0.25, 3.14159265358979312, 1e-17});

    std::ostringstream os;
    write_csv(f, os);
    std::istringstream is(os.str());
    const GridFunction g = read_csv(is, ts);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == g[i]);

    // header enforced
    std::istringstream bad("time,v\n0,1\n");
    CHECK_THROWS_AS(read_csv(bad, ts), Error);

    // t column must match the scale
    std::istringstream off("t,value\n0,1\n0.5,2\n0.33333333333333331,3\n2,4\n");
    CHECK_THROWS_AS(read_csv(off, ts), Error);

    // row count must match
    std::istringstream shortcsv("t,value\n0,1\n");
    CHECK_THROWS_AS(read_csv(shortcsv, ts), Error);
}
