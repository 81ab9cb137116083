#include <cstdlib>
#include <sstream>
#include <string>

#include <doctest.h>

#include "phaseret/io.hpp"

using namespace phaseret;

namespace {

ModulusField sample_field() {
    ModulusField f;
    f.n = 4;
    f.radii = {0.25, 0.5, 1.0};
    f.values = {{1.0 / 3.0, 0.1, 1e-300, 2.5},
                {0.7, 0.8, 0.9, 1.1},
                {1.0, 2.0, 3.0, 4.0}};
    return f;
}

}  // namespace

TEST_CASE("modulus field survives a store/load round trip bit for bit") {
    ModulusField f = sample_field();
    std::stringstream ss;
    store_modulus_field(f, ss);
    ModulusField g = load_modulus_field(ss);
    CHECK(g.n == f.n);
    REQUIRE(g.radii.size() == f.radii.size());
    for (std::size_t i = 0; i < f.radii.size(); ++i) {
        CHECK(g.radii[i] == f.radii[i]);
        REQUIRE(g.values[i].size() == f.values[i].size());
        for (std::size_t j = 0; j < f.values[i].size(); ++j) CHECK(g.values[i][j] == f.values[i][j]);
    }
}

TEST_CASE("complex circles survive a round trip bit for bit") {
    std::vector<double> radii = {0.5, 1.0};
    std::vector<std::vector<cplx>> vals = {
        {cplx(1.0 / 3.0, -0.25), cplx(0, 1e-307), cplx(2, 3), cplx(-4, 5)},
        {cplx(9, 9), cplx(8, 8), cplx(7, 7), cplx(6, 6)}};
    std::stringstream ss;
    store_complex_circles(radii, vals, 4, ss);
    auto loaded = load_complex_circles(ss);
    REQUIRE(loaded.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(loaded[i].first == radii[i]);
        REQUIRE(loaded[i].second.size() == 4);
        for (std::size_t j = 0; j < 4; ++j) CHECK(loaded[i].second[j] == vals[i][j]);
    }
}

TEST_CASE("formatted doubles parse back exactly") {
    for (double x : {1.0 / 3.0, 0.1, 1e-300, 6.02214076e23, -0.0, 5.0}) {
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("loader rejects malformed input") {
    auto load = [](const std::string& text) {
        std::stringstream ss(text);
        return load_modulus_field(ss);
    };

    SUBCASE("wrong header") {
        CHECK_THROWS_AS(load("radius,index,value\n0.5,0,1\n"), input_error);
    }
    SUBCASE("missing boundary circle") {
        CHECK_THROWS_WITH_AS(load("rho,j,modulus\n"
                                  "0.5,0,1\n0.5,1,1\n0.5,2,1\n0.5,3,1\n"),
                             "missing boundary circle", input_error);
    }
    SUBCASE("bad number") {
        CHECK_THROWS_AS(load("rho,j,modulus\n1,0,1\n1,1,x7\n1,2,1\n1,3,1\n"), input_error);
    }
    SUBCASE("negative modulus") {
        CHECK_THROWS_AS(load("rho,j,modulus\n1,0,1\n1,1,-2\n1,2,1\n1,3,1\n"), input_error);
    }
    SUBCASE("radius out of range") {
        CHECK_THROWS_AS(load("rho,j,modulus\n1.5,0,1\n1.5,1,1\n1.5,2,1\n1.5,3,1\n"), input_error);
    }
    SUBCASE("node index out of order") {
        CHECK_THROWS_AS(load("rho,j,modulus\n1,0,1\n1,2,1\n1,1,1\n1,3,1\n"), input_error);
    }
    SUBCASE("inconsistent node counts") {
        CHECK_THROWS_AS(load("rho,j,modulus\n"
                             "0.5,0,1\n0.5,1,1\n0.5,2,1\n0.5,3,1\n"
                             "1,0,1\n1,1,1\n1,2,1\n1,3,1\n1,4,1\n1,5,1\n"),
                        input_error);
    }
    SUBCASE("split circle block") {
        CHECK_THROWS_AS(load("rho,j,modulus\n"
                             "0.5,0,1\n0.5,1,1\n"
                             "1,0,1\n1,1,1\n"
                             "0.5,2,1\n0.5,3,1\n"
                             "1,2,1\n1,3,1\n"),
                        input_error);
    }
    SUBCASE("too few nodes") {
        CHECK_THROWS_AS(load("rho,j,modulus\n1,0,1\n1,1,1\n"), input_error);
    }
}

TEST_CASE("missing file is an input error") {
    CHECK_THROWS_AS(load_modulus_field_file("/nonexistent/path/field.csv"), input_error);
}
