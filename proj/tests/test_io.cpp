#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "hadamat/io.hpp"
#include "hadamat/structure.hpp"
#include "helpers.hpp"

using namespace hadamat;

TEST_CASE("plain format round trips bit-exactly") {
    Matrix m{{1.0 / 3.0, 1e-17, -2.5}, {3.0, 1e300, 0.1 + 0.2}, {7.0, -0.0, 123456.789}};
    const Matrix back = parse_matrix_plain(render_matrix_plain(m));
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("json format round trips") {
    const Matrix m{{0.5, 2}, {3, 1.0 / 7.0}};
    const Matrix back = parse_matrix_json(render_matrix_json(m));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("malformed matrix input is rejected") {
    CHECK_THROWS_AS(parse_matrix_plain("0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_plain("2\n1 2 3\n"), ParseError);      // too few
    CHECK_THROWS_AS(parse_matrix_plain("2\n1 2 3 4 5\n"), ParseError);  // too many
    CHECK_THROWS_AS(parse_matrix_plain("x\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("{"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("{\"n\":2,\"rows\":[1,2,3]}"), ParseError);
}

TEST_CASE("layered representation files round trip") {
    const SfmRep rep = generate_gum_sfm(6, 5);
    const SfmRep back = parse_sfm(render_sfm(rep));
    CHECK(max_norm_diff(back.materialize(), rep.materialize()) == 0.0);
    CHECK(back.levels() == rep.levels());
    for (std::size_t s = 0; s < rep.levels(); ++s) {
        CHECK(back.partitions[s] == rep.partitions[s]);
        CHECK(back.layers[s].C == rep.layers[s].C);
        CHECK(back.layers[s].Gamma == rep.layers[s].Gamma);
    }

    const FilteredRep f = rep.to_filtered();
    const FilteredRep fback = parse_filtered(render_filtered(f));
    CHECK(max_norm_diff(fback.materialize(), f.materialize()) == 0.0);
}

TEST_CASE("representation parsing validates structure") {
    // atoms must be 1-based and cover the ground set
    CHECK_THROWS_AS(parse_sfm("{\"kind\":\"sfm\",\"n\":2,\"partitions\":[[[0,1]]],"
                              "\"layers\":[{\"C\":[1,1],\"Gamma\":[0,0],\"p\":[1,1],\"q\":[0,0]}]}"),
                    ParseError);
    CHECK_THROWS_AS(parse_sfm("not json"), ParseError);
    CHECK_THROWS_AS(parse_filtered("{\"kind\":\"sfm\"}"), ParseError);
}

TEST_CASE("file helpers") {
    const std::string path = "/tmp/hadamat_io_test.txt";
    const Matrix m = hadamat::testing::u_beta(0.25);
    write_file(path, render_matrix_plain(m));
    const Matrix back = parse_matrix_plain(read_file(path));
    CHECK(max_norm_diff(back, m) == 0.0);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("/tmp/does-not-exist-hadamat"), ParseError);
}
