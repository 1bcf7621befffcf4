#include "doctest.h"

#include "core/textio.hpp"

using namespace pavemat;

TEST_CASE("matroid record format") {
    GroundSet g(4);
    Matroid m = Matroid::from_bases(g, SetFamily::of(g, {{1, 4}, {2, 4}, {3, 4}}));
    CHECK(format_matroid(m, false) ==
          "matroid n=4 r=2\n"
          "bases:\n"
          "1 4\n"
          "2 4\n"
          "3 4\n");
    CHECK(format_matroid(m, true) ==
          "matroid n=4 r=2\n"
          "bases:\n"
          "1 4\n"
          "2 4\n"
          "3 4\n"
          "hyperplanes:\n"
          "4\n"
          "1 2 3\n"
          "circuits:\n"
          "1 2\n"
          "1 3\n"
          "2 3\n");
}

TEST_CASE("matroid record parse and round trip") {
    MatroidRecord rec = parse_matroid_record("matroid n=4 r=2\nbases:\n1 4\n2 4\n3 4\n");
    CHECK(rec.ground.size() == 4);
    CHECK(rec.r == 2);
    CHECK(rec.bases == SetFamily::of(GroundSet(4), {{1, 4}, {2, 4}, {3, 4}}));

    Matroid m = matroid_from_record(rec);
    CHECK(parse_matroid_record(format_matroid(m, false)).bases == m.bases());
    // derived sections are skipped on input
    CHECK(parse_matroid_record(format_matroid(m, true)).bases == m.bases());

    CHECK_THROWS_AS(parse_matroid_record(""), ParseError);
    CHECK_THROWS_AS(parse_matroid_record("seed n=4 r=2\nH':\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid_record("matroid n=4\nbases:\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid_record("matroid n=4 r=2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid_record("matroid n=4 r=2\nbases:\n1 9\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid_record("matroid n=4 r=2\nbases:\n1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matroid_record("matroid n=0 r=0\nbases:\n"), ParseError);
    // junk inside a derived section, and a second record in the same text
    CHECK_THROWS_AS(parse_matroid_record("matroid n=4 r=2\nbases:\n1 2\nhyperplanes:\n?\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_matroid_record("matroid n=4 r=2\nbases:\n1 2\n\nmatroid n=4 r=2\n"),
                    ParseError);

    // declared rank must match the family
    CHECK_THROWS_AS(matroid_from_record(
                        parse_matroid_record("matroid n=4 r=3\nbases:\n1 2\n3 4\n")),
                    NotAMatroid);
}

TEST_CASE("seed record format and parse") {
    GroundSet g(4);
    PavingSeed seed{g, 2, SetFamily::of(g, {{1, 2, 3}})};
    CHECK(format_seed(seed) == "seed n=4 r=2\nH':\n1 2 3\n");

    PavingSeed parsed = parse_seed("seed n=4 r=2\nH':\n1 2 3\n");
    CHECK(parsed.ground.size() == 4);
    CHECK(parsed.r == 2);
    CHECK(parsed.large_hyperplanes == seed.large_hyperplanes);

    PavingSeed empty = parse_seed("seed n=5 r=3\nH':\n");
    CHECK(empty.large_hyperplanes.empty());
    CHECK(format_seed(empty) == "seed n=5 r=3\nH':\n");

    CHECK_THROWS_AS(parse_seed("matroid n=4 r=2\nbases:\n"), ParseError);
    CHECK_THROWS_AS(parse_seed("seed n=4 r=2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_seed("seed n=4 r=2 extra\nH':\n"), ParseError);
}

TEST_CASE("round trip across the n <= 5 corpora") {
    for (int n = 3; n <= 5; ++n) {
        for (int r = 2; r <= n; ++r) {
            enumerate_paving(GroundSet(n), r, [&](const PavingConstruction& c) {
                CHECK(parse_matroid_record(format_matroid(c.matroid, true)).bases ==
                      c.matroid.bases());
                PavingSeed seed = seed_of(c.matroid);
                PavingSeed reparsed = parse_seed(format_seed(seed));
                CHECK(reparsed.large_hyperplanes == seed.large_hyperplanes);
                CHECK(reparsed.r == seed.r);
            });
        }
    }
}

TEST_CASE("verify report") {
    VerifyResult good =
        verify_record(parse_matroid_record("matroid n=4 r=2\nbases:\n1 4\n2 4\n3 4\n"));
    CHECK(good.is_matroid);
    CHECK(good.report.find("is_matroid: yes") != std::string::npos);
    CHECK(good.report.find("rank: 2") != std::string::npos);
    CHECK(good.report.find("paving(circuits): yes") != std::string::npos);
    CHECK(good.report.find("paving(hyperplanes): yes") != std::string::npos);
    CHECK(good.report.find("sparse(dual-paving): no") != std::string::npos);
    CHECK(good.report.find("sparse(n2-empty): no") != std::string::npos);
    CHECK(good.report.find("n2: 1") != std::string::npos);
    CHECK(good.report.find("1 2 3") != std::string::npos);

    VerifyResult bad =
        verify_record(parse_matroid_record("matroid n=4 r=2\nbases:\n1 2\n3 4\n"));
    CHECK(!bad.is_matroid);
    CHECK(bad.report.find("is_matroid: no") != std::string::npos);
    CHECK(bad.report.find("not a matroid") != std::string::npos);
    CHECK(bad.report.find("B1={") != std::string::npos);

    VerifyResult uniform =
        verify_record(parse_matroid_record(
            "matroid n=5 r=2\nbases:\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n"));
    CHECK(uniform.is_matroid);
    CHECK(uniform.report.find("sparse(dual-paving): yes") != std::string::npos);
    CHECK(uniform.report.find("sparse(n2-empty): yes") != std::string::npos);
    CHECK(uniform.report.find("sparse(hyperplane-sizes): yes") != std::string::npos);
    CHECK(uniform.report.find("n2: 0") != std::string::npos);

    VerifyResult mismatch =
        verify_record(parse_matroid_record("matroid n=4 r=3\nbases:\n1 2\n3 4\n"));
    CHECK(!mismatch.is_matroid);
    CHECK(mismatch.report.find("rank mismatch") != std::string::npos);
}

TEST_CASE("count table alignment") {
    CountRecord a{EnumerationQuery{3, 2, MatroidClass::paving, CountMode::labeled,
                                   SimplicityFilter::none},
                  4, 0.0};
    CountRecord b{EnumerationQuery{4, 2, MatroidClass::sparse_paving, CountMode::labeled,
                                   SimplicityFilter::none},
                  10, 0.0};
    std::string table = format_count_table({a, b});
    CHECK(table ==
          "n  r  class          mode     count\n"
          "3  2  paving         labeled  4\n"
          "4  2  sparse_paving  labeled  10\n");
}

TEST_CASE("bound check formatting") {
    BoundCheck check = verify_counting_inequality(4, 2, SimplicityFilter::paper);
    std::string text = format_bound_check(check);
    CHECK(text.find("|M(4,2)| = 14") != std::string::npos);
    CHECK(text.find("10 * 5") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
}
