// Exercises the shared-library surface only, the way an external client
// would: opaque handles, status codes, pm_last_error.

#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "pavemat.h"

namespace {

struct Str {
    char* value = nullptr;
    ~Str() { pm_string_free(value); }
    std::string str() const { return value ? value : ""; }
};

}  // namespace

TEST_CASE("seed lifecycle and construction") {
    pm_seed* seed = nullptr;
    REQUIRE(pm_seed_create(4, 2, &seed) == PM_OK);
    const int triple[] = {1, 2, 3};
    REQUIRE(pm_seed_add_set(seed, triple, 3) == PM_OK);
    CHECK(pm_seed_n(seed) == 4);
    CHECK(pm_seed_rank(seed) == 2);
    CHECK(pm_seed_set_count(seed) == 1);
    CHECK(pm_seed_validate(seed) == PM_OK);

    pm_matroid* m = nullptr;
    REQUIRE(pm_construct_paving(seed, &m) == PM_OK);
    CHECK(pm_matroid_n(m) == 4);
    CHECK(pm_matroid_rank(m) == 2);
    CHECK(pm_matroid_basis_count(m) == 3);
    CHECK(pm_matroid_is_paving(m) == 1);
    CHECK(pm_matroid_is_sparse_paving(m) == 0);

    Str text;
    REQUIRE(pm_matroid_format(m, 0, &text.value) == PM_OK);
    CHECK(text.str() == "matroid n=4 r=2\nbases:\n1 4\n2 4\n3 4\n");

    pm_seed* recovered = nullptr;
    REQUIRE(pm_matroid_seed(m, &recovered) == PM_OK);
    Str seed_text;
    REQUIRE(pm_seed_format(recovered, &seed_text.value) == PM_OK);
    CHECK(seed_text.str() == "seed n=4 r=2\nH':\n1 2 3\n");

    pm_seed_free(recovered);
    pm_matroid_free(m);
    pm_seed_free(seed);
}

TEST_CASE("invalid seed reports through last_error") {
    pm_seed* seed = nullptr;
    REQUIRE(pm_seed_parse("seed n=5 r=3\nH':\n1 2 3\n1 2 4\n", &seed) == PM_OK);
    CHECK(pm_seed_validate(seed) == PM_ERR_DOMAIN);
    CHECK(std::string(pm_last_error()).find("intersect in 2") != std::string::npos);

    pm_matroid* m = nullptr;
    CHECK(pm_construct_paving(seed, &m) == PM_ERR_DOMAIN);
    CHECK(m == nullptr);
    pm_seed_free(seed);

    pm_seed* bad = nullptr;
    CHECK(pm_seed_parse("not a record", &bad) == PM_ERR_PARSE);
    CHECK(bad == nullptr);
}

TEST_CASE("sparse construction") {
    pm_seed* circuits = nullptr;
    REQUIRE(pm_seed_parse("seed n=4 r=2\nH':\n1 2\n3 4\n", &circuits) == PM_OK);
    pm_matroid* m = nullptr;
    REQUIRE(pm_construct_sparse(circuits, &m) == PM_OK);
    CHECK(pm_matroid_is_sparse_paving(m) == 1);
    CHECK(pm_matroid_basis_count(m) == 4);
    pm_matroid_free(m);
    pm_seed_free(circuits);
}

TEST_CASE("matroid parse, dual, errors") {
    pm_matroid* m = nullptr;
    REQUIRE(pm_matroid_parse("matroid n=4 r=2\nbases:\n1 4\n2 4\n3 4\n", &m) == PM_OK);
    pm_matroid* d = nullptr;
    REQUIRE(pm_matroid_dual(m, &d) == PM_OK);
    CHECK(pm_matroid_rank(d) == 2);
    Str text;
    REQUIRE(pm_matroid_format(d, 0, &text.value) == PM_OK);
    CHECK(text.str() == "matroid n=4 r=2\nbases:\n1 2\n1 3\n2 3\n");
    pm_matroid_free(d);
    pm_matroid_free(m);

    pm_matroid* bad = nullptr;
    CHECK(pm_matroid_parse("matroid n=4 r=2\nbases:\n1 2\n3 4\n", &bad) ==
          PM_ERR_NOT_MATROID);
    CHECK(std::string(pm_last_error()).find("admits no exchange") != std::string::npos);
    CHECK(pm_matroid_parse("garbage", &bad) == PM_ERR_PARSE);
}

TEST_CASE("verify text") {
    Str report;
    int is_matroid = -1;
    REQUIRE(pm_verify_text("matroid n=4 r=2\nbases:\n1 2\n3 4\n", &report.value,
                           &is_matroid) == PM_OK);
    CHECK(is_matroid == 0);
    CHECK(report.str().find("not a matroid") != std::string::npos);

    Str report2;
    REQUIRE(pm_verify_text("matroid n=4 r=2\nbases:\n1 3\n1 4\n2 3\n2 4\n", &report2.value,
                           &is_matroid) == PM_OK);
    CHECK(is_matroid == 1);
    CHECK(report2.str().find("sparse(dual-paving): yes") != std::string::npos);

    CHECK(pm_verify_text("???", &report.value, &is_matroid) == PM_ERR_PARSE);
}

TEST_CASE("enumeration, count, bound check") {
    std::vector<long long> basis_counts;
    auto visit = [](const pm_matroid* m, void* user) -> int {
        static_cast<std::vector<long long>*>(user)->push_back(pm_matroid_basis_count(m));
        return 0;
    };
    REQUIRE(pm_enumerate(3, 2, PM_CLASS_PAVING, PM_MODE_LABELED, visit, &basis_counts) ==
            PM_OK);
    CHECK(basis_counts.size() == 4);

    // early stop after the first matroid
    int seen = 0;
    auto stop = [](const pm_matroid*, void* user) -> int {
        return ++*static_cast<int*>(user);
    };
    REQUIRE(pm_enumerate(4, 2, PM_CLASS_PAVING, PM_MODE_LABELED, stop, &seen) == PM_OK);
    CHECK(seen == 1);

    unsigned long long count = 0;
    REQUIRE(pm_count(4, 2, PM_CLASS_SPARSE_PAVING, PM_MODE_LABELED, &count) == PM_OK);
    CHECK(count == 10);
    REQUIRE(pm_count(3, 2, PM_CLASS_PAVING, PM_MODE_ISO, &count) == PM_OK);
    CHECK(count == 2);
    CHECK(pm_count(12, 6, PM_CLASS_ALL, PM_MODE_LABELED, &count) == PM_ERR_CAP);

    Str report;
    int holds = -1;
    REQUIRE(pm_check_bound(4, 2, PM_SIMPLE_PAPER, &report.value, &holds) == PM_OK);
    CHECK(holds == 1);
    CHECK(report.str().find("PASS") != std::string::npos);
}

TEST_CASE("greedy seed determinism across the C surface") {
    pm_seed* a = nullptr;
    pm_seed* b = nullptr;
    REQUIRE(pm_greedy_seed(5, 3, 1000, 42, 1, &a) == PM_OK);
    REQUIRE(pm_greedy_seed(5, 3, 1000, 42, 1, &b) == PM_OK);
    Str ta, tb;
    REQUIRE(pm_seed_format(a, &ta.value) == PM_OK);
    REQUIRE(pm_seed_format(b, &tb.value) == PM_OK);
    CHECK(ta.str() == tb.str());
    CHECK(pm_seed_validate(a) == PM_OK);
    pm_seed_free(a);
    pm_seed_free(b);

    pm_seed* bad = nullptr;
    CHECK(pm_greedy_seed(4, 4, 10, 0, 1, &bad) == PM_ERR_DOMAIN);
}

TEST_CASE("null arguments") {
    CHECK(pm_seed_create(4, 2, nullptr) == PM_ERR_NULL);
    CHECK(pm_seed_parse(nullptr, nullptr) == PM_ERR_NULL);
    CHECK(pm_matroid_parse(nullptr, nullptr) == PM_ERR_NULL);
    CHECK(pm_enumerate(3, 2, PM_CLASS_PAVING, PM_MODE_LABELED, nullptr, nullptr) ==
          PM_ERR_NULL);
    CHECK(pm_matroid_n(nullptr) == 0);
    pm_seed_free(nullptr);
    pm_matroid_free(nullptr);
    pm_string_free(nullptr);
}
