#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obcalc/errors.hpp"
#include "obcalc/surface.hpp"

using namespace obcalc;

TEST_CASE("euler characteristic of pages") {
    CHECK(euler_char({1, 1}) == -1);
    CHECK(euler_char({0, 1}) == 1);  // disk
    CHECK(euler_char({0, 2}) == 0);  // annulus
}

TEST_CASE("page norm") {
    CHECK(page_norm({0, 5}) == 3);
    CHECK(page_norm({1, 1}) == 1);
    CHECK(page_norm({0, 9}) == 7);
}

TEST_CASE("h1 rank") {
    CHECK(h1_rank({1, 1}) == 2);
    CHECK(h1_rank({0, 5}) == 4);
    CHECK(h1_rank({0, 1}) == 0);
}

TEST_CASE("page formula identities") {
    for (long long g = 0; g <= 4; ++g)
        for (long long b = 1; b <= 6; ++b) {
            const PageSurface page{g, b};
            CHECK(page_norm(page) == -euler_char(page));
            CHECK(page_norm(page) >= -1);
            CHECK((page_norm(page) == -1) == (g == 0 && b == 1));
            if (b >= 2) CHECK(h1_rank(page) == h1_rank({g, b - 1}) + 1);
            if (g >= 1) CHECK(h1_rank(page) == h1_rank({g - 1, b}) + 2);
        }
}

TEST_CASE("open book validation") {
    OpenBookDesc book;
    book.page = {0, 3};
    book.curves.push_back({"c", std::vector<long long>{1, 0}, std::nullopt});
    book.word.letters.push_back({"c", Handedness::Right});
    CHECK_NOTHROW(book.validate());

    SUBCASE("unknown curve in the word") {
        book.word.letters.push_back({"ghost", Handedness::Left});
        CHECK_THROWS_AS(book.validate(), ValidationError);
    }
    SUBCASE("class of the wrong length") {
        book.curves.push_back({"bad", std::vector<long long>{1}, std::nullopt});
        CHECK_THROWS_AS(book.validate(), ValidationError);
    }
    SUBCASE("duplicate names") {
        book.curves.push_back({"c", std::nullopt, std::nullopt});
        CHECK_THROWS_AS(book.validate(), ValidationError);
    }
    SUBCASE("closed page is rejected") {
        book.page.boundary_count = 0;
        CHECK_THROWS_AS(book.validate(), ValidationError);
    }
    SUBCASE("curve without a class is fine until someone needs it") {
        book.curves.push_back({"unknown-class", std::nullopt, std::nullopt});
        CHECK_NOTHROW(book.validate());
    }
}

TEST_CASE("find_curve") {
    OpenBookDesc book;
    book.page = {0, 2};
    book.curves.push_back({"core", std::vector<long long>{1}, 0});
    CHECK(book.find_curve("core") != nullptr);
    CHECK(book.find_curve("rim") == nullptr);
}
