#include <doctest.h>

#include <numeric>

#include "circulant/embed.hpp"

using namespace circulant;

namespace {

BookEmbedding checked(int n, int k) {
    const BookEmbedding emb = embed(n, k);
    const CirculantSpec spec = CirculantSpec::cnk(n, k > n / 2 ? n - k : k);
    const VerificationReport rep = verify_embedding(spec, emb);
    INFO("C(", n, ",", k, ") via ", emb.route);
    REQUIRE(rep.valid());
    REQUIRE(emb.pages == predicted_mbt(spec));
    REQUIRE(rep.pages_used <= emb.pages);
    return emb;
}

}  // namespace

TEST_CASE("zigzag order for even n with odd k") {
    const BookEmbedding emb = checked(14, 5);
    CHECK(emb.pages == 4);
    CHECK(emb.route == "4.1");
    CHECK(emb.layout.order() ==
          std::vector<int>{1, 14, 3, 12, 5, 10, 7, 8, 9, 6, 11, 4, 13, 2});
    CHECK(checked(14, 7).pages == 3);
    CHECK(checked(6, 3).pages == 3);
}

TEST_CASE("even n with even k") {
    const BookEmbedding half = checked(12, 6);
    CHECK(half.pages == 4);
    CHECK(half.route == "4.2/k=n2");
    CHECK(checked(4, 2).pages == 4);
    const BookEmbedding gen = checked(24, 4);
    CHECK(gen.pages == 5);
    CHECK(gen.route == "4.2/general");
    CHECK(checked(56, 8).pages == 5);
    CHECK(checked(6, 2).pages == 5);
}

TEST_CASE("odd n with a common divisor") {
    CHECK(checked(9, 3).route == "5.1/n=3k");
    CHECK(checked(27, 9).route == "5.1/n=3k");
    CHECK(checked(15, 5).route == "5.1/n=3k");
    CHECK(checked(27, 3).route == "5.1/d=3");
    CHECK(checked(27, 6).route == "5.1/d=3");
    CHECK(checked(15, 6).route == "5.1/d=3");
    CHECK(checked(65, 5).route == "5.1/d>=5");
    CHECK(checked(65, 15).route == "5.1/d>=5");
    CHECK(checked(25, 5).route == "5.1/d>=5");
}

TEST_CASE("odd coprime with remainder one") {
    CHECK(checked(5, 2).route == "6.1/a=2");
    CHECK(checked(27, 13).route == "6.1/a=2");
    CHECK(checked(25, 12).route == "6.1/a=2");
    CHECK(checked(25, 8).route == "6.1/k-even");
    CHECK(checked(25, 6).route == "6.1/k-even");
    CHECK(checked(13, 4).route == "6.1/k-even");
    CHECK(checked(55, 9).route == "6.1/k-odd");
    // remainder 1 wins the k = 2 overlap with the k-1 rule
    CHECK(checked(13, 3).pages == 5);
}

TEST_CASE("odd coprime with remainder k-1") {
    CHECK(checked(53, 6).route == "6.2/k-even");
    CHECK(checked(53, 9).route == "6.2/k-odd");
    CHECK(checked(11, 4).route == "6.2/k-even");
    CHECK(checked(11, 3).route == "6.2/k-odd");
}

TEST_CASE("odd coprime mid-band remainders") {
    CHECK(checked(63, 11).route == "6.3/t=3/|Pt|>half");
    CHECK(checked(63, 17).route == "6.3/t=3/|Pt|<=half");
    CHECK(checked(65, 14).route == "6.3/t>3");
    CHECK(checked(67, 47).route == "6.3/t>3");  // folds to C(67,20)
    CHECK(checked(47, 13).route == "6.4/t=2");
    CHECK(checked(47, 21).route == "6.4/t>=4");
    CHECK(checked(17, 7).route == "6.4/t>=4");
}

TEST_CASE("plain cycles") {
    CHECK(checked(8, 1).pages == 2);
    CHECK(checked(9, 1).pages == 3);
    CHECK(checked(3, 1).pages == 3);
}

TEST_CASE("route tags are a pure function of the instance") {
    for (int n = 3; n <= 40; ++n)
        for (int k = 1; k <= n / 2; ++k) {
            const BookEmbedding a = embed(n, k);
            const BookEmbedding b = embed(n, k);
            CHECK(a.route == b.route);
            CHECK(a.assignment == b.assignment);
            CHECK(a.layout.order() == b.layout.order());
        }
}

TEST_CASE("page counts across the small sweep") {
    for (int n = 3; n <= 40; ++n)
        for (int k = 1; k <= n / 2; ++k) {
            const BookEmbedding emb = checked(n, k);
            CHECK(emb.pages >= max_degree(CirculantSpec::cnk(n, k)));
            CHECK(emb.pages <= 5);
        }
}
