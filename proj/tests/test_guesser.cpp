#include "brute.hpp"

#include "wilf/errors.hpp"
#include "wilf/guesser.hpp"

#include <doctest.h>

using namespace wilf;

namespace {

std::vector<BigCount> catalan_terms(int count) {
  std::vector<BigCount> out;
  BigCount c = 1; // C_0
  for (int n = 0; n < count; ++n) {
    c = c * 2 * (2 * n + 1) / (n + 2); // C_{n+1}
    out.push_back(c);
  }
  return out;
}

std::vector<BigCount> factorial_terms(int count) {
  std::vector<BigCount> out;
  BigCount f = 1;
  for (int n = 1; n <= count; ++n)
    out.push_back(f *= n);
  return out;
}

} // namespace

TEST_CASE("guess examples") {
  auto cat = guess_recurrence(catalan_terms(30), 2, 2);
  REQUIRE(cat.has_value());
  CHECK(cat->text() == "(n+2)*a(n+1) - (4*n+2)*a(n) = 0");
  CHECK(cat->order() == 1);
  CHECK(cat->degree() == 1);
  CHECK(verify_recurrence(*cat, catalan_terms(40)));
  CHECK_FALSE(verify_recurrence(*cat, factorial_terms(20)));

  auto fac = guess_recurrence(factorial_terms(30), 2, 2);
  REQUIRE(fac.has_value());
  CHECK(fac->text() == "a(n+1) - (n+1)*a(n) = 0");

  std::vector<BigCount> ones(20, 1);
  auto one = guess_recurrence(ones, 2, 2);
  REQUIRE(one.has_value());
  CHECK(one->text() == "a(n+1) - a(n) = 0");

  std::string js = cat->json();
  CHECK(js.find("\"CONJECTURE\"") != std::string::npos);
  CHECK(js.find("\"schema_version\":1") != std::string::npos);
}

TEST_CASE("guess failures") {
  CHECK_THROWS_AS(RecurrenceCandidate({{1, 2}, {0, 0}}), InvalidInput);
  CHECK_THROWS_AS(RecurrenceCandidate({}), InvalidInput);
  CHECK(required_terms(2, 2, 5) == 16);
  CHECK_THROWS_WITH_AS(guess_recurrence(catalan_terms(10), 2, 2), doctest::Contains("need at least"),
                       InvalidInput);
  // 2^n + n! satisfies no order-1 degree-1 recurrence.
  std::vector<BigCount> mixed;
  BigCount f = 1, p = 1;
  for (int n = 1; n <= 30; ++n) {
    f *= n;
    p *= 2;
    mixed.push_back(f + p);
  }
  CHECK_FALSE(guess_recurrence(mixed, 1, 1).has_value());
}

TEST_CASE("normalization") {
  RecurrenceCandidate a({{-4, -8}, {4, 2}});
  RecurrenceCandidate b({{-2, -4}, {2, 1}});
  CHECK(a == b);
  RecurrenceCandidate c({{2, 4}, {-2, -1}});
  CHECK(c == b);
}

TEST_CASE("property: guess is minimal and invariant under scaling") {
  auto terms = catalan_terms(30);
  auto rec = guess_recurrence(terms, 2, 2);
  REQUIRE(rec.has_value());
  for (int d = 0; d <= 2; ++d)
    for (int e = 0; e <= 2; ++e)
      if (d + e < rec->order() + rec->degree() ||
          (d + e == rec->order() + rec->degree() && d < rec->order()))
        CHECK_FALSE(fit_recurrence(terms, d, e).has_value());
  for (int k : {3, -7, 1000}) {
    std::vector<BigCount> scaled;
    for (const auto& t : terms)
      scaled.push_back(t * k);
    auto again = guess_recurrence(scaled, 2, 2);
    REQUIRE(again.has_value());
    CHECK(*again == *rec);
  }
}

TEST_CASE("property: recovers planted recurrences") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(1, 4);
  for (int iter = 0; iter < 10; ++iter) {
    // a(n+1) = (c1*n + c0) * a(n)
    int c1 = coef(rng), c0 = coef(rng);
    std::vector<BigCount> t{1};
    for (int n = 1; n < 25; ++n)
      t.push_back(t.back() * (c1 * n + c0));
    auto rec = guess_recurrence(t, 2, 2);
    REQUIRE(rec.has_value());
    CHECK(verify_recurrence(*rec, t));
    CHECK(rec->order() + rec->degree() <= 2);
  }
}
