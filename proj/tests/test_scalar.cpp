#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("rational parsing and canonical form", "[scalar]") {
  CHECK(Q::parse("6/4") == q(3, 2));
  CHECK(Q::parse("6/4").to_string() == "3/2");
  CHECK(Q::parse("-4/2").to_string() == "-2");
  CHECK(Q::parse("0/7").to_string() == "0");
  CHECK(Q::parse("+5").to_string() == "5");
  CHECK(Q::parse("  12  ") == Q(12));
  CHECK(q(2, -4).to_string() == "-1/2");
  CHECK(q(-3, 9).denominator() == 3);
}

TEST_CASE("malformed rationals are rejected", "[scalar]") {
  for (const char* bad : {"", "  ", "1/", "/2", "1/0", "1/-2", "abc", "1.5", "--1", "1/2/3", "+"})
    CHECK_THROWS_AS(Q::parse(bad), InputError);
  CHECK_THROWS_AS(Q(1) / Q(0), InputError);
}

TEST_CASE("rational arithmetic is exact", "[scalar]") {
  Q a = q(1, 3), b = q(1, 6);
  CHECK(a + b == q(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == q(1, 18));
  CHECK(a / b == Q(2));
  CHECK((a + b) - b == a);
  CHECK(-a == q(-1, 3));
  CHECK(a > b);
  CHECK(a.sign() == 1);
  CHECK((-a).sign() == -1);
  CHECK(Q().is_zero());
  // Values beyond 64 bits.
  Q big = Q::parse("123456789012345678901234567890/7");
  CHECK((big * Q(7)).to_string() == "123456789012345678901234567890");
}

TEST_CASE("gaussian rational parsing", "[scalar]") {
  CHECK(Qi::parse("1/2-3/4*i") == Qi(q(1, 2), q(-3, 4)));
  CHECK(Qi::parse("i") == Qi::i());
  CHECK(Qi::parse("-i") == -Qi::i());
  CHECK(Qi::parse("2*i") == Qi(Q(0), Q(2)));
  CHECK(Qi::parse("-1/3*i") == Qi(Q(0), q(-1, 3)));
  CHECK(Qi::parse("3+i") == Qi(Q(3), Q(1)));
  CHECK(Qi::parse("-3/2") == Qi(q(-3, 2)));
  CHECK(Qi::parse("1/2+5/3*i") == Qi(q(1, 2), q(5, 3)));
  for (const char* bad : {"", "*i", "1+*i", "1+2i*", "x", "1/0*i", "1++i"})
    CHECK_THROWS_AS(Qi::parse(bad), InputError);
}

TEST_CASE("gaussian rational formatting round-trips", "[scalar]") {
  CHECK(Qi(q(1, 2), q(-3, 4)).to_string() == "1/2-3/4*i");
  CHECK(Qi::i().to_string() == "i");
  CHECK((-Qi::i()).to_string() == "-i");
  CHECK(Qi(Q(0), Q(2)).to_string() == "2*i");
  CHECK(Qi(Q(5)).to_string() == "5");
  CHECK(Qi().to_string() == "0");
  Gen gen(11);
  for (int t = 0; t < 200; ++t) {
    Qi z = gen.scalar<Qi>();
    CHECK(Qi::parse(z.to_string()) == z);
  }
}

TEST_CASE("gaussian arithmetic", "[scalar]") {
  Qi i = Qi::i();
  CHECK(i * i == Qi(Q(-1)));
  Qi z(Q(3), Q(4));
  CHECK(z * z.conj() == Qi(Q(25)));
  CHECK(Qi::one() / z == Qi(q(3, 25), q(-4, 25)));
  CHECK_THROWS_AS(z / Qi(), InputError);
}

TEMPLATE_TEST_CASE("field axioms on random elements", "[scalar][property]", Q, Qi) {
  Gen gen(2024);
  for (int t = 0; t < 1000; ++t) {
    auto a = gen.scalar<TestType>(), b = gen.scalar<TestType>(), c = gen.scalar<TestType>();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + TestType::zero() == a);
    CHECK(a * TestType::one() == a);
    CHECK(a + (-a) == TestType::zero());
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * (TestType::one() / a) == TestType::one());
  }
}

TEST_CASE("field names", "[scalar]") {
  CHECK(field_name<Q>() == "Q");
  CHECK(field_name<Qi>() == "Qi");
}
