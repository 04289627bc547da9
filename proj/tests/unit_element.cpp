#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "recset/element.hpp"
#include "recset/text.hpp"

using namespace recset;

TEST_CASE("int elements normalize residues to canonical range") {
  CHECK(element::int_mod(7, 5) == element::int_mod(2, 5));
  CHECK(element::int_mod(-3, 5) == element::int_mod(2, 5));
  CHECK(element::int_mod(-3, {}).as_int_mod().value == -3);
}

TEST_CASE("vector elements normalize componentwise") {
  element v = element::vec_mod({7, -1}, 6);
  CHECK(v.as_vec_mod().coords == std::vector<std::int64_t>{1, 5});
  CHECK(v == element::vec_mod({1, 5}, 6));
}

TEST_CASE("language elements sort shortlex and dedupe") {
  element l = element::lang({"ab", "a", "", "a"}, 3);
  CHECK(l.as_lang().strings == std::vector<std::string>{"", "a", "ab"});
}

TEST_CASE("equality is false across kinds, compare throws") {
  element a = element::int_mod(1, 5);
  element s = element::sym("x");
  CHECK_FALSE(a == s);
  CHECK(a != s);
  CHECK_THROWS_AS(compare_elements(a, s), error);
  try {
    compare_elements(a, s);
  } catch (const error& e) {
    CHECK(e.code() == errc::mixed_universe);
  }
}

TEST_CASE("comparison orders by value then parameters") {
  CHECK(compare_elements(element::int_mod(1, 5), element::int_mod(2, 5)) == ordering::less);
  CHECK(compare_elements(element::int_mod(3, 5), element::int_mod(3, 5)) ==
        ordering::equal);
  // Same value, different modulus: unequal, ordered deterministically.
  element a = element::int_mod(1, 5);
  element b = element::int_mod(1, 7);
  CHECK_FALSE(a == b);
  CHECK(compare_elements(a, b) != ordering::equal);
}

TEST_CASE("lang ordering is by cardinality then shortlex") {
  element small = element::lang({"b"}, 2);
  element big = element::lang({"a", "ab"}, 2);
  CHECK(compare_elements(small, big) == ordering::less);
  element x = element::lang({"a"}, 2);
  element y = element::lang({"b"}, 2);
  CHECK(compare_elements(x, y) == ordering::less);
}

TEST_CASE("shortlex orders by length before content") {
  CHECK(shortlex_less("z", "aa"));
  CHECK(shortlex_less("a", "b"));
  CHECK(shortlex_less("", "a"));
  CHECK_FALSE(shortlex_less("aa", "z"));
}

TEST_CASE("equal elements have identical encodings and vice versa") {
  std::vector<element> pool = {
      element::int_mod(3, {}),       element::int_mod(3, 5),
      element::int_mod(8, 5),        element::vec_mod({1, 2}, 4),
      element::vec_mod({1, 2}, 5),   element::indexed(2, 9),
      element::indexed(3, 9),        element::lang({"a"}, 2),
      element::lang({"a"}, 3),       element::lang({}, 2),
      element::sym("p"),             element::sym("q"),
  };
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      CHECK((x == y) == (encode(x) == encode(y)));
      if (x.kind() == y.kind()) {
        CHECK((compare_elements(x, y) == ordering::equal) == (x == y));
      }
    }
  }
}

TEST_CASE("canonicalize adopts missing parameters and rejects conflicts") {
  universe u = universe::ints_mod(5);
  CHECK(canonicalize(u, element::int_mod(7, {})) == element::int_mod(2, 5));
  CHECK(canonicalize(u, element::int_mod(7, 5)) == element::int_mod(2, 5));
  CHECK_THROWS_AS(canonicalize(u, element::int_mod(1, 7)), error);
  CHECK_THROWS_AS(canonicalize(u, element::sym("x")), error);

  universe ints = universe::ints();
  CHECK(canonicalize(ints, element::int_mod(-3, {})).as_int_mod().value == -3);
  CHECK_THROWS_AS(canonicalize(ints, element::int_mod(1, 5)), error);
}

TEST_CASE("canonicalize checks vector dimension and modulus") {
  universe u = universe::vectors(6, 2);
  CHECK(canonicalize(u, element::vec_mod({7, 8}, 0)) == element::vec_mod({1, 2}, 6));
  CHECK_THROWS_AS(canonicalize(u, element::vec_mod({1}, 6)), error);
  CHECK_THROWS_AS(canonicalize(u, element::vec_mod({1, 2}, 5)), error);
}

TEST_CASE("canonicalize checks positions against the horizon") {
  universe u = universe::positions(4);
  CHECK(canonicalize(u, element::indexed(4, 9)) == element::indexed(4, 9));
  CHECK_THROWS_AS(canonicalize(u, element::indexed(5, 9)), error);
  CHECK_THROWS_AS(canonicalize(u, element::indexed(0, 9)), error);
  universe open = universe::positions();
  CHECK(canonicalize(open, element::indexed(1000, 1)) == element::indexed(1000, 1));
}

TEST_CASE("canonicalize checks language alphabet and lengths") {
  universe u = universe::languages("ab", 2);
  CHECK(canonicalize(u, element::lang({"ab", "a"}, 2)) == element::lang({"a", "ab"}, 2));
  // max_len is adopted from the universe when it differs.
  CHECK(canonicalize(u, element::lang({"a"}, 1)) == element::lang({"a"}, 2));
  CHECK_THROWS_AS(canonicalize(u, element::lang({"abc"}, 2)), error);  // too long
  CHECK_THROWS_AS(canonicalize(u, element::lang({"c"}, 2)), error);    // bad symbol
}

TEST_CASE("sym canonicalization rejects empty names") {
  CHECK_THROWS_AS(canonicalize(universe::symbols(), element::sym("")), error);
}

TEST_CASE("text forms render as documented") {
  CHECK(to_text(element::int_mod(2, 5)) == "2");
  CHECK(to_text(element::int_mod(-7, {})) == "-7");
  CHECK(to_text(element::vec_mod({2, 0}, 6)) == "[2,0]%6");
  CHECK(to_text(element::indexed(3, 2)) == "(3->2)");
  CHECK(to_text(element::lang({}, 2)) == "{}");
  CHECK(to_text(element::lang({""}, 2)) == "{eps}");
  CHECK(to_text(element::lang({"ab", "a"}, 2)) == "{a,ab}");
  CHECK(to_text(element::sym("token")) == "token");
}

TEST_CASE("parse round-trips every kind through its universe") {
  struct row {
    universe u;
    element e;
  };
  std::vector<row> rows = {
      {universe::ints_mod(5), element::int_mod(3, 5)},
      {universe::ints(), element::int_mod(-12, {})},
      {universe::vectors(6, 2), element::vec_mod({2, 0}, 6)},
      {universe::positions(9), element::indexed(3, 2)},
      {universe::languages("ab", 2), element::lang({"", "a", "ab"}, 2)},
      {universe::languages("ab", 2), element::lang({}, 2)},
      {universe::symbols(), element::sym("p")},
  };
  for (const auto& r : rows) {
    CHECK(parse_element(to_text(r.e), r.u) == r.e);
  }
}

TEST_CASE("parse accepts explicit modulus suffix when it agrees") {
  universe u = universe::ints_mod(5);
  CHECK(parse_element("7%5", u) == element::int_mod(2, 5));
  CHECK_THROWS_AS(parse_element("7%6", u), error);
  CHECK(parse_element("[1,2]", universe::vectors(6, 2)) == element::vec_mod({1, 2}, 6));
}

TEST_CASE("parse rejects malformed forms") {
  CHECK_THROWS_AS(parse_element("", universe::ints()), error);
  CHECK_THROWS_AS(parse_element("x", universe::ints()), error);
  CHECK_THROWS_AS(parse_element("[1,2", universe::vectors(6, 2)), error);
  CHECK_THROWS_AS(parse_element("[1,2]x", universe::vectors(6, 2)), error);
  CHECK_THROWS_AS(parse_element("(3->)", universe::positions()), error);
  CHECK_THROWS_AS(parse_element("(3,2)", universe::positions()), error);
  CHECK_THROWS_AS(parse_element("{a,}", universe::languages("ab", 2)), error);
  CHECK_THROWS_AS(parse_element("a}", universe::languages("ab", 2)), error);
}

TEST_CASE("element_less gives a strict total order usable for sorting") {
  std::vector<element> es = {element::int_mod(4, 5), element::int_mod(0, 5),
                             element::int_mod(2, 5), element::int_mod(3, 5)};
  std::sort(es.begin(), es.end(), element_less{});
  CHECK(to_text(es.front()) == "0");
  CHECK(to_text(es.back()) == "4");
  CHECK(std::is_sorted(es.begin(), es.end(), element_less{}));
}
