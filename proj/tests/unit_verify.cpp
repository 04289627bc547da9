#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "recset/instances.hpp"
#include "recset/verify.hpp"
#include "support.hpp"

using namespace recset;

namespace {

instance z5() { return build_cyclic_group(5, 1, group_flavor::additive); }
instance mult7() { return build_cyclic_group(7, 2, group_flavor::multiplicative); }
instance span6() { return build_span(6, 1, {{2}}); }

std::vector<element> residues(std::int64_t m, std::int64_t count) {
  std::vector<element> out;
  for (std::int64_t v = 0; v < count; ++v) out.push_back(element::int_mod(v, m));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// closure checking
// ---------------------------------------------------------------------------

TEST_CASE("the full carrier of Z_5 is recursively closed") {
  closure_report r = is_recursively_closed(residues(5, 5), z5());
  CHECK(r.closed);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("a leaking candidate reports every escape in order") {
  closure_report r = is_recursively_closed(
      {element::int_mod(1, 5), element::int_mod(2, 5)}, z5());
  CHECK_FALSE(r.closed);
  REQUIRE(r.counterexamples.size() == 3);
  const auto& first = r.counterexamples[0];
  REQUIRE(first.op_id.has_value());
  CHECK(*first.op_id == 0);
  CHECK(first.args == std::vector<element>{element::int_mod(1, 5), element::int_mod(2, 5)});
  CHECK(first.result == element::int_mod(3, 5));
}

TEST_CASE("a candidate omitting the base is reported before any escapes") {
  closure_report r = is_recursively_closed(
      {element::int_mod(0, 5), element::int_mod(2, 5)}, z5());
  CHECK_FALSE(r.closed);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK_FALSE(r.counterexamples.front().op_id.has_value());
  CHECK(r.counterexamples.front().result == element::int_mod(1, 5));
}

TEST_CASE("candidate order and duplicates do not affect the verdict") {
  std::vector<element> shuffled = {element::vec_mod({4}, 6), element::vec_mod({0}, 6),
                                   element::vec_mod({2}, 6), element::vec_mod({4}, 6)};
  CHECK(is_recursively_closed(shuffled, span6()).closed);
}

// ---------------------------------------------------------------------------
// brute-force minimality and intersection agree with saturation
// ---------------------------------------------------------------------------

TEST_CASE("saturation, minimal subset, and intersection agree on worked cases") {
  struct case_row {
    instance inst;
    std::vector<element> enumeration;
  };
  std::vector<case_row> cases;
  cases.push_back({z5(), residues(5, 5)});
  cases.push_back({mult7(), residues(7, 7)});
  {
    std::vector<element> vecs;
    for (std::int64_t v = 0; v < 6; ++v) vecs.push_back(element::vec_mod({v}, 6));
    cases.push_back({span6(), vecs});
  }
  cases.push_back({build_identity_closure({element::sym("x1"), element::sym("x2"),
                                           element::sym("x3")}),
                   {element::sym("x1"), element::sym("x2"), element::sym("x3"),
                    element::sym("y")}});

  for (const auto& c : cases) {
    std::vector<element> m = saturate(c.inst).all_elements();
    CHECK(brute_minimal_closed(c.inst, c.enumeration) == m);
    CHECK(brute_intersection_closed(c.inst, c.enumeration) == m);
  }
}

TEST_CASE("randomized modular instances: three constructions, one set") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 30; ++trial) {
    instance inst = testsupport::random_modular_instance(rng);
    std::int64_t m = *inst.carrier().modulus;
    std::vector<element> universe_list = residues(m, m);
    std::vector<element> sat = saturate(inst).all_elements();
    INFO("trial " << trial << " modulus " << m);
    CHECK(brute_minimal_closed(inst, universe_list) == sat);
    CHECK(brute_intersection_closed(inst, universe_list) == sat);
    CHECK(is_recursively_closed(sat, inst).closed);
  }
}

TEST_CASE("enumerations beyond 20 elements are rejected") {
  instance big = build_cyclic_group(25, 1, group_flavor::additive);
  try {
    brute_minimal_closed(big, residues(25, 21));
    FAIL("expected universe_too_large");
  } catch (const error& e) {
    CHECK(e.code() == errc::universe_too_large);
  }
}

TEST_CASE("an enumeration that cannot be closed is an error") {
  try {  // base element missing entirely
    brute_minimal_closed(z5(), {element::int_mod(0, 5), element::int_mod(2, 5)});
    FAIL("expected no_closed_superset");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_closed_superset);
  }
  try {  // base present but every superset leaks
    brute_minimal_closed(z5(), {element::int_mod(1, 5), element::int_mod(2, 5)});
    FAIL("expected no_closed_superset");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_closed_superset);
  }
}

// ---------------------------------------------------------------------------
// base extension invariance
// ---------------------------------------------------------------------------

TEST_CASE("adding derivable elements to the base leaves M unchanged") {
  base_extension_report r =
      check_base_extension(z5(), {element::int_mod(2, 5), element::int_mod(3, 5)});
  REQUIRE(r.derivability.size() == 2);
  CHECK(r.derivability[0].second);
  CHECK(r.derivability[1].second);
  CHECK(r.hypothesis_ok);
  REQUIRE(r.sets_equal.has_value());
  CHECK(*r.sets_equal);
}

TEST_CASE("an empty extension is trivially invariant") {
  base_extension_report r = check_base_extension(z5(), {});
  CHECK(r.hypothesis_ok);
  REQUIRE(r.sets_equal.has_value());
  CHECK(*r.sets_equal);
}

TEST_CASE("underivable extras fail the hypothesis and skip the comparison") {
  base_extension_report r = check_base_extension(mult7(), {element::int_mod(3, 7)});
  REQUIRE(r.derivability.size() == 1);
  CHECK(r.derivability[0].first == element::int_mod(3, 7));
  CHECK_FALSE(r.derivability[0].second);
  CHECK_FALSE(r.hypothesis_ok);
  CHECK_FALSE(r.sets_equal.has_value());

  base_extension_report s = check_base_extension(span6(), {element::vec_mod({5}, 6)});
  CHECK_FALSE(s.hypothesis_ok);
  CHECK_FALSE(s.sets_equal.has_value());
}

TEST_CASE("extension checks demand a fixpoint") {
  instance truncated = z5().with_limits(limits{2, 100000, 100000000});
  CHECK_THROWS_AS(check_base_extension(truncated, {element::int_mod(2, 5)}), error);
}

TEST_CASE("randomized: every member of M is a harmless base extension") {
  std::mt19937 rng(24680);
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    instance inst = testsupport::random_modular_instance(rng);
    std::vector<element> m = saturate(inst).all_elements();
    std::uniform_int_distribution<size_t> pick(0, m.size() - 1);
    std::vector<element> extras = {m[pick(rng)], m[pick(rng)]};
    base_extension_report r = check_base_extension(inst, extras);
    CHECK(r.hypothesis_ok);
    REQUIRE(r.sets_equal.has_value());
    CHECK(*r.sets_equal);
    ++checked;
  }
  CHECK(checked == 25);
}

// ---------------------------------------------------------------------------
// operation extension invariance
// ---------------------------------------------------------------------------

TEST_CASE("ops the set is closed under do not enlarge it") {
  instance inst = z5();
  std::vector<operation> extras = {make_named_op(inst.carrier(), "neg"),
                                   make_named_op(inst.carrier(), "double")};
  op_extension_report r = check_op_extension(inst, extras);
  CHECK(r.m_closed_under_extras.closed);
  REQUIRE(r.sets_equal.has_value());
  CHECK(*r.sets_equal);
}

TEST_CASE("an op escaping M fails the hypothesis with a pinned counterexample") {
  instance inst = mult7();  // M = {1, 2, 4}
  op_extension_report r =
      check_op_extension(inst, {make_named_op(inst.carrier(), "succ")});
  CHECK_FALSE(r.m_closed_under_extras.closed);
  CHECK_FALSE(r.sets_equal.has_value());
  REQUIRE_FALSE(r.m_closed_under_extras.counterexamples.empty());
  const auto& c = r.m_closed_under_extras.counterexamples.front();
  REQUIRE(c.op_id.has_value());
  CHECK(*c.op_id == 1);  // numbered after the one existing op
  CHECK(c.args == std::vector<element>{element::int_mod(2, 7)});
  CHECK(c.result == element::int_mod(3, 7));
}

TEST_CASE("no extra ops means nothing can change") {
  op_extension_report r = check_op_extension(span6(), {});
  CHECK(r.m_closed_under_extras.closed);
  REQUIRE(r.sets_equal.has_value());
  CHECK(*r.sets_equal);
}

TEST_CASE("randomized: full-carrier instances absorb any modular op") {
  std::mt19937 rng(11223);
  int covered = 0;
  for (int trial = 0; trial < 40 && covered < 8; ++trial) {
    instance inst = testsupport::random_modular_instance(rng);
    std::int64_t m = *inst.carrier().modulus;
    if (static_cast<std::int64_t>(saturate(inst).order_map.size()) != m) continue;
    std::vector<operation> extras = {make_named_op(inst.carrier(), "neg"),
                                     make_named_op(inst.carrier(), "affine:3,1")};
    op_extension_report r = check_op_extension(inst, extras);
    CHECK(r.m_closed_under_extras.closed);
    REQUIRE(r.sets_equal.has_value());
    CHECK(*r.sets_equal);
    ++covered;
  }
  CHECK(covered > 0);
}

// ---------------------------------------------------------------------------
// structural induction
// ---------------------------------------------------------------------------

namespace {

bool is_even(const element& e) { return floored_mod(e.as_int_mod().value, 2) == 0; }

}  // namespace

TEST_CASE("evenness is proven inductively over the even closure") {
  instance inst = build_custom_modular(10, {2}, {"add"});
  induction_report r = check_property_induction(inst, is_even);
  CHECK(r.base_failures.empty());
  CHECK(r.preservation_failures.empty());
  CHECK(r.conclusion == induction_conclusion::proven);
  CHECK(r.exhaustive_check.empty());
}

TEST_CASE("a non-preserved property is refuted with the first bad application") {
  induction_report r = check_property_induction(
      z5(), [](const element& e) { return !is_even(e); });
  CHECK(r.base_failures.empty());
  REQUIRE_FALSE(r.preservation_failures.empty());
  const auto& f = r.preservation_failures.front();
  CHECK(f.op_id == 0);
  CHECK(f.args == std::vector<element>{element::int_mod(1, 5), element::int_mod(1, 5)});
  CHECK(f.result == element::int_mod(2, 5));
  CHECK(r.conclusion == induction_conclusion::refuted);
  // 0, 2, 4 are even members of M; the pointwise sweep finds all of them.
  CHECK(r.exhaustive_check == std::vector<element>{element::int_mod(0, 5),
                                                   element::int_mod(2, 5),
                                                   element::int_mod(4, 5)});
}

TEST_CASE("a property failing on the base is refuted outright") {
  instance inst = build_custom_modular(10, {5}, {"double"});  // M = {0, 5}
  induction_report r = check_property_induction(inst, is_even);
  CHECK(r.base_failures == std::vector<element>{element::int_mod(5, 10)});
  CHECK(r.conclusion == induction_conclusion::refuted);
  CHECK(r.exhaustive_check == std::vector<element>{element::int_mod(5, 10)});
}

TEST_CASE("randomized: the inductive verdict matches the pointwise sweep") {
  std::mt19937 rng(555123);
  std::uniform_int_distribution<int> which(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    instance inst = testsupport::random_modular_instance(rng);
    std::int64_t m = *inst.carrier().modulus;
    std::function<bool(const element&)> p;
    switch (which(rng)) {
      case 0: p = is_even; break;
      case 1: p = [](const element& e) { return !is_even(e); }; break;
      case 2: p = [m](const element& e) { return e.as_int_mod().value < m / 2 + 1; }; break;
      default: p = [](const element& e) { return floored_mod(e.as_int_mod().value, 3) != 1; };
    }
    induction_report r = check_property_induction(inst, p);
    INFO("trial " << trial);
    if (r.conclusion == induction_conclusion::proven) {
      CHECK(r.exhaustive_check.empty());
    }
    if (!r.exhaustive_check.empty()) {
      CHECK(r.conclusion == induction_conclusion::refuted);
    }
  }
}

TEST_CASE("span membership is exactly representability by combinations") {
  struct row {
    std::int64_t m, d;
    std::vector<std::vector<std::int64_t>> gens;
  };
  std::vector<row> rows = {{6, 1, {{2}}},
                           {4, 2, {{1, 0}, {0, 2}}},
                           {5, 2, {{1, 2}}}};
  for (const auto& [m, d, gens] : rows) {
    instance inst = build_span(m, d, gens);
    // Oracle: all sums of scalar multiples of the generators.
    std::set<element, element_less> combos;
    std::vector<std::int64_t> a(gens.size(), 0);
    while (true) {
      std::vector<std::int64_t> sum(static_cast<size_t>(d), 0);
      for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t c = 0; c < sum.size(); ++c) sum[c] = (sum[c] + a[i] * gens[i][c]) % m;
      }
      combos.insert(element::vec_mod(sum, m));
      size_t i = 0;
      while (i < a.size() && ++a[i] == m) a[i++] = 0;
      if (i == a.size()) break;
    }
    induction_report r = check_property_induction(
        inst, [&combos](const element& e) { return combos.count(e) > 0; });
    CHECK(r.conclusion == induction_conclusion::proven);
    CHECK(r.exhaustive_check.empty());
    std::vector<element> want(combos.begin(), combos.end());
    CHECK(saturate(inst).all_elements() == want);
  }
}
