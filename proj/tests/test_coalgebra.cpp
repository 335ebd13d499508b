// Linear combinations, words of walks, the coproducts, antipodes, and the
// identity checkers. Goldens frozen from hand simulation.

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "walkalg/coalgebra.hpp"
#include "walkalg/cuts.hpp"
#include "walkalg/forest.hpp"
#include "walkalg/generate.hpp"
#include "walkalg/lincomb.hpp"
#include "walkalg/rational.hpp"
#include "walkalg/text_io.hpp"
#include "walkalg/walk.hpp"

using namespace walkalg;

namespace {

Walk w(const std::string& text) { return parse_walk(text); }

Forest fo(std::initializer_list<std::string> walks) {
  std::vector<Walk> members;
  for (const auto& text : walks) members.push_back(w(text));
  return Forest(std::move(members));
}

// remainder (x) cut-word tensor with unit coefficient.
TensorPair tp(const std::string& left, std::initializer_list<std::string> right) {
  return {left.empty() ? Forest::unit() : Forest(w(left)),
          Forest([&] {
            std::vector<Walk> members;
            for (const auto& text : right) members.push_back(w(text));
            return members;
          }())};
}

}  // namespace

TEST_CASE("linear combination mechanics") {
  LinComb<Walk> x;
  CHECK(x.is_zero());
  x.add(w("12"), 2);
  x.add(w("11"), Rational(1, 3));
  x.add(w("12"), -1);
  CHECK(x.term_count() == 2);
  CHECK(x.coefficient(w("12")) == 1);
  CHECK(x.coefficient(w("11")) == Rational(1, 3));
  CHECK(x.coefficient(w("21")) == 0);

  x.add(w("12"), -1);  // cancels to zero and drops out
  CHECK(x.term_count() == 1);
  CHECK(x.coefficient(w("12")) == 0);

  LinComb<Walk> y = LinComb<Walk>::single(w("11"), Rational(2, 3));
  CHECK(x + x == y);
  CHECK((x - x).is_zero());
  CHECK((Rational(3) * x).coefficient(w("11")) == 1);
  CHECK((-x).coefficient(w("11")) == Rational(-1, 3));

  // Compound assignment from itself must behave like a plain doubling.
  x += x;
  CHECK(x == y);
  x -= x;
  CHECK(x.is_zero());

  auto z = LinComb<Walk>::product(
      LinComb<Walk>::single(w("12"), 2) + LinComb<Walk>::single(w("32"), 1),
      LinComb<Walk>::single(w("21"), Rational(1, 2)),
      [](const Walk& a, const Walk& b) { return concat(a, b); });
  CHECK(z.coefficient(w("121")) == 1);
  CHECK(z.coefficient(w("321")) == Rational(1, 2));
  CHECK(z.term_count() == 2);
}

TEST_CASE("large accumulations stay exact") {
  LinComb<Walk> x;
  for (int round = 0; round < 400; ++round) {
    x.add(w("12"), 1);
    x.add(w("13"), Rational(1, 7));
    x.add(w("12"), -1);
  }
  CHECK(x.term_count() == 1);
  CHECK(x.coefficient(w("13")) == Rational(400, 7));
}

TEST_CASE("words of walks") {
  Forest unit = Forest::unit();
  CHECK(unit.is_unit());
  CHECK(unit.degree() == 0);
  CHECK(to_string(unit) == "()");

  Forest f = fo({"11", "233"});
  CHECK(f.size() == 2);
  CHECK(f.degree() == 3);
  CHECK(to_string(f) == "11|233");
  CHECK(f * unit == f);
  CHECK(unit * f == f);
  CHECK(fo({"11"}) * fo({"233"}) == f);
  CHECK(f * fo({"11"}) == fo({"11", "233", "11"}));

  // Word order matters for Forest and is forgotten by MultisetForest.
  CHECK(fo({"11", "233"}) != fo({"233", "11"}));
  CHECK(to_multiset(fo({"11", "233"})) == to_multiset(fo({"233", "11"})));
  CHECK(to_string(to_multiset(fo({"233", "11"}))) == "11|233");

  // Ordering is degree first: a one-member word of a long walk sorts
  // after a two-member word of short walks.
  CHECK(fo({"11", "22"}) < fo({"1221"}));
  CHECK(unit < fo({"11"}));
}

TEST_CASE("counit, twist, multiset image") {
  CHECK(counit(Forest::unit()) == 1);
  CHECK(counit(fo({"11"})) == 0);
  CHECK(counit(Forest(Walk::trivial(3))) == 0);
  LinComb<Forest> x;
  x.add(Forest::unit(), Rational(5, 2));
  x.add(fo({"121"}), 7);
  CHECK(counit(x) == Rational(5, 2));

  LinComb<TensorPair> t;
  t.add({fo({"11"}), fo({"22", "33"})}, 2);
  auto tt = twist(t);
  CHECK(tt.coefficient({fo({"22", "33"}), fo({"11"})}) == 2);
  CHECK(twist(tt) == t);

  LinComb<Forest> f;
  f.add(fo({"233", "11"}), 1);
  f.add(fo({"11", "233"}), 1);
  auto m = multiset_image(f);
  CHECK(m.term_count() == 1);
  CHECK(m.coefficient(to_multiset(fo({"11", "233"}))) == 2);
}

TEST_CASE("single-cut coproduct goldens") {
  // Walks without admissible cuts are primitive.
  CHECK(delta_cp(w("12345")).is_zero());
  CHECK(delta_cp(w("123451")).is_zero());
  CHECK(delta_cp(Walk::trivial(1)).is_zero());
  CHECK(delta_cp(w("121")).is_zero());

  LinComb<WalkPair> expected;
  expected.add({w("1232452"), w("22")}, 1);
  expected.add({w("1232"), w("24522")}, 1);
  expected.add({w("12"), w("2324522")}, 1);
  CHECK(delta_cp(w("12324522")) == expected);

  LinComb<WalkPair> big;
  big.add({w("123323441"), w("44")}, 1);
  big.add({w("12332341"), w("444")}, 1);
  big.add({w("123234441"), w("33")}, 1);
  big.add({w("1234441"), w("2332")}, 1);
  CHECK(delta_cp(w("1233234441")) == big);
}

TEST_CASE("counital coproduct on walks") {
  LinComb<TensorPair> expected;
  expected.add(tp("", {"1111"}), 1);
  expected.add({Forest(w("1111")), Forest::unit()}, 1);
  expected.add(tp("111", {"11"}), 1);
  expected.add(tp("11", {"111"}), 1);
  CHECK(delta_h(w("1111")) == expected);

  // The ten-term display: two unit terms, four single cuts, four double
  // cuts, every coefficient one.
  LinComb<TensorPair> big;
  big.add(tp("", {"1233234441"}), 1);
  big.add({Forest(w("1233234441")), Forest::unit()}, 1);
  big.add(tp("123323441", {"44"}), 1);
  big.add(tp("12332341", {"444"}), 1);
  big.add(tp("123234441", {"33"}), 1);
  big.add(tp("1234441", {"2332"}), 1);
  big.add(tp("12323441", {"33", "44"}), 1);
  big.add(tp("1232341", {"33", "444"}), 1);
  big.add(tp("123441", {"2332", "44"}), 1);
  big.add(tp("12341", {"2332", "444"}), 1);
  CHECK(delta_h(w("1233234441")) == big);

  // Primitive walks keep only the unit terms.
  auto saw = delta_h(w("12345"));
  CHECK(saw.term_count() == 2);
  CHECK(saw.coefficient(tp("", {"12345"})) == 1);
  CHECK(saw.coefficient({Forest(w("12345")), Forest::unit()}) == 1);
}

TEST_CASE("counital coproduct on words") {
  // Empty word: unit (x) unit.
  auto unit_cop = delta_h(Forest::unit());
  CHECK(unit_cop.term_count() == 1);
  CHECK(unit_cop.coefficient({Forest::unit(), Forest::unit()}) == 1);

  // Multiplicative over concatenation.
  Forest f = fo({"111", "22"});
  CHECK(delta_h(f) == mul(delta_h(Forest(w("111"))), delta_h(Forest(w("22")))));

  LinComb<TensorPair> expected;
  expected.add(tp("", {"111", "22"}), 1);
  expected.add({fo({"111", "22"}), Forest::unit()}, 1);
  expected.add(tp("111", {"22"}), 1);
  expected.add(tp("22", {"111"}), 1);
  expected.add(tp("11", {"11", "22"}), 1);
  expected.add({fo({"11", "22"}), fo({"11"})}, 1);
  CHECK(delta_h(f) == expected);

  // Linear extension.
  LinComb<Forest> x;
  x.add(fo({"111"}), 2);
  x.add(Forest::unit(), Rational(1, 2));
  LinComb<TensorPair> linear = delta_h(x);
  LinComb<TensorPair> by_hand;
  by_hand += delta_h(fo({"111"}));
  by_hand += delta_h(fo({"111"}));
  LinComb<TensorPair> u;
  u.add({Forest::unit(), Forest::unit()}, Rational(1, 2));
  by_hand += u;
  CHECK(linear == by_hand);
}

TEST_CASE("unordered coproduct forgets representative order") {
  Forest a = fo({"12324522", "111", "22"});
  Forest b = fo({"22", "12324522", "111"});
  CHECK(delta_h_sym(to_multiset(a)) == delta_h_sym(to_multiset(b)));
  CHECK(delta_h_sym(to_multiset(a)) == multiset_image(delta_h(a)));
  CHECK(delta_h_sym(to_multiset(b)) == multiset_image(delta_h(b)));
}

TEST_CASE("brace coproducts") {
  Walk a = w("123324441");
  CHECK_THROWS_AS((void)delta_n(a, 0), std::invalid_argument);

  // One-cut layer agrees with the single-cut coproduct term for term.
  auto d1 = delta_n(a, 1);
  auto cp = delta_cp(a);
  CHECK(d1.term_count() == cp.term_count());
  for (const auto& [t, c] : d1) {
    REQUIRE(t.second.size() == 1);
    CHECK(cp.coefficient({t.first, t.second[0]}) == c);
  }

  LinComb<WalkCutPair> d2;
  d2.add({w("1241"), fo({"2332", "444"})}, 1);
  d2.add({w("12441"), fo({"2332", "44"})}, 1);
  d2.add({w("123241"), fo({"33", "444"})}, 1);
  d2.add({w("1232441"), fo({"33", "44"})}, 1);
  CHECK(delta_n(a, 2) == d2);

  CHECK(delta_n(a, 3).is_zero());
  CHECK(delta_n(w("12345"), 1).is_zero());
}

TEST_CASE("codendriform split goldens") {
  CHECK_THROWS_AS((void)delta_succ(Forest::unit()), std::invalid_argument);
  CHECK_THROWS_AS((void)delta_prec(Forest::unit()), std::invalid_argument);

  // Left-removal part of a one-walk word is the lone unit term.
  auto succ = delta_succ(fo({"123"}));
  CHECK(succ.term_count() == 1);
  CHECK(succ.coefficient(tp("", {"123"})) == 1);

  auto prec = delta_prec(fo({"123"}));
  CHECK(prec.term_count() == 1);
  CHECK(prec.coefficient({Forest(w("123")), Forest::unit()}) == 1);

  LinComb<TensorPair> succ111;
  succ111.add(tp("", {"111"}), 1);
  CHECK(delta_succ(fo({"111"})) == succ111);

  LinComb<TensorPair> prec111;
  prec111.add({Forest(w("111")), Forest::unit()}, 1);
  prec111.add(tp("11", {"11"}), 1);
  CHECK(delta_prec(fo({"111"})) == prec111);

  // Two-member word: the first member is removed whole on the left part
  // and keeps a nonempty remainder on the right part.
  Forest f = fo({"111", "22"});
  LinComb<TensorPair> succ_f;
  succ_f.add(tp("", {"111", "22"}), 1);
  succ_f.add(tp("22", {"111"}), 1);
  CHECK(delta_succ(f) == succ_f);

  LinComb<TensorPair> prec_f;
  prec_f.add({fo({"111", "22"}), Forest::unit()}, 1);
  prec_f.add(tp("111", {"22"}), 1);
  prec_f.add(tp("11", {"11", "22"}), 1);
  prec_f.add({fo({"11", "22"}), fo({"11"})}, 1);
  CHECK(delta_prec(f) == prec_f);

  CHECK(delta_prec(f) + delta_succ(f) == delta_h(f));
}

TEST_CASE("antipode goldens") {
  // Degree-zero walks are group-like up to sign.
  auto s0 = antipode_closed(Walk::trivial(4));
  CHECK(s0.term_count() == 1);
  CHECK(s0.coefficient(Forest(Walk::trivial(4))) == -1);

  LinComb<Forest> s111;
  s111.add(fo({"111"}), -1);
  s111.add(fo({"11", "11"}), 1);
  CHECK(antipode_closed(w("111")) == s111);
  CHECK(antipode_recursive(w("111")) == s111);

  LinComb<Forest> s1111;
  s1111.add(fo({"1111"}), -1);
  s1111.add(fo({"111", "11"}), 1);
  s1111.add(fo({"11", "111"}), 1);
  s1111.add(fo({"11", "11", "11"}), -1);
  CHECK(antipode_closed(w("1111")) == s1111);
  CHECK(antipode_recursive(w("1111")) == s1111);

  // Eight terms; the sign pattern follows the factor count.
  LinComb<Forest> s;
  s.add(fo({"12223445"}), -1);
  s.add(fo({"1222345", "44"}), 1);
  s.add(fo({"1223445", "22"}), 1);
  s.add(fo({"123445", "222"}), 1);
  s.add(fo({"122345", "44", "22"}), -1);
  s.add(fo({"123445", "22", "22"}), -1);
  s.add(fo({"12345", "44", "222"}), -1);
  s.add(fo({"12345", "44", "22", "22"}), 1);
  CHECK(antipode_closed(w("12223445")) == s);
  CHECK(antipode_recursive(w("12223445")) == s);

  // Unordered side is the multiset image.
  CHECK(antipode_sym(w("12223445")) == multiset_image(s));
}

TEST_CASE("antipode on words and combinations") {
  // Unit is fixed; a word maps to the reversed product of the member
  // antipodes.
  CHECK(antipode_recursive(Forest::unit()) ==
        LinComb<Forest>::single(Forest::unit()));
  CHECK(antipode_closed(Forest::unit()) ==
        LinComb<Forest>::single(Forest::unit()));

  Forest f = fo({"111", "22"});
  auto expected = mul(antipode_recursive(w("22")), antipode_recursive(w("111")));
  CHECK(antipode_recursive(f) == expected);
  CHECK(antipode_closed(f) == expected);

  LinComb<Forest> x;
  x.add(fo({"111"}), 2);
  x.add(fo({"22"}), Rational(-1, 3));
  auto sx = antipode_recursive(x);
  auto by_hand = Rational(2) * antipode_recursive(fo({"111"})) -
                 Rational(1, 3) * antipode_recursive(fo({"22"}));
  CHECK(sx == by_hand);
}

TEST_CASE("chain factor extraction") {
  Walk a = w("12333222456657");
  Chain e = {{3, 4}, {2, 4}, {10, 11}};
  CHECK(chain_factors(a, e) == fo({"12322245657", "66", "33", "33"}));

  // Single-cut chain: remainder then the section.
  CHECK(chain_factors(w("1111"), {{2, 3}}) == fo({"111", "11"}));
  // Nested chain: the outer factor is read over surviving indices.
  CHECK(chain_factors(w("1111"), {{2, 3}, {1, 3}}) == fo({"11", "11", "11"}));

  // Chains must be ascending in the erasure-time order.
  CHECK_THROWS_AS((void)chain_factors(w("1111"), {{1, 3}, {2, 3}}),
                  std::invalid_argument);
  // Sections must be closed.
  CHECK_THROWS_AS((void)chain_factors(w("1234"), {{0, 2}}),
                  std::invalid_argument);
}

TEST_CASE("triple coproduct goldens for the associator defect") {
  Walk a = w("1233234441");
  auto d = delta_cp(a);

  LinComb<WalkTriple> first;  // coproduct applied to the left leg
  for (const auto& [t, c] : d)
    for (const auto& [s, e] : delta_cp(t.first))
      first.add({s.first, s.second, t.second}, c * e);

  LinComb<WalkTriple> second;  // coproduct applied to the right leg
  for (const auto& [t, c] : d)
    for (const auto& [s, e] : delta_cp(t.second))
      second.add({t.first, s.first, s.second}, c * e);

  LinComb<WalkTriple> first_expected;
  first_expected.add({w("12332341"), w("44"), w("44")}, 1);
  first_expected.add({w("12323441"), w("33"), w("44")}, 1);
  first_expected.add({w("123441"), w("2332"), w("44")}, 1);
  first_expected.add({w("1232341"), w("33"), w("444")}, 1);
  first_expected.add({w("12341"), w("2332"), w("444")}, 1);
  first_expected.add({w("12323441"), w("44"), w("33")}, 1);
  first_expected.add({w("1232341"), w("444"), w("33")}, 1);
  first_expected.add({w("1234441"), w("232"), w("33")}, 1);
  first_expected.add({w("123441"), w("44"), w("2332")}, 1);
  first_expected.add({w("12341"), w("444"), w("2332")}, 1);
  CHECK(first == first_expected);

  LinComb<WalkTriple> second_expected;
  second_expected.add({w("12332341"), w("44"), w("44")}, 1);
  second_expected.add({w("1234441"), w("232"), w("33")}, 1);
  CHECK(second == second_expected);

  // The defect is invariant under swapping the last two factors.
  auto defect = first - second;
  CHECK(defect == twist_last_two(defect));
  CHECK(defect.term_count() == 8);
}

TEST_CASE("identity checkers on specific inputs") {
  CHECK(copre_lie_check(w("1233234441")));
  CHECK(copre_lie_check(w("12324522")));
  CHECK(copre_lie_check(w("12345")));

  CHECK(coassoc_check(fo({"12324522"})));
  CHECK(coassoc_check(fo({"1233234441", "111"})));
  CHECK(coassoc_check(Forest::unit()));

  LinComb<Forest> x;
  x.add(fo({"1111"}), Rational(3, 2));
  x.add(fo({"121", "22"}), -2);
  CHECK(coassoc_check(x));
  CHECK(counit_check(x));
  CHECK(convolution_check(x));

  CHECK(convolution_check(fo({"12223445"})));
  CHECK(codendriform_check(fo({"111", "22"})));
  CHECK(codendriform_check(fo({"12324522"})));
  CHECK(brace_prelie_recovery_check(w("1233234441")));
  CHECK(brace_prelie_recovery_check(w("222123211")));
}
