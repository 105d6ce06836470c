#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rchopf/hts.hpp"
#include "rchopf/jets.hpp"
#include "rchopf/tensor.hpp"

using namespace rchopf;

namespace {

HtsElement A(unsigned j) { return hts::alpha(jets::Z(j)); }
HtsElement B(unsigned j) { return hts::beta(jets::Z(j)); }
HtsElement mul(const HtsElement& a, const HtsElement& b) { return hts::multiply(a, b); }
TensorElement tens(const HtsElement& a, const HtsElement& b) { return tensor::canonicalize({a, b}); }

HtsElement random_hts(std::mt19937_64& rng) {
  const std::vector<HtsElement> gens = {hts::X(), hts::Y(), hts::delta1(), A(0), A(1), B(0), B(1), hts::antipode_x()};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, 3), coef(1, 4);
  HtsElement out;
  for (int t = 0; t < 2; ++t) {
    HtsElement m = hts::unit();
    for (int i = len(rng); i > 0; --i) m = mul(m, gens[pick(rng)]);
    out.add(m, Rational(coef(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("jet derivations") {
  CHECK(jets::apply_y(jets::Z(0)) == jets::Z(0) * Rational(2));
  CHECK(jets::apply_x(jets::multiply(jets::Z(0), jets::Z(1))) ==
        jets::multiply(jets::Z(1), jets::Z(1)) + jets::multiply(jets::Z(0), jets::Z(2)));
  CHECK(jets::act(h1::delta(1), jets::Z(5)).is_zero());
  CHECK(PMonomial::var(3, 2).weight() == 10);
}

TEST_CASE("extended algebra commutation rules") {
  CHECK(mul(A(0), B(1)) == mul(B(1), A(0)));
  CHECK(mul(hts::X(), hts::delta1()) ==
        mul(hts::delta1(), hts::X()) + mul(hts::delta1(), hts::delta1()) * Rational(1, 2) + A(0) - B(0));
  CHECK(mul(hts::X(), B(0)) == mul(B(0), hts::X()) + B(1) + mul(B(0), hts::delta1()) * Rational(2));
  CHECK(mul(hts::X(), A(0)) == mul(A(0), hts::X()) + A(1));
  CHECK(mul(hts::Y(), A(2)) == mul(A(2), hts::Y()) + A(2) * Rational(4));
  CHECK(hts::delta2() == mul(hts::delta1(), hts::delta1()) * Rational(1, 2) + A(0) - B(0));
}

TEST_CASE("extended algebra is associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const HtsElement a = random_hts(rng), b = random_hts(rng), c = random_hts(rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("counit and antipode of the extended algebra") {
  CHECK(hts::counit(mul(A(0), B(1))) == jets::multiply(jets::Z(0), jets::Z(1)));
  CHECK(hts::counit(hts::X()).is_zero());
  CHECK(hts::antipode(A(0)) == B(0));
  CHECK(hts::antipode(B(0)) == A(0));
}

TEST_CASE("coproduct over P") {
  CHECK(tensor::coproduct(A(0)) == tens(A(0), hts::unit()));
  CHECK(tensor::coproduct(hts::X()) ==
        tens(hts::X(), hts::unit()) + tens(hts::unit(), hts::X()) + tens(hts::delta1(), hts::Y()));
  const HtsElement d2 = mul(hts::delta1(), hts::delta1());
  CHECK(tensor::coproduct(d2) ==
        tens(d2, hts::unit()) + tens(hts::delta1(), hts::delta1()) * Rational(2) + tens(hts::unit(), d2));
  // Delta is multiplicative on the balanced tensor square
  std::mt19937_64 rng(5);
  for (int i = 0; i < 15; ++i) {
    const HtsElement a = random_hts(rng), b = random_hts(rng);
    CHECK(tensor::coproduct(mul(a, b)) == tensor::right_multiply(tensor::coproduct(a), tensor::coproduct(b)));
  }
}

TEST_CASE("canonicalization balances beta across legs") {
  const TensorElement t = tens(mul(B(0), hts::Y()), hts::X());
  CHECK(t == tens(hts::Y(), mul(A(0), hts::X())));
  REQUIRE(t.size() == 1);
  const Chain& c = t.terms().begin()->first;
  CHECK(c.slots[1] == PMonomial::var(0));
  CHECK(tens(mul(A(0), hts::X()), hts::unit()).size() == 1);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const TensorElement u = tens(random_hts(rng), random_hts(rng));
    std::vector<HtsElement> legs(2);
    TensorElement again(2);
    for (const auto& [chain, coef] : u.terms()) {
      TensorElement one = tensor::canonicalize({HtsElement(chain.leg(0)), HtsElement(chain.leg(1))});
      again.add(one, coef);
    }
    CHECK(again == u);
  }
}

TEST_CASE("right multiplication and leg maps") {
  const TensorElement unit2 = TensorElement::unit(2);
  CHECK(tensor::right_multiply(unit2, std::vector<HtsElement>{hts::unit(), hts::unit()}) == unit2);
  CHECK(tensor::right_multiply(unit2, std::vector<HtsElement>{hts::X(), hts::Y()}) == tens(hts::X(), hts::Y()));
  CHECK(tensor::right_multiply(tens(hts::delta1(), hts::Y()), std::vector<HtsElement>{hts::X(), hts::X()}) ==
        tens(mul(hts::delta1(), hts::X()), mul(hts::Y(), hts::X())));
  CHECK(tensor::apply_counit_leg(tens(hts::X(), hts::Y()), 1).is_zero());
  CHECK(tensor::to_hts(tensor::apply_counit_leg(tens(hts::unit(), hts::Y()) + tens(hts::delta1(), hts::unit()), 2)) ==
        hts::delta1());
  CHECK(tensor::apply_coproduct_leg(tens(hts::X(), hts::Y()), 1) ==
        tensor::canonicalize({hts::X(), hts::unit(), hts::Y()}) + tensor::canonicalize({hts::unit(), hts::X(), hts::Y()}) +
            tensor::canonicalize({hts::delta1(), hts::Y(), hts::Y()}));
  CHECK_THROWS_AS(tensor::apply_coproduct_leg(unit2, 3), std::out_of_range);
  CHECK_THROWS_AS(tensor::apply_counit_leg(unit2, 0), std::out_of_range);
}

TEST_CASE("zero specialization keeps jet-free chains") {
  const TensorElement t = tens(mul(A(0), hts::X()), hts::Y()) + tens(hts::X(), hts::Y());
  const HsTensor2 z = tensor::specialize_zero(t);
  CHECK(z.size() == 1);
  CHECK(tensor::specialize_zero(TensorElement::unit(2)) == hs::tensor(hs::unit(), hs::unit()));
}
