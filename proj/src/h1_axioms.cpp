#include "rchopf/h1_axioms.hpp"

#include <tuple>

namespace rchopf::h1 {

namespace {

using Triple = std::tuple<H1Monomial, H1Monomial, H1Monomial>;
using H1Tensor3 = Linear<Triple>;

H1Tensor3 coproduct_left(const H1Tensor2& t) {
  H1Tensor3 out;
  for (const auto& [m, c] : t)
    for (const auto& [l, cl] : coproduct(H1Element(m.first))) out.add(Triple{l.first, l.second, m.second}, c * cl);
  return out;
}

H1Tensor3 coproduct_right(const H1Tensor2& t) {
  H1Tensor3 out;
  for (const auto& [m, c] : t)
    for (const auto& [r, cr] : coproduct(H1Element(m.second))) out.add(Triple{m.first, r.first, r.second}, c * cr);
  return out;
}

void enumerate(unsigned slots, unsigned budget, std::vector<unsigned>& exps, std::vector<H1Monomial>& out) {
  if (exps.size() == slots) {
    const unsigned n = slots - 2;
    std::vector<unsigned> d(exps.begin(), exps.begin() + n);
    while (!d.empty() && d.back() == 0) d.pop_back();
    out.emplace_back(std::move(d), exps[n], exps[n + 1]);
    return;
  }
  const unsigned n = slots - 2;
  const unsigned w = exps.size() < n ? static_cast<unsigned>(exps.size()) + 1 : 1;
  for (unsigned e = 0; e * w <= budget; ++e) {
    exps.push_back(e);
    enumerate(slots, budget - e * w, exps, out);
    exps.pop_back();
  }
}

}  // namespace

std::vector<H1Monomial> monomials_up_to(unsigned degree) {
  std::vector<H1Monomial> out;
  std::vector<unsigned> exps;
  enumerate(degree + 2, degree, exps, out);
  return out;
}

H1Element random_element(std::mt19937_64& rng, unsigned degree, unsigned terms) {
  static thread_local std::vector<H1Monomial> pool;
  static thread_local unsigned pool_degree = ~0u;
  if (pool_degree != degree) {
    pool = monomials_up_to(degree);
    pool_degree = degree;
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::uniform_int_distribution<unsigned> count(1, terms);
  H1Element out;
  for (unsigned i = count(rng); i > 0; --i) {
    long p = num(rng);
    if (p == 0) p = 1;
    out.add(pool[pick(rng)], Rational(p, den(rng)));
  }
  return out;
}

std::vector<std::string> hopf_axiom_failures(const H1Element& h, const H1Element& g) {
  std::vector<std::string> failures;
  const H1Tensor2 dh = coproduct(h);
  if (!(coproduct_left(dh) == coproduct_right(dh))) failures.emplace_back("coassociativity");

  H1Element left_counit, right_counit;
  for (const auto& [m, c] : dh) {
    left_counit.add(H1Element(m.second), c * counit(H1Element(m.first)));
    right_counit.add(H1Element(m.first), c * counit(H1Element(m.second)));
  }
  if (!(left_counit == h) || !(right_counit == h)) failures.emplace_back("counit");

  const H1Element eps = H1Element::scalar(counit(h));
  if (!(multiply_legs(apply_legs(dh, antipode, nullptr)) == eps) ||
      !(multiply_legs(apply_legs(dh, nullptr, antipode)) == eps))
    failures.emplace_back("antipode");

  if (!(coproduct(multiply(h, g)) == tensor_multiply(dh, coproduct(g)))) failures.emplace_back("multiplicativity");
  return failures;
}

}  // namespace rchopf::h1
