#pragma once

#include <random>
#include <string>
#include <vector>

#include "rchopf/h1.hpp"

namespace rchopf::h1 {

/// PBW monomials of degree <= degree, where delta_n has degree n and X, Y degree 1.
std::vector<H1Monomial> monomials_up_to(unsigned degree);

/// Sum of up to `terms` random monomials of degree <= degree with small
/// nonzero rational coefficients.
H1Element random_element(std::mt19937_64& rng, unsigned degree, unsigned terms);

/// Names of the violated axioms among coassociativity, counit and antipode for h,
/// and Delta(hg) = Delta(h) Delta(g). Empty when all hold.
std::vector<std::string> hopf_axiom_failures(const H1Element& h, const H1Element& g);

}  // namespace rchopf::h1
