#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rchopf/hts.hpp"
#include "rchopf/tensor.hpp"
#include "rchopf/ypoly.hpp"

namespace rchopf {

/// Raised when a generator fails the grading precondition [Y,Z] = Z, [Y,Theta] = 2 Theta,
/// or a perturbation precondition.
class GradingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vanishing denominator binomial in a twisting coefficient.
class SingularDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// RC_0 ... RC_N; element 0 is 1 (x) 1.
struct RCBracketSet {
  unsigned max_order = 0;
  std::vector<TensorElement> elements;
};

/// Coefficient n of Phi(s) = sum s^n C_n / n! Gamma(2Y+n)^{-1}, with the gamma
/// factor kept relative to Gamma(2Y)^{-1}.
struct SeriesCoefficient {
  HtsElement body;           // C_n / n!
  YRationalFunction right;   // 1 / (2Y)_n
};

struct GeneratingSeries {
  std::vector<SeriesCoefficient> coefficients;
};

struct OrderResult {
  unsigned order = 0;
  bool pass = false;
  std::size_t terms = 0;           // size of the largest operand at this order
  std::size_t residual_terms = 0;
  double seconds = 0.0;
  std::string note;
  std::optional<TensorElement> residual_tensor;
  std::optional<HtsElement> residual_element;
};

struct VerificationReport {
  std::string check;
  std::vector<OrderResult> orders;

  [[nodiscard]] bool passed() const;
  /// One line per order: "<check> order=<n> status=<pass|fail> terms=<k> residual_terms=<r> seconds=<t>".
  [[nodiscard]] std::string str() const;
};

namespace rc {

/// C_0 = 1, C_1 = Z, C_{n+1} = Z C_n - n Theta (Y - (n-1)/2) C_{n-1}.
/// Throws GradingError unless [Y,Z] = Z and [Y,Theta] = 2 Theta.
HtsElement compute_C(unsigned n, const HtsElement& Z, const HtsElement& Theta);
/// All of C_0 ... C_n.
std::vector<HtsElement> compute_C_all(unsigned n, const HtsElement& Z, const HtsElement& Theta);

/// B_n: Z = X, Theta = alpha(Z_0). Memoized.
const HtsElement& compute_B(unsigned n);
/// A_n: Z = S(X), Theta = beta(Z_0). Memoized.
const HtsElement& compute_A(unsigned n);

/// RC_n = sum_k A_k/k! (2Y+k)_{n-k} (x) B_{n-k}/(n-k)! (2Y+n-k)_k, canonical. Memoized.
const TensorElement& compute_RC(unsigned n);
/// Installs a precomputed RC_n (e.g. loaded from the disk cache).
void seed_RC(unsigned n, TensorElement value);
/// True if RC_n is already in memory.
bool has_RC(unsigned n);

/// True if A_n has no monomial with a beta part.
bool is_beta_free(const HtsElement& h);
/// Every summand A_k/k! (2Y+k)_{n-k} placed in the first leg of RC_n is beta-free.
bool rc_first_leg_beta_free(unsigned n);

/// Z_k = 0 for every k.
HsTensor2 specialize_zero_omega(const TensorElement& t);

RCBracketSet build_twist(unsigned N);

/// (Delta (x) Id)(F) (F (x) 1) - (Id (x) Delta)(F) (1 (x) F), coefficient of t^n for n <= N.
VerificationReport verify_twist_identity(unsigned N);
/// t^n coefficient of the twist residual.
TensorElement twist_residual(unsigned n);
/// (eps (x) Id)(RC_n) = (Id (x) eps)(RC_n) = delta_{n,0} 1 for n <= N.
VerificationReport verify_counit_identity(unsigned N);

GeneratingSeries generating_series(const HtsElement& Z, const HtsElement& Theta, unsigned N);
/// s Phi'' - 2(Y-1) Phi' + Z Phi - (s/2) Theta Phi = 0 through s^N, plus Phi(0) = Gamma(2Y)^{-1}.
VerificationReport verify_phi_ode(const HtsElement& Z, const HtsElement& Theta, unsigned N);
/// Phi(X + delta_1 Y, Theta')(s) = exp(s delta_1 / 2) Phi(X, alpha(Z_0))(s) through s^N.
VerificationReport verify_perturbation_identity(unsigned N);

/// Closed form S(X^n) against the n-fold product S(X)^n in H_s, n <= N.
VerificationReport verify_lemma1(unsigned N);
/// specialize_zero_omega(RC_n) = rc_zero_omega(n) for n <= N, and RC_1 = -2F.
VerificationReport verify_zero_omega(unsigned N);
/// beta-freeness of A_n and of the first leg of RC_n for n <= N.
VerificationReport verify_beta_free(unsigned N);

/// F = X (x) Y - Y (x) X - delta_1 Y (x) Y.
TensorElement transverse_class();

/// t_n^kappa(x, y); throws SingularDenominator if a denominator binomial vanishes.
Rational twist_coefficient(unsigned n, const Rational& kappa, const Rational& x, const Rational& y);

/// Action of the extended algebra on a commutative module algebra A. The
/// alpha and beta parts act through rho; ops are the H_s monomials.
template <class A>
struct ModuleHooks {
  std::function<A(const HsMonomial&, const A&)> act;
  std::function<A(const PMonomial&)> rho;
  std::function<A(const A&, const A&)> multiply;
  std::function<A(const A&, const Rational&)> scale;
  std::function<A(const A&, const A&)> add;
  /// Y-eigenvalue of a homogeneous element; nullopt otherwise.
  std::function<std::optional<Rational>(const A&)> y_eigenvalue;
};

/// rho(Q_0) m_1(a_1) rho(Q_1) ... m_r(a_r) rho(Q_r), summed over chain terms.
template <class A>
A evaluate(const TensorElement& t, const std::vector<A>& args, const ModuleHooks<A>& hooks,
           const A& zero) {
  if (args.size() != t.rank()) throw std::invalid_argument("evaluate: argument count mismatch");
  // Many chain terms share leg operators and jet slots.
  std::vector<std::map<HsMonomial, A>> acted(t.rank());
  std::map<PMonomial, A> rho;
  auto act = [&](unsigned i, const HsMonomial& m) -> const A& {
    auto it = acted[i].find(m);
    if (it == acted[i].end()) it = acted[i].emplace(m, hooks.act(m, args[i])).first;
    return it->second;
  };
  auto rho_of = [&](const PMonomial& q) -> const A& {
    auto it = rho.find(q);
    if (it == rho.end()) it = rho.emplace(q, hooks.rho(q)).first;
    return it->second;
  };
  A total = zero;
  for (const auto& [chain, coef] : t.terms()) {
    A term = rho_of(chain.slots[0]);
    for (unsigned i = 0; i < t.rank(); ++i) {
      term = hooks.multiply(term, act(i, chain.ops[i]));
      if (!chain.slots[i + 1].is_one()) term = hooks.multiply(term, rho_of(chain.slots[i + 1]));
    }
    total = hooks.add(total, hooks.scale(term, coef));
  }
  return total;
}

/// Orders 0..N of a *_t b = sum t^n RC_n(t_n^kappa(Y(x)1, 1(x)Y)(a (x) b)); without
/// kappa the plain product. Throws std::invalid_argument for non-homogeneous
/// arguments when kappa is given.
template <class A>
std::vector<A> star_product(const A& a, const A& b, unsigned N, const std::optional<Rational>& kappa,
                            const ModuleHooks<A>& hooks, const A& zero) {
  std::optional<Rational> x, y;
  if (kappa) {
    x = hooks.y_eigenvalue(a);
    y = hooks.y_eigenvalue(b);
    if (!x || !y) throw std::invalid_argument("star_product: kappa needs homogeneous arguments");
  }
  std::vector<A> out;
  out.reserve(N + 1);
  for (unsigned n = 0; n <= N; ++n) {
    A term = evaluate<A>(compute_RC(n), {a, b}, hooks, zero);
    if (kappa) term = hooks.scale(term, twist_coefficient(n, *kappa, *x, *y));
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace rc
}  // namespace rchopf
