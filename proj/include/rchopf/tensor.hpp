#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rchopf/hts.hpp"
#include "rchopf/linear.hpp"

namespace rchopf {

/// Contracted chain Q_0 m_1 Q_1 m_2 ... m_r Q_r representing
///   alpha(Q_0) m_1 (x)_P alpha(Q_1) m_2 (x)_P ... (x)_P alpha(Q_{r-1}) beta(Q_r) m_r.
/// Only the last slot carries beta-data; every other beta has been moved to
/// the next leg as alpha.
struct Chain {
  std::vector<PMonomial> slots;  // r + 1 entries
  std::vector<HsMonomial> ops;   // r entries

  [[nodiscard]] unsigned rank() const { return static_cast<unsigned>(ops.size()); }
  /// Canonical representative of leg i (0-based) as a monomial of the extended algebra.
  [[nodiscard]] HtsMonomial leg(unsigned i) const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
    if (auto c = a.ops <=> b.ops; c != 0) return c;
    return a.slots <=> b.slots;
  }
};

/// Element of the r-fold tensor power over P, in canonical chain form.
class TensorElement {
 public:
  explicit TensorElement(unsigned rank = 2) : rank_(rank) {}

  static TensorElement unit(unsigned rank);

  [[nodiscard]] unsigned rank() const { return rank_; }
  [[nodiscard]] const Linear<Chain>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.is_zero(); }

  /// Grading in the formal deformation parameter, when this is a t^n coefficient.
  [[nodiscard]] std::optional<unsigned> t_order() const { return t_order_; }
  void set_t_order(std::optional<unsigned> n) { t_order_ = n; }

  void add(const Chain& c, const Rational& coef);
  void add(const TensorElement& other, const Rational& scale = Rational(1));

  TensorElement& operator*=(const Rational& s);
  friend TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { a.add(b); return a; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    a.add(b, Rational(-1));
    return a;
  }
  /// Equality of canonical forms; the t-grading tag is not compared.
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const;

 private:
  unsigned rank_;
  Linear<Chain> terms_;
  std::optional<unsigned> t_order_;
};

/// Plain (scalar) tensor square of the extended algebra; used for coproducts
/// before balancing over P.
using HtsTensor2 = Linear<std::pair<HtsMonomial, HtsMonomial>>;

namespace tensor {

/// Balances a list of legs over P: beta on leg i becomes alpha on leg i+1.
TensorElement canonicalize(const std::vector<HtsElement>& legs);

/// Leg-wise right multiplication t * (f_1 (x) ... (x) f_r), then canonicalization.
TensorElement right_multiply(const TensorElement& t, const std::vector<HtsElement>& f);
/// Right multiplication by the canonical representatives of the terms of f.
TensorElement right_multiply(const TensorElement& t, const TensorElement& f);
/// Right multiplication by 1 (x)..(x) f (x)..(x) 1, with the legs of f placed at
/// positions offset..offset+rank(f)-1. Each term of f is lifted to its
/// canonical legs, so its last-slot beta stays on its own last leg.
TensorElement right_multiply_lifted(const TensorElement& t, const TensorElement& f, unsigned offset);

/// Coproduct Delta(P |x h x| Q) = P |x h_(1) x| 1 (x) 1 |x h_(2) x| Q.
TensorElement coproduct(const HtsElement& h);
/// Coproduct of an H_s monomial as a plain tensor (before balancing).
const HtsTensor2& coproduct_plain(const HsMonomial& m);

/// Delta applied to leg i (1-based). Throws std::out_of_range.
TensorElement apply_coproduct_leg(const TensorElement& t, unsigned i);
/// epsilon applied to leg i (1-based); the resulting jet factor is folded
/// into the adjacent slot. Throws std::out_of_range.
TensorElement apply_counit_leg(const TensorElement& t, unsigned i);

/// a (x) 1 and 1 (x) a style padding with unit legs: inserts `count` unit
/// legs before position `at` (0-based leg index).
TensorElement insert_unit_legs(const TensorElement& t, unsigned at, unsigned count);

/// Rank-1 tensors are elements of the extended algebra; rank-0 ones of P.
HtsElement to_hts(const TensorElement& t);
TensorElement from_hts(const HtsElement& h);
PElement to_p(const TensorElement& t);

/// Z_k = 0 for all k: keeps only chains with trivial slots.
HsTensor2 specialize_zero(const TensorElement& t);

/// True if no chain term carries jets in slot i (0-based).
bool slot_is_trivial(const TensorElement& t, unsigned i);

}  // namespace tensor
}  // namespace rchopf
