#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "igrowth/bignat.hpp"
#include "igrowth/intersection_growth.hpp"

namespace igrowth {

// Largest m for which alt_order(m) is materialized (about 35,000 digits).
// Comparisons against a bound work far beyond this via alt_order_exceeds.
inline constexpr unsigned kAltOrderArgCap = 10000;

// |Alt(m)|: m!/2 for m >= 2, and 1 below that. CapacityError over the cap.
BigNat alt_order(const BigNat& m);

// True iff |Alt(m)| > bound; safe for astronomically large m.
bool alt_order_exceeds(const BigNat& m, const BigNat& bound);

// A strictly increasing sequence of alternating-group degrees, first term at
// least 5. These are the building data for products of alternating groups
// whose intersection growth has jumps exactly at the chosen scales.
class AltSequence {
 public:
  explicit AltSequence(std::vector<BigNat> terms);

  std::size_t size() const { return terms_.size(); }
  const BigNat& term(std::size_t i) const { return terms_.at(i); }
  const std::vector<BigNat>& terms() const { return terms_; }

 private:
  std::vector<BigNat> terms_;
};

// A nondecreasing unbounded target function: identity, a polynomial with
// nonnegative ascending coefficients (positive leading, degree >= 1), or an
// exponential with integer base >= 2.
class GrowthFunction {
 public:
  enum class Kind { Identity, Polynomial, Exponential };

  static GrowthFunction identity();
  static GrowthFunction polynomial(std::vector<BigNat> ascending_coeffs);
  static GrowthFunction exponential(unsigned base);
  // "identity" | "poly:c0,c1,..." | "exp:b"; nullopt when malformed.
  static std::optional<GrowthFunction> parse(const std::string& text);

  Kind kind() const { return kind_; }
  // CapacityError when the value itself is too large to materialize.
  BigNat eval(const BigNat& m) const;
  // f(m) > bound, decided without materializing huge values.
  bool exceeds(const BigNat& m, const BigNat& bound) const;
  // Least m with f(m) > bound.
  BigNat min_arg_exceeding(const BigNat& bound) const;
  std::string describe() const;

 private:
  GrowthFunction(Kind kind, std::vector<BigNat> coeffs, unsigned base)
      : kind_(kind), coeffs_(std::move(coeffs)), base_(base) {}
  Kind kind_;
  std::vector<BigNat> coeffs_;  // ascending, Polynomial only
  unsigned base_ = 0;           // Exponential only
};

// Growth value of the product over the sequence at argument n, read off the
// factor scales: a factor contributes once n reaches its degree (class all)
// or its order (normal and maximal-normal classes). CapacityError when the
// known prefix cannot determine the answer at this n.
BigNat closed_form_growth(const AltSequence& seq, const BigNat& n, SubgroupClass c);

// Order of the matching intersection subgroup inside the product of the
// known factors (the Lagrange partner of closed_form_growth).
BigNat closed_form_lambda_order(const AltSequence& seq, const BigNat& n, SubgroupClass c);

// The product of the first k alternating groups of the sequence as a
// permutation group. CapacityError when the degrees do not fit.
PermGroup truncated_product(const AltSequence& seq, std::size_t k);

// The least sequence (term by term) whose product's growth stays below f's
// scale: each new term exceeds the previous term, the accumulated order, and
// the least argument where f passes the accumulated order.
AltSequence build_sequence(const GrowthFunction& f, int count);

struct SequenceCheck {
  std::size_t k = 0;  // 1-based position the check talks about
  std::string what;
  bool passed = false;
  std::string detail;
};

struct SequenceReport {
  std::vector<SequenceCheck> checks;
  bool all_passed = true;
};

// Checks the defining inequalities of a built (or hand-made) sequence
// against f: accumulated order below the next term, and f already past the
// accumulated order just before the next term.
SequenceReport verify_sequence_against(const AltSequence& seq, const GrowthFunction& f);

// The same data read with the stricter bound "accumulated order below the
// current term plus one"; fails already at the first step for any admissible
// sequence, which is why the bound above is the usable one.
SequenceReport literal_min_checks(const AltSequence& seq, const GrowthFunction& f);

struct ClosedFormRow {
  int n = 0;
  BigNat closed;
  BigNat enumerated;
  bool match = false;
};

struct ClosedFormReport {
  std::vector<ClosedFormRow> rows;
  bool all_match = true;
};

ClosedFormReport compare_growth_sequences(const std::vector<std::pair<int, BigNat>>& closed,
                                          const std::vector<std::pair<int, BigNat>>& enumerated);

// Enumerates the growth table of the k-term truncation for n = 1..n_max and
// compares it row by row against the closed form of the same truncation.
ClosedFormReport verify_closed_form(const AltSequence& seq, std::size_t k, int n_max,
                                    SubgroupClass c, const EnumOptions& opt = {});

}  // namespace igrowth
