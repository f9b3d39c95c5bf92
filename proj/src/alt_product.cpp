#include "igrowth/alt_product.hpp"

#include <sstream>
#include <stdexcept>

#include "igrowth/errors.hpp"

namespace igrowth {

BigNat alt_order(const BigNat& m) {
  if (m < 0) throw std::invalid_argument("alt_order needs m >= 0");
  if (m <= 2) return 1;
  if (m > kAltOrderArgCap)
    throw CapacityError("alt_order argument " + m.str() + " exceeds cap " +
                        std::to_string(kAltOrderArgCap));
  return factorial(m.convert_to<unsigned>()) / 2;
}

bool alt_order_exceeds(const BigNat& m, const BigNat& bound) {
  if (m <= 2) return bound < 1;
  // m!/2 > bound <=> m! > 2*bound, both sides even or integral throughout.
  return factorial_exceeds(m, 2 * bound);
}

AltSequence::AltSequence(std::vector<BigNat> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("sequence needs at least one term");
  if (terms_[0] < 5) throw std::invalid_argument("first term must be at least 5");
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i] <= terms_[i - 1])
      throw std::invalid_argument("terms must be strictly increasing");
}

GrowthFunction GrowthFunction::identity() { return GrowthFunction(Kind::Identity, {}, 0); }

GrowthFunction GrowthFunction::polynomial(std::vector<BigNat> ascending_coeffs) {
  if (ascending_coeffs.size() < 2)
    throw std::invalid_argument("polynomial needs degree >= 1");
  for (const BigNat& c : ascending_coeffs)
    if (c < 0) throw std::invalid_argument("polynomial coefficients must be nonnegative");
  if (ascending_coeffs.back() == 0)
    throw std::invalid_argument("leading coefficient must be positive");
  return GrowthFunction(Kind::Polynomial, std::move(ascending_coeffs), 0);
}

GrowthFunction GrowthFunction::exponential(unsigned base) {
  if (base < 2) throw std::invalid_argument("exponential base must be at least 2");
  return GrowthFunction(Kind::Exponential, {}, base);
}

std::optional<GrowthFunction> GrowthFunction::parse(const std::string& text) {
  try {
    if (text == "identity") return identity();
    if (text.rfind("poly:", 0) == 0) {
      std::vector<BigNat> coeffs;
      std::string body = text.substr(5);
      std::istringstream in(body);
      std::string piece;
      while (std::getline(in, piece, ',')) coeffs.push_back(parse_bignat(piece));
      if (body.empty() || body.back() == ',') return std::nullopt;
      return polynomial(std::move(coeffs));
    }
    if (text.rfind("exp:", 0) == 0) {
      BigNat base = parse_bignat(text.substr(4));
      if (base < 2 || base > 1000000) return std::nullopt;
      return exponential(base.convert_to<unsigned>());
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

BigNat GrowthFunction::eval(const BigNat& m) const {
  if (m < 0) throw std::invalid_argument("growth functions are evaluated on nonnegative arguments");
  switch (kind_) {
    case Kind::Identity:
      return m;
    case Kind::Polynomial: {
      BigNat acc = 0;
      for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * m + coeffs_[i];
      return acc;
    }
    case Kind::Exponential: {
      if (m > 1000000)
        throw CapacityError("exponential value at " + m.str() + " is too large to materialize");
      BigNat acc = 1;
      for (BigNat i = 0; i < m; ++i) acc *= base_;
      return acc;
    }
  }
  throw std::logic_error("unreachable growth function kind");
}

bool GrowthFunction::exceeds(const BigNat& m, const BigNat& bound) const {
  switch (kind_) {
    case Kind::Identity:
      return m > bound;
    case Kind::Polynomial:
      return eval(m) > bound;
    case Kind::Exponential:
      return m >= min_arg_exceeding(bound);
  }
  throw std::logic_error("unreachable growth function kind");
}

BigNat GrowthFunction::min_arg_exceeding(const BigNat& bound) const {
  switch (kind_) {
    case Kind::Identity:
      return bound + 1;
    case Kind::Polynomial: {
      BigNat lo = 0, hi = 1;
      while (eval(hi) <= bound) hi *= 2;
      // invariant: eval(lo) <= bound < eval(hi) once lo > 0; binary search
      while (lo + 1 < hi) {
        BigNat mid = (lo + hi) / 2;
        if (eval(mid) > bound)
          hi = mid;
        else
          lo = mid;
      }
      if (eval(0) > bound) return 0;
      return hi;
    }
    case Kind::Exponential: {
      if (bound < 1) return 0;
      BigNat value = base_, arg = 1;
      while (value <= bound) {
        value *= base_;
        ++arg;
      }
      return arg;
    }
  }
  throw std::logic_error("unreachable growth function kind");
}

std::string GrowthFunction::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Polynomial: {
      std::string out = "poly:";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].str();
      }
      return out;
    }
    case Kind::Exponential:
      return "exp:" + std::to_string(base_);
  }
  return "?";
}

namespace {

// Number of leading factors that have passed their contribution threshold at
// argument n, plus whether the known prefix settles the question.
struct Contribution {
  std::size_t count = 0;
  bool determined = false;
};

Contribution contributing_prefix(const AltSequence& seq, const BigNat& n, SubgroupClass c) {
  const auto& t = seq.terms();
  Contribution result;
  if (c == SubgroupClass::All) {
    while (result.count < t.size() && t[result.count] <= n) ++result.count;
    result.determined = (result.count < t.size()) || (n <= t.back());
  } else {
    while (result.count < t.size() && !alt_order_exceeds(t[result.count], n)) ++result.count;
    result.determined =
        (result.count < t.size()) || alt_order_exceeds(t.back() + 1, n);
  }
  return result;
}

}  // namespace

BigNat closed_form_growth(const AltSequence& seq, const BigNat& n, SubgroupClass c) {
  if (n < 1) throw std::invalid_argument("growth argument must be >= 1");
  Contribution contrib = contributing_prefix(seq, n, c);
  if (!contrib.determined)
    throw CapacityError("sequence prefix too short to determine growth at " + n.str());
  BigNat result = 1;
  for (std::size_t i = 0; i < contrib.count; ++i) result *= alt_order(seq.term(i));
  return result;
}

BigNat closed_form_lambda_order(const AltSequence& seq, const BigNat& n, SubgroupClass c) {
  if (n < 1) throw std::invalid_argument("growth argument must be >= 1");
  Contribution contrib = contributing_prefix(seq, n, c);
  if (!contrib.determined)
    throw CapacityError("sequence prefix too short to determine growth at " + n.str());
  BigNat result = 1;
  for (std::size_t i = contrib.count; i < seq.size(); ++i) result *= alt_order(seq.term(i));
  return result;
}

PermGroup truncated_product(const AltSequence& seq, std::size_t k) {
  if (k < 1 || k > seq.size())
    throw std::invalid_argument("truncation length out of range");
  BigNat total_degree = 0;
  for (std::size_t i = 0; i < k; ++i) total_degree += seq.term(i);
  if (total_degree > 10000)
    throw CapacityError("truncated product degree " + total_degree.str() +
                        " exceeds the permutation domain cap");
  PermGroup result = PermGroup::alternating(seq.term(0).convert_to<int>());
  for (std::size_t i = 1; i < k; ++i)
    result = direct_product(result, PermGroup::alternating(seq.term(i).convert_to<int>()));
  return result;
}

AltSequence build_sequence(const GrowthFunction& f, int count) {
  if (count < 1) throw std::invalid_argument("sequence length must be >= 1");
  std::vector<BigNat> terms{5};
  BigNat accumulated = alt_order(5);
  while (static_cast<int>(terms.size()) < count) {
    BigNat next = terms.back() + 1;
    if (accumulated + 1 > next) next = accumulated + 1;
    BigNat from_f = f.min_arg_exceeding(accumulated) + 1;
    if (from_f > next) next = from_f;
    terms.push_back(next);
    if (static_cast<int>(terms.size()) < count) accumulated *= alt_order(next);
  }
  return AltSequence(std::move(terms));
}

SequenceReport verify_sequence_against(const AltSequence& seq, const GrowthFunction& f) {
  SequenceReport report;
  auto add = [&report](std::size_t k, std::string what, bool passed, std::string detail) {
    report.checks.push_back({k, std::move(what), passed, std::move(detail)});
    report.all_passed = report.all_passed && passed;
  };
  add(1, "first term at least 5", seq.term(0) >= 5, seq.term(0).str());
  BigNat accumulated = 1;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    accumulated *= alt_order(seq.term(k));
    const BigNat& next = seq.term(k + 1);
    add(k + 1, "accumulated order below next term", accumulated < next,
        accumulated.str() + " < " + next.str());
    add(k + 1, "target passes accumulated order before next term",
        f.exceeds(next - 1, accumulated),
        "f(" + BigNat(next - 1).str() + ") > " + accumulated.str());
  }
  return report;
}

SequenceReport literal_min_checks(const AltSequence& seq, const GrowthFunction& f) {
  SequenceReport report;
  auto add = [&report](std::size_t k, std::string what, bool passed, std::string detail) {
    report.checks.push_back({k, std::move(what), passed, std::move(detail)});
    report.all_passed = report.all_passed && passed;
  };
  BigNat accumulated = 1;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    accumulated *= alt_order(seq.term(k));
    add(k + 1, "accumulated order below current term plus one",
        accumulated < seq.term(k) + 1,
        accumulated.str() + " < " + BigNat(seq.term(k) + 1).str());
    add(k + 1, "target passes accumulated order before next term",
        f.exceeds(seq.term(k + 1) - 1, accumulated),
        "f(" + BigNat(seq.term(k + 1) - 1).str() + ") > " + accumulated.str());
  }
  return report;
}

ClosedFormReport compare_growth_sequences(const std::vector<std::pair<int, BigNat>>& closed,
                                          const std::vector<std::pair<int, BigNat>>& enumerated) {
  if (closed.size() != enumerated.size())
    throw std::invalid_argument("growth sequences have different lengths");
  ClosedFormReport report;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (closed[i].first != enumerated[i].first)
      throw std::invalid_argument("growth sequences are not aligned");
    ClosedFormRow row{closed[i].first, closed[i].second, enumerated[i].second,
                      closed[i].second == enumerated[i].second};
    report.all_match = report.all_match && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ClosedFormReport verify_closed_form(const AltSequence& seq, std::size_t k, int n_max,
                                    SubgroupClass c, const EnumOptions& opt) {
  if (k < 1 || k > seq.size())
    throw std::invalid_argument("truncation length out of range");
  std::vector<BigNat> head(seq.terms().begin(), seq.terms().begin() + static_cast<long>(k));
  AltSequence trunc(std::move(head));
  PermGroup g = truncated_product(trunc, k);
  GrowthTable table = growth_table(g, n_max, c, opt);
  std::vector<std::pair<int, BigNat>> closed, enumerated;
  for (const GrowthRow& row : table.rows) {
    closed.emplace_back(row.n, closed_form_growth(trunc, BigNat(row.n), c));
    enumerated.emplace_back(row.n, row.index);
  }
  return compare_growth_sequences(closed, enumerated);
}

}  // namespace igrowth
