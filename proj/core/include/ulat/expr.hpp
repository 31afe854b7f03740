#pragma once

// Closed-form term descriptors used by witness files:
//   rational terms   1 - 1/k, (-1)^k/k, 3*k^2 + 1, alt * k
//   vectors          [1/k, -1/k, 0]
//   c00 sequences    unit(k), 1/2*unit(k+1) + unit(3)
//   set literals     {}, X, {1,3}, ~{2}, {k}, {k+1}, {1..k}, ~{1..k+2}

#include "ulat/c00.hpp"
#include "ulat/rat_vec.hpp"
#include "ulat/sequence.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ulat {

class TermSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational-valued term in one variable.
class Term {
 public:
  static Term parse(std::string_view text, std::string_view variable = "k");
  static Term constant(const Rational& q);

  /// Throws std::domain_error on division by zero or (-1)^v at non-integer v.
  Rational evaluate(const Rational& v) const;
  /// Exact parity-split form; every term of the grammar has one.
  ParityRational to_parity() const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  Term(std::shared_ptr<const Node> root, std::string text) : root_(std::move(root)), text_(std::move(text)) {}
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// Integer affine map v -> scale*v + offset read from a term such as "k+1",
/// "2*k - 3" or "4". Throws TermSyntaxError if the term is not affine with
/// integer coefficients.
struct SignedAffine {
  std::int64_t scale = 0;
  std::int64_t offset = 0;
};
SignedAffine parse_affine(std::string_view text, std::string_view variable = "k");

/// Eventual index K(j) = scale*j + offset with nonnegative coefficients.
AffineIndex parse_eventual_index(std::string_view text);

SequenceFamily<Rational> parse_rational_sequence(std::string_view text);
SequenceFamily<RatVec> parse_vector_sequence(std::string_view text);
SequenceFamily<C00Vector> parse_c00_sequence(std::string_view text);
SequenceFamily<FinCofSet> parse_fincof_sequence(std::string_view text);

}  // namespace ulat
