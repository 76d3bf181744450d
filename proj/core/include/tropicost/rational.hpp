#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace tropicost {

// A rational extended with the two infinities, totally ordered by
// -inf < every finite value < +inf. Which infinity plays bottom and which
// plays top is a property of the dioid, not of the number, so this class
// only knows the numeric order.
class ExtRat {
 public:
  enum class Tag { neg_inf, finite, pos_inf };

  ExtRat() : tag_(Tag::finite) {}
  // Incoming rationals are canonicalized here: gmp comparisons are only
  // defined on canonical values, and callers routinely build 8/4.
  ExtRat(mpq_class q) : tag_(Tag::finite), q_(std::move(q)) {
    q_.canonicalize();
  }
  ExtRat(long n) : tag_(Tag::finite), q_(n) {}
  ExtRat(long n, long d) : tag_(Tag::finite), q_(n, d) { q_.canonicalize(); }

  static ExtRat neg_inf() { return ExtRat(Tag::neg_inf); }
  static ExtRat pos_inf() { return ExtRat(Tag::pos_inf); }

  Tag tag() const { return tag_; }
  bool finite() const { return tag_ == Tag::finite; }
  bool is_neg_inf() const { return tag_ == Tag::neg_inf; }
  bool is_pos_inf() const { return tag_ == Tag::pos_inf; }

  // Only meaningful when finite().
  const mpq_class& num() const { return q_; }

  int cmp(const ExtRat& o) const {
    if (tag_ != o.tag_) return tag_ < o.tag_ ? -1 : 1;
    if (tag_ != Tag::finite) return 0;
    return ::cmp(q_, o.q_);
  }
  bool operator==(const ExtRat& o) const { return cmp(o) == 0; }
  bool operator<(const ExtRat& o) const { return cmp(o) < 0; }
  bool operator<=(const ExtRat& o) const { return cmp(o) <= 0; }

 private:
  explicit ExtRat(Tag t) : tag_(t) {}
  Tag tag_;
  mpq_class q_;
};

// Accepts "p", "p/q" and decimal notation ("3.5", "-0.25"). Returns nothing
// on malformed input or a zero denominator.
std::optional<mpq_class> parse_rational(std::string_view text);

// Canonical form: integer when the denominator is 1, "p/q" otherwise.
std::string rational_str(const mpq_class& q);

}  // namespace tropicost
