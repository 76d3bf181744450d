#include "tropicost/dioid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tropicost {

namespace {

using Tag = ExtRat::Tag;

ExtRat inf_of(Tag t) {
  return t == Tag::neg_inf ? ExtRat::neg_inf() : ExtRat::pos_inf();
}

const ExtRat& num_min(const ExtRat& a, const ExtRat& b) {
  return a.cmp(b) <= 0 ? a : b;
}
const ExtRat& num_max(const ExtRat& a, const ExtRat& b) {
  return a.cmp(b) >= 0 ? a : b;
}

// Addition where one designated infinity (the dioid's bottom) wins over
// everything, including the opposite infinity.
ExtRat add_absorbing(const ExtRat& a, const ExtRat& b, Tag absorb) {
  if (a.tag() == absorb || b.tag() == absorb) return inf_of(absorb);
  if (!a.finite()) return a;
  if (!b.finite()) return b;
  return ExtRat(mpq_class(a.num() + b.num()));
}

bool is_zero(const ExtRat& r) { return r.finite() && r.num() == 0; }

mpq_class div_ui(const mpq_class& q, unsigned n) {
  mpq_class r = q / mpq_class(static_cast<long>(n));
  r.canonicalize();
  return r;
}

mpq_class pow2_q(long e) {
  mpz_class w = mpz_class(1) << static_cast<unsigned long>(e < 0 ? -e : e);
  return e >= 0 ? mpq_class(w) : mpq_class(1, w);
}

// Rational approximation of q^(1/n) for q > 0 within relative tolerance tol.
// Exact whenever the root is rational (numerator and denominator of the
// canonical input are both perfect n-th powers; for coprime num/den that is
// the only way the root can be rational). Otherwise the true root is rounded
// down onto the dyadic grid of step 2^(m-B) where 2^m <= root < 2^(m+1):
// anchoring the grid at the root's own power of two makes the whole map a
// weakly monotone function of the true real root, so order facts about exact
// roots survive approximation, and equal true roots approximate identically
// no matter which (q, n) pair produced them. Both properties matter when
// roots computed along different routes get compared.
mpq_class approx_root(const mpq_class& q, unsigned n, const mpq_class& tol) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();

  mpz_class rnum, rdum;
  bool exact = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n) != 0 &&
               mpz_root(rdum.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (exact) return mpq_class(rnum, rdum);  // canonical since q is

  // Grid resolution: 2^(1-B) relative, at least 2^-59, finer if asked.
  long bits = 60;
  if (tol < mpq_class(1, 1L << 30)) {
    mpq_class inv = 1 / tol;
    long est = static_cast<long>(
                   mpz_sizeinbase(inv.get_num().get_mpz_t(), 2)) -
               static_cast<long>(
                   mpz_sizeinbase(inv.get_den().get_mpz_t(), 2)) +
               2;
    bits = std::max(bits, est);
  }

  // m = floor(log2 root), located by exact comparisons of q with 2^(n*m)
  // starting from a bit-length estimate.
  long nl = static_cast<long>(n);
  long m = (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
            static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2))) /
           nl;
  while (q < pow2_q(nl * m)) --m;
  while (q >= pow2_q(nl * (m + 1))) ++m;

  // floor(root * 2^p) = floor n-th root of floor(q * 2^(n*p)).
  long p = bits - m;
  mpz_class snum = num, sden = den;
  if (p >= 0)
    snum <<= static_cast<unsigned long>(nl * p);
  else
    sden <<= static_cast<unsigned long>(nl * -p);
  mpz_class scaled = snum / sden;  // floor division, both positive
  mpz_class root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), n);

  mpq_class result = mpq_class(root) * pow2_q(-p);
  result.canonicalize();
  return result;
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view inner) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= inner.size()) {
    size_t comma = inner.find(',', start);
    if (comma == std::string_view::npos) comma = inner.size();
    std::string piece = trim(inner.substr(start, comma - start));
    if (!piece.empty()) out.push_back(piece);
    start = comma + 1;
  }
  return out;
}

}  // namespace

CostDioid::CostDioid(DioidKind kind, DioidParams params)
    : kind_(kind), params_(std::move(params)) {
  switch (kind_) {
    case DioidKind::minmax:
    case DioidKind::maxmin:
    case DioidKind::cap_cup:
    case DioidKind::cup_cap:
      flags_.double_idempotent = true;
      break;
    case DioidKind::minplus_vec:
      flags_.cancellative = true;
      break;
    case DioidKind::maxtimes:
    case DioidKind::maxplus:
    case DioidKind::minplus:
      flags_.selective = true;
      break;
  }
  name_ = kind_name(kind_);

  if (kind_ == DioidKind::cap_cup || kind_ == DioidKind::cup_cap) {
    if (params_.universe.empty())
      throw Error(name_ + " needs a universe of set members");
    if (params_.universe.size() > 32)
      throw Error("universe is limited to 32 members");
    for (size_t i = 0; i < params_.universe.size(); ++i)
      for (size_t j = i + 1; j < params_.universe.size(); ++j)
        if (params_.universe[i] == params_.universe[j])
          throw Error("duplicate universe member '" + params_.universe[i] + "'");
  }
  if (kind_ == DioidKind::minplus_vec) {
    if (params_.vec_dim < 1)
      throw Error("minplus_vec needs a dimension of at least 1");
    name_ += "(" + std::to_string(params_.vec_dim) + ")";
  }
  params_.root_tolerance.canonicalize();
  if (params_.root_tolerance <= 0) throw Error("root tolerance must be positive");

  std::uint32_t full = params_.universe.empty()
                           ? 0
                           : (params_.universe.size() == 32
                                  ? ~std::uint32_t{0}
                                  : (std::uint32_t{1} << params_.universe.size()) - 1);
  switch (kind_) {
    case DioidKind::minmax:
      bot_ = CostValue(ExtRat::pos_inf());
      one_ = CostValue(ExtRat::neg_inf());
      top_ = one_;
      break;
    case DioidKind::maxmin:
      bot_ = CostValue(ExtRat::neg_inf());
      one_ = CostValue(ExtRat::pos_inf());
      top_ = one_;
      break;
    case DioidKind::cap_cup:
      bot_ = CostValue(SetBits{full});
      one_ = CostValue(SetBits{0});
      top_ = one_;
      break;
    case DioidKind::cup_cap:
      bot_ = CostValue(SetBits{0});
      one_ = CostValue(SetBits{full});
      top_ = one_;
      break;
    case DioidKind::minplus_vec: {
      VecRat zero;
      zero.comps.assign(params_.vec_dim, mpq_class(0));
      bot_ = CostValue(VecRat{true, {}});
      one_ = CostValue(std::move(zero));
      top_ = one_;
      break;
    }
    case DioidKind::maxtimes:
      bot_ = CostValue(ExtRat(mpq_class(0)));
      one_ = CostValue(ExtRat(mpq_class(1)));
      top_ = CostValue(ExtRat::pos_inf());
      break;
    case DioidKind::maxplus:
      bot_ = CostValue(ExtRat::neg_inf());
      one_ = CostValue(ExtRat(mpq_class(0)));
      top_ = CostValue(ExtRat::pos_inf());
      break;
    case DioidKind::minplus:
      bot_ = CostValue(ExtRat::pos_inf());
      one_ = CostValue(ExtRat(mpq_class(0)));
      top_ = CostValue(ExtRat::neg_inf());
      break;
  }
}

bool CostDioid::totally_ordered() const {
  switch (kind_) {
    case DioidKind::cap_cup:
    case DioidKind::cup_cap:
    case DioidKind::minplus_vec:
      return false;
    default:
      return true;
  }
}

namespace {
void want_scalar(const CostValue& v, const std::string& name) {
  if (!v.is_scalar()) throw Error("value does not belong to carrier " + name);
}
void want_set(const CostValue& v, const std::string& name) {
  if (!v.is_set()) throw Error("value does not belong to carrier " + name);
}
void want_vec(const CostValue& v, const std::string& name) {
  if (!v.is_vec()) throw Error("value does not belong to carrier " + name);
}
}  // namespace

CostValue CostDioid::oplus(const CostValue& a, const CostValue& b) const {
  switch (kind_) {
    case DioidKind::minmax:
    case DioidKind::minplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(num_min(a.scalar(), b.scalar()));
    case DioidKind::maxmin:
    case DioidKind::maxtimes:
    case DioidKind::maxplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(num_max(a.scalar(), b.scalar()));
    case DioidKind::cap_cup:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{a.set().bits & b.set().bits});
    case DioidKind::cup_cap:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{a.set().bits | b.set().bits});
    case DioidKind::minplus_vec: {
      want_vec(a, name_), want_vec(b, name_);
      if (a.vec().bottom) return b;
      if (b.vec().bottom) return a;
      VecRat r;
      r.comps.reserve(a.vec().comps.size());
      for (size_t i = 0; i < a.vec().comps.size(); ++i)
        r.comps.push_back(std::min(a.vec().comps[i], b.vec().comps[i]));
      return CostValue(std::move(r));
    }
  }
  throw Error("unreachable");
}

CostValue CostDioid::otimes(const CostValue& a, const CostValue& b) const {
  switch (kind_) {
    case DioidKind::minmax:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(num_max(a.scalar(), b.scalar()));
    case DioidKind::maxmin:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(num_min(a.scalar(), b.scalar()));
    case DioidKind::maxplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(add_absorbing(a.scalar(), b.scalar(), Tag::neg_inf));
    case DioidKind::minplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(add_absorbing(a.scalar(), b.scalar(), Tag::pos_inf));
    case DioidKind::maxtimes: {
      want_scalar(a, name_), want_scalar(b, name_);
      const ExtRat& x = a.scalar();
      const ExtRat& y = b.scalar();
      if (is_zero(x) || is_zero(y)) return CostValue(ExtRat(mpq_class(0)));
      if (x.is_pos_inf() || y.is_pos_inf()) return CostValue(ExtRat::pos_inf());
      return CostValue(ExtRat(mpq_class(x.num() * y.num())));
    }
    case DioidKind::cap_cup:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{a.set().bits | b.set().bits});
    case DioidKind::cup_cap:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{a.set().bits & b.set().bits});
    case DioidKind::minplus_vec: {
      want_vec(a, name_), want_vec(b, name_);
      if (a.vec().bottom || b.vec().bottom) return bot_;
      VecRat r;
      r.comps.reserve(a.vec().comps.size());
      for (size_t i = 0; i < a.vec().comps.size(); ++i)
        r.comps.push_back(mpq_class(a.vec().comps[i] + b.vec().comps[i]));
      return CostValue(std::move(r));
    }
  }
  throw Error("unreachable");
}

bool CostDioid::leq(const CostValue& a, const CostValue& b) const {
  switch (kind_) {
    case DioidKind::maxmin:
    case DioidKind::maxtimes:
    case DioidKind::maxplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return a.scalar().cmp(b.scalar()) <= 0;
    case DioidKind::minmax:
    case DioidKind::minplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return b.scalar().cmp(a.scalar()) <= 0;
    case DioidKind::cap_cup:
      want_set(a, name_), want_set(b, name_);
      return (a.set().bits & b.set().bits) == b.set().bits;
    case DioidKind::cup_cap:
      want_set(a, name_), want_set(b, name_);
      return (a.set().bits | b.set().bits) == b.set().bits;
    case DioidKind::minplus_vec: {
      want_vec(a, name_), want_vec(b, name_);
      if (a.vec().bottom) return true;
      if (b.vec().bottom) return false;
      for (size_t i = 0; i < a.vec().comps.size(); ++i)
        if (b.vec().comps[i] > a.vec().comps[i]) return false;
      return true;
    }
  }
  throw Error("unreachable");
}

bool CostDioid::equal(const CostValue& a, const CostValue& b) const {
  return a == b;
}

CostValue CostDioid::meet(const CostValue& a, const CostValue& b) const {
  switch (kind_) {
    case DioidKind::maxmin:
    case DioidKind::maxtimes:
    case DioidKind::maxplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(num_min(a.scalar(), b.scalar()));
    case DioidKind::minmax:
    case DioidKind::minplus:
      want_scalar(a, name_), want_scalar(b, name_);
      return CostValue(num_max(a.scalar(), b.scalar()));
    case DioidKind::cap_cup:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{a.set().bits | b.set().bits});
    case DioidKind::cup_cap:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{a.set().bits & b.set().bits});
    case DioidKind::minplus_vec: {
      want_vec(a, name_), want_vec(b, name_);
      if (a.vec().bottom || b.vec().bottom) return bot_;
      VecRat r;
      r.comps.reserve(a.vec().comps.size());
      for (size_t i = 0; i < a.vec().comps.size(); ++i)
        r.comps.push_back(std::max(a.vec().comps[i], b.vec().comps[i]));
      return CostValue(std::move(r));
    }
  }
  throw Error("unreachable");
}

CostValue CostDioid::power(const CostValue& a, unsigned n) const {
  CostValue acc = one_;
  for (unsigned i = 0; i < n; ++i) acc = otimes(acc, a);
  return acc;
}

CostValue CostDioid::nth_root(const CostValue& a, unsigned n) const {
  if (n == 0) throw Error("nth_root needs n >= 1");
  if (n == 1) return a;
  switch (kind_) {
    case DioidKind::minmax:
    case DioidKind::maxmin:
      want_scalar(a, name_);
      return a;
    case DioidKind::cap_cup:
    case DioidKind::cup_cap:
      want_set(a, name_);
      return a;
    case DioidKind::maxplus:
    case DioidKind::minplus: {
      want_scalar(a, name_);
      if (!a.scalar().finite()) return a;
      return CostValue(ExtRat(div_ui(a.scalar().num(), n)));
    }
    case DioidKind::minplus_vec: {
      want_vec(a, name_);
      if (a.vec().bottom) return a;
      VecRat r;
      r.comps.reserve(a.vec().comps.size());
      for (const auto& c : a.vec().comps) r.comps.push_back(div_ui(c, n));
      return CostValue(std::move(r));
    }
    case DioidKind::maxtimes: {
      want_scalar(a, name_);
      if (a.scalar().is_pos_inf() || is_zero(a.scalar())) return a;
      return CostValue(
          ExtRat(approx_root(a.scalar().num(), n, params_.root_tolerance)));
    }
  }
  throw Error("unreachable");
}

CostValue CostDioid::star(const CostValue& a) const {
  if (leq(a, one_)) return one_;
  if (totally_ordered()) return top_;
  // A partial order gives no divergence certificate; iterate the partial
  // sums and insist on reaching a fixpoint.
  CostValue s = one_;
  for (int i = 0; i < 1000; ++i) {
    CostValue next = oplus(one_, otimes(a, s));
    if (equal(next, s)) return s;
    s = std::move(next);
  }
  throw Error("star did not stabilize within 1000 iterations");
}

CostValue CostDioid::residual(const CostValue& a, const CostValue& b) const {
  switch (kind_) {
    case DioidKind::maxplus:
    case DioidKind::minplus:
    case DioidKind::maxtimes: {
      want_scalar(a, name_), want_scalar(b, name_);
      if (equal(CostValue(a.scalar()), bot_)) return top_;
      if (equal(CostValue(b.scalar()), top_)) return top_;
      if (equal(CostValue(a.scalar()), top_)) return bot_;
      if (equal(CostValue(b.scalar()), bot_)) return bot_;
      if (kind_ == DioidKind::maxtimes) {
        mpq_class q = b.scalar().num() / a.scalar().num();
        q.canonicalize();
        return CostValue(ExtRat(std::move(q)));
      }
      return CostValue(ExtRat(mpq_class(b.scalar().num() - a.scalar().num())));
    }
    case DioidKind::minmax:
      want_scalar(a, name_), want_scalar(b, name_);
      return a.scalar().cmp(b.scalar()) >= 0 ? top_ : b;
    case DioidKind::maxmin:
      want_scalar(a, name_), want_scalar(b, name_);
      return a.scalar().cmp(b.scalar()) <= 0 ? top_ : b;
    case DioidKind::cap_cup:
      want_set(a, name_), want_set(b, name_);
      return CostValue(SetBits{b.set().bits & ~a.set().bits});
    case DioidKind::cup_cap: {
      want_set(a, name_), want_set(b, name_);
      std::uint32_t full = one_.set().bits;
      return CostValue(SetBits{(full & ~a.set().bits) | b.set().bits});
    }
    case DioidKind::minplus_vec: {
      want_vec(a, name_), want_vec(b, name_);
      if (a.vec().bottom) return top_;
      if (b.vec().bottom) return bot_;
      VecRat r;
      r.comps.reserve(a.vec().comps.size());
      for (size_t i = 0; i < a.vec().comps.size(); ++i) {
        mpq_class diff = b.vec().comps[i] - a.vec().comps[i];
        r.comps.push_back(diff > 0 ? diff : mpq_class(0));
      }
      return CostValue(std::move(r));
    }
  }
  throw Error("unreachable");
}

CostValue CostDioid::from_rational(mpq_class q) const {
  return check(CostValue(ExtRat(std::move(q))));
}

CostValue CostDioid::from_scalar(ExtRat r) const {
  return check(CostValue(std::move(r)));
}

CostValue CostDioid::set_of(std::span<const std::string> members) const {
  if (kind_ != DioidKind::cap_cup && kind_ != DioidKind::cup_cap)
    throw Error(name_ + " has no set values");
  SetBits s;
  for (const auto& m : members) {
    auto it = std::find(params_.universe.begin(), params_.universe.end(), m);
    if (it == params_.universe.end())
      throw Error("'" + m + "' is not in the universe");
    s.bits |= std::uint32_t{1} << (it - params_.universe.begin());
  }
  return CostValue(s);
}

CostValue CostDioid::vec_of(std::vector<mpq_class> comps) const {
  VecRat v;
  v.comps = std::move(comps);
  for (auto& c : v.comps) c.canonicalize();
  return check(CostValue(std::move(v)));
}

CostValue CostDioid::parse_value(std::string_view text) const {
  std::string t = trim(text);
  if (t.empty()) throw Error("empty cost literal");
  if (t == "bot") return bot_;
  if (t == "top") return top_;
  switch (kind_) {
    case DioidKind::cap_cup:
    case DioidKind::cup_cap: {
      if (t.front() != '{' || t.back() != '}')
        throw Error("expected a set literal like {a,b}, got '" + t + "'");
      auto members = split_list(std::string_view(t).substr(1, t.size() - 2));
      return set_of(members);
    }
    case DioidKind::minplus_vec: {
      if (t == "inf") return bot_;
      if (t.front() != '(' || t.back() != ')')
        throw Error("expected a tuple literal like (1,2), got '" + t + "'");
      auto pieces = split_list(std::string_view(t).substr(1, t.size() - 2));
      std::vector<mpq_class> comps;
      for (const auto& p : pieces) {
        auto q = parse_rational(p);
        if (!q) throw Error("bad tuple component '" + p + "'");
        comps.push_back(std::move(*q));
      }
      return vec_of(std::move(comps));
    }
    default: {
      if (t == "inf" || t == "+inf") return check(CostValue(ExtRat::pos_inf()));
      if (t == "-inf") return check(CostValue(ExtRat::neg_inf()));
      auto q = parse_rational(t);
      if (!q) throw Error("bad cost literal '" + t + "'");
      return from_rational(std::move(*q));
    }
  }
}

std::string CostDioid::to_string(const CostValue& v) const {
  validate(v);
  if (equal(v, bot_)) return "bot";
  if (equal(v, top_)) return "top";
  switch (kind_) {
    case DioidKind::cap_cup:
    case DioidKind::cup_cap: {
      std::string out = "{";
      bool first = true;
      for (size_t i = 0; i < params_.universe.size(); ++i) {
        if (v.set().bits & (std::uint32_t{1} << i)) {
          if (!first) out += ",";
          out += params_.universe[i];
          first = false;
        }
      }
      return out + "}";
    }
    case DioidKind::minplus_vec: {
      std::string out = "(";
      for (size_t i = 0; i < v.vec().comps.size(); ++i) {
        if (i) out += ",";
        out += rational_str(v.vec().comps[i]);
      }
      return out + ")";
    }
    default:
      // bot and top cover both infinities of every scalar kind.
      return rational_str(v.scalar().num());
  }
}

void CostDioid::validate(const CostValue& v) const {
  switch (kind_) {
    case DioidKind::minmax:
    case DioidKind::maxmin:
    case DioidKind::maxplus:
    case DioidKind::minplus:
      want_scalar(v, name_);
      return;
    case DioidKind::maxtimes:
      want_scalar(v, name_);
      if (v.scalar().is_neg_inf() ||
          (v.scalar().finite() && v.scalar().num() < 0))
        throw Error("maxtimes values are nonnegative");
      return;
    case DioidKind::cap_cup:
    case DioidKind::cup_cap: {
      want_set(v, name_);
      std::uint32_t full = bot_.set().bits | one_.set().bits;
      if (v.set().bits & ~full)
        throw Error("set value has members outside the universe");
      return;
    }
    case DioidKind::minplus_vec:
      want_vec(v, name_);
      if (v.vec().bottom) return;
      if (v.vec().comps.size() != static_cast<size_t>(params_.vec_dim))
        throw Error("tuple has arity " + std::to_string(v.vec().comps.size()) +
                    ", carrier needs " + std::to_string(params_.vec_dim));
      for (const auto& c : v.vec().comps)
        if (c < 0) throw Error("tuple components are nonnegative");
      return;
  }
}

bool CostDioid::compatible(const CostDioid& other) const {
  return kind_ == other.kind_ && params_.universe == other.params_.universe &&
         params_.vec_dim == other.params_.vec_dim &&
         params_.root_tolerance == other.params_.root_tolerance;
}

CostValue CostDioid::check(CostValue v) const {
  validate(v);
  return v;
}

DioidPtr make_dioid(DioidKind kind, DioidParams params) {
  return std::make_shared<CostDioid>(kind, std::move(params));
}

DioidPtr make_dioid(std::string_view name, DioidParams params) {
  std::string n = trim(name);
  if (n.starts_with("minplus_vec")) {
    std::string_view rest = std::string_view(n).substr(11);
    if (rest.empty())
      throw Error("minplus_vec needs a dimension, e.g. minplus_vec(2)");
    if (rest.front() != '(' || rest.back() != ')')
      throw Error("bad dioid name '" + n + "'");
    std::string dim = trim(rest.substr(1, rest.size() - 2));
    try {
      params.vec_dim = std::stoi(dim);
    } catch (const std::exception&) {
      throw Error("bad minplus_vec dimension '" + dim + "'");
    }
    return make_dioid(DioidKind::minplus_vec, std::move(params));
  }
  for (DioidKind k : all_dioid_kinds())
    if (n == kind_name(k)) {
      if (k == DioidKind::minplus_vec) break;
      return make_dioid(k, std::move(params));
    }
  throw Error("unknown dioid '" + n + "'");
}

const char* kind_name(DioidKind kind) {
  switch (kind) {
    case DioidKind::minmax: return "minmax";
    case DioidKind::maxmin: return "maxmin";
    case DioidKind::cap_cup: return "cap-cup";
    case DioidKind::cup_cap: return "cup-cap";
    case DioidKind::minplus_vec: return "minplus_vec";
    case DioidKind::maxtimes: return "maxtimes";
    case DioidKind::maxplus: return "maxplus";
    case DioidKind::minplus: return "minplus";
  }
  return "?";
}

std::vector<DioidKind> all_dioid_kinds() {
  return {DioidKind::minmax,      DioidKind::maxmin,   DioidKind::cap_cup,
          DioidKind::cup_cap,     DioidKind::minplus_vec, DioidKind::maxtimes,
          DioidKind::maxplus,     DioidKind::minplus};
}

}  // namespace tropicost
