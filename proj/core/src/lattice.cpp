#include "tropicost/lattice.hpp"

#include <algorithm>

namespace tropicost {

namespace {

constexpr size_t kMaxPowersetAtoms = 16;
constexpr size_t kMaxIrreducibles = 32;

}  // namespace

FiniteLattice FiniteLattice::powerset(std::vector<std::string> atom_names) {
  if (atom_names.empty()) throw Error("powerset lattice needs an atom");
  if (atom_names.size() > kMaxPowersetAtoms)
    throw Error("powerset lattice limited to 16 atoms");
  for (const auto& n : atom_names)
    if (n.empty()) throw Error("empty atom name");
  for (size_t i = 0; i < atom_names.size(); ++i)
    for (size_t j = i + 1; j < atom_names.size(); ++j)
      if (atom_names[i] == atom_names[j])
        throw Error("duplicate atom name `" + atom_names[i] + "`");

  FiniteLattice l;
  l.mask_mode_ = true;
  l.atom_names_ = std::move(atom_names);
  l.bottom_ = 0;
  l.top_ = (size_t{1} << l.atom_names_.size()) - 1;
  for (size_t i = 0; i < l.atom_names_.size(); ++i) {
    l.atoms_.push_back(size_t{1} << i);
    l.irr_.push_back(size_t{1} << i);
  }
  return l;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        std::vector<std::vector<char>> leq) {
  const size_t n = names.size();
  if (n == 0) throw Error("lattice needs at least one element");
  if (leq.size() != n) throw Error("order relation has the wrong size");
  for (const auto& row : leq)
    if (row.size() != n) throw Error("order relation has the wrong size");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw Error("duplicate element name `" + names[i] + "`");

  for (size_t i = 0; i < n; ++i)
    if (!leq[i][i]) throw Error("order not reflexive at `" + names[i] + "`");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw Error("order not antisymmetric between `" + names[i] +
                    "` and `" + names[j] + "`");
      if (leq[i][j])
        for (size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k])
            throw Error("order not transitive through `" + names[j] + "`");
    }

  FiniteLattice l;
  l.names_ = std::move(names);
  l.leq_ = std::move(leq);

  // Binary joins: the unique upper bound below all upper bounds. A missing
  // one means the order is not a lattice.
  auto extremum = [&](size_t x, size_t y, bool upper) -> size_t {
    std::vector<size_t> bounds;
    for (size_t z = 0; z < n; ++z) {
      bool b = upper ? (l.leq_[x][z] && l.leq_[y][z])
                     : (l.leq_[z][x] && l.leq_[z][y]);
      if (b) bounds.push_back(z);
    }
    for (size_t c : bounds) {
      bool least = true;
      for (size_t z : bounds)
        if (upper ? !l.leq_[c][z] : !l.leq_[z][c]) {
          least = false;
          break;
        }
      if (least) return c;
    }
    throw Error(std::string("no ") + (upper ? "least upper" : "greatest lower") +
                " bound for `" + l.names_[x] + "` and `" + l.names_[y] + "`");
  };

  l.join_.assign(n, std::vector<std::uint32_t>(n));
  l.meet_.assign(n, std::vector<std::uint32_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      l.join_[i][j] = static_cast<std::uint32_t>(extremum(i, j, true));
      l.meet_[i][j] = static_cast<std::uint32_t>(extremum(i, j, false));
    }

  size_t bot = 0, top = 0;
  for (size_t i = 1; i < n; ++i) {
    bot = l.meet_[bot][i];
    top = l.join_[top][i];
  }
  l.bottom_ = bot;
  l.top_ = top;

  // Lower covers, for atoms and join-irreducibles.
  auto lower_covers = [&](size_t x) {
    std::vector<size_t> cov;
    for (size_t y = 0; y < n; ++y) {
      if (y == x || !l.leq_[y][x]) continue;
      bool direct = true;
      for (size_t z = 0; z < n; ++z)
        if (z != x && z != y && l.leq_[y][z] && l.leq_[z][x]) {
          direct = false;
          break;
        }
      if (direct) cov.push_back(y);
    }
    return cov;
  };
  for (size_t x = 0; x < n; ++x) {
    if (x == l.bottom_) continue;
    auto cov = lower_covers(x);
    if (cov.size() == 1 && cov[0] == l.bottom_) l.atoms_.push_back(x);
    if (cov.size() == 1) l.irr_.push_back(x);
  }
  if (l.irr_.size() > kMaxIrreducibles)
    throw Error("lattice has too many join-irreducibles to encode");

  l.enc_.assign(n, 0);
  for (size_t x = 0; x < n; ++x)
    for (size_t r = 0; r < l.irr_.size(); ++r)
      if (l.leq_[l.irr_[r]][x]) l.enc_[x] |= std::uint32_t{1} << r;
  return l;
}

FiniteLattice FiniteLattice::from_covers(
    std::vector<std::string> names,
    const std::vector<std::pair<size_t, size_t>>& covers) {
  const size_t n = names.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) leq[i][i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error("cover pair out of range");
    leq[lo][hi] = 1;
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  return from_order(std::move(names), std::move(leq));
}

size_t FiniteLattice::size() const {
  return mask_mode_ ? size_t{1} << atom_names_.size() : names_.size();
}

const std::string& FiniteLattice::name(size_t x) const {
  if (!mask_mode_) return names_.at(x);
  if (x >= size()) throw Error("lattice element out of range");
  if (name_cache_.empty()) name_cache_.resize(size());
  if (name_cache_[x].empty()) {
    std::string s = "{";
    for (size_t i = 0; i < atom_names_.size(); ++i)
      if (x >> i & 1) {
        if (s.size() > 1) s += ",";
        s += atom_names_[i];
      }
    name_cache_[x] = s + "}";
  }
  return name_cache_[x];
}

std::optional<size_t> FiniteLattice::find(std::string_view name) const {
  if (mask_mode_) {
    for (size_t m = 0; m < size(); ++m)
      if (this->name(m) == name) return m;
    return std::nullopt;
  }
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool FiniteLattice::leq(size_t x, size_t y) const {
  if (x >= size() || y >= size()) throw Error("lattice element out of range");
  return mask_mode_ ? (x & ~y) == 0 : leq_[x][y] != 0;
}

size_t FiniteLattice::join(size_t x, size_t y) const {
  if (x >= size() || y >= size()) throw Error("lattice element out of range");
  return mask_mode_ ? x | y : join_[x][y];
}

size_t FiniteLattice::meet(size_t x, size_t y) const {
  if (x >= size() || y >= size()) throw Error("lattice element out of range");
  return mask_mode_ ? x & y : meet_[x][y];
}

std::uint32_t FiniteLattice::encode(size_t x) const {
  if (x >= size()) throw Error("lattice element out of range");
  return mask_mode_ ? static_cast<std::uint32_t>(x) : enc_[x];
}

std::optional<size_t> FiniteLattice::decode(std::uint32_t bits) const {
  if (mask_mode_) {
    if (bits >= size()) return std::nullopt;
    return static_cast<size_t>(bits);
  }
  for (size_t x = 0; x < names_.size(); ++x)
    if (enc_[x] == bits) return x;
  return std::nullopt;
}

bool FiniteLattice::is_boolean() const {
  if (mask_mode_) return true;
  const size_t n = names_.size();
  const size_t k = atoms_.size();
  if (k >= kMaxIrreducibles || n != size_t{1} << k) return false;

  // Atom fingerprints must enumerate the full powerset with the lattice
  // order matching inclusion; joins are then unions automatically.
  std::vector<std::uint32_t> fp(n, 0);
  for (size_t x = 0; x < n; ++x)
    for (size_t a = 0; a < k; ++a)
      if (leq_[atoms_[a]][x]) fp[x] |= std::uint32_t{1} << a;
  std::vector<std::uint32_t> sorted = fp;
  std::sort(sorted.begin(), sorted.end());
  for (size_t x = 0; x < n; ++x)
    if (sorted[x] != x) return false;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (bool(leq_[x][y]) != ((fp[x] & ~fp[y]) == 0)) return false;
  return true;
}

std::vector<std::uint32_t> encode_boolean(const FiniteLattice& b) {
  if (!b.is_boolean())
    throw Error("lattice is not boolean: some join is not a union of atoms");
  std::vector<std::uint32_t> enc(b.size());
  for (size_t x = 0; x < b.size(); ++x) enc[x] = b.encode(x);
  return enc;
}

FiniteLattice even_interval_lattice(int n) {
  if (n <= 0 || n % 2 != 0)
    throw Error("even-interval lattice needs a positive even bound");

  // Bottom first, then intervals by length and lower bound, so the
  // singletons [-n], [0], ... come right after the empty interval.
  struct Iv {
    int lo, hi;
  };
  std::vector<Iv> ivs;
  for (int len = 0; len <= 2 * n; len += 2)
    for (int lo = -n; lo + len <= n; lo += 2) ivs.push_back({lo, lo + len});

  std::vector<std::string> names{"empty"};
  for (const Iv& iv : ivs)
    names.push_back(iv.lo == iv.hi
                        ? "[" + std::to_string(iv.lo) + "]"
                        : "[" + std::to_string(iv.lo) + "," +
                              std::to_string(iv.hi) + "]");

  const size_t m = names.size();
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (size_t i = 0; i < m; ++i) {
    leq[0][i] = 1;
    leq[i][i] = 1;
  }
  for (size_t i = 0; i < ivs.size(); ++i)
    for (size_t j = 0; j < ivs.size(); ++j)
      if (ivs[j].lo <= ivs[i].lo && ivs[i].hi <= ivs[j].hi)
        leq[i + 1][j + 1] = 1;
  return FiniteLattice::from_order(std::move(names), std::move(leq));
}

std::vector<std::string> integer_universe(int n) {
  if (n <= 0) throw Error("integer universe needs a positive bound");
  std::vector<std::string> names;
  for (int i = -n; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

std::vector<size_t> even_interval_atom_images(int n) {
  FiniteLattice a = even_interval_lattice(n);
  std::vector<size_t> images;
  for (int i = -n; i <= n; ++i) {
    // Mathematical mod: odd integers, negative ones included, widen to the
    // surrounding even interval.
    int r = i % 2 == 0 ? 0 : 1;
    int lo = i - r, hi = i + r;
    std::string name = lo == hi ? "[" + std::to_string(lo) + "]"
                                : "[" + std::to_string(lo) + "," +
                                      std::to_string(hi) + "]";
    auto id = a.find(name);
    if (!id) throw Error("interval lookup failed for `" + name + "`");
    images.push_back(*id);
  }
  return images;
}

}  // namespace tropicost
