#include "bredon/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "bredon/errors.hpp"

namespace bredon {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p = 1 (mod e) with p > lower; such p never divides |G|.
long dixon_prime(long e, long lower) {
  for (long p = e + 1;; p += e)
    if (p > lower && is_prime(p)) return p;
}

u64 primitive_root_of_unity(long e, u64 p) {
  auto factors = prime_factors(static_cast<long>(p - 1));
  u64 gen = 0;
  for (u64 c = 2; c < p; ++c) {
    bool ok = true;
    for (long q : factors)
      if (powmod(c, (p - 1) / static_cast<u64>(q), p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = c;
      break;
    }
  }
  return powmod(gen, (p - 1) / static_cast<u64>(e), p);
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major square or rectangular

Vec matvec(const Mat& a, const Vec& v, u64 p) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + a[i][j] * v[j]) % p;
    out[i] = acc;
  }
  return out;
}

// Expresses targets in the span of basis columns; basis must be independent.
// basis: list of length-k vectors. Returns coordinate vectors.
std::vector<Vec> express_in_basis(const std::vector<Vec>& basis,
                                  const std::vector<Vec>& targets, u64 p) {
  const std::size_t k = basis[0].size(), m = basis.size(), t = targets.size();
  Mat aug(k, Vec(m + t, 0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) aug[i][j] = basis[j][i];
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < k; ++i) aug[i][m + j] = targets[j][i];
  std::vector<long> pivot_of_col(m, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < k; ++col) {
    std::size_t piv = row;
    while (piv < k && aug[piv][col] == 0) ++piv;
    if (piv == k) continue;
    std::swap(aug[piv], aug[row]);
    u64 inv = invmod(aug[row][col], p);
    for (std::size_t j = col; j < m + t; ++j) aug[row][j] = mulmod(aug[row][j], inv, p);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      u64 f = aug[i][col];
      for (std::size_t j = col; j < m + t; ++j)
        aug[i][j] = (aug[i][j] + p * p - mulmod(f, aug[row][j], p)) % p;
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<Vec> coords(t, Vec(m, 0));
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t c = 0; c < m; ++c)
      if (pivot_of_col[c] >= 0) coords[j][c] = aug[static_cast<std::size_t>(pivot_of_col[c])][m + j];
  return coords;
}

// det(xI - R) coefficients via evaluation at m+1 points + Lagrange interpolation.
Vec char_poly(const Mat& r, u64 p) {
  const std::size_t m = r.size();
  std::vector<u64> xs(m + 1), ys(m + 1);
  for (std::size_t t = 0; t <= m; ++t) {
    xs[t] = t % p;
    Mat a(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a[i][j] = (i == j) ? (xs[t] + p - r[i][j]) % p : (p - r[i][j]) % p;
    // determinant mod p
    u64 det = 1;
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t piv = col;
      while (piv < m && a[piv][col] == 0) ++piv;
      if (piv == m) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(a[piv], a[col]);
        det = p - det;
        if (det == p) det = 0;
      }
      det = mulmod(det, a[col][col], p);
      u64 inv = invmod(a[col][col], p);
      for (std::size_t i = col + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        u64 f = mulmod(a[i][col], inv, p);
        for (std::size_t j = col; j < m; ++j)
          a[i][j] = (a[i][j] + p * p - mulmod(f, a[col][j], p)) % p;
      }
    }
    ys[t] = det % p;
  }
  // Lagrange interpolation to a degree-m polynomial.
  Vec poly(m + 1, 0);
  for (std::size_t t = 0; t <= m; ++t) {
    Vec num{1};  // product (x - xs[s]) for s != t
    u64 den = 1;
    for (std::size_t s = 0; s <= m; ++s) {
      if (s == t) continue;
      Vec next(num.size() + 1, 0);
      for (std::size_t i = 0; i < num.size(); ++i) {
        next[i + 1] = (next[i + 1] + num[i]) % p;
        next[i] = (next[i] + mulmod(num[i], p - xs[s] % p, p)) % p;
      }
      num = std::move(next);
      den = mulmod(den, (xs[t] + p - xs[s]) % p, p);
    }
    u64 f = mulmod(ys[t], invmod(den, p), p);
    for (std::size_t i = 0; i < num.size(); ++i)
      poly[i] = (poly[i] + mulmod(num[i], f, p)) % p;
  }
  return poly;
}

Vec poly_roots(const Vec& poly, u64 p) {
  Vec roots;
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (mulmod(acc, x, p) + poly[i]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// Nullspace basis of (R - lambda I) over F_p, in subspace coordinates.
std::vector<Vec> eigen_coords(const Mat& r, u64 lambda, u64 p) {
  const std::size_t m = r.size();
  Mat a(m, Vec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a[i][j] = (i == j) ? (r[i][j] + p - lambda % p) % p : r[i][j];
  std::vector<long> pivot_of_col(m, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    u64 inv = invmod(a[row][col], p);
    for (std::size_t j = 0; j < m; ++j) a[row][j] = mulmod(a[row][j], inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      u64 f = a[i][col];
      for (std::size_t j = 0; j < m; ++j)
        a[i][j] = (a[i][j] + p * p - mulmod(f, a[row][j], p)) % p;
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<Vec> basis;
  for (std::size_t freecol = 0; freecol < m; ++freecol) {
    if (pivot_of_col[freecol] >= 0) continue;
    Vec v(m, 0);
    v[freecol] = 1;
    for (std::size_t c = 0; c < m; ++c)
      if (pivot_of_col[c] >= 0)
        v[c] = (p - a[static_cast<std::size_t>(pivot_of_col[c])][freecol]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct TableKey {
  std::vector<int> mul;
  bool operator<(const TableKey& o) const { return mul < o.mul; }
};

std::map<TableKey, CharacterTablePtr>& table_cache() {
  static std::map<TableKey, CharacterTablePtr> cache;
  return cache;
}
std::mutex& table_cache_mutex() {
  static std::mutex mu;
  return mu;
}

void verify_table(const CharacterTable& t) {
  const std::size_t k = t.num_classes();
  const Integer order = static_cast<long>(t.group->order());
  Integer degsum = 0;
  for (const auto& d : t.degrees) degsum += d * d;
  if (degsum != order) throw Error("character table: degree squares do not sum to |G|");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Cyclotomic ip = t.inner_product(t.irreducibles[i], t.irreducibles[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0))
        throw Error("character table: row orthogonality fails");
    }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < k; ++i)
        acc += t.irreducibles[i][r] * t.irreducibles[i][s].conjugate();
      Cyclotomic expect;
      if (r == s)
        expect = Cyclotomic(Rational(order, static_cast<long>(t.classes.members[r].size())));
      if (acc != expect) throw Error("character table: column orthogonality fails");
    }
  for (std::size_t i = 0; i < k; ++i)
    if (t.irreducibles[0][i] != Cyclotomic(1))
      throw Error("character table: first irreducible is not trivial");
}

}  // namespace

Cyclotomic CharacterTable::inner_product(const std::vector<Cyclotomic>& phi,
                                         const std::vector<Cyclotomic>& psi) const {
  Cyclotomic acc;
  for (std::size_t j = 0; j < num_classes(); ++j)
    acc += (phi[j] * psi[j].conjugate())
               .scaled(Rational(static_cast<long>(classes.members[j].size())));
  return acc.scaled(Rational(1, static_cast<long>(group->order())));
}

CharacterTablePtr character_table(const GroupPtr& g, std::size_t cap) {
  if (g->order() > cap)
    throw CapExceeded("character table: |" + g->name + "| = " + std::to_string(g->order()) +
                      " exceeds cap " + std::to_string(cap));
  {
    std::lock_guard<std::mutex> lock(table_cache_mutex());
    auto it = table_cache().find(TableKey{g->mul_table()});
    if (it != table_cache().end()) return it->second;
  }

  auto table = std::make_shared<CharacterTable>();
  table->group = g;
  table->classes = conjugacy_classes(*g);
  const auto& cls = table->classes;
  const std::size_t k = cls.members.size();
  const long n = static_cast<long>(g->order());
  const long e = g->exponent();

  const long lower =
      std::max<long>(static_cast<long>(2.0 * std::sqrt(static_cast<double>(n))) + 1,
                     static_cast<long>(k));
  const u64 p = static_cast<u64>(dixon_prime(e, lower));
  const u64 w = primitive_root_of_unity(e, p);

  // Class-sum structure-constant matrices: (A_i)[j][l] = #{x in C_i : x^-1 g_l in C_j}.
  std::vector<Mat> class_mats(k, Mat(k, Vec(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      int gl = cls.representative[l];
      for (int x : cls.members[i]) {
        int y = g->mul(g->inv(x), gl);
        class_mats[i][static_cast<std::size_t>(cls.class_of[y])][l] += 1;
      }
    }

  // Split F_p^k into the common eigenvectors of the class matrices.
  std::vector<std::vector<Vec>> subspaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    subspaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool all_split = true;
    for (const auto& s : subspaces)
      if (s.size() > 1) all_split = false;
    if (all_split) break;
    std::vector<std::vector<Vec>> next;
    for (auto& basis : subspaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<Vec> images;
      images.reserve(basis.size());
      for (const auto& b : basis) images.push_back(matvec(class_mats[i], b, p));
      auto coords = express_in_basis(basis, images, p);
      Mat r(basis.size(), Vec(basis.size()));
      for (std::size_t colv = 0; colv < basis.size(); ++colv)
        for (std::size_t rowv = 0; rowv < basis.size(); ++rowv)
          r[rowv][colv] = coords[colv][rowv];
      auto poly = char_poly(r, p);
      for (u64 lambda : poly_roots(poly, p)) {
        auto coords_basis = eigen_coords(r, lambda, p);
        std::vector<Vec> sub;
        for (const auto& c : coords_basis) {
          Vec v(k, 0);
          for (std::size_t bi = 0; bi < basis.size(); ++bi)
            for (std::size_t t = 0; t < k; ++t)
              v[t] = (v[t] + mulmod(c[bi], basis[bi][t], p)) % p;
          sub.push_back(std::move(v));
        }
        if (!sub.empty()) next.push_back(std::move(sub));
      }
    }
    subspaces = std::move(next);
  }
  if (subspaces.size() != k) throw Error("character table: eigenspace splitting failed");

  // Central characters -> degrees -> character values mod p.
  std::vector<Vec> omega;
  for (auto& s : subspaces) {
    Vec v = s[0];
    if (v[0] == 0) throw Error("character table: degenerate central character");
    u64 f = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, f, p);
    omega.push_back(std::move(v));
  }

  std::vector<u64> class_size_inv(k);
  for (std::size_t j = 0; j < k; ++j)
    class_size_inv[j] = invmod(static_cast<u64>(cls.members[j].size()) % p, p);

  struct RawChar {
    Integer degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<RawChar> raw;

  // Power maps for the exact lift.
  std::vector<std::vector<int>> power_class(k);
  std::vector<long> rep_order(k);
  for (std::size_t j = 0; j < k; ++j) {
    int rep = cls.representative[j];
    long o = g->element_order(rep);
    rep_order[j] = o;
    int x = 0;
    for (long s = 0; s < o; ++s) {
      power_class[j].push_back(cls.class_of[x]);
      x = g->mul(x, rep);
    }
  }

  for (const auto& v : omega) {
    u64 s_acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      u64 term = mulmod(v[j], v[static_cast<std::size_t>(cls.inverse_class[j])], p);
      s_acc = (s_acc + mulmod(term, class_size_inv[j], p)) % p;
    }
    u64 d2 = mulmod(static_cast<u64>(n % static_cast<long>(p)), invmod(s_acc, p), p);
    long degree = -1;
    for (long d = 1; static_cast<long>(d) * d <= n; ++d)
      if (mulmod(static_cast<u64>(d), static_cast<u64>(d), p) == d2) {
        degree = d;
        break;
      }
    if (degree <= 0) throw Error("character table: no integer degree matches");

    std::vector<u64> chi_mod(k);
    for (std::size_t j = 0; j < k; ++j)
      chi_mod[j] = mulmod(mulmod(static_cast<u64>(degree), v[j], p), class_size_inv[j], p);

    RawChar rc;
    rc.degree = degree;
    rc.values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      long o = rep_order[j];
      u64 z = powmod(w, static_cast<u64>(e / o), p);
      u64 oinv = invmod(static_cast<u64>(o) % p, p);
      Cyclotomic val;
      for (long t = 0; t < o; ++t) {
        u64 acc = 0;
        for (long s = 0; s < o; ++s) {
          u64 zpow = powmod(z, static_cast<u64>(((o - t) * s) % o), p);
          acc = (acc + mulmod(chi_mod[static_cast<std::size_t>(power_class[j][s])], zpow, p)) % p;
        }
        u64 mult = mulmod(acc, oinv, p);
        if (mult > static_cast<u64>(degree))
          throw Error("character table: multiplicity lift out of range");
        if (mult != 0)
          val += Cyclotomic::root_of_unity(o, t).scaled(Rational(static_cast<long>(mult)));
      }
      rc.values[j] = val;
    }
    raw.push_back(std::move(rc));
  }

  std::sort(raw.begin(), raw.end(), [](const RawChar& a, const RawChar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      int c = Cyclotomic::compare(a.values[j], b.values[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  for (auto& rc : raw) {
    table->degrees.push_back(rc.degree);
    table->irreducibles.push_back(std::move(rc.values));
  }

  verify_table(*table);

  std::lock_guard<std::mutex> lock(table_cache_mutex());
  auto [it, inserted] = table_cache().emplace(TableKey{g->mul_table()}, table);
  return it->second;
}

ClassFunction irreducible_character(const CharacterTablePtr& t, std::size_t index) {
  return ClassFunction{t, t->irreducibles.at(index)};
}

ClassFunction trivial_character(const CharacterTablePtr& t) {
  return irreducible_character(t, 0);
}

ClassFunction induce(const ClassFunction& chi, const GroupHomomorphism& h, std::size_t cap) {
  if (!h.is_injective())
    throw NonInjectiveHomomorphism("induction requires an injective homomorphism");
  if (chi.table->group->mul_table() != h.source->mul_table())
    throw Error("induce: class function lives on a different group");
  auto target_table = character_table(h.target, cap);
  const auto& tcls = target_table->classes;
  const auto& scls = chi.table->classes;
  const FiniteGroup& kgrp = *h.target;
  const long horder = static_cast<long>(h.source->order());

  std::vector<int> preimage(kgrp.order(), -1);
  for (std::size_t a = 0; a < h.images.size(); ++a)
    preimage[static_cast<std::size_t>(h.images[a])] = static_cast<int>(a);

  ClassFunction out{target_table, {}};
  out.values.resize(tcls.members.size());
  for (std::size_t j = 0; j < tcls.members.size(); ++j) {
    int k0 = tcls.representative[j];
    Cyclotomic acc;
    for (int x = 0; x < static_cast<int>(kgrp.order()); ++x) {
      int conj = kgrp.mul(kgrp.mul(kgrp.inv(x), k0), x);
      int pre = preimage[static_cast<std::size_t>(conj)];
      if (pre >= 0) acc += chi.values[static_cast<std::size_t>(scls.class_of[pre])];
    }
    out.values[j] = acc.scaled(Rational(1, horder));
  }
  return out;
}

ClassFunction restrict_along(const ClassFunction& chi, const GroupHomomorphism& h,
                             std::size_t cap) {
  if (chi.table->group->mul_table() != h.target->mul_table())
    throw Error("restrict: class function lives on a different group");
  auto source_table = character_table(h.source, cap);
  const auto& scls = source_table->classes;
  const auto& tcls = chi.table->classes;
  ClassFunction out{source_table, {}};
  out.values.resize(scls.members.size());
  for (std::size_t j = 0; j < scls.members.size(); ++j) {
    int img = h.images[static_cast<std::size_t>(scls.representative[j])];
    out.values[j] = chi.values[static_cast<std::size_t>(tcls.class_of[img])];
  }
  return out;
}

RepRingElement decompose(const ClassFunction& chi) {
  RepRingElement out{chi.table, {}};
  for (std::size_t i = 0; i < chi.table->num_irreducibles(); ++i) {
    Cyclotomic ip = chi.table->inner_product(chi.values, chi.table->irreducibles[i]);
    if (!ip.is_integer())
      throw NotVirtualCharacter("inner product with irreducible " + std::to_string(i) +
                                " is " + ip.str());
    out.coeffs.push_back(ip.integer_value());
  }
  return out;
}

IntegerMatrix induction_matrix(const GroupHomomorphism& h, std::size_t cap) {
  if (!h.is_injective())
    throw NonInjectiveHomomorphism("induction matrix requires an injective homomorphism");
  auto hs = character_table(h.source, cap);
  auto ht = character_table(h.target, cap);
  IntegerMatrix m(ht->num_irreducibles(), hs->num_irreducibles());
  for (std::size_t i = 0; i < hs->num_irreducibles(); ++i) {
    auto ind = induce(irreducible_character(hs, i), h, cap);
    auto coeffs = decompose(ind).coeffs;
    for (std::size_t r = 0; r < coeffs.size(); ++r) m.at(r, i) = coeffs[r];
  }
  return m;
}

IntegerMatrix restriction_matrix(const GroupHomomorphism& h, std::size_t cap) {
  auto hs = character_table(h.source, cap);
  auto ht = character_table(h.target, cap);
  IntegerMatrix m(hs->num_irreducibles(), ht->num_irreducibles());
  for (std::size_t j = 0; j < ht->num_irreducibles(); ++j) {
    auto res = restrict_along(irreducible_character(ht, j), h, cap);
    auto coeffs = decompose(res).coeffs;
    for (std::size_t r = 0; r < coeffs.size(); ++r) m.at(r, j) = coeffs[r];
  }
  return m;
}

}  // namespace bredon
