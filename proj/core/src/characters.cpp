#include "trifold/characters.hpp"

#include <algorithm>
#include <numeric>

#include "trifold/error.hpp"

namespace trifold {

// ------------------------------------------------------------ ClassFunction

ClassFunction ClassFunction::constant(const GroupTable& g, Cyclotomic v) {
  return ClassFunction(&g, std::vector<Cyclotomic>(g.num_classes(), std::move(v)));
}

namespace {
void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group())
    throw GroupMismatch("class functions live on different groups");
}
}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> v(a.class_values().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.class_values()[i] + b.class_values()[i];
  return ClassFunction(a.group(), std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> v(a.class_values().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.class_values()[i] * b.class_values()[i];
  return ClassFunction(a.group(), std::move(v));
}

ClassFunction ClassFunction::operator*(const Cyclotomic& s) const {
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * s;
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i].conjugate();
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::real_part() const {
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = values_[i].real_part();
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::translated(const std::vector<Elt>& perm) const {
  std::vector<Cyclotomic> v(values_.size());
  for (int c = 0; c < group_->num_classes(); ++c)
    v[c] = at(perm[group_->class_rep(c)]);
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::restricted(const GroupTable& sub,
                                        const std::vector<Elt>& embedding) const {
  std::vector<Cyclotomic> v(sub.num_classes());
  for (int c = 0; c < sub.num_classes(); ++c)
    v[c] = at(embedding[sub.class_rep(c)]);
  return ClassFunction(&sub, std::move(v));
}

Rational ClassFunction::inner_product(const ClassFunction& other) const {
  require_same_group(*this, other);
  Cyclotomic acc(0);
  for (int c = 0; c < group_->num_classes(); ++c)
    acc += Cyclotomic(group_->class_size(c)) * values_[c] *
           other.values_[c].conjugate();
  Cyclotomic avg = acc / Cyclotomic(group_->order());
  return avg.rational_value();
}

ClassFunction trivial_character(const GroupTable& G) {
  return ClassFunction::constant(G, Cyclotomic(1));
}

ClassFunction regular_character(const GroupTable& G) {
  std::vector<Cyclotomic> v(G.num_classes(), Cyclotomic(0));
  v[0] = Cyclotomic(G.order());
  return ClassFunction(&G, std::move(v));
}

// ---------------------------------------------------- modular linear algebra

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 find_prime(u64 exponent, u64 min_value) {
  u64 k = min_value / exponent + 1;
  while (true) {
    u64 p = k * exponent + 1;
    if (p > min_value && is_prime(p)) return p;
    ++k;
  }
}

u64 primitive_root(u64 p) {
  u64 phi = p - 1;
  std::vector<u64> prime_factors;
  u64 m = phi;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (powmod(g, phi / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

struct Matrix {
  int n = 0;
  std::vector<u64> a;
  Matrix() = default;
  explicit Matrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
  u64& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  u64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Characteristic polynomial mod p via Hessenberg reduction.
std::vector<u64> char_poly(Matrix m, u64 p) {
  const int n = m.n;
  for (int k = 1; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m.at(i, k - 1) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, pivot), m.at(i, k));
    }
    u64 inv_piv = invmod(m.at(k, k - 1), p);
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k - 1) == 0) continue;
      u64 f = mulmod(m.at(i, k - 1), inv_piv, p);
      for (int j = 0; j < n; ++j)
        m.at(i, j) = (m.at(i, j) + p - mulmod(f, m.at(k, j), p)) % p;
      for (int j = 0; j < n; ++j)
        m.at(j, k) = (m.at(j, k) + mulmod(f, m.at(j, i), p)) % p;
    }
  }
  // p_k(x) = char poly of leading k x k block of the Hessenberg form
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // (x - h_{kk}) * p_{k-1}
    std::vector<u64> cur(polys[k - 1].size() + 1, 0);
    for (size_t i = 0; i < polys[k - 1].size(); ++i) {
      cur[i + 1] = (cur[i + 1] + polys[k - 1][i]) % p;
      cur[i] = (cur[i] + p - mulmod(m.at(k - 1, k - 1), polys[k - 1][i], p)) % p;
    }
    u64 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = mulmod(prod, m.at(i, i - 1), p);
      u64 coef = mulmod(m.at(i - 1, k - 1), prod, p);
      if (coef == 0) continue;
      for (size_t t = 0; t < polys[i - 1].size(); ++t)
        cur[t] = (cur[t] + p - mulmod(coef, polys[i - 1][t], p)) % p;
    }
    polys[k] = std::move(cur);
  }
  return polys[n];
}

std::vector<u64> poly_mod(const std::vector<u64>& f, const std::vector<u64>& g, u64 p) {
  std::vector<u64> r = f;
  while (r.size() >= g.size()) {
    u64 c = mulmod(r.back(), invmod(g.back(), p), p);
    size_t off = r.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i)
      r[off + i] = (r[off + i] + p - mulmod(c, g[i], p)) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return r;
}

std::vector<u64> poly_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  while (!b.empty()) {
    auto r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv_lead = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv_lead, p);
  }
  return a;
}

std::vector<u64> poly_powmod_x(u64 e, const std::vector<u64>& f, u64 p) {
  // x^e mod f
  std::vector<u64> result{1}, base{0, 1};
  base = poly_mod(base, f, p);
  while (e) {
    if (e & 1) {
      // result *= base mod f
      std::vector<u64> prod(result.size() + base.size() - 1, 0);
      for (size_t i = 0; i < result.size(); ++i)
        for (size_t j = 0; j < base.size(); ++j)
          prod[i + j] = (prod[i + j] + mulmod(result[i], base[j], p)) % p;
      result = poly_mod(prod, f, p);
      if (result.empty()) result = {0};
    }
    std::vector<u64> sq(base.size() * 2 - 1, 0);
    for (size_t i = 0; i < base.size(); ++i)
      for (size_t j = 0; j < base.size(); ++j)
        sq[i + j] = (sq[i + j] + mulmod(base[i], base[j], p)) % p;
    base = poly_mod(sq, f, p);
    if (base.empty()) base = {0};
    e >>= 1;
  }
  return result;
}

// All roots in F_p of a polynomial that splits into distinct linear factors
// after taking gcd with x^p - x.
void find_roots(const std::vector<u64>& f, u64 p, u64& rng,
                std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(mulmod(p - f[0] % p, invmod(f[1], p), p));
    return;
  }
  // split with gcd(f, (x+a)^((p-1)/2) - 1)
  while (true) {
    rng = rng * 6364136223846793005ull + 1442695040888963407ull;
    u64 shift = (rng >> 16) % p;
    // compute (x + shift)^((p-1)/2) mod f via powering x' = x + shift
    // substitute: compute g(x) = x^((p-1)/2) mod f(x - shift), then shift back.
    std::vector<u64> fs(f.size());
    {  // f(x - shift)
      std::vector<u64> acc{1};  // (x - shift)^k
      std::fill(fs.begin(), fs.end(), 0);
      for (size_t k = 0; k < f.size(); ++k) {
        for (size_t i = 0; i < acc.size(); ++i)
          fs[i] = (fs[i] + mulmod(f[k], acc[i], p)) % p;
        // acc *= (x - shift)
        std::vector<u64> nxt(acc.size() + 1, 0);
        for (size_t i = 0; i < acc.size(); ++i) {
          nxt[i + 1] = (nxt[i + 1] + acc[i]) % p;
          nxt[i] = (nxt[i] + mulmod(acc[i], p - shift % p, p)) % p;
        }
        acc = std::move(nxt);
      }
    }
    auto g = poly_powmod_x((p - 1) / 2, fs, p);
    if (g.empty()) g = {0};
    g[0] = (g[0] + p - 1) % p;
    while (!g.empty() && g.back() == 0) g.pop_back();
    auto d = poly_gcd(fs, g, p);
    if (d.size() > 1 && d.size() < fs.size()) {
      // quotient fs / d
      std::vector<u64> quot;
      {
        std::vector<u64> rem = fs;
        quot.assign(fs.size() - d.size() + 1, 0);
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
          u64 c = mulmod(rem[i + d.size() - 1], invmod(d.back(), p), p);
          quot[i] = c;
          for (size_t j = 0; j < d.size(); ++j)
            rem[i + j] = (rem[i + j] + p - mulmod(c, d[j], p)) % p;
        }
      }
      // shift roots back by +shift at the end: roots of fs are roots of f
      // minus... f(x - shift) = 0 at x = root+shift, so translate recursively
      std::vector<u64> sub_roots;
      find_roots(d, p, rng, sub_roots);
      find_roots(quot, p, rng, sub_roots);
      for (u64 r : sub_roots)
        out.push_back((r + p - shift % p) % p);
      return;
    }
  }
}

std::vector<u64> roots_of_char_poly(const std::vector<u64>& f, u64 p, u64& rng) {
  // keep only distinct roots: g = gcd(f, x^p - x)
  auto xp = poly_powmod_x(p, f, p);
  // x^p - x mod f
  std::vector<u64> h = xp;
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  while (!h.empty() && h.back() == 0) h.pop_back();
  auto g = poly_gcd(f, h, p);
  std::vector<u64> roots;
  find_roots(g, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Basis of the kernel of m (n x n) restricted to column space of basis B
// is handled by the caller; this solves kernel of a full matrix.
std::vector<std::vector<u64>> kernel_basis(Matrix m, u64 p) {
  const int n = m.n;
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    u64 inv_piv = invmod(m.at(rank, col), p);
    for (int j = 0; j < n; ++j) m.at(rank, j) = mulmod(m.at(rank, j), inv_piv, p);
    for (int i = 0; i < n; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      u64 f = m.at(i, col);
      for (int j = 0; j < n; ++j)
        m.at(i, j) = (m.at(i, j) + p - mulmod(f, m.at(rank, j), p)) % p;
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  std::vector<char> is_pivot(n, 0);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col_of_row[i]] = 1;
  std::vector<std::vector<u64>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<u64> v(n, 0);
    v[free_col] = 1;
    for (int i = 0; i < rank; ++i) {
      int pc = pivot_col_of_row[i];
      v[pc] = (p - m.at(i, free_col)) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

// ------------------------------------------------------------- Dixon method

CharacterTable character_table(const GroupTable& G, int cap) {
  if (G.order() > cap) throw CapExceeded("group order exceeds character table cap");
  const int n = G.order();
  const int r = G.num_classes();
  const int E = G.exponent();

  CharacterTable table;
  table.group = &G;
  if (r == 1) {
    table.irreducibles.push_back(trivial_character(G));
    table.degrees.push_back(1);
    return table;
  }

  const u64 p = find_prime(static_cast<u64>(E),
                           std::max<u64>(2 * static_cast<u64>(n), 1000));
  const u64 w = powmod(primitive_root(p), (p - 1) / static_cast<u64>(E), p);

  // Class algebra structure constants: a[i][j][k] with
  // C_i C_j = sum_k a[i][j][k] C_k, computed as
  // #\{ x in C_i : x^{-1} z_k in C_j \} for a representative z_k.
  std::vector<Matrix> class_mats(r, Matrix(r));
  const auto& classes = G.conjugacy_classes();
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Elt zk = G.class_rep(k);
      std::vector<int> cnt(r, 0);
      for (Elt x : classes[i]) ++cnt[G.class_of(G.mul(G.inv(x), zk))];
      for (int j = 0; j < r; ++j) class_mats[i].at(j, k) = cnt[j] % p;
    }
  // note: (M_i)_{jk} = a_{i,j,k} acting on omega vectors indexed by k.

  // Common one-dimensional eigenspaces via recursive random splitting.
  u64 rng = 0x853c49e6748fea9bull;
  std::vector<std::vector<u64>> omegas;  // each: omega(C_k) for k=0..r-1

  struct Frame { std::vector<std::vector<u64>> basis; };
  std::vector<Frame> stack;
  {
    Frame full;
    for (int i = 0; i < r; ++i) {
      std::vector<u64> e(r, 0);
      e[i] = 1;
      full.basis.push_back(std::move(e));
    }
    stack.push_back(std::move(full));
  }

  auto apply = [&](const Matrix& m, const std::vector<u64>& v) {
    std::vector<u64> out(r, 0);
    for (int j = 0; j < r; ++j) {
      unsigned __int128 acc = 0;
      for (int k = 0; k < r; ++k) acc += static_cast<unsigned __int128>(m.at(j, k)) * v[k];
      out[j] = static_cast<u64>(acc % p);
    }
    return out;
  };

  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    const int d = static_cast<int>(fr.basis.size());
    if (d == 1) {
      omegas.push_back(std::move(fr.basis[0]));
      continue;
    }
    // Random combination of class matrices restricted to the subspace.
    // Row-reduce the basis to find pivot coordinates for re-expression.
    std::vector<std::vector<u64>> red = fr.basis;
    std::vector<int> pivots;
    {
      int row = 0;
      for (int col = 0; col < r && row < d; ++col) {
        int piv = -1;
        for (int i = row; i < d; ++i)
          if (red[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(red[row], red[piv]);
        u64 ip = invmod(red[row][col], p);
        for (int j = 0; j < r; ++j) red[row][j] = mulmod(red[row][j], ip, p);
        for (int i = 0; i < d; ++i) {
          if (i == row || red[i][col] == 0) continue;
          u64 f = red[i][col];
          for (int j = 0; j < r; ++j)
            red[i][j] = (red[i][j] + p - mulmod(f, red[row][j], p)) % p;
        }
        pivots.push_back(col);
        ++row;
      }
    }
    // Use the reduced basis from here on; coordinates are read off pivots.
    bool split_done = false;
    for (int attempt = 0; attempt < 64 && !split_done; ++attempt) {
      std::vector<u64> coef(r);
      for (int i = 0; i < r; ++i) {
        rng = rng * 6364136223846793005ull + 1442695040888963407ull;
        coef[i] = (rng >> 17) % p;
      }
      // restriction matrix: image of each basis vector, in coordinates
      Matrix restr(d);
      for (int b = 0; b < d; ++b) {
        std::vector<u64> img(r, 0);
        for (int i = 0; i < r; ++i) {
          if (coef[i] == 0) continue;
          auto mi = apply(class_mats[i], red[b]);
          for (int j = 0; j < r; ++j)
            img[j] = (img[j] + mulmod(coef[i], mi[j], p)) % p;
        }
        for (int t = 0; t < d; ++t) restr.at(t, b) = img[pivots[t]];
      }
      auto cp = char_poly(restr, p);
      auto roots = roots_of_char_poly(cp, p, rng);
      if (roots.size() < 2 && d > 1) continue;  // try another combination
      int pieces = 0;
      std::vector<Frame> new_frames;
      for (u64 lambda : roots) {
        Matrix shifted = restr;
        for (int t = 0; t < d; ++t)
          shifted.at(t, t) = (shifted.at(t, t) + p - lambda) % p;
        auto ker = kernel_basis(shifted, p);
        if (ker.empty()) continue;
        Frame nf;
        for (const auto& kv : ker) {
          std::vector<u64> vec(r, 0);
          for (int b = 0; b < d; ++b) {
            if (kv[b] == 0) continue;
            for (int j = 0; j < r; ++j)
              vec[j] = (vec[j] + mulmod(kv[b], red[b][j], p)) % p;
          }
          nf.basis.push_back(std::move(vec));
        }
        ++pieces;
        new_frames.push_back(std::move(nf));
      }
      if (pieces >= 2) {
        for (auto& nf : new_frames) stack.push_back(std::move(nf));
        split_done = true;
      }
    }
    if (!split_done)
      throw Error("character table eigenspace splitting failed");
  }

  if (static_cast<int>(omegas.size()) != r)
    throw Error("wrong number of central characters");

  // Normalize: omega(C_0) = 1 (identity class).
  for (auto& om : omegas) {
    if (om[0] == 0) throw Error("degenerate central character");
    u64 s = invmod(om[0], p);
    for (auto& v : om) v = mulmod(v, s, p);
  }

  // Degrees and modular character values.
  std::vector<long long> degs(r);
  std::vector<std::vector<u64>> chi_mod(r, std::vector<u64>(r));
  for (int u = 0; u < r; ++u) {
    u64 t = 0;
    for (int j = 0; j < r; ++j) {
      int jinv = G.class_of_inverses(j);
      t = (t + mulmod(mulmod(omegas[u][j], omegas[u][jinv], p),
                      invmod(G.class_size(j) % p, p), p)) % p;
    }
    u64 d2 = mulmod(static_cast<u64>(n) % p, invmod(t, p), p);
    long long deg = -1;
    for (long long cand = 1; cand * cand <= n; ++cand)
      if (static_cast<u64>(cand) * cand % p == d2) { deg = cand; break; }
    if (deg < 0) throw Error("no integral degree matches");
    degs[u] = deg;
    for (int j = 0; j < r; ++j)
      chi_mod[u][j] = mulmod(mulmod(static_cast<u64>(deg) % p, omegas[u][j], p),
                             invmod(G.class_size(j) % p, p), p);
  }

  // Exact lift: eigenvalue multiplicities of the class representatives.
  std::vector<ClassFunction> irreducibles;
  for (int u = 0; u < r; ++u) {
    std::vector<Cyclotomic> vals(r);
    for (int j = 0; j < r; ++j) {
      const int m = G.element_order(G.class_rep(j));
      const u64 lam = powmod(w, static_cast<u64>(E / m), p);
      const u64 minv = invmod(static_cast<u64>(m) % p, p);
      Cyclotomic value(0);
      for (int k = 0; k < m; ++k) {
        u64 acc = 0;
        for (int t = 0; t < m; ++t) {
          int jt = G.class_power(j, t);
          u64 lam_pow = powmod(lam, static_cast<u64>((static_cast<long long>(m) - k) * t % m), p);
          acc = (acc + mulmod(chi_mod[u][jt], lam_pow, p)) % p;
        }
        u64 ck = mulmod(acc, minv, p);
        if (ck > static_cast<u64>(degs[u]))
          throw Error("eigenvalue multiplicity out of range");
        if (ck != 0)
          value += Cyclotomic(static_cast<long long>(ck)) *
                   Cyclotomic::root_of_unity(E, static_cast<long long>(k) * (E / m));
      }
      vals[j] = std::move(value);
    }
    irreducibles.emplace_back(&G, std::move(vals));
  }

  // Deterministic order: trivial first, then by (degree, lexicographic values).
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  auto triv = trivial_character(G);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    const auto& va = irreducibles[a].class_values();
    const auto& vb = irreducibles[b].class_values();
    for (int c = 0; c < r; ++c) {
      if (va[c] != vb[c]) return va[c] < vb[c];
    }
    return false;
  });
  table.irreducibles.reserve(r);
  table.degrees.reserve(r);
  table.irreducibles.push_back(triv);
  table.degrees.push_back(1);
  for (int i : idx) {
    if (irreducibles[i] == triv) continue;
    table.irreducibles.push_back(irreducibles[i]);
    table.degrees.push_back(degs[i]);
  }
  if (static_cast<int>(table.irreducibles.size()) != r)
    throw Error("trivial character missing from computed table");
  long long sum_sq = 0;
  for (long long d : table.degrees) sum_sq += d * d;
  if (sum_sq != n) throw Error("degree squares do not sum to the group order");
  return table;
}

}  // namespace trifold
