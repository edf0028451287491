#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "trifold/catalog.hpp"
#include "trifold/error.hpp"
#include "trifold/rational.hpp"

namespace trifold {

namespace {

// Left-multiplication permutations of selected generators on a normal-form
// element list, fed through the BFS closure for the uniform element order.
template <typename Mul>
GroupTable from_normal_form(int order, Mul&& mul, const std::vector<int>& gens) {
  std::vector<std::vector<int>> perms;
  for (int g : gens) {
    std::vector<int> p(order);
    for (int x = 0; x < order; ++x) p[x] = mul(g, x);
    perms.push_back(std::move(p));
  }
  return from_permutation_generators(perms, std::max(order + 1, kDefaultOrderCap));
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw BadParams("cyclic group needs n >= 1");
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return from_permutation_generators({rot}, std::max(n + 1, kDefaultOrderCap));
}

GroupTable dihedral_group(int n) {
  if (n < 1) throw BadParams("dihedral group needs n >= 1");
  if (n == 1) return cyclic_group(2);
  if (n == 2)
    return from_permutation_generators({{1, 0, 2, 3}, {0, 1, 3, 2}});
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_permutation_generators({rot, refl});
}

GroupTable dicyclic_group(int order) {
  if (order < 8 || order % 4 != 0) throw BadParams("dicyclic order must be 4n >= 8");
  const int m = order / 2;  // a has order m = 2n
  const int n = m / 2;
  // elements a^i b^e encoded as i + m*e
  auto mul = [&](int x, int y) {
    int i = x % m, e = x / m, j = y % m, f = y / m;
    // b a^j = a^{-j} b,  b^2 = a^n
    if (e == 0) return (i + j) % m + m * f;
    int base = ((i - j) % m + m) % m;
    if (f == 0) return base + m;
    return (base + n) % m;
  };
  return from_normal_form(order, mul, {1, m});
}

// a^M = 1, b^2 = 1, b a b = a^t  (t^2 = 1 mod M)
GroupTable two_generator_metacyclic(int M, int t) {
  auto mul = [&](int x, int y) {
    int i = x % M, e = x / M, j = y % M, f = y / M;
    long long jj = (e == 0) ? j : (static_cast<long long>(t) * j) % M;
    return static_cast<int>((i + jj) % M) + M * ((e + f) % 2);
  };
  return from_normal_form(2 * M, mul, {1, M});
}

GroupTable semidihedral_group(int order) {
  if (order < 16 || (order & (order - 1)) != 0)
    throw BadParams("semidihedral order must be 2^n >= 16");
  const int M = order / 2;
  return two_generator_metacyclic(M, M / 2 - 1);
}

GroupTable m16_group() { return two_generator_metacyclic(8, 5); }

GroupTable symmetric_group(int k) {
  if (k < 1 || k > 4) throw BadParams("symmetric group supported for k <= 4");
  if (k == 1) return cyclic_group(1);
  std::vector<int> cyc(k), swap01(k);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
  return from_permutation_generators({cyc, swap01});
}

GroupTable alternating_group(int k) {
  if (k < 1 || k > 4) throw BadParams("alternating group supported for k <= 4");
  if (k <= 2) return cyclic_group(1);
  if (k == 3) return from_permutation_generators({{1, 2, 0}});
  return from_permutation_generators({{1, 2, 0, 3}, {1, 0, 3, 2}});
}

GroupTable holomorph_cyclic(int n) {
  if (n < 1) throw BadParams("holomorph needs n >= 1");
  if (n == 1) return cyclic_group(1);
  std::vector<std::vector<int>> gens;
  std::vector<int> trans(n);
  for (int i = 0; i < n; ++i) trans[i] = (i + 1) % n;
  gens.push_back(trans);
  // multiplier maps for a generating set of (Z/n)^*
  int unit_count = 0;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) ++unit_count;
  std::set<int> have{1};
  for (int u = 2; u < n && static_cast<int>(have.size()) < unit_count; ++u) {
    if (std::gcd(u, n) != 1 || have.count(u)) continue;
    std::vector<int> mulmap(n);
    for (int i = 0; i < n; ++i)
      mulmap[i] = static_cast<int>((static_cast<long long>(u) * i) % n);
    gens.push_back(mulmap);
    std::vector<int> stack{u};
    have.insert(u);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : std::vector<int>(have.begin(), have.end())) {
        int prod = static_cast<int>((static_cast<long long>(v) * w) % n);
        if (!have.count(prod)) { have.insert(prod); stack.push_back(prod); }
      }
    }
  }
  return from_permutation_generators(gens);
}

int f3_vec_index(int a, int b) { return (3 * a + b) - 1; }  // (a,b) != (0,0)

GroupTable matrix_group_f3(const std::vector<std::array<int, 4>>& mats) {
  // action on the 8 nonzero vectors of F_3^2
  std::vector<std::vector<int>> perms;
  for (const auto& m : mats) {
    std::vector<int> p(8);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        int x = (m[0] * a + m[1] * b) % 3;
        int y = (m[2] * a + m[3] * b) % 3;
        p[f3_vec_index(a, b)] = f3_vec_index(x, y);
      }
    perms.push_back(std::move(p));
  }
  return from_permutation_generators(perms);
}

// Quaternion units with coordinates in (1/2)Z[sqrt(2)], enough to hold the
// binary octahedral group.
struct QCoord {
  Rational a, b;  // a + b*sqrt(2)
  friend QCoord operator+(const QCoord& x, const QCoord& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QCoord operator-(const QCoord& x, const QCoord& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QCoord operator*(const QCoord& x, const QCoord& y) {
    return {x.a * y.a + Rational(2) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator<(const QCoord& x, const QCoord& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator==(const QCoord& x, const QCoord& y) {
    return x.a == y.a && x.b == y.b;
  }
};

struct Quat {
  std::array<QCoord, 4> c;  // 1, i, j, k components
  friend Quat operator*(const Quat& p, const Quat& q) {
    const auto& a = p.c;
    const auto& b = q.c;
    Quat r;
    r.c[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
    r.c[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
    r.c[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
    r.c[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
    return r;
  }
  friend bool operator<(const Quat& x, const Quat& y) {
    for (int i = 0; i < 4; ++i)
      if (!(x.c[i] == y.c[i])) return x.c[i] < y.c[i];
    return false;
  }
};

GroupTable binary_octahedral_group() {
  Quat one{{QCoord{1, 0}, QCoord{0, 0}, QCoord{0, 0}, QCoord{0, 0}}};
  // (1+i)/sqrt(2) and (1+i+j+k)/2
  Quat a{{QCoord{0, Rational(1, 2)}, QCoord{0, Rational(1, 2)}, QCoord{0, 0},
          QCoord{0, 0}}};
  Quat b{{QCoord{Rational(1, 2), 0}, QCoord{Rational(1, 2), 0},
          QCoord{Rational(1, 2), 0}, QCoord{Rational(1, 2), 0}}};

  std::map<Quat, int> index;
  std::vector<Quat> units{one};
  index[one] = 0;
  for (size_t head = 0; head < units.size(); ++head) {
    for (const Quat& g : {a, b}) {
      Quat w = units[head] * g;
      if (index.emplace(w, static_cast<int>(units.size())).second)
        units.push_back(w);
    }
  }
  if (units.size() != 48) throw Error("binary octahedral closure has wrong size");
  std::vector<std::vector<int>> perms;
  for (const Quat& g : {a, b}) {
    std::vector<int> p(48);
    for (int x = 0; x < 48; ++x) p[x] = index.at(g * units[x]);
    perms.push_back(std::move(p));
  }
  return from_permutation_generators(perms);
}

}  // namespace

GroupTable make_named(Family family, int param) {
  switch (family) {
    case Family::cyclic: return cyclic_group(param);
    case Family::dihedral: return dihedral_group(param);
    case Family::dicyclic: return dicyclic_group(param);
    case Family::semidihedral: return semidihedral_group(param);
    case Family::m16: return m16_group();
    case Family::quaternion: return dicyclic_group(8);
    case Family::symmetric: return symmetric_group(param);
    case Family::alternating: return alternating_group(param);
    case Family::holomorph_cyclic: return holomorph_cyclic(param);
    case Family::gl2_3:
      return matrix_group_f3({{0, 2, 1, 0}, {1, 1, 0, 1}, {1, 0, 0, 2}});
    case Family::sl2_3:
      return matrix_group_f3({{0, 2, 1, 0}, {1, 1, 0, 1}});
    case Family::binary_octahedral: return binary_octahedral_group();
  }
  throw UnsupportedFamily("unknown family");
}

GroupTable direct_product(const GroupTable& G, const GroupTable& H) {
  const int ng = G.order(), nh = H.order();
  const int n = ng * nh;
  std::vector<Elt> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int g = G.mul(a / nh, b / nh);
      int h = H.mul(a % nh, b % nh);
      mult[static_cast<size_t>(a) * n + b] = g * nh + h;
    }
  std::vector<Elt> gens;
  for (Elt g : G.generators()) gens.push_back(g * nh);
  for (Elt h : H.generators()) gens.push_back(h);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GroupTable::from_mult_table(n, std::move(mult), std::move(gens));
}

namespace {

bool is_automorphism(const GroupTable& N, const std::vector<Elt>& sigma) {
  if (static_cast<int>(sigma.size()) != N.order()) return false;
  std::vector<char> hit(N.order(), 0);
  for (Elt v : sigma) {
    if (v < 0 || v >= N.order() || hit[v]) return false;
    hit[v] = 1;
  }
  if (sigma[GroupTable::id] != GroupTable::id) return false;
  for (Elt x = 0; x < N.order(); ++x)
    for (Elt y = 0; y < N.order(); ++y)
      if (sigma[N.mul(x, y)] != N.mul(sigma[x], sigma[y])) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Elt>> action_from_generator_images(
    const GroupTable& N, const GroupTable& H,
    const std::vector<std::vector<Elt>>& gen_images) {
  const auto& gens = H.generators();
  if (gen_images.size() != gens.size())
    throw BadParams("one automorphism per generator required");
  for (const auto& sigma : gen_images)
    if (!is_automorphism(N, sigma))
      throw NotAnAutomorphism("generator image is not an automorphism");

  std::vector<std::vector<Elt>> action(H.order());
  std::vector<char> known(H.order(), 0);
  std::vector<Elt> ident(N.order());
  std::iota(ident.begin(), ident.end(), 0);
  action[GroupTable::id] = ident;
  known[GroupTable::id] = 1;
  std::vector<Elt> queue{GroupTable::id};
  for (size_t head = 0; head < queue.size(); ++head) {
    Elt h = queue[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Elt hg = H.mul(h, gens[gi]);
      if (known[hg]) continue;
      // sigma_{h g} = sigma_h o sigma_g
      std::vector<Elt> comp(N.order());
      for (Elt x = 0; x < N.order(); ++x) comp[x] = action[h][gen_images[gi][x]];
      action[hg] = std::move(comp);
      known[hg] = 1;
      queue.push_back(hg);
    }
  }
  return action;
}

GroupTable semidirect_product(const GroupTable& N, const GroupTable& H,
                              const std::vector<std::vector<Elt>>& action) {
  if (static_cast<int>(action.size()) != H.order())
    throw BadParams("action must assign an automorphism to every element of H");
  for (const auto& sigma : action)
    if (!is_automorphism(N, sigma))
      throw NotAnAutomorphism("action image is not an automorphism");
  for (Elt h1 = 0; h1 < H.order(); ++h1)
    for (Elt h2 = 0; h2 < H.order(); ++h2) {
      Elt h12 = H.mul(h1, h2);
      for (Elt x = 0; x < N.order(); ++x)
        if (action[h12][x] != action[h1][action[h2][x]])
          throw NotAnAutomorphism("action is not a homomorphism into Aut(N)");
    }

  const int nn = N.order(), nh = H.order();
  const int n = nn * nh;
  std::vector<Elt> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int n1 = a / nh, h1 = a % nh, n2 = b / nh, h2 = b % nh;
      int nr = N.mul(n1, action[h1][n2]);
      int hr = H.mul(h1, h2);
      mult[static_cast<size_t>(a) * n + b] = nr * nh + hr;
    }
  std::vector<Elt> gens;
  for (Elt g : N.generators()) gens.push_back(g * nh);
  for (Elt h : H.generators()) gens.push_back(h);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GroupTable::from_mult_table(n, std::move(mult), std::move(gens));
}

GroupTable central_product(const GroupTable& G1, const GroupTable& G2,
                           const std::vector<std::pair<Elt, Elt>>& phi) {
  // domain and image must be central subgroups, phi an isomorphism
  std::vector<Elt> u1, u2;
  for (auto [a, b] : phi) { u1.push_back(a); u2.push_back(b); }
  auto check_central_subgroup = [](const GroupTable& G, std::vector<Elt> u) {
    std::sort(u.begin(), u.end());
    if (u.empty() || u[0] != GroupTable::id) return false;
    if (G.closure(u) != u) return false;
    for (Elt x : u)
      for (Elt g = 0; g < G.order(); ++g)
        if (G.mul(x, g) != G.mul(g, x)) return false;
    return true;
  };
  if (!check_central_subgroup(G1, u1) || !check_central_subgroup(G2, u2))
    throw NotCentral("glued subgroups must be central");
  std::map<Elt, Elt> map;
  for (auto [a, b] : phi) {
    if (!map.emplace(a, b).second) throw NotIsomorphism("phi not well defined");
  }
  std::set<Elt> image(u2.begin(), u2.end());
  if (image.size() != phi.size()) throw NotIsomorphism("phi not injective");
  for (auto [a, b] : phi)
    for (auto [c, d] : phi) {
      auto it = map.find(G1.mul(a, c));
      if (it == map.end() || it->second != G2.mul(b, d))
        throw NotIsomorphism("phi is not a homomorphism");
    }

  GroupTable prod = direct_product(G1, G2);
  const int nh = G2.order();
  // N = { (u, phi(u)^{-1}) }
  std::vector<Elt> nmembers;
  for (auto [a, b] : phi) nmembers.push_back(a * nh + G2.inv(b));
  std::sort(nmembers.begin(), nmembers.end());
  Subgroup N;
  N.parent = &prod;
  N.members = std::move(nmembers);
  auto [Q, images] = quotient(prod, N);
  (void)images;
  return Q;
}

}  // namespace trifold
