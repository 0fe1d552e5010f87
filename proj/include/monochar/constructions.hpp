// Named group recipes, parsed from strings such as "dihedral:8",
// "heis_sd:5,3" or "product:symmetric:4*cyclic:2".
//
// Groups given by a multiplication rule rather than permutations are turned
// into permutation groups through their right regular representation.
#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monochar/group.hpp"
#include "monochar/numbers.hpp"

namespace monochar {

struct Construction {
  GroupPtr group;
  std::string recipe;
  /// Anything chosen during construction that a reader needs to reproduce it.
  std::string note;
};

namespace detail {

/// Right regular representation of an abstract group on {0..n-1}.
inline GroupPtr regular_representation(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                       const std::vector<std::size_t>& gens, const BuildOptions& opts) {
  std::vector<Perm> perms;
  for (auto g : gens) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(mul(x, g));
    perms.push_back(Perm(std::move(img)));
  }
  if (perms.empty()) perms.push_back(Perm::identity(n));
  return Group::build(perms, opts);
}

/// Disjoint union action of the listed permutation groups.
inline GroupPtr direct_product(const std::vector<GroupPtr>& factors, const BuildOptions& opts) {
  std::size_t degree = 0, order = 1;
  for (const auto& f : factors) {
    degree += f->degree();
    order *= f->order();
  }
  if (order > opts.order_cap) throw Error("direct product exceeds the order cap");
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (auto s : f->generators()) {
      std::vector<Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
      const auto& p = f->element(s);
      for (std::size_t i = 0; i < f->degree(); ++i) img[offset + i] = static_cast<Point>(offset + p[i]);
      gens.push_back(Perm(std::move(img)));
    }
    offset += f->degree();
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return Group::build(gens, opts);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::uint64_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error("bad " + what + ": '" + s + "'");
  return std::stoull(s);
}

struct Mat2 {
  std::uint64_t a, b, c, d;  // [[a b] [c d]]
};

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint64_t p) {
  return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p, (x.c * y.a + x.d * y.c) % p,
          (x.c * y.b + x.d * y.d) % p};
}

}  // namespace detail

inline GroupPtr cyclic_group(std::size_t n, const BuildOptions& opts = {}) {
  if (n == 0) throw Error("cyclic group order must be positive");
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Group::build({Perm(std::move(img))}, opts);
}

/// Dihedral group of the given order 2n, acting on the n-gon for n >= 3.
inline GroupPtr dihedral_group(std::size_t order, const BuildOptions& opts = {}) {
  if (order < 2 || order % 2) throw Error("dihedral group order must be even and at least 2");
  const std::size_t n = order / 2;
  if (n < 3) {
    // D2 = C2, D4 = C2 x C2 on the regular representation.
    if (n == 1) return cyclic_group(2, opts);
    return detail::direct_product({cyclic_group(2, opts), cyclic_group(2, opts)}, opts);
  }
  std::vector<Point> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return Group::build({Perm(std::move(rot)), Perm(std::move(ref))}, opts);
}

inline GroupPtr symmetric_group(std::size_t n, const BuildOptions& opts = {}) {
  if (n == 0) throw Error("symmetric group degree must be positive");
  if (n == 1) return Group::build({Perm::identity(1)}, opts);
  std::vector<Point> cyc(n), tr(n);
  for (std::size_t i = 0; i < n; ++i) {
    cyc[i] = static_cast<Point>((i + 1) % n);
    tr[i] = static_cast<Point>(i);
  }
  std::swap(tr[0], tr[1]);
  return Group::build({Perm(std::move(cyc)), Perm(std::move(tr))}, opts);
}

/// Generated by the 3-cycles (0 1 i).
inline GroupPtr alternating_group(std::size_t n, const BuildOptions& opts = {}) {
  if (n == 0) throw Error("alternating group degree must be positive");
  if (n < 3) return Group::build({Perm::identity(n)}, opts);
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, "(0 1 " + std::to_string(i) + ")"));
  return Group::build(gens, opts);
}

/// Quaternion group on its regular representation.
inline GroupPtr quaternion_group(const BuildOptions& opts = {}) {
  // Element (s, u) = s * u with s in {+1,-1} (bit 2) and u in {1, i, j, k} (bits 0-1).
  static const int table[4][4][2] = {
      // {sign flip, unit}: rows u, columns v, entry u*v
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  auto mul = [](std::size_t x, std::size_t y) -> std::size_t {
    const auto& e = table[x & 3][y & 3];
    std::size_t sign = ((x >> 2) ^ (y >> 2) ^ static_cast<std::size_t>(e[0])) & 1;
    return (sign << 2) | static_cast<std::size_t>(e[1]);
  };
  return detail::regular_representation(8, mul, {1, 2}, opts);
}

/// SL(2,3) acting on the eight nonzero vectors of F_3^2.
inline GroupPtr sl2_3_group(const BuildOptions& opts = {}) {
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto act = [&](int a, int b, int c, int d) {
    std::vector<Point> img(8);
    for (std::size_t i = 0; i < 8; ++i) {
      auto [x, y] = vecs[i];
      int nx = ((a * x + b * y) % 3 + 3) % 3, ny = ((c * x + d * y) % 3 + 3) % 3;
      img[i] = static_cast<Point>(std::find(vecs.begin(), vecs.end(), std::make_pair(nx, ny)) - vecs.begin());
    }
    return Perm(std::move(img));
  };
  return Group::build({act(1, 1, 0, 1), act(0, -1, 1, 0)}, opts);
}

/// Direct product of cyclic groups of the given orders, each on its own points.
inline GroupPtr abelian_group(const std::vector<std::size_t>& orders, const BuildOptions& opts = {}) {
  if (orders.empty()) throw Error("abelian group needs at least one factor");
  std::vector<GroupPtr> f;
  for (auto n : orders) f.push_back(cyclic_group(n, opts));
  return detail::direct_product(f, opts);
}

/// C_q x| C_r acting on q points by x -> x + 1 and x -> a x with a of order r mod q.
inline GroupPtr frobenius_group(std::uint64_t q, std::uint64_t r, const BuildOptions& opts = {}) {
  if (!is_prime(q)) throw Error("frobenius: q must be prime");
  if (r < 1 || (q - 1) % r) throw Error("frobenius: r must divide q - 1");
  std::uint64_t a = 0;
  for (std::uint64_t g = 1; g < q && !a; ++g) {
    std::uint64_t x = 1, k = 0;
    do {
      x = x * g % q;
      ++k;
    } while (x != 1);
    if (k == r) a = g;
  }
  std::vector<Point> t(q), m(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    t[x] = static_cast<Point>((x + 1) % q);
    m[x] = static_cast<Point>(x * a % q);
  }
  return Group::build({Perm(std::move(t)), Perm(std::move(m))}, opts);
}

/**
 * The extraspecial group p^{1+2} of exponent p (p odd), as pairs (v, c) in
 * F_p^2 x F_p with (v, c)(w, d) = (v + w, c + d + w(v, w)/2), where
 * w(v, w) = v1 w2 - v2 w1.
 */
inline GroupPtr extraspecial_group(std::uint64_t p, const BuildOptions& opts = {}) {
  if (!is_prime(p) || p == 2) throw Error("extraspecial: p must be an odd prime");
  const std::size_t n = p * p * p;
  const std::uint64_t half = (p + 1) / 2;
  auto mul = [p, half](std::size_t x, std::size_t y) -> std::size_t {
    std::uint64_t a = x % p, b = x / p % p, c = x / (p * p);
    std::uint64_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    std::uint64_t form = (a * b2 + p * p - b * a2 % p) % p;
    std::uint64_t cc = (c + c2 + half * form) % p;
    return (a + a2) % p + p * ((b + b2) % p) + p * p * cc;
  };
  if (n > opts.order_cap) throw Error("extraspecial group exceeds the order cap");
  return detail::regular_representation(n, mul, {1, p}, opts);
}

/**
 * p^{1+2} x| C_k where the generator of C_k acts by (v, c) -> (M v, c) for a
 * matrix M in SL(2,p) of order k. M is the first such matrix in
 * lexicographic order of its entries (a, b, c, d); it is reported in note.
 */
inline Construction heisenberg_semidirect(std::uint64_t p, std::uint64_t k, const BuildOptions& opts = {}) {
  if (!is_prime(p) || p == 2) throw Error("heis_sd: p must be an odd prime");
  if (k < 1) throw Error("heis_sd: k must be positive");
  std::optional<detail::Mat2> found;
  for (std::uint64_t a = 0; a < p && !found; ++a)
    for (std::uint64_t b = 0; b < p && !found; ++b)
      for (std::uint64_t c = 0; c < p && !found; ++c)
        for (std::uint64_t d = 0; d < p && !found; ++d) {
          if ((a * d + p * p - b * c % p) % p != 1) continue;
          detail::Mat2 m{a, b, c, d}, x = m;
          std::uint64_t ord = 1;
          while (!(x.a == 1 && x.b == 0 && x.c == 0 && x.d == 1)) {
            x = detail::mat_mul(x, m, p);
            ++ord;
          }
          if (ord == k) found = m;
        }
  if (!found) throw Error("heis_sd: SL(2," + std::to_string(p) + ") has no element of order " + std::to_string(k));
  const std::size_t base = p * p * p, n = base * k;
  if (n > opts.order_cap) throw Error("heis_sd group exceeds the order cap");
  // powers[j] = M^j
  std::vector<detail::Mat2> powers{{1, 0, 0, 1}};
  for (std::uint64_t j = 1; j < k; ++j) powers.push_back(detail::mat_mul(powers.back(), *found, p));
  const std::uint64_t half = (p + 1) / 2;
  auto heis = [p, half](std::size_t x, std::size_t y) -> std::size_t {
    std::uint64_t a = x % p, b = x / p % p, c = x / (p * p);
    std::uint64_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    std::uint64_t form = (a * b2 + p * p - b * a2 % p) % p;
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + half * form) % p);
  };
  auto act = [&, p](std::uint64_t j, std::size_t y) -> std::size_t {
    const auto& m = powers[j];
    std::uint64_t a = y % p, b = y / p % p, c = y / (p * p);
    return (m.a * a + m.b * b) % p + p * ((m.c * a + m.d * b) % p) + p * p * c;
  };
  // Element (h, j) = h * t^j with t h t^-1 = M(h): (h, j)(h', l) = (h M^j(h'), j + l).
  auto mul = [&, base, k](std::size_t x, std::size_t y) -> std::size_t {
    std::size_t h = x % base, j = x / base, h2 = y % base, l = y / base;
    return heis(h, act(j, h2)) + base * ((j + l) % k);
  };
  Construction out;
  out.group = detail::regular_representation(n, mul, {1, p, base}, opts);
  out.recipe = "heis_sd:" + std::to_string(p) + "," + std::to_string(k);
  const auto& m = *found;
  out.note = "action matrix [[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
             std::to_string(m.d) + "]] mod " + std::to_string(p);
  return out;
}

/// Group file: "degree <n>" then one generator per line in cycle notation; '#' comments.
inline GroupPtr group_from_stream(std::istream& in, const BuildOptions& opts = {}) {
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!degree) {
      std::istringstream ss(line);
      std::string kw;
      std::size_t n = 0;
      if (!(ss >> kw >> n) || kw != "degree" || n == 0)
        throw Error("group file line " + std::to_string(lineno) + ": expected 'degree <n>'");
      degree = n;
      continue;
    }
    try {
      gens.push_back(Perm::from_cycles(*degree, line));
    } catch (const Error& e) {
      throw Error("group file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!degree) throw Error("group file is missing the 'degree <n>' line");
  if (gens.empty()) gens.push_back(Perm::identity(*degree));
  return Group::build(gens, opts);
}

inline GroupPtr group_from_file(const std::string& path, const BuildOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  return group_from_stream(in, opts);
}

/**
 * Parses a recipe:
 *   cyclic:n  dihedral:2n  symmetric:n  alternating:n  q8  sl2_3
 *   extraspecial:p  heis_sd:p,k  frobenius:q,r  abelian:n1,n2,...
 *   product:A*B*...  file:path
 */
inline Construction construct(const std::string& recipe, const BuildOptions& opts = {}) {
  using detail::parse_count;
  const auto colon = recipe.find(':');
  const std::string kind = recipe.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : recipe.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw Error("recipe '" + kind + "' needs an argument");
  };
  Construction c;
  c.recipe = recipe;
  if (kind == "cyclic") {
    need_arg();
    c.group = cyclic_group(parse_count(arg, "order"), opts);
  } else if (kind == "dihedral") {
    need_arg();
    c.group = dihedral_group(parse_count(arg, "order"), opts);
  } else if (kind == "symmetric") {
    need_arg();
    auto n = parse_count(arg, "degree");
    if (n > 7) throw Error("symmetric group degree above 7 exceeds the order cap");
    c.group = symmetric_group(n, opts);
  } else if (kind == "alternating") {
    need_arg();
    auto n = parse_count(arg, "degree");
    if (n > 7) throw Error("alternating group degree above 7 exceeds the order cap");
    c.group = alternating_group(n, opts);
  } else if (kind == "q8") {
    c.group = quaternion_group(opts);
  } else if (kind == "sl2_3") {
    c.group = sl2_3_group(opts);
  } else if (kind == "extraspecial") {
    need_arg();
    c.group = extraspecial_group(parse_count(arg, "prime"), opts);
  } else if (kind == "heis_sd") {
    need_arg();
    auto parts = detail::split(arg, ',');
    if (parts.size() != 2) throw Error("heis_sd needs p,k");
    c = heisenberg_semidirect(parse_count(parts[0], "prime"), parse_count(parts[1], "order"), opts);
  } else if (kind == "frobenius") {
    need_arg();
    auto parts = detail::split(arg, ',');
    if (parts.size() != 2) throw Error("frobenius needs q,r");
    c.group = frobenius_group(parse_count(parts[0], "prime"), parse_count(parts[1], "order"), opts);
  } else if (kind == "abelian") {
    need_arg();
    std::vector<std::size_t> orders;
    for (const auto& s : detail::split(arg, ',')) orders.push_back(parse_count(s, "order"));
    c.group = abelian_group(orders, opts);
  } else if (kind == "product") {
    need_arg();
    std::vector<GroupPtr> factors;
    std::vector<std::string> notes;
    for (const auto& s : detail::split(arg, '*')) {
      auto f = construct(s, opts);
      factors.push_back(f.group);
      if (!f.note.empty()) notes.push_back(s + ": " + f.note);
    }
    c.group = detail::direct_product(factors, opts);
    for (const auto& n : notes) c.note += (c.note.empty() ? "" : "; ") + n;
  } else if (kind == "dade_vdw") {
    throw Error("the order 2^9*7 M-group with non-M normal subgroups of index 2 has no generating set in this build");
  } else if (kind == "file") {
    need_arg();
    c.group = group_from_file(arg, opts);
  } else {
    throw Error("unknown group recipe: '" + recipe + "'");
  }
  c.recipe = recipe;
  return c;
}

}  // namespace monochar
