// Class functions over F_P, exact irreducible character tables by
// Dixon's method, and the operations on characters: inner products,
// induction, restriction, lifting, kernels, products, inertia groups
// and the Mackey decomposition.
//
// Values are residues of the cyclotomic integers under the group's field
// reduction. Anything known to be a rational integer of absolute value
// below P/2 (degrees, inner products, multiplicities) is recovered exactly.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "monochar/cyclotomic.hpp"
#include "monochar/group.hpp"

namespace monochar {

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<Residue> values) : group_(std::move(g)), values_(std::move(values)) {
    if (values_.size() != group_->num_classes()) throw Error("class function has the wrong number of values");
  }

  static ClassFunction constant(const GroupPtr& g, std::int64_t v) {
    return ClassFunction(g, std::vector<Residue>(g->num_classes(), g->field().from_int(v)));
  }
  static ClassFunction trivial(const GroupPtr& g) { return constant(g, 1); }
  static ClassFunction regular(const GroupPtr& g) {
    std::vector<Residue> v(g->num_classes(), Residue{0});
    v[0] = g->field().from_int(static_cast<std::int64_t>(g->order()));
    return ClassFunction(g, std::move(v));
  }

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return group_->field(); }
  const std::vector<Residue>& values() const { return values_; }
  Residue operator[](ClassId c) const { return values_[c]; }
  Residue at_element(ElementId x) const { return values_[group_->class_of(x)]; }
  /// Value at the identity, as an integer.
  std::int64_t degree() const { return field().to_signed(values_[0]); }

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    check_same(a, b);
    std::vector<Residue> v(a.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().add(a.values_[i], b.values_[i]);
    return ClassFunction(a.group_, std::move(v));
  }
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    check_same(a, b);
    std::vector<Residue> v(a.values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().sub(a.values_[i], b.values_[i]);
    return ClassFunction(a.group_, std::move(v));
  }
  ClassFunction scaled(std::int64_t k) const {
    std::vector<Residue> v(values_.size());
    Residue r = field().from_int(k);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field().mul(values_[i], r);
    return ClassFunction(group_, std::move(v));
  }

  /// Identical residues on the same group. Exact for characters since the
  /// reduction is injective on the values that occur.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return same_group(*a.group_, *b.group_) && a.values_ == b.values_;
  }

  static void check_same(const ClassFunction& a, const ClassFunction& b) {
    if (!a.group_ || !b.group_ || !same_group(*a.group_, *b.group_))
      throw Error("class functions live on different groups");
  }

 private:
  GroupPtr group_;
  std::vector<Residue> values_;
};

/// (1/|G|) sum_g a(g) conj(b(g)), as an integer. Throws if it is not one.
inline std::int64_t inner_product(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction::check_same(a, b);
  const auto& G = *a.group();
  const auto& F = a.field();
  Residue acc{0};
  for (ClassId c = 0; c < G.num_classes(); ++c) {
    Residue t = F.mul(a[c], b[G.inverse_class(c)]);
    acc = F.add(acc, F.mul(t, F.from_int(static_cast<std::int64_t>(G.class_size(c)))));
  }
  Residue r = F.div(acc, F.from_int(static_cast<std::int64_t>(G.order())));
  std::int64_t v = F.to_signed(r);
  // For characters |[a, b]| <= a(1) b(1); |G|^2 covers virtual characters of
  // the tables. Anything outside both is a non-integer residue.
  auto bound = std::max(static_cast<std::int64_t>(G.order()) * static_cast<std::int64_t>(G.order()),
                        std::abs(a.degree()) * std::abs(b.degree()));
  if (v > bound || v < -bound) throw Error("inner product is not an integer; inputs are not characters");
  return v;
}

inline bool is_irreducible(const ClassFunction& chi) { return chi.degree() > 0 && inner_product(chi, chi) == 1; }

/// Equality as characters: [a - b, a - b] = 0.
inline bool equal_characters(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction d = a - b;
  return inner_product(d, d) == 0;
}

inline ClassFunction multiply(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction::check_same(a, b);
  std::vector<Residue> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().mul(a[i], b[i]);
  return ClassFunction(a.group(), std::move(v));
}

/// Complex conjugate, via the class of inverses.
inline ClassFunction conjugate(const ClassFunction& a) {
  const auto& G = *a.group();
  std::vector<Residue> v(G.num_classes());
  for (ClassId c = 0; c < G.num_classes(); ++c) v[c] = a[G.inverse_class(c)];
  return ClassFunction(a.group(), std::move(v));
}

/**
 * Lifted form of a character: for each class with representative g of order
 * o, the multiplicities m_k = (1/o) sum_l chi(g^l) z_o^{-kl} of the
 * eigenvalues z_o^k. Throws if some m_k is not an integer in [0, degree].
 */
inline std::vector<CyclotomicValue> cyclotomic_form(const ClassFunction& chi) {
  const auto& G = *chi.group();
  const auto& F = chi.field();
  const std::int64_t deg = chi.degree();
  if (deg < 0) throw Error("not a character: negative degree");
  const std::size_t r = G.num_classes();
  std::vector<CyclotomicValue> out(r);
  std::vector<char> done(r, 0);
  for (ClassId c = 0; c < r; ++c) {
    if (done[c]) continue;
    const std::uint32_t o = G.element_order(G.class_rep(c));
    std::vector<Residue> vals(o);
    for (std::uint32_t l = 0; l < o; ++l) vals[l] = chi[G.power_class(c, l)];
    Residue w_inv = F.inv(F.root_of_unity(o));
    Residue o_inv = F.inv(F.from_int(o));
    CyclotomicValue cv;
    cv.order = o;
    cv.mult.resize(o);
    Residue wk = F.from_int(1);  // z^{-k}
    for (std::uint32_t k = 0; k < o; ++k) {
      Residue acc{0}, step = F.from_int(1);  // z^{-kl}
      for (std::uint32_t l = 0; l < o; ++l) {
        acc = F.add(acc, F.mul(vals[l], step));
        step = F.mul(step, wk);
      }
      std::int64_t m = F.to_signed(F.mul(acc, o_inv));
      if (m < 0 || m > deg) throw Error("not a character: eigenvalue multiplicity out of range");
      cv.mult[k] = m;
      wk = F.mul(wk, w_inv);
    }
    // g^j for j prime to o has eigenvalues e^j: multiplicity of z^{kj} there is that of z^k here.
    for (std::uint32_t j = 1; j < o; ++j) {
      if (std::gcd(j, o) != 1) continue;
      ClassId cj = G.power_class(c, j);
      if (done[cj]) continue;
      CyclotomicValue cvj;
      cvj.order = o;
      cvj.mult.assign(o, 0);
      for (std::uint32_t k = 0; k < o; ++k)
        cvj.mult[static_cast<std::uint32_t>((static_cast<std::uint64_t>(k) * j) % o)] = cv.mult[k];
      out[cj] = std::move(cvj);
      done[cj] = 1;
    }
    out[c] = std::move(cv);
    done[c] = 1;
  }
  return out;
}

/// {g : chi(g) = chi(1)}, decided on the lifted form (all eigenvalues 1).
inline Subgroup kernel(const ClassFunction& chi) {
  const auto& g = chi.group();
  auto lifted = cyclotomic_form(chi);
  const std::int64_t deg = chi.degree();
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g->order(); ++x)
    if (lifted[g->class_of(x)].mult[0] == deg) members.push_back(x);
  return Subgroup(g, std::move(members));
}

/// theta^G for theta a class function on h.view() (or any group with the same elements).
inline ClassFunction induce(const Subgroup& h, const ClassFunction& theta) {
  const auto& hg = *theta.group();
  if (hg.order() != h.order() || hg.degree() != h.parent()->degree() || !(hg.fingerprint() == h.fingerprint()))
    throw Error("induce: class function is not defined on the given subgroup");
  const auto& G = *h.parent();
  const auto& F = G.field();
  if (!(hg.field() == F)) throw Error("induce: subgroup and group use different fields");
  std::vector<Residue> acc(G.num_classes(), Residue{0});
  auto members = h.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    ClassId c = G.class_of(members[i]);
    acc[c] = F.add(acc[c], theta[hg.class_of(static_cast<ElementId>(i))]);
  }
  std::vector<Residue> v(G.num_classes());
  for (ClassId c = 0; c < G.num_classes(); ++c) {
    if (acc[c].value == 0) continue;
    // theta^G(g) = |C_G(g)| / |H| * sum over H-elements of the class.
    Residue scale = F.div(F.from_int(static_cast<std::int64_t>(G.centralizer_order(c))),
                          F.from_int(static_cast<std::int64_t>(h.order())));
    v[c] = F.mul(acc[c], scale);
  }
  return ClassFunction(h.parent(), std::move(v));
}

/// chi restricted to any group whose elements all lie in chi's group. Element
/// ids are lexicographic in both, so membership is a binary search.
inline ClassFunction restrict(const ClassFunction& chi, const GroupPtr& sub) {
  const auto& G = *chi.group();
  if (sub->degree() != G.degree()) throw Error("restrict: groups act on different point sets");
  auto els = G.elements();
  std::vector<Residue> v(sub->num_classes());
  for (ClassId c = 0; c < sub->num_classes(); ++c) {
    const Perm& x = sub->element(sub->class_rep(c));
    auto it = std::lower_bound(els.begin(), els.end(), x);
    if (it == els.end() || *it != x) throw Error("restrict: target is not a subgroup of the character's group");
    v[c] = chi.at_element(static_cast<ElementId>(it - els.begin()));
  }
  return ClassFunction(sub, std::move(v));
}

inline ClassFunction restrict(const ClassFunction& chi, const Subgroup& h) { return restrict(chi, h.view()); }

/// psi o q.projection: a class function on G/N viewed on G.
inline ClassFunction lift(const ClassFunction& psi, const Quotient& q) {
  if (!same_group(*psi.group(), *q.group)) throw Error("lift: class function is not on the quotient");
  const auto& G = *q.source;
  std::vector<Residue> v(G.num_classes());
  for (ClassId c = 0; c < G.num_classes(); ++c) v[c] = psi.at_element(q.project(G.class_rep(c)));
  return ClassFunction(q.source, std::move(v));
}

/// {g in G : theta(g n g^-1) = theta(n) for all n in N}; theta on n.view().
inline Subgroup inertia_group(const Subgroup& n, const ClassFunction& theta) {
  if (!n.is_normal()) throw Error("inertia_group: subgroup is not normal");
  const auto& G = *n.parent();
  const auto& ng = *theta.group();
  if (!(ng.fingerprint() == n.fingerprint())) throw Error("inertia_group: class function is not on the subgroup");
  std::vector<std::int32_t> pos(G.order(), -1);
  for (std::size_t i = 0; i < n.order(); ++i) pos[n.members()[i]] = static_cast<std::int32_t>(i);
  std::vector<ElementId> out;
  for (ElementId g = 0; g < G.order(); ++g) {
    bool fixed = true;
    for (ClassId c = 0; c < ng.num_classes() && fixed; ++c) {
      ElementId x = n.members()[ng.class_rep(c)];
      auto y = static_cast<ElementId>(pos[G.conjugate(x, g)]);
      fixed = theta.at_element(y) == theta[c];
    }
    if (fixed) out.push_back(g);
  }
  return Subgroup(n.parent(), std::move(out));
}

struct MackeyPiece {
  ElementId representative;  ///< t in K t H
  Subgroup intersection;     ///< K n tHt^-1, in the parent group
  ClassFunction piece;       ///< ((lambda^t) restricted to the intersection)^K, on k.view()
};

/// (lambda^G)_K = sum over double cosets K t H of ((lambda^t)_{K n tHt^-1})^K.
inline std::vector<MackeyPiece> mackey_restriction(const Subgroup& h, const ClassFunction& lambda, const Subgroup& k) {
  if (h.parent().get() != k.parent().get()) throw Error("mackey_restriction: subgroups of different groups");
  if (!(lambda.group()->fingerprint() == h.fingerprint()))
    throw Error("mackey_restriction: class function is not on the subgroup");
  const auto& G = *h.parent();
  const auto& hg = *lambda.group();
  std::vector<std::int32_t> hpos(G.order(), -1);
  for (std::size_t i = 0; i < h.order(); ++i) hpos[h.members()[i]] = static_cast<std::int32_t>(i);

  std::vector<char> seen(G.order(), 0);
  std::vector<MackeyPiece> out;
  for (ElementId t = 0; t < G.order(); ++t) {
    if (seen[t]) continue;
    for (auto a : k.members())
      for (auto b : h.members()) seen[G.mul(G.mul(a, t), b)] = 1;
    // L = K n tHt^-1
    std::vector<ElementId> l;
    for (auto a : k.members())
      if (h.contains(G.mul(G.mul(G.inv(t), a), t))) l.push_back(a);
    Subgroup L(h.parent(), l);
    Subgroup l_in_k = into_view(k.view(), L);
    const auto& lv = l_in_k.view();
    // lambda^t(x) = lambda(t^-1 x t) on L.
    std::vector<Residue> vals(lv->num_classes());
    for (ClassId c = 0; c < lv->num_classes(); ++c) {
      ElementId x = l[lv->class_rep(c)];
      auto y = static_cast<ElementId>(hpos[G.mul(G.mul(G.inv(t), x), t)]);
      vals[c] = lambda[hg.class_of(y)];
    }
    ClassFunction phi(lv, std::move(vals));
    out.push_back(MackeyPiece{t, L, induce(l_in_k, phi)});
  }
  return out;
}

class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(GroupPtr g, std::vector<ClassFunction> irr, std::vector<std::vector<CyclotomicValue>> lifted)
      : group_(std::move(g)), irr_(std::move(irr)), lifted_(std::move(lifted)) {}

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return irr_.size(); }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  const ClassFunction& operator[](std::size_t i) const { return irr_[i]; }
  /// Lifted values, [character][class].
  const std::vector<std::vector<CyclotomicValue>>& lifted() const { return lifted_; }
  std::uint64_t prime() const { return group_->field().prime(); }
  std::uint64_t root() const { return group_->field().root(); }

  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> d;
    for (const auto& c : irr_) d.push_back(c.degree());
    return d;
  }
  std::set<std::int64_t> cd() const {
    auto d = degrees();
    return {d.begin(), d.end()};
  }
  /// Row index of an irreducible given by its values.
  std::optional<std::size_t> index_of(const ClassFunction& chi) const {
    for (std::size_t i = 0; i < irr_.size(); ++i)
      if (irr_[i] == chi) return i;
    return std::nullopt;
  }
  /// Multiplicity of each irreducible in a character.
  std::vector<std::int64_t> decompose(const ClassFunction& chi) const {
    std::vector<std::int64_t> m;
    for (const auto& x : irr_) m.push_back(inner_product(chi, x));
    return m;
  }

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irr_;
  std::vector<std::vector<CyclotomicValue>> lifted_;
};

namespace detail {

/// Throws unless row and column orthogonality hold exactly.
inline void check_orthogonality(const Group& G, const std::vector<std::vector<Residue>>& rows) {
  const auto& F = G.field();
  const std::size_t r = G.num_classes();
  if (rows.size() != r) throw Error("character table: wrong number of irreducibles");
  const Residue order = F.from_int(static_cast<std::int64_t>(G.order()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Residue acc{0};
      for (ClassId c = 0; c < r; ++c)
        acc = F.add(acc, F.mul(F.from_int(static_cast<std::int64_t>(G.class_size(c))),
                               F.mul(rows[i][c], rows[j][G.inverse_class(c)])));
      if (acc != (i == j ? order : Residue{0})) throw Error("character table: row orthogonality failed");
    }
  for (ClassId c = 0; c < r; ++c)
    for (ClassId d = 0; d < r; ++d) {
      Residue acc{0};
      for (std::size_t i = 0; i < r; ++i) acc = F.add(acc, F.mul(rows[i][c], rows[i][G.inverse_class(d)]));
      Residue want = c == d ? F.from_int(static_cast<std::int64_t>(G.centralizer_order(c))) : Residue{0};
      if (acc != want) throw Error("character table: column orthogonality failed");
    }
}

}  // namespace detail

/**
 * Dixon's method over F_P. The vectors v_k = |K_k| chi(g_k) / chi(1) are the
 * common eigenvectors of the class multiplication matrices. Random linear
 * combinations of those matrices split F_P^r into their joint eigenspaces
 * until every space is a line.
 */
inline CharacterTable character_table(const GroupPtr& gp) {
  const auto& G = *gp;
  const auto& F = G.field();
  const std::uint64_t p = F.prime();
  const std::size_t r = G.num_classes();
  std::mt19937_64 rng(0x6d6f6e6f63686172ull);
  std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);

  std::vector<modp::Mat> spaces;
  {
    modp::Mat id(r, modp::Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  auto all_lines = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const modp::Mat& s) { return s.size() == 1; });
  };

  for (int round = 0; !all_lines(); ++round) {
    if (round > 64) throw Error("character table: eigenspace splitting did not converge");
    std::vector<std::uint64_t> c(r);
    for (auto& x : c) x = coeff(rng);
    // M[i][k] = sum_j c_j #{x in K_j : x^-1 z_k in K_i}
    modp::Mat M(r, modp::Vec(r, 0));
    for (ClassId k = 0; k < r; ++k) {
      ElementId z = G.class_rep(k);
      for (ElementId x = 0; x < G.order(); ++x) {
        ClassId i = G.class_of(G.mul(G.inv(x), z));
        M[i][k] = modp::addm(M[i][k], c[G.class_of(x)], p);
      }
    }
    std::vector<modp::Mat> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      modp::Mat tmp = basis;
      auto piv = modp::rref(tmp, p);
      // Coordinates of M b_i in the basis, read off at the pivot columns.
      modp::Mat R(d, modp::Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t kk = 0; kk < d; ++kk) {
          std::uint64_t s = 0;
          for (std::size_t col = 0; col < r; ++col)
            if (basis[i][col]) s = modp::addm(s, modp::mulm(M[piv[kk]][col], basis[i][col], p), p);
          R[kk][i] = s;
        }
      const modp::Poly f = modp::make_monic(modp::charpoly(R, p), p);
      auto ev = modp::roots(f, p, rng);
      if (ev.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      if (ev.size() == d) {
        // Simple spectrum: for a cyclic vector v, q(R) v with q = f / (x - lambda)
        // spans the lambda-eigenspace. Krylov vectors make each one O(d^2).
        modp::Mat K(d, modp::Vec(d, 0));
        for (auto& x : K[0]) x = coeff(rng);
        for (std::size_t i = 1; i < d; ++i)
          for (std::size_t a = 0; a < d; ++a) {
            std::uint64_t acc = 0;
            for (std::size_t b = 0; b < d; ++b)
              if (R[a][b] && K[i - 1][b]) acc = modp::addm(acc, modp::mulm(R[a][b], K[i - 1][b], p), p);
            K[i][a] = acc;
          }
        std::vector<modp::Mat> found;
        bool cyclic = true;
        for (auto lambda : ev) {
          modp::Vec q(d, 0);
          q[d - 1] = 1;
          for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = modp::addm(f[i], modp::mulm(lambda, q[i], p), p);
          modp::Vec x(d, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (q[i])
              for (std::size_t a = 0; a < d; ++a) x[a] = modp::addm(x[a], modp::mulm(q[i], K[i][a], p), p);
          if (std::all_of(x.begin(), x.end(), [](std::uint64_t e) { return e == 0; })) {
            cyclic = false;
            break;
          }
          modp::Vec v(r, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (x[i])
              for (std::size_t col = 0; col < r; ++col)
                v[col] = modp::addm(v[col], modp::mulm(x[i], basis[i][col], p), p);
          modp::Mat sub{std::move(v)};
          modp::rref(sub, p);
          found.push_back(std::move(sub));
        }
        if (cyclic) {
          for (auto& s1 : found) next.push_back(std::move(s1));
          continue;
        }
      }
      std::size_t total = 0;
      for (auto lambda : ev) {
        modp::Mat A = R;
        for (std::size_t i = 0; i < d; ++i) A[i][i] = modp::subm(A[i][i], lambda, p);
        auto ns = modp::nullspace(A, d, p);
        modp::Mat sub;
        for (const auto& y : ns) {
          modp::Vec v(r, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (y[i])
              for (std::size_t col = 0; col < r; ++col)
                v[col] = modp::addm(v[col], modp::mulm(y[i], basis[i][col], p), p);
          sub.push_back(std::move(v));
        }
        modp::rref(sub, p);
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != d) throw Error("character table: eigenspaces do not span; class matrices not diagonalizable");
    }
    spaces = std::move(next);
  }

  const Residue order = F.from_int(static_cast<std::int64_t>(G.order()));
  std::vector<std::vector<Residue>> rows;
  for (auto& s : spaces) {
    modp::Vec v = s[0];
    if (v[0] == 0) throw Error("character table: eigenvector vanishes at the identity");
    std::uint64_t inv0 = modp::invm(v[0], p);
    for (auto& x : v) x = modp::mulm(x, inv0, p);
    // |G| / d^2 = sum_k v_k v_{k*} / |K_k|
    Residue sum{0};
    for (ClassId k = 0; k < r; ++k)
      sum = F.add(sum, F.div(F.mul(Residue{v[k]}, Residue{v[G.inverse_class(k)]}),
                             F.from_int(static_cast<std::int64_t>(G.class_size(k)))));
    Residue d2 = F.div(order, sum);
    std::int64_t deg = 0;
    for (std::int64_t d = 1; d * d <= static_cast<std::int64_t>(G.order()); ++d)
      if (F.from_int(d * d) == d2) {
        deg = d;
        break;
      }
    if (!deg) throw Error("character table: no integer degree matches an eigenvector");
    std::vector<Residue> row(r);
    for (ClassId k = 0; k < r; ++k)
      row[k] = F.div(F.mul(Residue{v[k]}, F.from_int(deg)), F.from_int(static_cast<std::int64_t>(G.class_size(k))));
    rows.push_back(std::move(row));
  }
  detail::check_orthogonality(G, rows);

  struct Row {
    ClassFunction chi;
    std::vector<CyclotomicValue> lifted;
    std::vector<std::int64_t> key;
  };
  std::vector<Row> sorted;
  for (auto& row : rows) {
    ClassFunction chi(gp, std::move(row));
    auto lifted = cyclotomic_form(chi);
    std::vector<std::int64_t> key;
    for (const auto& cv : lifted) key.insert(key.end(), cv.mult.begin(), cv.mult.end());
    sorted.push_back(Row{std::move(chi), std::move(lifted), std::move(key)});
  }
  // Ascending degree; within a degree, descending lifted multiplicities, which
  // puts the trivial character first.
  std::sort(sorted.begin(), sorted.end(), [](const Row& a, const Row& b) {
    if (a.chi.degree() != b.chi.degree()) return a.chi.degree() < b.chi.degree();
    return a.key > b.key;
  });
  std::vector<ClassFunction> irr;
  std::vector<std::vector<CyclotomicValue>> lifted;
  for (auto& row : sorted) {
    irr.push_back(std::move(row.chi));
    lifted.push_back(std::move(row.lifted));
  }
  return CharacterTable(gp, std::move(irr), std::move(lifted));
}

}  // namespace monochar
