#include "conesum/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "conesum/lp.hpp"

namespace conesum {

LinearSubspace LinearSubspace::span(const std::vector<QVec>& vecs) { return {row_space_basis(vecs)}; }

bool LinearSubspace::contains(const QVec& x) const {
  QMatrix m = basis;
  m.push_back(x);
  return rank(m) == basis.size();
}

// Vectors nu in span(basis) with <nu, w> = 0 for all w in ws.
QMatrix orthogonal_in(const Space& S, const QMatrix& basis, const std::vector<QVec>& ws) {
  QMatrix a;
  for (const auto& w : ws) {
    QVec row;
    for (const auto& b : basis) row.push_back(S.pair(b, w));
    a.push_back(row);
  }
  QMatrix out;
  if (a.empty()) return basis;
  for (const auto& c : nullspace(a)) out.push_back(vec_mat(c, basis));
  return out;
}

namespace {

void for_each_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::vector<Facet> facets_of(const Space& S, const std::vector<QVec>& gens) {
  QMatrix basis = row_space_basis(gens);
  size_t k = basis.size();
  std::vector<Facet> out;
  if (k <= 1) return out;
  std::set<std::vector<size_t>> seen;
  for_each_subset(gens.size(), k - 1, [&](const std::vector<size_t>& idx) {
    std::vector<QVec> sub;
    for (auto i : idx) sub.push_back(gens[i]);
    if (rank(sub) != k - 1) return;
    QMatrix nus = orthogonal_in(S, basis, sub);
    if (nus.size() != 1) return;
    QVec nu = nus[0];
    int side = 0;
    std::vector<size_t> zero;
    for (size_t i = 0; i < gens.size(); ++i) {
      int s = sgn(S.pair(nu, gens[i]));
      if (s == 0) {
        zero.push_back(i);
        continue;
      }
      if (side == 0) side = s;
      if (s != side) return;
    }
    if (side == 0) return;
    if (!seen.insert(zero).second) return;
    if (side < 0) nu = -nu;
    std::vector<QVec> zs;
    for (auto i : zero) zs.push_back(gens[i]);
    out.push_back({zero, ray_normalize(nu), LinearSubspace::span(zs)});
  });
  return out;
}

}  // namespace

Cone make_cone(const Space& S, const std::vector<QVec>& gens_in) {
  std::vector<QVec> gens;
  std::set<QVec> seen;
  for (const auto& g : gens_in) {
    if (is_zero(g)) throw Error(ErrorCode::ZeroInput, "zero generator");
    QVec r = ray_normalize(g);
    if (seen.insert(r).second) gens.push_back(r);
  }
  // salient: some functional is >= 1 on all generators
  {
    QMatrix ge;
    QVec rhs;
    for (const auto& g : gens) {
      ge.push_back(g);
      rhs.push_back(1);
    }
    if (!lp::feasible(ge, rhs, {}, {}, S.n)) throw Error(ErrorCode::InvalidInput, "cone is not salient");
  }
  Cone c;
  c.dim = rank(gens);
  if (c.dim <= 1) {
    c.gens = {gens[0]};
    return c;
  }
  auto fs = facets_of(S, gens);
  QMatrix basis = row_space_basis(gens);
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<QVec> normals;
    for (const auto& f : fs)
      if (std::find(f.gens.begin(), f.gens.end(), i) != f.gens.end()) normals.push_back(f.inward_normal);
    if (rank(normals) == c.dim - 1) c.gens.push_back(gens[i]);
  }
  return c;
}

std::vector<Facet> facets(const Space& S, const Cone& c) { return facets_of(S, c.gens); }

Cone dual_cone(const Space& S, const Cone& c) {
  if (c.dim != S.n) throw Error(ErrorCode::NotFullDim, "dual of a cone that is not full dimensional");
  std::vector<QVec> normals;
  for (const auto& f : facets(S, c)) normals.push_back(f.inward_normal);
  if (S.n == 1) normals.push_back(c.gens[0]);
  return make_cone(S, normals);
}

bool cone_contains(const Space& S, const Cone& c, const QVec& x) {
  size_t m = c.gens.size();
  QMatrix ge, eq;
  QVec ge_rhs, eq_rhs;
  for (size_t i = 0; i < m; ++i) {
    ge.push_back(unit_vec(m, i));
    ge_rhs.push_back(0);
  }
  for (size_t r = 0; r < S.n; ++r) {
    QVec row(m);
    for (size_t i = 0; i < m; ++i) row[i] = c.gens[i][r];
    eq.push_back(row);
    eq_rhs.push_back(x[r]);
  }
  return lp::feasible(ge, ge_rhs, eq, eq_rhs, m).has_value();
}

bool cone_interior(const Space& S, const Cone& c, const QVec& x) {
  if (!LinearSubspace::span(c.gens).contains(x)) return false;
  if (c.dim == 1) return !is_zero(x) && ray_normalize(x) == c.gens[0] && dot(x, c.gens[0]) > 0;
  for (const auto& f : facets(S, c))
    if (S.pair(f.inward_normal, x) <= 0) return false;
  return true;
}

std::vector<std::pair<size_t, size_t>> cone_edges(const Space& S, const Cone& c) {
  auto fs = facets(S, c);
  std::vector<std::pair<size_t, size_t>> out;
  if (c.dim == 2) {
    if (c.gens.size() == 2) out.push_back({0, 1});
    return out;
  }
  for (size_t i = 0; i < c.gens.size(); ++i)
    for (size_t j = i + 1; j < c.gens.size(); ++j) {
      std::vector<QVec> normals;
      for (const auto& f : fs) {
        bool hi = std::find(f.gens.begin(), f.gens.end(), i) != f.gens.end();
        bool hj = std::find(f.gens.begin(), f.gens.end(), j) != f.gens.end();
        if (hi && hj) normals.push_back(f.inward_normal);
      }
      if (!normals.empty() && rank(normals) == c.dim - 2) out.push_back({i, j});
    }
  return out;
}

ProjPolyhedron make_polyhedron(const Space& S, const std::vector<QVec>& vertices) {
  return {make_cone(S, vertices)};
}

std::vector<std::pair<ProjPolyhedron, LinearSubspace>> faces(const Space& S, const ProjPolyhedron& K) {
  std::vector<std::pair<ProjPolyhedron, LinearSubspace>> out;
  for (const auto& f : facets(S, K.cone)) {
    std::vector<QVec> vs;
    for (auto i : f.gens) vs.push_back(K.cone.gens[i]);
    out.push_back({make_polyhedron(S, vs), f.span});
  }
  return out;
}

ProjPolyhedron dual_polyhedron(const Space& S, const ProjPolyhedron& K) { return {dual_cone(S, K.cone)}; }

ProjPolyhedron dual_polyhedron_via_facets(const Space& S, const ProjPolyhedron& K) {
  if (K.cone.dim != S.n) throw Error(ErrorCode::NotFullDim, "dual of a polyhedron that is not full dimensional");
  // h interior; each facet hyperplane H_i gives the point H_i^*, taken on the side of h
  QVec h = zero_vec(S.n);
  for (const auto& v : K.vertices()) h = h + v;
  std::vector<QVec> pts;
  for (const auto& [F, L] : faces(S, K)) {
    QMatrix nus = orthogonal_in(S, identity(S.n), F.vertices());
    QVec p = nus.at(0);
    if (S.pair(p, h) < 0) p = -p;
    pts.push_back(p);
  }
  return make_polyhedron(S, pts);
}

LinearSubspace vertex_hyperplane(const Space& S, const ProjPolyhedron& K, const QVec& v_in) {
  const Cone& c = K.cone;
  QVec v = ray_normalize(v_in);
  auto it = std::find(c.gens.begin(), c.gens.end(), v);
  if (it == c.gens.end()) throw Error(ErrorCode::DegenerateVertex, to_string(v_in) + " is not a vertex");
  size_t vi = it - c.gens.begin();
  QMatrix sbasis = row_space_basis(c.gens);
  size_t k = c.dim;
  if (k < 2) throw Error(ErrorCode::DegenerateVertex, "polyhedron of dimension 0");
  auto fs = facets(S, c);
  QVec ell = zero_vec(S.n);
  for (const auto& f : fs) ell = ell + f.inward_normal;
  auto chart = [&](const QVec& x) { return (1 / S.pair(ell, x)) * x; };

  auto separates = [&](const QVec& eta) {
    if (S.pair(eta, v) <= 0) return false;
    for (size_t i = 0; i < c.gens.size(); ++i)
      if (i != vi && S.pair(eta, c.gens[i]) >= 0) return false;
    return true;
  };
  auto hyperplane_of = [&](const QVec& eta) {
    QMatrix h = orthogonal_in(S, sbasis, {eta});
    return LinearSubspace::span(h);
  };

  std::vector<QVec> mids;
  for (auto [i, j] : cone_edges(S, c)) {
    if (i != vi && j != vi) continue;
    size_t w = i == vi ? j : i;
    mids.push_back(chart(v) + chart(c.gens[w]));
  }
  if (!mids.empty() && rank(mids) == k - 1) {
    QMatrix nus = orthogonal_in(S, sbasis, mids);
    if (nus.size() == 1) {
      QVec eta = nus[0];
      if (S.pair(eta, v) < 0) eta = -eta;
      if (separates(eta)) return LinearSubspace::span(mids);
    }
  }
  // separating functional eta = sum c_j b_j inside the span
  QMatrix ge;
  QVec rhs;
  auto row_for = [&](const QVec& x, const Rational& s) {
    QVec r;
    for (const auto& b : sbasis) r.push_back(s * S.pair(b, x));
    return r;
  };
  ge.push_back(row_for(v, 1));
  rhs.push_back(1);
  for (size_t i = 0; i < c.gens.size(); ++i) {
    if (i == vi) continue;
    ge.push_back(row_for(c.gens[i], -1));
    rhs.push_back(1);
  }
  auto sol = lp::feasible(ge, rhs, {}, {}, sbasis.size());
  if (!sol) throw Error(ErrorCode::DegenerateVertex, "no separating hyperplane for " + to_string(v_in));
  return hyperplane_of(vec_mat(*sol, sbasis));
}

ProjPolyhedron cone_over_face(const Space& S, const ProjPolyhedron& K, const QVec& u, const ProjPolyhedron& F) {
  if (!cone_interior(S, K.cone, u)) throw Error(ErrorCode::PointNotInterior, to_string(u));
  std::vector<QVec> vs = F.vertices();
  vs.push_back(u);
  return make_polyhedron(S, vs);
}

int orientation_sign(const std::vector<QVec>& vs, const QMatrix& O) {
  if (vs.size() != O.size()) throw Error(ErrorCode::InvalidInput, "orientation of a basis of the wrong size");
  QMatrix c;
  for (const auto& v : vs) c.push_back(lattice_coords(v, O));
  return sgn(det(c));
}

QVec lattice_coords(const QVec& x, const std::vector<QVec>& M) {
  if (M.empty()) throw Error(ErrorCode::RayNotRational, "empty lattice");
  QMatrix a(x.size(), QVec(M.size()));
  for (size_t r = 0; r < x.size(); ++r)
    for (size_t i = 0; i < M.size(); ++i) a[r][i] = M[i][r];
  QVec c;
  if (!solve(a, x, c)) throw Error(ErrorCode::RayNotRational, to_string(x) + " is not in the span of M");
  return c;
}

QVec primitive_generator(const QVec& r, const std::vector<QVec>& M) {
  if (is_zero(r)) throw Error(ErrorCode::ZeroInput, "zero ray");
  QVec c = primitive_integer(lattice_coords(r, M));
  QVec out = zero_vec(r.size());
  for (size_t i = 0; i < M.size(); ++i) out = out + c[i] * M[i];
  return out;
}

}  // namespace conesum
