#include "conesum/cycles.hpp"

#include <set>

namespace conesum {

void Cycle::add(const Flag& f, const QVec& point, long w) {
  if (w == 0) return;
  auto& leaf = terms[f];
  long& c = leaf[proj_normalize(point)];
  c += w;
  if (c == 0) {
    leaf.erase(proj_normalize(point));
    if (leaf.empty()) terms.erase(f);
  }
}

size_t Cycle::size() const {
  size_t s = 0;
  for (const auto& [f, leaf] : terms) s += leaf.size();
  return s;
}

Cycle& Cycle::operator+=(const Cycle& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree = o.degree;
  if (degree != o.degree) throw Error(ErrorCode::InvalidInput, "adding chains of different degree");
  for (const auto& [f, leaf] : o.terms)
    for (const auto& [p, w] : leaf) add(f, p, w);
  return *this;
}

Cycle Cycle::operator-() const {
  Cycle c = *this;
  for (auto& [f, leaf] : c.terms)
    for (auto& [p, w] : leaf) w = -w;
  return c;
}

Cycle operator*(long s, const Cycle& c) {
  if (s == 0) return zero_cycle(c.degree);
  Cycle out = c;
  for (auto& [f, leaf] : out.terms)
    for (auto& [p, w] : leaf) w *= s;
  return out;
}

Cycle operator*(const Rational& s, const Cycle& c) {
  if (s.get_den() != 1 || !s.get_num().fits_slong_p())
    throw Error(ErrorCode::InvalidInput, "chains take integer coefficients");
  return s.get_num().get_si() * c;
}

std::vector<QVec> Cycle::points() const {
  std::set<QVec> pts;
  for (const auto& [f, leaf] : terms)
    for (const auto& [p, w] : leaf) pts.insert(p);
  return {pts.begin(), pts.end()};
}

Cycle zero_cycle(int degree) {
  Cycle c;
  c.degree = degree;
  return c;
}

Cycle simplex_cycle(const std::vector<QVec>& A) {
  if (A.size() < 2) throw Error(ErrorCode::InvalidInput, "a simplex needs at least two points");
  int degree = static_cast<int>(A.size()) - 2;
  if (rank(A) < A.size()) return zero_cycle(degree);
  Cycle z = zero_cycle(degree);
  if (A.size() == 2) {
    z.add({}, A[0], 1);
    z.add({}, A[1], -1);
    return z;
  }
  for (size_t r = 0; r < A.size(); ++r) {
    std::vector<QVec> sub;
    for (size_t i = 0; i < A.size(); ++i)
      if (i != r) sub.push_back(A[i]);
    Cycle part = push(LinearSubspace::span(sub), simplex_cycle(sub));
    z += (r % 2 == 0 ? 1 : -1) * part;
  }
  return z;
}

Cycle push(const LinearSubspace& L, const Cycle& z) {
  Cycle out = zero_cycle(z.degree + 1);
  for (const auto& [f, leaf] : z.terms) {
    Flag g = f;
    g.push_back(L);
    out.terms[g] = leaf;
  }
  return out;
}

Cycle boundary(const Cycle& c) {
  if (c.degree < 1) throw Error(ErrorCode::InvalidInput, "boundary of a degree 0 chain is an integer");
  Cycle out = zero_cycle(c.degree - 1);
  for (const auto& [f, leaf] : c.terms) {
    Flag g(f.begin(), f.end() - 1);
    for (const auto& [p, w] : leaf) out.add(g, p, w);
  }
  return out;
}

long total_weight(const Cycle& c) {
  long s = 0;
  for (const auto& [f, leaf] : c.terms)
    for (const auto& [p, w] : leaf) s += w;
  return s;
}

namespace {

std::map<LinearSubspace, Cycle> split_by_top(const Cycle& z) {
  std::map<LinearSubspace, Cycle> out;
  for (const auto& [f, leaf] : z.terms) {
    auto& sub = out[f.back()];
    sub.degree = z.degree - 1;
    sub.terms[Flag(f.begin(), f.end() - 1)] = leaf;
  }
  return out;
}

bool flags_well_formed(const Cycle& c) {
  for (const auto& [f, leaf] : c.terms) {
    if (static_cast<int>(f.size()) != c.degree) return false;
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i].dim() != i + 2) return false;
      if (i > 0)
        for (const auto& b : f[i - 1].basis)
          if (!f[i].contains(b)) return false;
    }
    if (!f.empty())
      for (const auto& [p, w] : leaf)
        if (!f[0].contains(p)) return false;
  }
  return true;
}

}  // namespace

bool is_cycle(const Cycle& c) {
  if (!flags_well_formed(c)) return false;
  if (c.degree == 0) return total_weight(c) == 0;
  if (!boundary(c).is_zero()) return false;
  for (const auto& [L, sub] : split_by_top(c))
    if (!is_cycle(sub)) return false;
  return true;
}

std::vector<SimplexTerm> simplex_decomposition(const Cycle& z, const std::optional<QVec>& base) {
  std::vector<SimplexTerm> out;
  if (z.is_zero()) return out;
  std::vector<QVec> pts = z.points();
  if (z.degree == 0) {
    if (total_weight(z) != 0) throw Error(ErrorCode::NotACycle, "Z_0 leaf with nonzero total weight");
    QVec p0 = base ? proj_normalize(*base) : pts.front();
    for (const auto& [p, w] : z.terms.begin()->second)
      if (p != p0) out.push_back({w, {p, p0}});
    return out;
  }
  std::vector<std::pair<LinearSubspace, std::vector<SimplexTerm>>> parts;
  for (const auto& [L, sub] : split_by_top(z)) parts.push_back({L, simplex_decomposition(sub)});

  std::vector<QVec> candidates;
  candidates.push_back(base ? *base : pts.front());
  // generic fallbacks on a moment curve inside the span of the support
  QMatrix amb = row_space_basis(pts);
  for (long t : {2, 3, 5, 7}) {
    QVec p = zero_vec(amb[0].size());
    Rational tp = 1;
    for (const auto& b : amb) {
      p = p + tp * b;
      tp *= t;
    }
    candidates.push_back(p);
  }
  for (const auto& A0 : candidates) {
    out.clear();
    Cycle re = zero_cycle(z.degree);
    for (const auto& [L, terms] : parts)
      for (const auto& t : terms) {
        std::vector<QVec> pts2{A0};
        pts2.insert(pts2.end(), t.points.begin(), t.points.end());
        re += t.coeff * simplex_cycle(pts2);
        out.push_back({t.coeff, pts2});
      }
    if (re == z) return out;
    if (base) break;
  }
  throw Error(ErrorCode::NotACycle, "chain is not a cycle (simplicial recomposition failed)");
}

Cycle dual_simplex(const Space& S, const std::vector<QVec>& A) {
  if (A.size() != S.n) throw Error(ErrorCode::InvalidInput, "dual simplex needs n points");
  int degree = static_cast<int>(S.n) - 2;
  if (rank(A) < A.size()) return zero_cycle(degree);
  std::vector<QVec> B;
  for (size_t i = 0; i < A.size(); ++i) {
    std::vector<QVec> rest;
    for (size_t j = 0; j < A.size(); ++j)
      if (j != i) rest.push_back(A[j]);
    B.push_back(orthogonal_in(S, identity(S.n), rest).at(0));
  }
  return simplex_cycle(B);
}

Cycle dual_cycle(const Space& S, const Cycle& z) {
  int top = static_cast<int>(S.n) - 2;
  if (z.is_zero()) return zero_cycle(top);
  if (z.degree != top) throw Error(ErrorCode::NotTopDegree, "dual cycle needs a cycle of degree n-2");
  return cpd_extend(z, [&](const std::vector<QVec>& A) { return dual_simplex(S, A); }, zero_cycle(top));
}

Cycle boundary_cycle(const Space& S, const ProjPolyhedron& K, const std::optional<QMatrix>& O) {
  const Cone& c = K.cone;
  if (c.dim < 2) throw Error(ErrorCode::InvalidInput, "boundary cycle of a point");
  QMatrix orient = O ? *O : (c.dim == S.n ? identity(S.n) : row_space_basis(c.gens));
  if (c.dim == 2) {
    const QVec& x = c.gens.at(0);
    const QVec& y = c.gens.at(1);
    int s = orientation_sign({x, y}, orient);
    Cycle z = zero_cycle(0);
    z.add({}, x, s);
    z.add({}, y, -s);
    return z;
  }
  Cycle z = zero_cycle(static_cast<int>(c.dim) - 2);
  for (const auto& f : facets(S, c)) {
    std::vector<QVec> fg;
    for (auto i : f.gens) fg.push_back(c.gens[i]);
    QMatrix fb = row_space_basis(fg);
    std::vector<QVec> vs{f.inward_normal};
    vs.insert(vs.end(), fb.begin(), fb.end());
    if (orientation_sign(vs, orient) < 0) fb[0] = -fb[0];
    ProjPolyhedron F{make_cone(S, fg)};
    z += push(f.span, boundary_cycle(S, F, fb));
  }
  return z;
}

bool theorem2_check(const Space& S, const ProjPolyhedron& K) {
  Cycle lhs = boundary_cycle(S, dual_polyhedron(S, K));
  Cycle rhs = dual_cycle(S, boundary_cycle(S, K));
  return lhs == rhs;
}

namespace {

nlohmann::json vec_json(const QVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

QVec vec_from_json(const nlohmann::json& a) {
  QVec v;
  for (const auto& x : a) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

}  // namespace

nlohmann::json to_json(const Cycle& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [f, leaf] : c.terms) {
    nlohmann::json flag = nlohmann::json::array();
    for (const auto& L : f) {
      nlohmann::json basis = nlohmann::json::array();
      for (const auto& b : L.basis) basis.push_back(vec_json(b));
      flag.push_back(basis);
    }
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& [p, w] : leaf) pts.push_back({{"point", vec_json(p)}, {"weight", w}});
    terms.push_back({{"flag", flag}, {"leaf", pts}});
  }
  return {{"degree", c.degree}, {"terms", terms}};
}

Cycle cycle_from_json(const nlohmann::json& j) {
  Cycle c = zero_cycle(j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    Flag f;
    for (const auto& basis : t.at("flag")) {
      std::vector<QVec> rows;
      for (const auto& b : basis) rows.push_back(vec_from_json(b));
      f.push_back(LinearSubspace::span(rows));
    }
    for (const auto& p : t.at("leaf")) c.add(f, vec_from_json(p.at("point")), p.at("weight").get<long>());
  }
  return c;
}

}  // namespace conesum
