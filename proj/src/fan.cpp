#include "conesum/fan.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "conesum/lp.hpp"

namespace conesum {

ConeKey cone_key(std::vector<QVec> gens) {
  std::sort(gens.begin(), gens.end());
  return gens;
}

namespace {

const TotallyRealField& field_of(const Space& S) {
  if (!S.field) throw Error(ErrorCode::InvalidInput, "fan operations need a field space");
  return *S.field;
}

double emb_d(const TotallyRealField& F, const QVec& x, size_t i) { return F.embed_mpfr(x, 64, 128)[i].mid_d(); }

bool tp(const Space& S, const QVec& x) { return !is_zero(x) && S.totally_positive(x); }

bool is_integral(const QVec& c) {
  for (const auto& x : c)
    if (x.get_den() != 1) return false;
  return true;
}

std::vector<QVec> apply_unit(const TotallyRealField& F, const QVec& u, const std::vector<QVec>& gens) {
  std::vector<QVec> out;
  for (const auto& g : gens) out.push_back(F.mul(u, g));
  return out;
}

// sign of x^(i) - x^(j), exact (0 only for rational x)
int compare_embeddings(const TotallyRealField& F, const QVec& x, size_t i, size_t j) {
  if (F.is_rational(x)) return 0;
  for (unsigned bits = 64; bits <= 1 << 14; bits *= 2) {
    auto e = F.embed(x, bits);
    if (e[i].hi < e[j].lo) return -1;
    if (e[j].hi < e[i].lo) return 1;
  }
  throw Error(ErrorCode::PrecisionExhausted, "cannot separate embeddings");
}

std::vector<std::vector<QVec>> subsets(const std::vector<QVec>& gens) {
  std::vector<std::vector<QVec>> out;
  size_t n = gens.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<QVec> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) s.push_back(gens[i]);
    out.push_back(s);
  }
  return out;
}

bool is_subset(const ConeKey& a, const ConeKey& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// sigma and tau simplicial: does their intersection equal the cone on their common generators?
bool meets_in_common_face(const ConeKey& s, const ConeKey& t) {
  ConeKey common;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
  size_t ns = s.size(), nt = t.size(), nv = ns + nt, dim = s[0].size();
  // lambda, mu >= 0, sum lambda s = sum mu t, weight on non-common generators of s >= 1
  QMatrix ge, eq;
  QVec ge_rhs, eq_rhs;
  for (size_t i = 0; i < nv; ++i) {
    ge.push_back(unit_vec(nv, i));
    ge_rhs.push_back(0);
  }
  QVec w = zero_vec(nv);
  bool any = false;
  for (size_t i = 0; i < ns; ++i)
    if (!std::binary_search(common.begin(), common.end(), s[i])) {
      w[i] = 1;
      any = true;
    }
  if (!any) return true;
  ge.push_back(w);
  ge_rhs.push_back(1);
  for (size_t r = 0; r < dim; ++r) {
    QVec row(nv);
    for (size_t i = 0; i < ns; ++i) row[i] = s[i][r];
    for (size_t j = 0; j < nt; ++j) row[ns + j] = -t[j][r];
    eq.push_back(row);
    eq_rhs.push_back(0);
  }
  return !lp::feasible(ge, ge_rhs, eq, eq_rhs, nv).has_value();
}

}  // namespace

QVec VertexSequence::at(const TotallyRealField& F, long k) const {
  long mm = static_cast<long>(m());
  long j = k >= 0 ? k / mm : -((-k + mm - 1) / mm);
  long r = k - j * mm;
  QVec p = period[r];
  const QVec& u = j >= 0 ? eps : eps_inv;
  for (long i = 0; i < std::labs(j); ++i) p = F.mul(u, p);
  return p;
}

std::vector<ConeKey> TruncatedFan::top() const {
  std::vector<ConeKey> out;
  for (const auto& c : cones)
    if (c.size() == S.n) out.push_back(c);
  return out;
}

FanDescription build_quadratic_fan(const Space& S, const std::vector<QVec>& M, const QVec& eps) {
  const TotallyRealField& F = field_of(S);
  if (S.n != 2) throw Error(ErrorCode::InvalidInput, "quadratic fan needs a quadratic field");
  if (M.size() != 2 || rank(M) != 2) throw Error(ErrorCode::InvalidInput, "M must have rank 2");
  if (!F.is_unit(eps)) throw Error(ErrorCode::NotAUnit, to_string(eps));
  if (!F.is_totally_positive(eps)) throw Error(ErrorCode::NotTotallyPositive, to_string(eps));
  QVec eps_inv = F.inv(eps);
  for (const auto& u : {eps, eps_inv})
    for (const auto& w : M)
      if (!is_integral(lattice_coords(F.mul(u, w), M)))
        throw Error(ErrorCode::UnitDoesNotPreserveM, to_string(u) + " does not map M to itself");

  auto point = [&](const Integer& a, const Integer& b) { return Rational(a) * M[0] + Rational(b) * M[1]; };

  // a first totally positive point bounds the trace search
  std::optional<Rational> T;
  for (long R = 1; !T; R *= 2) {
    if (R > (1 << 14)) throw Error(ErrorCode::SearchBoundExceeded, "no totally positive M-point found");
    for (long a = -R; a <= R; ++a)
      for (long b = -R; b <= R; ++b) {
        QVec x = point(a, b);
        if (tp(S, x) && (!T || F.trace(x) < *T)) T = F.trace(x);
      }
  }
  // points with both embeddings in (0, T): coordinates bounded through the inverse embedding matrix
  double e00 = emb_d(F, M[0], 0), e01 = emb_d(F, M[0], 1), e10 = emb_d(F, M[1], 0), e11 = emb_d(F, M[1], 1);
  double dd = e00 * e11 - e10 * e01;
  double Td = T->get_d();
  long ba = static_cast<long>(std::ceil(Td * (std::fabs(e11) + std::fabs(e10)) / std::fabs(dd))) + 1;
  long bb = static_cast<long>(std::ceil(Td * (std::fabs(e01) + std::fabs(e00)) / std::fabs(dd))) + 1;

  struct Best {
    QVec x;
    Integer a, b;
    Rational tr, spread;
  };
  std::optional<Best> best;
  for (long a = -ba; a <= ba; ++a)
    for (long b = -bb; b <= bb; ++b) {
      QVec x = point(a, b);
      if (!tp(S, x)) continue;
      Rational tr = F.trace(x);
      if (tr > *T) continue;
      Rational spread = tr * tr - 4 * F.norm(x);  // (x1 - x2)^2
      bool better = !best || tr < best->tr || (tr == best->tr && spread < best->spread) ||
                    (tr == best->tr && spread == best->spread && compare_embeddings(F, x, 0, 1) < 0 &&
                     compare_embeddings(F, best->x, 0, 1) >= 0);
      if (better) best = Best{x, a, b, tr, spread};
    }
  QVec A0 = best->x;

  // u completes A0 to an M-basis with det(A0, u) > 0
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), best->a.get_mpz_t(), best->b.get_mpz_t());
  if (abs(g) != 1) throw Error(ErrorCode::InvalidInput, "least-trace point is not primitive");
  Integer k2 = s * g, k1 = -t * g;  // a*k2 - b*k1 = 1
  QVec u = point(k1, k2);
  if (det({A0, u}) < 0) u = -u;

  auto smallest = [&](const QVec& base, const QVec& step, double est) {
    // smallest integer j with base + j*step totally positive (the set of such j is a half line)
    Integer j(static_cast<long>(std::floor(est)));
    while (tp(S, base + Rational(j - 1) * step)) --j;
    while (!tp(S, base + Rational(j) * step)) ++j;
    return j;
  };
  double est = std::max(-emb_d(F, u, 0) / emb_d(F, A0, 0), -emb_d(F, u, 1) / emb_d(F, A0, 1));
  QVec A1 = u + Rational(smallest(u, A0, est)) * A0;

  std::vector<QVec> seq{A0, A1};
  std::vector<long> bs{0};
  QVec target = F.mul(eps, A0);
  while (seq.back() != target) {
    if (seq.size() > 10000) throw Error(ErrorCode::SearchBoundExceeded, "vertex sequence did not close");
    const QVec& Ak = seq.back();
    const QVec& Akm = seq[seq.size() - 2];
    double e = std::max(emb_d(F, Akm, 0) / emb_d(F, Ak, 0), emb_d(F, Akm, 1) / emb_d(F, Ak, 1));
    Integer b = smallest(-Akm, Ak, e);
    bs.push_back(b.get_si());
    seq.push_back(Rational(b) * Ak - Akm);
  }
  VertexSequence vs;
  size_t m = seq.size() - 1;
  vs.period.assign(seq.begin(), seq.begin() + m);
  vs.eps = eps;
  vs.eps_inv = eps_inv;
  vs.b.assign(m, 0);
  for (size_t k = 1; k < m; ++k) vs.b[k] = bs[k];
  QVec Am1 = F.mul(eps_inv, seq[m - 1]);
  QVec sum = Am1 + seq[1];
  Rational b0 = lattice_coords(sum, {A0})[0];
  if (b0.get_den() != 1 || b0 * A0 != sum) throw Error(ErrorCode::InvalidInput, "vertex relation failed at A_0");
  vs.b[0] = b0.get_num().get_si();

  FanDescription fan;
  fan.kind = FanDescription::Kind::QuadraticAuto;
  fan.S = S;
  fan.M = M;
  fan.V.generators = {eps};
  for (size_t r = 0; r < m; ++r) fan.reps.push_back({{seq[r], seq[r + 1]}});
  fan.seq = vs;
  return fan;
}

FanDescription explicit_fan(const Space& S, const std::vector<QVec>& M, const UnitGroupData& V,
                            const std::vector<std::vector<QVec>>& top_cones) {
  const TotallyRealField& F = field_of(S);
  validate_units(F, V);
  if (M.size() != S.n || rank(M) != S.n) throw Error(ErrorCode::InvalidInput, "M must have rank n");
  FanDescription fan;
  fan.kind = FanDescription::Kind::Explicit;
  fan.S = S;
  fan.M = M;
  fan.V = V;
  for (const auto& c : top_cones) {
    if (c.size() != S.n || rank(c) != S.n)
      throw Error(ErrorCode::InvalidInput, "explicit fan cones must be simplicial and top dimensional");
    std::vector<QVec> prim;
    for (const auto& g : c) prim.push_back(primitive_generator(g, M));
    fan.reps.push_back({prim});
  }
  return fan;
}

TruncatedFan fan_from_top_cones(const Space& S, const std::vector<QVec>& M, const std::vector<std::vector<QVec>>& tops,
                                const std::string& window) {
  TruncatedFan tf;
  tf.S = S;
  tf.M = M;
  tf.window = window;
  for (const auto& t : tops)
    for (const auto& s : subsets(t)) tf.cones.insert(cone_key(s));
  return tf;
}

TruncatedFan truncate(const FanDescription& fan, long N) {
  const TotallyRealField& F = field_of(fan.S);
  size_t r = fan.V.rank();
  std::vector<std::vector<QVec>> powers(r);
  for (size_t i = 0; i < r; ++i)
    for (long e = -N; e <= N; ++e) powers[i].push_back(F.pow(fan.V.generators[i], e));
  std::vector<std::vector<QVec>> tops;
  std::vector<long> ex(r, -N);
  while (true) {
    QVec u = F.one();
    for (size_t i = 0; i < r; ++i) u = F.mul(u, powers[i][ex[i] + N]);
    for (const auto& group : fan.reps)
      for (const auto& piece : group) tops.push_back(apply_unit(F, u, piece));
    size_t i = 0;
    while (i < r && ex[i] == N) ex[i++] = -N;
    if (i == r) break;
    ++ex[i];
  }
  return fan_from_top_cones(fan.S, fan.M, tops, "unit powers [" + std::to_string(-N) + "," + std::to_string(N) + "]");
}

TruncatedFan quadratic_window(const FanDescription& fan, long N) {
  if (!fan.seq) throw Error(ErrorCode::InvalidInput, "cone-index windows need a quadratic fan");
  const TotallyRealField& F = field_of(fan.S);
  long m = static_cast<long>(fan.seq->m());
  std::vector<std::vector<QVec>> tops;
  for (long k = -N; k < N; ++k) {
    long j = k >= 0 ? k / m : -((-k + m - 1) / m);
    long r = k - j * m;
    QVec u = F.pow(fan.seq->eps, j);
    for (const auto& piece : fan.reps[r]) tops.push_back(apply_unit(F, u, piece));
  }
  return fan_from_top_cones(fan.S, fan.M, tops, "cones t_k, " + std::to_string(-N) + " <= k < " + std::to_string(N));
}

std::vector<Check> validate_good_fan(const TruncatedFan& tf, const UnitGroupData& V) {
  std::vector<Check> out;
  const Space& S = tf.S;
  auto tops = tf.top();
  out.push_back({"locally_finite", true, std::to_string(tf.cones.size()) + " cones in window (" + tf.window + ")"});

  bool simp = true;
  for (const auto& c : tf.cones)
    if (!c.empty() && rank(c) != c.size()) simp = false;
  out.push_back({"simplicial", simp, ""});

  bool rational = true, primitive = true;
  std::set<QVec> rays;
  for (const auto& c : tf.cones)
    for (const auto& g : c) rays.insert(g);
  for (const auto& g : rays) {
    try {
      if (primitive_generator(g, tf.M) != g) primitive = false;
    } catch (const Error&) {
      rational = false;
    }
  }
  out.push_back({"F_rational", rational, std::to_string(rays.size()) + " rays"});
  out.push_back({"primitive_generators", primitive, ""});

  bool closed = true;
  for (const auto& c : tf.cones)
    for (const auto& s : subsets(c))
      if (!tf.contains(cone_key(s))) closed = false;
  out.push_back({"face_closed", closed, ""});

  bool common = true;
  std::string bad;
  for (size_t i = 0; i < tops.size(); ++i)
    for (size_t j = i + 1; j < tops.size(); ++j)
      if (!meets_in_common_face(tops[i], tops[j])) {
        common = false;
        bad = to_string(tops[i][0]) + " ...";
      }
  out.push_back({"common_faces", common, bad});

  bool positive = true;
  for (const auto& g : rays)
    if (!tp(S, g)) positive = false;
  out.push_back({"totally_positive_chamber", positive, ""});

  bool inv = true;
  std::string idetail;
  if (S.field) {
    const TotallyRealField& F = *S.field;
    for (const auto& u : V.generators) {
      if (F.norm(u) != 1 || !F.is_totally_positive(u)) {
        inv = false;
        idetail = "unit does not preserve orientation";
      }
      for (const auto& w : {u, F.inv(u)})
        for (const auto& t : tops) {
          auto img = apply_unit(F, w, t);
          bool all_rays = true;
          for (const auto& g : img)
            if (!rays.count(g)) all_rays = false;
          if (all_rays && !tf.contains(cone_key(img))) {
            inv = false;
            idetail = "image of a cone is missing from the window";
          }
        }
    }
  }
  out.push_back({"V_invariant", inv, idetail});

  bool adj = true;
  std::map<ConeKey, std::vector<ConeKey>> by_facet;
  for (const auto& t : tops)
    for (size_t i = 0; i < t.size(); ++i) {
      ConeKey f = t;
      f.erase(f.begin() + i);
      by_facet[f].push_back(t);
    }
  for (const auto& [f, ts] : by_facet) {
    if (ts.size() > 2) adj = false;
    if (ts.size() == 2) {
      QMatrix nu = orthogonal_in(S, identity(S.n), f);
      auto other = [&](const ConeKey& t) {
        for (const auto& g : t)
          if (!std::binary_search(f.begin(), f.end(), g)) return g;
        return t[0];
      };
      if (sgn(S.pair(nu[0], other(ts[0]))) * sgn(S.pair(nu[0], other(ts[1]))) >= 0) adj = false;
    }
  }
  out.push_back({"facet_adjacency", adj, ""});
  return out;
}

std::vector<ConeKey> star(const ConeKey& sigma, const TruncatedFan& tf) {
  if (!tf.contains(sigma)) throw Error(ErrorCode::ConeNotInFan, "cone not in the truncation");
  std::vector<ConeKey> out;
  for (const auto& c : tf.cones)
    if (is_subset(sigma, c)) out.push_back(c);
  return out;
}

std::vector<ConeKey> link(const ConeKey& sigma, const TruncatedFan& tf) {
  std::set<ConeKey> out;
  for (const auto& t : star(sigma, tf))
    for (const auto& s : subsets(t)) {
      ConeKey k = cone_key(s);
      if (!is_subset(sigma, k)) out.insert(k);
    }
  return {out.begin(), out.end()};
}

std::vector<ConeKey> singular_cones(const QVec& x0, const TruncatedFan& tf) {
  std::vector<ConeKey> out;
  for (const auto& c : tf.cones) {
    if (c.empty() || c.size() >= tf.S.n) continue;
    if (!LinearSubspace::span(c).contains(x0)) continue;
    bool minimal = true;
    for (size_t i = 0; i < c.size() && minimal; ++i) {
      ConeKey f = c;
      f.erase(f.begin() + i);
      if (f.empty() ? is_zero(x0) : LinearSubspace::span(f).contains(x0)) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<TermGroup> group_singular_terms(const QVec& x0, const TruncatedFan& tf) {
  std::vector<TermGroup> groups;
  std::map<ConeKey, size_t> owner;
  auto tops = tf.top();
  for (const auto& sigma : singular_cones(x0, tf)) {
    TermGroup g;
    g.singular = sigma;
    for (const auto& c : star(sigma, tf)) {
      if (c.size() != tf.S.n) continue;
      if (owner.count(c))
        throw Error(ErrorCode::OverlappingStars, "two singular cones share a top cone");
      owner[c] = groups.size();
      g.tops.push_back(c);
    }
    // every facet through sigma of a star cone must be shared by two top cones of the window
    for (const auto& t : g.tops)
      for (size_t i = 0; i < t.size(); ++i) {
        ConeKey f = t;
        f.erase(f.begin() + i);
        if (!is_subset(sigma, f)) continue;
        size_t cnt = 0;
        for (const auto& u : tops)
          if (is_subset(f, u)) ++cnt;
        if (cnt != 2) g.complete = false;
      }
    if (g.tops.empty()) g.complete = false;
    groups.push_back(g);
  }
  for (const auto& t : tops)
    if (!owner.count(t)) groups.push_back({{t}, std::nullopt, true});
  return groups;
}

namespace {

std::vector<std::vector<QVec>> stellar_split(const std::vector<QVec>& t, const QVec& r) {
  std::vector<std::vector<QVec>> out;
  for (size_t i = 0; i < t.size(); ++i) {
    auto piece = t;
    piece[i] = r;
    out.push_back(piece);
  }
  return out;
}

// Locates the top cone with the ray in its interior; RayOnExistingFace if it only meets boundaries.
std::optional<size_t> locate(const Space& S, const std::vector<std::vector<QVec>>& tops, const QVec& ray) {
  bool on_face = false;
  for (size_t i = 0; i < tops.size(); ++i) {
    Cone c = make_cone(S, tops[i]);
    if (cone_interior(S, c, ray)) return i;
    if (cone_contains(S, c, ray)) on_face = true;
  }
  if (on_face) throw Error(ErrorCode::RayOnExistingFace, to_string(ray) + " lies on a face of the fan");
  return std::nullopt;
}

}  // namespace

TruncatedFan refine_insert_ray(const TruncatedFan& tf, const QVec& ray, const UnitGroupData& V) {
  const TotallyRealField& F = field_of(tf.S);
  auto tops = tf.top();
  std::vector<std::vector<QVec>> tv(tops.begin(), tops.end());
  auto idx = locate(tf.S, tv, ray);
  if (!idx) throw Error(ErrorCode::InvalidInput, "ray is not inside the truncation");
  QVec r = primitive_generator(ray, tf.M);
  ConeKey t0 = tops[*idx];

  // translates of t0 by unit powers that stay inside the window
  std::map<ConeKey, QVec> split;  // cone -> inserted ray
  std::vector<std::vector<long>> frontier{std::vector<long>(V.rank(), 0)};
  std::set<std::vector<long>> seen(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    auto e = frontier.back();
    frontier.pop_back();
    QVec u = F.one();
    for (size_t i = 0; i < V.rank(); ++i) u = F.mul(u, F.pow(V.generators[i], e[i]));
    ConeKey img = cone_key(apply_unit(F, u, t0));
    if (!tf.contains(img)) continue;
    split[img] = F.mul(u, r);
    for (size_t i = 0; i < V.rank(); ++i)
      for (long d : {-1L, 1L}) {
        auto e2 = e;
        e2[i] += d;
        if (seen.insert(e2).second) frontier.push_back(e2);
      }
  }
  std::vector<std::vector<QVec>> out;
  for (const auto& t : tops) {
    auto it = split.find(t);
    if (it == split.end()) {
      out.push_back(t);
      continue;
    }
    for (auto& p : stellar_split(t, it->second)) out.push_back(p);
  }
  return fan_from_top_cones(tf.S, tf.M, out, tf.window + ", refined");
}

FanDescription refine_insert_ray(const FanDescription& fan, const QVec& ray) {
  std::vector<std::vector<QVec>> pieces;
  std::vector<std::pair<size_t, size_t>> where;
  for (size_t g = 0; g < fan.reps.size(); ++g)
    for (size_t p = 0; p < fan.reps[g].size(); ++p) {
      pieces.push_back(fan.reps[g][p]);
      where.push_back({g, p});
    }
  auto idx = locate(fan.S, pieces, ray);
  if (!idx) throw Error(ErrorCode::InvalidInput, "ray is not inside an orbit representative");
  auto [g, p] = where[*idx];
  FanDescription out = fan;
  auto& group = out.reps[g];
  auto parts = stellar_split(group[p], primitive_generator(ray, fan.M));
  group.erase(group.begin() + p);
  group.insert(group.begin() + p, parts.begin(), parts.end());
  return out;
}

}  // namespace conesum
