#include "conesum/suites.hpp"

#include <algorithm>
#include <optional>
#include <cmath>
#include <sstream>

namespace conesum {

QVec Rng::int_vec(size_t n, long bound) {
  QVec v(n);
  for (auto& x : v) x = uniform(-bound, bound);
  return v;
}

QVec Rng::rat_vec(size_t n, long num_bound, long den_bound) {
  QVec v(n);
  for (auto& x : v) x = rational(num_bound, den_bound);
  return v;
}

FieldPtr test_field(size_t n) {
  switch (n) {
    case 2: return TotallyRealField::make({-3, 0, 1});
    case 3: return TotallyRealField::make({1, -2, -1, 1});
    case 4: return TotallyRealField::make({2, 0, -4, 0, 1});
    default: throw Error(ErrorCode::InvalidInput, "test fields exist for n = 2, 3, 4");
  }
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

std::string ratio(long a, long b) { return std::to_string(a) + "/" + std::to_string(b); }

std::vector<QVec> drop(const std::vector<QVec>& A, size_t i) {
  std::vector<QVec> out;
  for (size_t k = 0; k < A.size(); ++k)
    if (k != i) out.push_back(A[k]);
  return out;
}

// Alternating sum of f over the n-subsets; nullopt when x0 is singular for some subset.
template <class Fn>
std::optional<ScaledRational> alternating(const Space& S, const std::vector<QVec>& A, Fn f) {
  ScaledRational acc = ScaledRational::zero(S.D);
  for (size_t i = 0; i < A.size(); ++i) {
    ScaledRational v;
    try {
      v = f(drop(A, i));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularAt_x0) return std::nullopt;
      throw;
    }
    acc += (i % 2 == 0) ? v : -v;
  }
  return acc;
}

long cross(const QVec& o, const QVec& a, const QVec& b) {
  Rational c = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  return sgn(c);
}

}  // namespace

std::vector<Check> suite_cocycle(std::uint64_t seed, int tuples, int points) {
  Rng rng(seed);
  std::vector<Check> out;
  for (size_t n : {2u, 3u, 4u}) {
    Space S = Space::of_field(test_field(n));
    long zero_h = 0, zero_hs = 0, total = 0, skipped = 0;
    for (int t = 0; t < tuples; ++t) {
      std::vector<QVec> A;
      for (size_t i = 0; i <= n; ++i) {
        QVec p;
        do p = rng.int_vec(n, 4);
        while (is_zero(p));
        A.push_back(p);
      }
      for (int k = 0; k < points; ++k) {
        for (int attempt = 0; attempt < 50; ++attempt) {
          QVec x = rng.rat_vec(n, 9, 4);
          if (is_zero(x)) continue;
          auto a = alternating(S, A, [&](const std::vector<QVec>& B) { return h(S, B, x); });
          auto b = alternating(S, A, [&](const std::vector<QVec>& B) { return h_star(S, B, x); });
          if (!a || !b) {
            ++skipped;
            continue;
          }
          ++total;
          zero_h += a->is_zero();
          zero_hs += b->is_zero();
          break;
        }
      }
    }
    std::string sfx = "_n" + std::to_string(n);
    std::string note = " (" + std::to_string(skipped) + " singular draws redrawn)";
    out.push_back({"cocycle_h" + sfx, zero_h == total && total > 0, ratio(zero_h, total) + " exact zeros" + note});
    out.push_back({"cocycle_hstar" + sfx, zero_hs == total && total > 0, ratio(zero_hs, total) + " exact zeros" + note});
  }
  return out;
}

std::vector<QVec> random_convex_polygon(Rng& rng, int k, long b) {
  std::vector<QVec> pts;
  for (int i = 0; i < k; ++i) pts.push_back(rng.int_vec(2, b));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  // monotone chain, collinear points dropped
  std::vector<QVec> hull(2 * pts.size());
  size_t m = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (m >= 2 && cross(hull[m - 2], hull[m - 1], pts[i]) <= 0) --m;
    hull[m++] = pts[i];
  }
  for (size_t i = pts.size() - 1, lo = m + 1; i-- > 0;) {
    while (m >= lo && cross(hull[m - 2], hull[m - 1], pts[i]) <= 0) --m;
    hull[m++] = pts[i];
  }
  hull.resize(m - 1);
  if (hull.size() < 3) return {};
  return hull;
}

std::vector<Check> suite_theorem2(std::uint64_t seed, int random_polygons) {
  Rng rng(seed);
  std::vector<Check> out;
  auto run = [&](const std::string& name, const Space& S, const std::vector<QVec>& verts) {
    ProjPolyhedron K = make_polyhedron(S, verts);
    out.push_back({name, theorem2_check(S, K), std::to_string(verts.size()) + " vertices"});
  };
  for (size_t n : {2u, 3u, 4u}) {
    Space S = Space::standard(n);
    for (int k = 0; k < 3; ++k) {
      std::vector<QVec> A;
      do {
        A.clear();
        for (size_t i = 0; i < n; ++i) A.push_back(rng.int_vec(n, 5));
      } while (det(A) == 0);
      run("simplex_dim" + std::to_string(n - 1) + "_" + std::to_string(k), S, A);
    }
    Space SF = Space::of_field(test_field(n));
    run("standard_simplex_trace_form_dim" + std::to_string(n - 1), SF, identity(n));
  }
  Space S3 = Space::standard(3);
  run("square", S3, {{1, 1, 1}, {-1, 1, 1}, {-1, -1, 1}, {1, -1, 1}});
  for (int k = 0, made = 0; made < random_polygons && k < 20 * random_polygons; ++k) {
    auto poly = random_convex_polygon(rng, 8, 6);
    if (poly.empty()) continue;
    std::vector<QVec> verts;
    for (const auto& p : poly) verts.push_back({p[0], p[1], 1});
    run("polygon_" + std::to_string(made++), S3, verts);
  }
  Space S4 = Space::standard(4);
  std::vector<QVec> cube, octa;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) cube.push_back({a, b, c, 1});
  for (size_t i = 0; i < 3; ++i)
    for (int s : {-1, 1}) {
      QVec v{0, 0, 0, 1};
      v[i] = s;
      octa.push_back(v);
    }
  run("cube", S4, cube);
  run("octahedron", S4, octa);
  return out;
}

std::vector<Check> suite_hurwitz(std::uint64_t seed, int instances, long samples) {
  Rng rng(seed);
  Space S = Space::standard(3);
  double worst = 0, worst_exact = 0;
  int good = 0, made = 0;
  while (made < instances) {
    std::vector<QVec> A;
    for (int i = 0; i < 3; ++i) A.push_back(rng.int_vec(3, 5));
    QVec x0{rng.uniform(1, 6), rng.uniform(1, 6), rng.uniform(1, 6)};
    if (det(A) == 0) continue;
    if (std::any_of(A.begin(), A.end(), [&](const QVec& a) { return dot(a, x0) == 0; })) continue;
    ++made;
    double hv = h(S, A, x0).to_double();
    auto r = hurwitz_area(S, A, x0, samples);
    double err = std::fabs(hv - r.estimate);
    worst = std::max(worst, err);
    worst_exact = std::max(worst_exact, std::fabs(hv - r.exact_chart));
    good += err <= 1e-3;
  }
  return {{"hurwitz_estimate_within_1e-3", good == instances,
           ratio(good, instances) + " instances, worst " + fmt(worst) + ", samples " + std::to_string(samples)},
          {"hurwitz_chart_formula", worst_exact <= 1e-12, "worst " + fmt(worst_exact)}};
}

std::vector<Check> suite_satake(bool numeric, const RunConfig* cfg) {
  std::vector<Check> out;
  for (const auto& c : verify_satake_example())
    out.push_back({"satake_s" + std::to_string(c.s), c.exact_match,
                   "bracket " + to_string(c.bracket) + ", L = " + c.value.coeff.str() + " pi^" +
                       std::to_string(c.value.pi_power)});
  auto M = example_module();
  auto fan = build_quadratic_fan(Space::of_field(M.F), M.basis, M.V.generators[0]);
  auto I = quadratic_intersections(*fan.seq);
  auto expected = example_intersections()[0];
  out.push_back({"intersections_from_fan", I.entries == expected.entries, "b-cycle of the module fan"});
  if (numeric) {
    struct Case {
      unsigned s;
      double cutoff, tol;
    };
    auto checks = verify_satake_example();
    for (Case c : {Case{1, 400000, 1e-3}, Case{2, 20000, 1e-6}, Case{3, 10000, 1e-6}}) {
      auto L = lvalue_numeric(M, c.s, c.cutoff);
      double target = checks[c.s - 1].value.value();
      double err = std::fabs(L.value - target);
      out.push_back({"lvalue_s" + std::to_string(c.s), err <= c.tol,
                     "error " + fmt(err) + " (estimate " + fmt(L.estimate) + ") at cutoff " + fmt(c.cutoff)});
    }
  }
  if (cfg && cfg->min_poly.size() == 3 && !cfg->units.empty()) {
    LatticeModule CM = make_module(*cfg);
    validate_module(CM);
    IntersectionData data;
    if (cfg->intersections) {
      data = *cfg->intersections;
    } else {
      auto conv = cfg->period_one == "nodal" ? PeriodOneConvention::Nodal : PeriodOneConvention::SplitNode;
      auto cfan = build_quadratic_fan(Space::of_field(CM.F), CM.basis, CM.V.generators[0]);
      data = quadratic_intersections(*cfan.seq, conv);
    }
    SatakeValue sv = satake_rhs(data, d_M(CM));
    auto L = lvalue_numeric(CM, data.s, cfg->cutoff);
    double err = std::fabs(L.value - sv.value());
    out.push_back({"config_satake_vs_lvalue_s" + std::to_string(data.s), err <= cfg->tol,
                   "L = " + sv.coeff.str() + " pi^" + std::to_string(sv.pi_power) + ", numeric error " + fmt(err) +
                       " (estimate " + fmt(L.estimate) + ")"});
  }
  return out;
}

std::vector<Check> suite_lemma1(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Check> out;
  struct Case {
    std::string name;
    std::vector<Integer> poly;
    std::vector<QVec> M;
    QVec eps, ray, x0;
  };
  std::vector<Case> cases{
      {"sqrt3", {-3, 0, 1}, {{1, 0}, {0, Rational(1, 3)}}, {2, 1}, {2, Rational(1, 3)}, {3, 1}},
      {"sqrt3_x0_on_ray", {-3, 0, 1}, {{1, 0}, {0, Rational(1, 3)}}, {2, 1}, {2, Rational(1, 3)}, {1, 0}},
      {"sqrt2", {-2, 0, 1}, {{1, 0}, {0, 1}}, {3, 2}, {3, 1}, {3, 1}},
  };
  for (const auto& c : cases) {
    Space S = Space::of_field(TotallyRealField::make(c.poly));
    auto fan = build_quadratic_fan(S, c.M, c.eps);
    auto ref = refine_insert_ray(fan, c.ray);
    auto a = converge(fan, c.x0, 16, 0);
    auto b = converge(ref, c.x0, 16, 0);
    double worst = 0;
    bool same_defined = true;
    for (size_t i = 0; i < a.size(); ++i) {
      same_defined = same_defined && a[i].defined == b[i].defined;
      if (a[i].defined && b[i].defined)
        worst = std::max(worst, std::fabs((a[i].partial_sum - b[i].partial_sum).to_double()));
    }
    bool close = same_defined && worst <= 1e-8 && b.back().defined && b.back().abs_error < 1e-6;
    out.push_back({"refined_same_limit_" + c.name, close,
                   "max window difference " + fmt(worst) + ", refined error at N=16 " + fmt(b.back().abs_error)});
  }
  // subdivision additivity of h* on one cone
  Space S = Space::of_field(TotallyRealField::make({-3, 0, 1}));
  std::vector<QVec> M{{1, 0}, {0, Rational(1, 3)}};
  QVec u{1, 0}, v{1, Rational(1, 3)}, w{2, Rational(1, 3)};
  int ok = 0, n = 0;
  while (n < 20) {
    QVec x = rng.rat_vec(2, 9, 5);
    try {
      auto whole = h_star_cone(S, {u, v}, M, x).value;
      auto parts = h_star_cone(S, {u, w}, M, x).value + h_star_cone(S, {w, v}, M, x).value;
      ++n;
      ok += whole == parts;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularAt_x0) throw;
    }
  }
  out.push_back({"hstar_subdivision_additive", ok == n, ratio(ok, n) + " exact"});
  return out;
}

std::vector<Check> suite_goodfan() {
  std::vector<Check> out;
  struct Case {
    std::string name;
    std::vector<Integer> poly;
    std::vector<QVec> M;
    QVec eps;
  };
  std::vector<Case> cases{{"sqrt3_module", {-3, 0, 1}, {{1, 0}, {0, Rational(1, 3)}}, {2, 1}},
                          {"sqrt2", {-2, 0, 1}, {{1, 0}, {0, 1}}, {3, 2}},
                          {"sqrt5_phi2", {-1, -1, 1}, {{1, 0}, {0, 1}}, {1, 1}}};
  for (const auto& c : cases) {
    Space S = Space::of_field(TotallyRealField::make(c.poly));
    auto fan = build_quadratic_fan(S, c.M, c.eps);
    auto tf = quadratic_window(fan, 3);
    bool all = true;
    std::string failed;
    for (const auto& ch : validate_good_fan(tf, fan.V))
      if (!ch.pass) {
        all = false;
        failed += ch.name + " ";
      }
    std::string b;
    for (long x : fan.seq->b) b += (b.empty() ? "" : ",") + std::to_string(x);
    out.push_back({"good_fan_" + c.name, all, all ? "period " + std::to_string(fan.seq->m()) + ", b = (" + b + ")" : failed});
  }
  return out;
}

std::vector<Check> suite_lemma3(const RunConfig* cfg) {
  FieldPtr F;
  UnitGroupData V;
  Rational a = 2, b = 9;
  long radius = 7, window = 3;
  if (cfg && cfg->min_poly.size() >= 4 && !cfg->units.empty()) {
    F = make_field(*cfg);
    V.generators = cfg->units;
    a = cfg->a;
    b = cfg->b;
    radius = cfg->radius;
    window = cfg->chart_window;
  } else {
    F = test_field(3);
    FieldElement th = F->theta(), t1 = th;
    t1[0] += 1;
    V.generators = {F->mul(th, th), F->mul(t1, t1)};
  }
  size_t n = F->degree();
  std::vector<Check> out;
  AdmissibleCandidate cand = search_admissible(*F, V, a, b, radius);
  std::string ex;
  for (const auto& e : cand.exponents) {
    ex += "(";
    for (size_t k = 0; k < e.size(); ++k) ex += (k ? "," : "") + std::to_string(e[k]);
    ex += ")";
  }
  out.push_back({"search_found", true, "exponents " + ex + " at radius " + std::to_string(radius)});
  Rational an = 1;
  for (size_t i = 0; i < n; ++i) an *= a;
  out.push_back({"b_gt_a_pow_n", b > an, "a = " + to_string(a) + ", b = " + to_string(b)});
  Report l3 = check_lemma3(*F, cand);
  Report d2 = check_admissible(*F, cand.units);
  for (const auto& c : l3.conditions) out.push_back({"lemma3 " + c.name, c.pass, c.detail});
  for (const auto& c : d2.conditions) out.push_back({"admissible " + c.name, c.pass, c.detail});

  // squaring one unit breaks the ratio window only
  AdmissibleCandidate sq = cand;
  sq.units[0] = F->mul(sq.units[0], sq.units[0]);
  Report l3s = check_lemma3(*F, sq);
  bool only3 = true;
  for (const auto& c : l3s.conditions) only3 = only3 && (c.pass == (c.name.rfind("(3)", 0) != 0));
  out.push_back({"perturbed_unit_fails_only_3", only3, "eps_1 squared"});

  for (size_t j = 0; j < n; ++j) {
    HullChart ch = hull_chart(*F, cand.units, j, window);
    bool pos = std::all_of(ch.a.begin(), ch.a.end(), [](const Interval& v) { return v.certainly_pos(); });
    std::string as;
    for (const auto& v : ch.a) as += v.str(8) + " ";
    out.push_back({"chart" + std::to_string(j + 1) + "_exponents_positive", pos,
                   as + (ch.sign_flipped ? "(common sign normalized)" : "")});
    double res = chart_residual(ch);
    out.push_back({"chart" + std::to_string(j + 1) + "_points_on_surface", res < 1e-20, "residual " + fmt(res)});
    bool vert = false;
    std::string detail;
    try {
      vert = verify_vertices(*F, cand.units, j, window);
      detail = std::to_string(ch.z.size()) + " points";
    } catch (const Error& e) {
      detail = e.what();
    }
    out.push_back({"chart" + std::to_string(j + 1) + "_vertices", vert, detail});
  }

  if (n == 3) {
    std::vector<FieldElement> xs{F->one(), F->from_poly({2, 1}), F->from_poly({5, -1, 1})};
    for (size_t i = 0; i < xs.size(); ++i) {
      if (!F->is_totally_positive(xs[i])) continue;
      bool mono = true, seen = false;
      long first = -1;
      std::string note;
      for (long N = 0; N <= 10; ++N) {
        bool in;
        try {
          in = sigma_N_contains(*F, cand.units, N, xs[i], 8);
        } catch (const Error& e) {
          note = e.what();
          mono = false;
          break;
        }
        if (seen && !in) mono = false;
        if (in && !seen) first = N;
        seen = seen || in;
      }
      out.push_back({"sigma_N_monotone_x" + std::to_string(i + 1), mono && seen,
                     "x = " + to_string(xs[i]) + ", first N = " + std::to_string(first) + (note.empty() ? "" : " " + note)});
    }
    bool outside = !sigma_N_contains(*F, cand.units, 10, F->from_poly({0, 1}), 8);
    out.push_back({"sigma_N_rejects_non_positive", outside, "x = theta"});
  }

  auto cv = convexity_check({1, 1}, {{1, 1}, {0.5, 2}, {2, 3}, {1.5, 0.7}});
  out.push_back({"convexity_minors_positive", cv.all_minors_positive, "p = (1,1)"});
  out.push_back({"convexity_minors_match_fd", cv.matches, "max rel err " + fmt(cv.max_rel_err)});
  out.push_back({"convexity_alt_minors_at_z1", std::fabs(minor_alt({1, 1}, {1, 1}, 1) - 2) < 1e-12,
                 "alternative formula deviates elsewhere, max rel err " + fmt(cv.max_rel_err_alt)});
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cocycle", "theorem2", "hurwitz", "satake", "lemma1", "goodfan", "lemma3"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const RunConfig* cfg, std::uint64_t seed) {
  if (name == "cocycle") return suite_cocycle(seed);
  if (name == "theorem2") return suite_theorem2(seed);
  if (name == "hurwitz") return suite_hurwitz(seed);
  if (name == "satake") return suite_satake(true, cfg);
  if (name == "lemma1") return suite_lemma1(seed);
  if (name == "goodfan") return suite_goodfan();
  if (name == "lemma3") return suite_lemma3(cfg);
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + name + "'");
}

}  // namespace conesum
