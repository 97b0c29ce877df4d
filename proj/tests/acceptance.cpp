// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conesum/suites.hpp"
#include "conesum/summation.hpp"

using namespace conesum;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int k, const char* what, double budget_s, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = s < budget_s;
  bool ok = o.pass && in_time;
  failures += !ok;
  std::printf("%s %2d %s: %s [%.2f s of %.0f s%s]\n", ok ? "PASS" : "FAIL", k, what, o.detail.c_str(), s, budget_s,
              in_time ? "" : ", over budget");
  std::fflush(stdout);
}

Outcome all_of(const std::vector<Check>& cs) {
  size_t good = 0;
  std::string bad;
  for (const auto& c : cs) {
    if (c.pass)
      ++good;
    else
      bad += " " + c.name + " (" + c.detail + ")";
  }
  return {good == cs.size(), std::to_string(good) + "/" + std::to_string(cs.size()) + " checks" + bad};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Space field_space(std::vector<Integer> p) { return Space::of_field(TotallyRealField::make(p)); }

const std::vector<QVec> kM3{{1, 0}, {0, Rational(1, 3)}};
const std::vector<QVec> kZ2{{1, 0}, {0, 1}};

// Error at the frozen window and strict decrease from the first defined row.
Outcome convergence(const FanDescription& fan, const QVec& x0, const Rational& target, long n_star) {
  auto rows = converge(fan, x0, n_star, 0);
  if (rows.empty() || rows.front().target != target) return {false, "wrong target"};
  size_t first = 0;
  while (first < rows.size() && !rows[first].defined) ++first;
  bool decreasing = true;
  for (size_t i = first + 1; i < rows.size(); ++i)
    decreasing = decreasing && rows[i].defined && rows[i].abs_error < rows[i - 1].abs_error;
  const auto& last = rows.back();
  bool ok = last.defined && last.N == n_star && last.abs_error < 1e-6 && decreasing;
  return {ok, "target " + to_string(target) + ", error " + sci(last.abs_error) + " at N=" + std::to_string(n_star) +
                  ", first defined N=" + std::to_string(rows[first].N) + (decreasing ? ", strictly decreasing" : ", NOT decreasing")};
}

}  // namespace

int main() {
  criterion(1, "cocycle exactness of h and h*", 10, [] { return all_of(suite_cocycle(1)); });

  criterion(2, "polyhedral cycle duality", 30, [] { return all_of(suite_theorem2(1)); });

  criterion(3, "partial sums equal the dual cycle evaluation", 5, [] {
    struct Case {
      Space S;
      std::vector<QVec> M;
      QVec eps, x0;
    };
    std::vector<Case> cases{{field_space({-3, 0, 1}), kM3, {2, 1}, {5, 1}},
                            {field_space({-2, 0, 1}), kZ2, {3, 2}, {3, 1}},
                            {field_space({-1, -1, 1}), kZ2, {1, 1}, {4, 1}}};
    int equal = 0, total = 0;
    for (const auto& c : cases) {
      auto fan = build_quadratic_fan(c.S, c.M, c.eps);
      for (long N = 1; N <= 7 && total < 20; ++N) {
        auto tf = quadratic_window(fan, N);
        auto row = partial_sum(tf, c.x0);
        if (!row.defined) continue;
        ++total;
        equal += sum_via_dual_cycle(c.S, c.M, tf.top(), c.x0) == row.partial_sum;
      }
    }
    return Outcome{equal == 20 && total == 20, std::to_string(equal) + "/" + std::to_string(total) + " windows exact"};
  });

  criterion(4, "convergence to 1/N(x0), sqrt3 module", 5, [] {
    auto fan = build_quadratic_fan(field_space({-3, 0, 1}), kM3, {2, 1});
    return convergence(fan, {3, 1}, Rational(1, 6), 11);
  });
  criterion(4, "convergence to 1/N(x0), sqrt2 maximal order", 5, [] {
    auto fan = build_quadratic_fan(field_space({-2, 0, 1}), kZ2, {3, 2});
    return convergence(fan, {3, 1}, Rational(1, 7), 8);
  });

  criterion(5, "x0 on a fan ray", 5, [] {
    auto fan = build_quadratic_fan(field_space({-3, 0, 1}), kM3, {2, 1});
    auto rows = converge(fan, {1, 0}, 12, 0);
    bool finite = true;
    for (const auto& r : rows) finite = finite && r.defined && std::isfinite(r.abs_error);
    bool ok = finite && rows.back().abs_error < 1e-6 && rows.front().target == 1;
    return Outcome{ok, std::string(finite ? "all windows finite" : "undefined window") + ", error " +
                           sci(rows.back().abs_error) + " at N=12"};
  });

  criterion(6, "refined fan has the same limit", 5, [] {
    auto fan = build_quadratic_fan(field_space({-3, 0, 1}), kM3, {2, 1});
    auto ref = refine_insert_ray(fan, {2, Rational(1, 3)});
    double worst = 0;
    bool ok = true;
    for (QVec x0 : {QVec{3, 1}, QVec{1, 0}}) {
      auto a = converge(fan, x0, 16, 0), b = converge(ref, x0, 16, 0);
      for (size_t i = 0; i < a.size(); ++i) {
        ok = ok && a[i].defined == b[i].defined;
        if (a[i].defined && b[i].defined)
          worst = std::max(worst, std::fabs((a[i].partial_sum - b[i].partial_sum).to_double()));
      }
      ok = ok && b.back().abs_error < 1e-6;
    }
    return Outcome{ok && worst <= 1e-8, "max difference at equal windows " + sci(worst)};
  });

  criterion(7, "numeric L-values", 60, [] {
    auto M = example_module();
    double r3 = std::sqrt(3.0);
    struct Case {
      unsigned s;
      double cutoff, tol, target;
    };
    std::vector<Case> cases{{1, 400000, 1e-3, -M_PI * M_PI * r3 / 6},
                            {2, 20000, 1e-6, std::pow(M_PI, 4) * r3 / 6},
                            {3, 10000, 1e-6, -std::pow(M_PI, 6) * r3 / 36}};
    bool ok = true;
    std::string d;
    for (const auto& c : cases) {
      auto L = lvalue_numeric(M, c.s, c.cutoff);
      double err = std::fabs(L.value - c.target);
      ok = ok && err <= c.tol;
      d += "s=" + std::to_string(c.s) + " error " + sci(err) + " (tol " + sci(c.tol) + ") ";
    }
    return Outcome{ok, d};
  });

  criterion(8, "Bernoulli-symbol evaluations", 1, [] {
    bool ok = true;
    std::string d;
    for (const auto& c : verify_satake_example()) {
      ok = ok && c.exact_match;
      d += "s=" + std::to_string(c.s) + " " + c.value.coeff.str() + " pi^" + std::to_string(c.value.pi_power) + " ";
    }
    return Outcome{ok, d};
  });

  criterion(9, "hit-or-miss area against h", 60, [] { return all_of(suite_hurwitz(1)); });

  criterion(10, "admissible units in the cubic field of discriminant 49", 120, [] {
    auto F = test_field(3);
    FieldElement t1 = F->theta();
    t1[0] += 1;
    UnitGroupData V{{F->mul(F->theta(), F->theta()), F->mul(t1, t1)}};
    auto cand = search_admissible(*F, V, 2, 9, 7);
    bool ok = check_lemma3(*F, cand).pass() && check_admissible(*F, cand.units).pass();
    std::string d = std::string("conditions ") + (ok ? "pass" : "FAIL");
    for (size_t j = 0; j < 3; ++j) {
      auto ch = hull_chart(*F, cand.units, j, 3);
      bool pos = true;
      for (const auto& a : ch.a) pos = pos && a.certainly_pos();
      bool vert = verify_vertices(*F, cand.units, j, 3);
      ok = ok && pos && vert;
      d += ", chart " + std::to_string(j + 1) + (pos ? " a>0" : " a NOT >0") + (vert ? " vertices" : " NOT vertices");
    }
    return Outcome{ok, d};
  });

  criterion(11, "determinant and dual basis identities", 10, [] {
    Rng rng(11);
    int det_ok = 0, dual_ok = 0, total = 0;
    while (total < 500) {
      size_t n = 2 + total % 3;
      Space S = Space::of_field(test_field(n));
      std::vector<QVec> A;
      for (size_t i = 0; i < n; ++i) A.push_back(rng.rat_vec(n, 7, 3));
      ScaledRational d = S.det_scaled(A);
      QMatrix gram(n, QVec(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gram[i][j] = S.pair(A[i], A[j]);
      ++total;
      det_ok += det(gram) == d.q() * d.q() * S.D;
      if (d.is_zero()) {
        ++dual_ok;
        continue;
      }
      auto B = dual_basis(S, A);
      bool id = true;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) id = id && S.pair(A[i], B[j]) == (i == j ? 1 : 0);
      dual_ok += id;
    }
    return Outcome{det_ok == total && dual_ok == total,
                   std::to_string(det_ok) + "/" + std::to_string(total) + " determinants, " + std::to_string(dual_ok) +
                       "/" + std::to_string(total) + " dual bases"};
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
