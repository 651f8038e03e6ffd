#include "mvcheb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "mvcheb/diffops.hpp"
#include "mvcheb/group.hpp"
#include "mvcheb/hyp2h1.hpp"
#include "mvcheb/recurrence.hpp"
#include "mvcheb/render.hpp"
#include "mvcheb/special.hpp"
#include "mvcheb/weight.hpp"

namespace mvcheb::verify {

namespace {

using mvop::WeightSpec;

struct Case {
  std::string caseId;
  std::string params;
  std::function<CaseResult()> run;
};

CaseResult simple_case(const std::string& id, const std::string& params, bool ok,
                       const std::string& witness = "identity check returned false") {
  return CaseResult{id, params, ok, ok ? "" : witness};
}

Case bool_case(std::string id, std::string params, std::function<bool()> f) {
  return Case{id, params, [id, params, f] {
                try {
                  bool ok = f();
                  return simple_case(id, params, ok);
                } catch (const std::exception& e) {
                  return simple_case(id, params, false, std::string("exception: ") + e.what());
                }
              }};
}

std::string diff_witness(const PiMat& a, const PiMat& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
               a.at(i, j).str() + " vs " + b.at(i, j).str();
  return "";
}

std::string diff_witness(const MatPoly& a, const MatPoly& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
               render::poly_to_string(a.at(i, j)) + " vs " + render::poly_to_string(b.at(i, j));
  return "";
}

int thread_budget() {
  if (const char* env = std::getenv("MVCHEB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<CaseResult> run_parallel(const std::vector<Case>& cases) {
  std::vector<CaseResult> results(cases.size());
  int nThreads = std::min<int>(thread_budget(), std::max<size_t>(cases.size(), 1));
  if (nThreads <= 1) {
    for (size_t i = 0; i < cases.size(); ++i) results[i] = cases[i].run();
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nThreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= cases.size()) break;
          results[i] = cases[i].run();
        }
      });
    for (auto& th : pool) th.join();
  }
  std::sort(results.begin(), results.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.caseId < b.caseId; });
  return results;
}

std::string tl(int twoL) { return "twoL=" + std::to_string(twoL); }

// ---- suite builders ------------------------------------------------------

std::vector<Case> suite_ldu(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= std::max(o.twoLMax, 0); ++twoL)
    cs.push_back(bool_case("ldu/" + tl(twoL), tl(twoL),
                           [twoL] { return weight::verify_ldu(WeightSpec{twoL}); }));
  return cs;
}

std::vector<Case> suite_det(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    cs.push_back(bool_case("det/" + tl(twoL), tl(twoL), [twoL] {
      auto r = weight::det_weight(WeightSpec{twoL});
      return r.exponent_ok && r.constant > Rational(0) &&
             r.exponent == Rational((twoL + 1) * (twoL + 1), 2);
    }));
  return cs;
}

std::vector<Case> suite_udl(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    cs.push_back(bool_case("udl/" + tl(twoL), tl(twoL),
                           [twoL] { return weight::udl_check(WeightSpec{twoL}); }));
  return cs;
}

std::vector<Case> suite_fourier(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    for (int n = 0; n <= twoL; ++n)
      for (int m = 0; m <= twoL; ++m) {
        std::string p = tl(twoL) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        cs.push_back(bool_case("fourier/" + p, p, [twoL, n, m] {
          return weight::cg_fourier_check(WeightSpec{twoL}, n, m);
        }));
      }
  return cs;
}

std::vector<Case> suite_racah_integral(const Options& o) {
  std::vector<Case> cs;
  int nmax = o.degreeMax;
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k <= m; ++k)
        for (int t = 0; t <= n; ++t) {
          std::string p = "k=" + std::to_string(k) + " t=" + std::to_string(t) +
                          " m=" + std::to_string(m) + " n=" + std::to_string(n);
          cs.push_back(bool_case("racah-integral/" + p, p,
                                 [k, t, m, n] { return weight::racah_integral_check(k, t, m, n); }));
        }
  return cs;
}

std::vector<Case> suite_moments(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    for (int p = 0; p <= o.degreeMax; ++p) {
      std::string ps = tl(twoL) + " p=" + std::to_string(p);
      cs.push_back(Case{"moments/" + ps, ps, [twoL, p, ps] {
                          WeightSpec s{twoL};
                          PiMat a = weight::generalized_moment(s, p);
                          PiMat b = weight::generalized_moment_closed(s, p);
                          CaseResult r{"moments/" + ps, ps, a == b, ""};
                          if (!r.pass) r.witness = diff_witness(a, b);
                          return r;
                        }});
    }
  return cs;
}

std::vector<Case> suite_orthogonality(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL) {
    for (int n = 0; n <= o.degreeMax; ++n)
      for (int m = 0; m <= n; ++m) {
        std::string p = tl(twoL) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        cs.push_back(Case{"orthogonality/" + p, p, [twoL, n, m, p] {
                            WeightSpec s{twoL};
                            PiMat g = mvop::inner_product_W(s, mvop::monic_P(s, n),
                                                            mvop::monic_P(s, m));
                            PiMat expect = n == m ? mvop::squared_norm_H(s, n)
                                                  : PiMat(s.dim(), s.dim());
                            CaseResult r{"orthogonality/" + p, p, g == expect, ""};
                            if (!r.pass) r.witness = diff_witness(g, expect);
                            return r;
                          }});
      }
  }
  cs.push_back(bool_case("orthogonality/spot H1(0,0) at twoL=1", "twoL=1 n=1", [] {
    return mvop::squared_norm_H(WeightSpec{1}, 1).at(0, 0) == PiRational{Rational(3, 16)};
  }));
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    cs.push_back(bool_case("orthogonality/H0 closed " + tl(twoL), tl(twoL), [twoL] {
      WeightSpec s{twoL};
      return mvop::squared_norm_H(s, 0) == weight::generalized_moment(s, 0);
    }));
  return cs;
}

std::vector<Case> suite_eigen(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    for (int n = 0; n <= std::max(o.degreeMax, 5); ++n) {
      std::string p = tl(twoL) + " n=" + std::to_string(n);
      cs.push_back(Case{"eigen/D " + p, p, [twoL, n, p] {
                          WeightSpec s{twoL};
                          MatPoly pn = mvop::monic_P(s, n);
                          MatPoly lhs = dop::apply_right(pn, dop::build_Dtilde(twoL));
                          MatPoly rhs = MatPoly::from_ratmat(dop::lambda_Dtilde(twoL, n)) * pn;
                          CaseResult r{"eigen/D " + p, p, lhs == rhs, ""};
                          if (!r.pass) r.witness = diff_witness(lhs, rhs);
                          return r;
                        }});
      if (twoL >= 1)
        cs.push_back(Case{"eigen/E " + p, p, [twoL, n, p] {
                            WeightSpec s{twoL};
                            MatPoly pn = mvop::monic_P(s, n);
                            MatPoly lhs = dop::apply_right(pn, dop::build_Etilde(twoL));
                            MatPoly rhs = MatPoly::from_ratmat(dop::lambda_Etilde(twoL, n)) * pn;
                            CaseResult r{"eigen/E " + p, p, lhs == rhs, ""};
                            if (!r.pass) r.witness = diff_witness(lhs, rhs);
                            return r;
                          }});
    }
  return cs;
}

std::vector<Case> suite_commute(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 1; twoL <= o.twoLMax; ++twoL)
    cs.push_back(bool_case("commute/" + tl(twoL), tl(twoL), [twoL] {
      auto d = dop::build_Dtilde(twoL), e = dop::build_Etilde(twoL);
      return (dop::compose(d, e) - dop::compose(e, d)).is_zero();
    }));
  return cs;
}

std::vector<Case> suite_symmetry(const Options& o) {
  std::vector<Case> cs;
  int degMax = std::min(o.degreeMax, 3);
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL) {
    cs.push_back(bool_case("symmetry/D " + tl(twoL), tl(twoL), [twoL, degMax] {
      return dop::symmetry_check(twoL, dop::build_Dtilde(twoL), degMax);
    }));
    if (twoL >= 1)
      cs.push_back(bool_case("symmetry/E " + tl(twoL), tl(twoL), [twoL, degMax] {
        return dop::symmetry_check(twoL, dop::build_Etilde(twoL), degMax);
      }));
  }
  return cs;
}

std::vector<Case> suite_2h1(const Options& o) {
  std::vector<Case> cs;
  std::vector<Rational> ladder = {Rational(1, 3), Rational(-1, 3), Rational(5, 7)};
  bool have = false;
  for (const auto& a : ladder) have = have || a == o.alpha;
  if (!have && !o.alpha.is_zero()) ladder.insert(ladder.begin(), o.alpha);
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL) {
    std::vector<Rational> alphas = twoL == 0 ? std::vector<Rational>{Rational(0)} : ladder;
    for (const auto& a : alphas)
      for (int n = 0; n <= o.degreeMax; ++n) {
        std::string p = tl(twoL) + " alpha=" + a.str() + " n=" + std::to_string(n);
        cs.push_back(Case{"2h1/" + p, p, [twoL, a, n, p] {
                            CaseResult r{"2h1/" + p, p, true, ""};
                            if (!mhyp::degeneracy_check(twoL, a, n)) {
                              // degenerate parameter must be refused, not used
                              try {
                                mhyp::row_via_2h1(twoL, a, n, 0);
                                r.pass = false;
                                r.witness = "degenerate alpha accepted";
                              } catch (const std::exception&) {
                              }
                              return r;
                            }
                            WeightSpec s{twoL};
                            MatPoly rn = mvop::monic_R(s, n);
                            for (int i = 0; i <= twoL && r.pass; ++i) {
                              auto row = mhyp::row_via_2h1(twoL, a, n, i);
                              for (int j = 0; j <= twoL; ++j)
                                if (row[j] != rn.at(i, j)) {
                                  r.pass = false;
                                  r.witness = "row " + std::to_string(i) + " entry " +
                                              std::to_string(j) + ": " +
                                              render::poly_to_string(row[j], 'u') + " vs " +
                                              render::poly_to_string(rn.at(i, j), 'u');
                                  break;
                                }
                            }
                            return r;
                          }});
      }
    if (twoL >= 1)
      cs.push_back(bool_case("2h1/krawtchouk " + tl(twoL), tl(twoL), [twoL] {
        return mhyp::krawtchouk_eigencheck(twoL, Rational(1, 3)) &&
               mhyp::krawtchouk_eigencheck(twoL, Rational(twoL)) &&
               mhyp::krawtchouk_eigencheck(twoL, Rational(-twoL));
      }));
  }
  return cs;
}

std::vector<Case> suite_decouple(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 1; twoL <= o.twoLMax; ++twoL) {
    cs.push_back(Case{"decouple/D " + tl(twoL), tl(twoL), [twoL] {
                        auto got = dop::conjugate_by_M(
                            twoL, dop::combine_D_alpha(twoL, Rational(-twoL)));
                        auto expect = dop::script_D_expected(twoL);
                        CaseResult r{"decouple/D " + tl(twoL), tl(twoL), got == expect, ""};
                        if (!r.pass)
                          for (size_t i = 0; i < got.coeffs.size() && r.witness.empty(); ++i)
                            r.witness = diff_witness(got.coeffs[i], expect.coeffs[i]);
                        return r;
                      }});
    cs.push_back(bool_case("decouple/E " + tl(twoL), tl(twoL), [twoL] {
      return dop::conjugate_by_M(twoL, dop::build_E(twoL)) == dop::script_E_expected(twoL);
    }));
    cs.push_back(bool_case("decouple/alpha0-not-diagonal " + tl(twoL), tl(twoL), [twoL] {
      auto conj = dop::conjugate_by_M(twoL, dop::build_D(twoL));
      for (const auto& c : conj.coeffs)
        for (int i = 0; i <= twoL; ++i)
          for (int j = 0; j <= twoL; ++j)
            if (i != j && !c.at(i, j).is_zero()) return true;
      return false;
    }));
  }
  return cs;
}

std::vector<Case> suite_c_closed(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL) {
    for (int n = 0; n <= o.degreeMax; ++n) {
      std::string p = tl(twoL) + " n=" + std::to_string(n);
      cs.push_back(bool_case("c-closed/scriptR " + p, p, [twoL, n] {
        return dop::scriptR_factorization_check(twoL, n);
      }));
      cs.push_back(bool_case("c-closed/scriptP " + p, p, [twoL, n] {
        return dop::scriptP_gegenbauer_check(twoL, n);
      }));
      cs.push_back(bool_case("c-closed/recurrence " + p, p, [twoL, n] {
        for (int k = 0; k <= twoL; ++k) {
          auto rec = dop::c_recurrence(twoL, k, n);
          for (int j = 0; j <= twoL; ++j)
            if (rec[j] != dop::c_closed(twoL, k, j, n)) return false;
        }
        return true;
      }));
    }
    if (twoL >= 1)
      for (int n = 0; n <= o.degreeMax; ++n)
        for (int m = 0; m <= o.degreeMax; ++m) {
          std::string p =
              tl(twoL) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
          cs.push_back(bool_case("c-closed/orthogonality " + p, p, [twoL, n, m] {
            for (int k = 0; k <= twoL; ++k)
              if (!dop::c_orthogonality_check(twoL, n, m, k)) return false;
            return true;
          }));
        }
  }
  return cs;
}

std::vector<Case> suite_group(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 1; twoL <= std::max(1, o.twoLMax); ++twoL)
    cs.push_back(bool_case("group/relations " + tl(twoL), tl(twoL),
                           [twoL] { return group::group_operator_relation_check(twoL); }));
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL)
    cs.push_back(bool_case("group/phi0 " + tl(twoL), tl(twoL),
                           [twoL] { return group::phi0_identity_checks(twoL); }));
  return cs;
}

std::vector<Case> suite_appendix(const Options& o) {
  std::vector<Case> cs;
  for (int twoL = 0; twoL <= o.twoLMax; ++twoL) {
    int nmax = std::min(o.degreeMax, twoL);
    for (int n = 0; n <= nmax; ++n)
      for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= m; ++k) {
          std::string p = tl(twoL) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " k=" + std::to_string(k);
          cs.push_back(bool_case("appendix/racah-sum " + p, p, [twoL, n, m, k] {
            return special::racah_sum_check(twoL, n, m, k);
          }));
          cs.push_back(bool_case("appendix/beta " + p, p, [twoL, n, m, k] {
            return special::beta_via_racah(twoL, m, n, k) == weight::beta_closed(twoL, m, n, k);
          }));
        }
  }
  return cs;
}

std::vector<Case> suite_scalar(const Options& o) {
  std::vector<Case> cs;
  int nmax = std::max(o.degreeMax, 10);
  for (int n = 0; n <= nmax; ++n) {
    std::string p = "n=" + std::to_string(n);
    cs.push_back(bool_case("scalar/monic " + p, p, [n] {
      return mvop::monic_P(WeightSpec{0}, n).at(0, 0) ==
             Rational(1, 2).pow(n) * special::chebyshev_u(n);
    }));
    cs.push_back(bool_case("scalar/norm " + p, p, [n] {
      return mvop::squared_norm_H(WeightSpec{0}, n).at(0, 0) ==
             PiRational{Rational(1, 2) * Rational(1, 4).pow(n)};
    }));
    cs.push_back(bool_case("scalar/eigen " + p, p, [n] {
      MatPoly pn = mvop::monic_P(WeightSpec{0}, n);
      MatPoly lhs = dop::apply_right(pn, dop::build_Dtilde(0));
      return lhs == pn * Rational(static_cast<long long>(-n) * (n + 2));
    }));
  }
  return cs;
}

std::vector<Case> suite_nevai(const Options&) {
  std::vector<Case> cs;
  cs.push_back(bool_case("nevai/twoL=4 n=10..200", "twoL=4", [] {
    WeightSpec s{4};
    Rational half = Rational(1, 2), sixteenth = Rational(1, 16);
    Rational prevX, prevY;
    for (int n = 10; n <= 200; ++n) {
      RatMat dx = mvop::recurrence_X(s, n) -
                  RatMat::diagonal(std::vector<Rational>(5, half));
      RatMat dy = mvop::recurrence_Y(s, n) -
                  RatMat::diagonal(std::vector<Rational>(5, sixteenth));
      Rational mx = dx.max_abs(), my = dy.max_abs();
      if (n > 10 && (mx > prevX || my > prevY)) return false;
      prevX = mx;
      prevY = my;
    }
    Rational bound = Rational(3, 10) / Rational(200);
    return prevX < bound && prevY < bound;
  }));
  return cs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "ldu",      "det",     "udl",      "fourier", "racah-integral", "moments",
      "orthogonality", "eigen", "commute", "symmetry", "2h1",       "decouple",
      "c-closed", "group",   "appendix", "scalar",  "nevai"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

VerifyReport run_suite(const std::string& name, const Options& opts) {
  std::vector<Case> cases;
  if (name == "ldu") cases = suite_ldu(opts);
  else if (name == "det") cases = suite_det(opts);
  else if (name == "udl") cases = suite_udl(opts);
  else if (name == "fourier") cases = suite_fourier(opts);
  else if (name == "racah-integral") cases = suite_racah_integral(opts);
  else if (name == "moments") cases = suite_moments(opts);
  else if (name == "orthogonality") cases = suite_orthogonality(opts);
  else if (name == "eigen") cases = suite_eigen(opts);
  else if (name == "commute") cases = suite_commute(opts);
  else if (name == "symmetry") cases = suite_symmetry(opts);
  else if (name == "2h1") cases = suite_2h1(opts);
  else if (name == "decouple") cases = suite_decouple(opts);
  else if (name == "c-closed") cases = suite_c_closed(opts);
  else if (name == "group") cases = suite_group(opts);
  else if (name == "appendix") cases = suite_appendix(opts);
  else if (name == "scalar") cases = suite_scalar(opts);
  else if (name == "nevai") cases = suite_nevai(opts);
  else throw std::invalid_argument("run_suite: unknown suite '" + name + "'");

  VerifyReport report;
  report.suite = name;
  auto start = std::chrono::steady_clock::now();
  report.cases = run_parallel(cases);
  report.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

std::vector<VerifyReport> run_all(const Options& opts) {
  std::vector<VerifyReport> reports;
  for (const auto& name : suite_names()) reports.push_back(run_suite(name, opts));
  return reports;
}

}  // namespace mvcheb::verify
