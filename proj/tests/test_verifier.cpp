#include "fibint/registry.hpp"
#include "fibint/verifier.hpp"

#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("verify_instance on named cases") {
  const auto g = fibint::verify_instance(fibint::instantiate("S5.FOURG", {}));
  CHECK(g.passed);
  CHECK(g.converged);
  CHECK(g.abs_err <= 1e-7);
  CHECK(std::fabs(g.rhs - 3.663862376708876) <= 1e-12);
  CHECK(g.quad_evals > 0);

  const auto a = fibint::verify_instance(fibint::instantiate("S8.AEKFMPM.PART", {}));
  CHECK(a.passed);
  CHECK(std::fabs(a.lhs - 5.221231398349057) <= 1e-9);

  const auto b = fibint::verify_instance(fibint::instantiate("S2.BJU5530", {{"k", 1}, {"n", 3}}));
  CHECK(b.passed);
  CHECK(std::fabs(b.lhs - 5.962847939999439) <= 1e-9);
}

TEST_CASE("pass threshold is max(tol, 1e-8 |rhs|)") {
  auto inst = fibint::instantiate("S5.FOURG", {});
  inst.rhs *= 1.0 + 1e-5;
  const auto r = fibint::verify_instance(inst);
  CHECK_FALSE(r.passed);
  CHECK(r.converged);

  auto big = fibint::instantiate("S5.FOURG", {});
  big.tol = 1e-13;
  big.rhs += 5e-9 * big.rhs;
  CHECK(fibint::verify_instance(big).passed);
  big.rhs += 2e-8 * big.rhs;
  CHECK_FALSE(fibint::verify_instance(big).passed);
}

TEST_CASE("evaluation problems become failed results") {
  auto inst = fibint::instantiate("S5.FOURG", {});
  inst.integrand.eval = [](double) -> double { throw std::runtime_error("boom"); };
  const auto r = fibint::verify_instance(inst);
  CHECK_FALSE(r.passed);
  CHECK(r.note.find("boom") != std::string::npos);

  auto nan_inst = fibint::instantiate("S5.FOURG", {});
  nan_inst.integrand.eval = [](double x) { return x > 1.0 ? NAN : 1.0; };
  const auto n = fibint::verify_instance(nan_inst);
  CHECK_FALSE(n.passed);
  CHECK_FALSE(n.converged);
  CHECK(n.note.find("converge") != std::string::npos);

  auto bad_rhs = fibint::instantiate("S5.FOURG", {});
  bad_rhs.rhs = INFINITY;
  CHECK_FALSE(fibint::verify_instance(bad_rhs).passed);
}

TEST_CASE("run over a section") {
  const auto rep = fibint::run("S5.*");
  CHECK(rep.results.size() > 50);
  CHECK(rep.n_fail == 0);
  CHECK(rep.n_pass + rep.n_fail == static_cast<long>(rep.results.size()));
  for (std::size_t i = 1; i < rep.results.size(); ++i) {
    const auto& p = rep.results[i - 1];
    const auto& q = rep.results[i];
    CHECK((p.case_id < q.case_id || (p.case_id == q.case_id && p.assignment < q.assignment)));
  }
}

TEST_CASE("run is deterministic across thread counts") {
  setenv("FIBINT_THREADS", "1", 1);
  const auto one = fibint::run("S9.*");
  setenv("FIBINT_THREADS", "4", 1);
  const auto four = fibint::run("S9.*");
  unsetenv("FIBINT_THREADS");
  REQUIRE(one.results.size() == four.results.size());
  for (std::size_t i = 0; i < one.results.size(); ++i) {
    CHECK(one.results[i].case_id == four.results[i].case_id);
    CHECK(one.results[i].assignment == four.results[i].assignment);
    CHECK(one.results[i].lhs == four.results[i].lhs);
    CHECK(one.results[i].rhs == four.results[i].rhs);
  }
}

TEST_CASE("run errors") {
  CHECK_THROWS_AS(fibint::run("NOSUCH"), std::invalid_argument);
  CHECK_THROWS_AS(fibint::run("S5.FOURG", std::nullopt, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(fibint::run("S5.FOURG", std::nullopt, 1e-14), std::invalid_argument);
  fibint::GridOverride g{{"r", {50, 60}}};
  CHECK_THROWS_AS(fibint::run("S6.CPWMQ60", g), std::invalid_argument);
}

TEST_CASE("grid and tolerance overrides") {
  fibint::GridOverride g{{"r", {2, 6}}};
  const auto rep = fibint::run("S6.CPWMQ60", g, 1e-9);
  REQUIRE(rep.results.size() == 2);
  CHECK(rep.results[0].assignment.at("r") == 3);
  CHECK(rep.results[1].assignment.at("r") == 5);
  CHECK(rep.results[0].tol == 1e-9);
  CHECK(rep.n_fail == 0);

  const auto& c = fibint::find_case("S4.KJ2W249");
  const auto eg = fibint::effective_grid(c, {{"r", {1, 3}}, {"m", {0, 1}}});
  CHECK(eg.size() == 4);
}

TEST_CASE("structural identities hold to quadrature accuracy") {
  for (long r = 1; r <= 6; ++r) {
    const auto q = fibint::verify_instance(fibint::instantiate("S10.QVB6JUR", {{"r", r}}));
    CHECK(q.passed);
    CHECK(q.abs_err <= 1e-9);
  }
  for (const auto& a : fibint::default_grid("S6.FM2DODR")) {
    const auto f = fibint::verify_instance(fibint::instantiate("S6.FM2DODR", a));
    CHECK(f.passed);
    CHECK(f.abs_err <= 1e-9);
  }
}

TEST_CASE("lemma2_check") {
  const auto res = fibint::lemma2_check(0, 10, 1e-5);
  REQUIRE(res.size() == 11);
  for (const auto& r : res) {
    CHECK(r.fib_residual <= 1e-6);
    CHECK(r.lucas_residual <= 1e-6);
  }
  const auto coarse = fibint::lemma2_check(0, 10, 1e-4);
  const auto fine = fibint::lemma2_check(0, 10, 5e-5);
  double sc = 0.0, sf = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    sc += coarse[i].fib_residual + coarse[i].lucas_residual;
    sf += fine[i].fib_residual + fine[i].lucas_residual;
  }
  CHECK(sc / sf == doctest::Approx(4.0).epsilon(0.1));
  CHECK(res[0].j == 0);
  CHECK_THROWS_AS(fibint::lemma2_check(0, 1, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(fibint::lemma2_check(0, 1, 1e-9), std::invalid_argument);
  (void)kPi;
}
