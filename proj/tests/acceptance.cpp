// Runs the twelve acceptance criteria with the default configuration and
// prints one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "cli.hpp"

using namespace homstruct;
using namespace homstruct::cli;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
};

std::string summary(const std::vector<SuiteRecord>& recs) {
  std::string s;
  for (const auto& r : recs)
    if (r.status != Status::Pass) {
      s += " " + r.id + "/" + r.metric_case + "=" + status_name(r.status);
      if (r.status == Status::Fail && !r.details.empty()) s += " (" + r.details.front() + ")";
    }
  return s;
}

// Every record must pass; `sampled_ok` lets SAMPLED through for the listed case.
Outcome suite(const std::string& id, const Config& cfg, const std::string& sampled_ok = "") {
  Json tables;
  auto recs = run_suite_id(id, cfg, tables);
  Outcome o;
  o.ok = !recs.empty();
  for (const auto& r : recs) {
    if (r.status == Status::Fail) o.ok = false;
    if (r.status == Status::Sampled && r.metric_case != sampled_ok) o.ok = false;
  }
  o.note = summary(recs);
  return o;
}

// Each case must have been sampled at least `n` times (three params per metric).
Outcome with_sample_floor(Outcome o, const std::string& id, const Config& cfg, std::size_t n) {
  Json tables;
  for (const auto& r : run_suite_id(id, cfg, tables))
    if (r.metric_case != "all" && r.params.size() < 3 * n) {
      o.ok = false;
      o.note += " " + r.metric_case + " sampled " + std::to_string(r.params.size() / 3) + " < " + std::to_string(n);
    }
  return o;
}

}  // namespace

int main() {
  Config cfg;
  try {
    cfg = default_config();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  struct Criterion {
    int n;
    std::string name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> crit{
      {1, "connection/curvature closed forms, >=16 metrics per case", 5,
       [&] { return with_sample_floor(suite("lc_forms", cfg), "lc_forms", cfg, 16); }},
      {2, "constant-curvature oracle at (-1,1,1)", 1, [&] { return suite("constant_curvature", cfg); }},
      {3, "Table 1 via branch_solve, 8 points per case", 30, [&] { return suite("table1", cfg, "symmetric"); }},
      {4, "degenerations S_lambda(lambda+2mu), S_mu(2nu-mu), S_nu(2mu-nu) = S0", 0, [&] { return suite("degenerations", cfg); }},
      {5, "holonomy dimensions and S_vol curvature", 0, [&] { return suite("holonomy", cfg); }},
      {6, "transvection algebras, hatted bases, Table 2 c-values", 0, [&] { return suite("transvection", cfg); }},
      {7, "lemma cases and the case (iv) obstruction", 0, [&] { return suite("lemma", cfg); }},
      {8, "isomorphism certificates", 0, [&] { return suite("certificates", cfg); }},
      {9, "contact/paracontact axioms, alpha/beta, Tables 3-5", 0, [&] { return suite("contact", cfg); }},
      {10, "mixed 3-structures", 0, [&] { return suite("mixed", cfg); }},
      {11, "group model: expansions, action connection, Hopf maps, double cover", 10, [&] { return suite("group_model", cfg); }},
      {12, "determinism and full-suite runtime", 60,
       [&] {
         auto a = emit(run_suite(cfg), Format::Json);
         auto b = emit(run_suite(cfg), Format::Json);
         Outcome o;
         o.ok = a == b;
         if (!o.ok) o.note = " reports differ";
         return o;
       }},
  };
  bool all = true;
  for (const auto& c : crit) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string(" exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    // Criterion 12 times two full runs; the limit applies to one.
    double measured = c.n == 12 ? s / 2 : s;
    if (c.limit > 0 && measured >= c.limit) {
      o.ok = false;
      o.note += " over the time limit";
    }
    all = all && o.ok;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", measured);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.n << "] " << c.name << " (" << buf;
    if (c.limit > 0) std::cout << ", limit " << c.limit << " s";
    std::cout << ")" << o.note << "\n";
  }
  return all ? 0 : 1;
}
