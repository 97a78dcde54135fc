#include "qk/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qk/clifford.hpp"
#include "qk/killing.hpp"
#include "qk/spaces.hpp"
#include "qk/weitzenbock.hpp"
#include "qk/wolf.hpp"

namespace qk {

namespace {

using Params = std::map<std::string, std::string>;

InstanceResult from_report(const std::string& suite, Params params,
                           const Report& rep, long ms) {
  InstanceResult out;
  out.suite = suite;
  out.params = std::move(params);
  out.ms = ms;
  bool all_skipped = !rep.checks.empty();
  for (const auto& c : rep.checks)
    if (!c.skipped) all_skipped = false;
  if (!rep.pass()) {
    out.status = "fail";
    out.witness = rep.first_failure();
  } else if (all_skipped) {
    out.status = "skipped";
    out.note = rep.checks.empty() ? "" : rep.checks.front().witness;
  } else {
    out.status = "pass";
  }
  return out;
}

std::string fmt_int(int v) { return std::to_string(v); }

using Task = std::function<std::vector<InstanceResult>()>;

std::vector<InstanceResult> run_tasks(std::vector<Task> tasks) {
  std::vector<std::vector<InstanceResult>> res(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
  for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
    try {
      res[static_cast<size_t>(i)] = tasks[static_cast<size_t>(i)]();
    } catch (const std::exception& e) {
      InstanceResult fail;
      fail.suite = "internal";
      fail.status = "fail";
      fail.witness = e.what();
      res[static_cast<size_t>(i)] = {fail};
    }
  }
  std::vector<InstanceResult> flat;
  for (auto& group : res)
    for (auto& inst : group) flat.push_back(std::move(inst));
  std::sort(flat.begin(), flat.end(),
            [](const InstanceResult& a, const InstanceResult& b) {
              return a.sort_key() < b.sort_key();
            });
  return flat;
}

long elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename Fn>
InstanceResult timed(const std::string& suite, Params params, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  const Report rep = fn();
  return from_report(suite, std::move(params), rep, elapsed_ms(t0));
}

// --- per-suite grids -------------------------------------------------------------

std::vector<Task> tasks_kom1(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (int n = 2; n <= opt.n_max; ++n)
    tasks.push_back([n] {
      EModel em(n);
      std::vector<InstanceResult> out;
      for (int s = 0; s <= n; ++s)
        out.push_back(timed("kom1", {{"n", fmt_int(n)}, {"s", fmt_int(s)}},
                            [&] { return check_kom1(em, s); }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_kom2(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  tasks.push_back([r_max = opt.r_max] {
    HModel hm;
    std::vector<InstanceResult> out;
    for (int r = 0; r <= r_max; ++r)
      out.push_back(
          timed("kom2", {{"r", fmt_int(r)}}, [&] { return check_kom2(hm, r); }));
    return out;
  });
  return tasks;
}

std::vector<Task> tasks_proj(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (int n = 2; n <= opt.n_max; ++n)
    tasks.push_back([n] {
      EModel em(n);
      std::vector<InstanceResult> out;
      out.push_back(timed("proj", {{"n", fmt_int(n)}},
                          [&] { return check_symplectic(em.space()); }));
      for (int s = 0; s <= n; ++s)
        out.push_back(timed("proj", {{"n", fmt_int(n)}, {"s", fmt_int(s)}}, [&] {
          Report rep = check_primitive_projection(em, s);
          rep.merge(check_sl2(em, s));
          if (s >= 2) rep.merge(check_operator_identity(em, s));
          return rep;
        }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_summe(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (int n = 2; n <= opt.n_max; ++n)
    tasks.push_back([n, r_max = opt.r_max] {
      SpinorAlgebra sa(n);
      const TangentFrame fr = build_frame(sa);
      std::vector<InstanceResult> out;
      out.push_back(timed("summe", {{"n", fmt_int(n)}},
                          [&] { return check_frame(sa, fr); }));
      for (int r = 0; r <= r_max; ++r)
        for (int s = 0; s <= n; ++s)
          out.push_back(timed(
              "summe",
              {{"n", fmt_int(n)}, {"r", fmt_int(r)}, {"s", fmt_int(s)}},
              [&] { return check_summe(sa, fr, r, s); }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_iota(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (int n = 2; n <= opt.n_max; ++n)
    tasks.push_back([n] {
      SpinorAlgebra sa(n);
      const TangentFrame fr = build_frame(sa);
      std::vector<InstanceResult> out;
      for (int r = 0; r <= n; ++r)
        out.push_back(timed("iota", {{"n", fmt_int(n)}, {"r", fmt_int(r)}},
                            [&] { return check_iota(sa, fr, r); }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_projectors(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  tasks.push_back([r_max = opt.r_max] {
    HModel hm;
    std::vector<InstanceResult> out;
    for (int r = 0; r <= r_max; ++r)
      out.push_back(timed("projectors", {{"r", fmt_int(r)}, {"side", "H"}},
                          [&] { return check_projector_relations_H(hm, r); }));
    return out;
  });
  for (int n = 2; n <= opt.n_max; ++n)
    tasks.push_back([n] {
      EModel em(n);
      std::vector<InstanceResult> out;
      for (int s = 2; s <= n; ++s)
        out.push_back(
            timed("projectors", {{"n", fmt_int(n)}, {"s", fmt_int(s)}, {"side", "E"}},
                  [&] { return check_projector_relations_E(em, s); }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_weitzenbock(const SuiteOptions& opt) {
  // Coefficient-only checks are cheap; run them over the full verified grids.
  std::vector<Task> tasks;
  const int n_top = std::max(opt.n_max, 8);
  tasks.push_back([n_top, r_max = opt.r_max] {
    std::vector<InstanceResult> out;
    for (int n = 2; n <= std::min(n_top, 6); ++n)
      for (int r = 0; r <= std::max(r_max, 4); ++r)
        for (int s = 2; s <= n; ++s)
          out.push_back(timed(
              "weitzenbock",
              {{"n", fmt_int(n)}, {"r", fmt_int(r)}, {"s", fmt_int(s)}, {"part", "matrices"}},
              [&] { return check_weitzenbock_matrices(n, r, s); }));
    for (int n = 2; n <= std::min(n_top, 6); ++n)
      for (int r = 1; r <= n - 1; ++r)
        out.push_back(
            timed("weitzenbock",
                  {{"n", fmt_int(n)}, {"r", fmt_int(r)}, {"part", "min-identity"}},
                  [&] { return check_min_identity(n, r); }));
    for (int n = 2; n <= n_top; ++n) {
      out.push_back(timed("weitzenbock",
                          {{"n", fmt_int(n)}, {"part", "limiting-system"}},
                          [&] { return check_limiting_system(n); }));
      out.push_back(timed("weitzenbock",
                          {{"n", fmt_int(n)}, {"part", "psi-minus-row"}},
                          [&] { return check_psi_minus_row(n); }));
    }
    return out;
  });
  return tasks;
}

std::vector<Task> tasks_twistor(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  tasks.push_back([n_max = std::max(opt.n_max, 4), r_max = std::max(opt.r_max, 4)] {
    std::vector<InstanceResult> out;
    for (int n = 2; n <= n_max; ++n)
      for (int r = 0; r <= r_max; ++r)
        for (int s = 1; s <= n; ++s)
          out.push_back(timed(
              "twistor",
              {{"n", fmt_int(n)}, {"r", fmt_int(r)}, {"s", fmt_int(s)}},
              [&] { return check_twistor_identity(n, r, s); }));
    return out;
  });
  return tasks;
}

std::vector<Task> tasks_killing_curvature(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (int n = 2; n <= std::min(opt.n_max, 3); ++n)
    tasks.push_back([n] {
      SpinorAlgebra sa(n);
      std::vector<InstanceResult> out;
      out.push_back(timed("killing-curvature", {{"n", fmt_int(n)}, {"part", "assembly"}},
                          [&] { return check_assemble_R(sa); }));
      out.push_back(timed("killing-curvature",
                          {{"n", fmt_int(n)}, {"part", "wedge-identities"}},
                          [&] { return check_wedge_identities(sa); }));
      {
        CurvatureModel m{n, Rational(1), QuarticForm(2 * n)};
        out.push_back(timed("killing-curvature",
                            {{"n", fmt_int(n)}, {"part", "quartic-zero"}},
                            [&] { return check_killing_curvature(sa, m); }));
      }
      Rng rng(2024 + static_cast<unsigned long>(n));
      for (int t = 0; t < 2; ++t) {
        CurvatureModel m{n, Rational(1), QuarticForm::random(2 * n, rng)};
        out.push_back(timed(
            "killing-curvature",
            {{"n", fmt_int(n)}, {"part", "quartic-random-" + fmt_int(t)}},
            [&] { return check_killing_curvature(sa, m); }));
      }
      const TangentFrame fr = build_frame(sa);
      out.push_back(timed("killing-curvature",
                          {{"n", fmt_int(n)}, {"part", "killing-equations"}},
                          [&] { return check_killing_equation_consequences(sa, fr); }));
      EModel em(n);
      for (int s = 2; s <= n; ++s)
        out.push_back(timed(
            "killing-curvature",
            {{"n", fmt_int(n)}, {"s", fmt_int(s)}, {"part", "term-vanishing"}},
            [&] { return check_curvature_term_vanishing(em, s); }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_laplace(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  tasks.push_back([n_top = std::max(opt.n_max, 8)] {
    std::vector<InstanceResult> out;
    for (int n = 2; n <= n_top; ++n)
      out.push_back(
          timed("laplace", {{"n", fmt_int(n)}}, [&] { return check_laplace(n); }));
    return out;
  });
  return tasks;
}

std::vector<Task> tasks_hermitian(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (int n = 2; n <= std::min(opt.n_max, 3); ++n)
    tasks.push_back([n] {
      SpinorAlgebra sa(n);
      const TangentFrame fr = build_frame(sa);
      std::vector<InstanceResult> out;
      out.push_back(timed("hermitian", {{"n", fmt_int(n)}, {"part", "gram"}},
                          [&] { return check_gram_positivity(sa); }));
      out.push_back(timed("hermitian", {{"n", fmt_int(n)}, {"part", "adjointness"}},
                          [&] { return check_adjointness(sa, fr); }));
      out.push_back(timed("hermitian", {{"n", fmt_int(n)}, {"part", "skew"}},
                          [&] { return check_skew_hermitian(sa, fr); }));
      return out;
    });
  return tasks;
}

std::vector<Task> tasks_wolf(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  const WolfFamily families[] = {WolfFamily::HPn, WolfFamily::GrC2,
                                 WolfFamily::GrR4};
  for (const WolfFamily f : families)
    for (int n = 2; n <= std::min(opt.n_max, 3); ++n)
      tasks.push_back([f, n] {
        std::vector<InstanceResult> out;
        const auto [g, dec] = build_classical_wolf(f, n);
        const Params base = {{"family", family_name(f)}, {"n", fmt_int(n)}};
        auto add = [&](const char* part, const Report& rep, long ms) {
          Params p = base;
          p["part"] = part;
          out.push_back(from_report("wolf", std::move(p), rep, ms));
        };
        auto t0 = std::chrono::steady_clock::now();
        add("lie-model", check_lie_model(g), elapsed_ms(t0));
        t0 = std::chrono::steady_clock::now();
        add("cartan", check_cartan(g, dec), elapsed_ms(t0));
        t0 = std::chrono::steady_clock::now();
        add("sp1-constant", check_sp1_constant(g, dec), elapsed_ms(t0));
        t0 = std::chrono::steady_clock::now();
        add("curvature-endomorphism",
            check_curvature_endomorphism(g, dec, expected_l_classical(f, n)),
            elapsed_ms(t0));
        return out;
      });
  tasks.push_back([] {
    std::vector<InstanceResult> out;
    auto table = wolf_table(2);
    for (auto& entry : table) {
      out.push_back(timed("wolf", {{"family", entry.name}, {"part", "trace-identity"}},
                          [&] { return check_trace_identity(&entry); }));
      const bool expect_regular = entry.name != "Sp(n+1)/Sp(1)Sp(n)";
      out.push_back(timed("wolf", {{"family", entry.name}, {"part", "regularity"}},
                          [&] { return check_regularity(entry, expect_regular); }));
    }
    return out;
  });
  return tasks;
}

}  // namespace

std::string InstanceResult::sort_key() const {
  std::ostringstream os;
  os << suite;
  for (const auto& [k, v] : params) os << "|" << k << "=" << v;
  return os.str();
}

bool SuiteResult::pass() const {
  for (const auto& i : instances)
    if (i.status == "fail") return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kom1",     "kom2",     "proj",        "summe",
      "iota",     "projectors", "weitzenbock", "twistor",
      "killing-curvature", "laplace", "hermitian", "wolf"};
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<Task> tasks;
  auto extend = [&](std::vector<Task> more) {
    for (auto& t : more) tasks.push_back(std::move(t));
  };
  if (name == "kom1" || name == "all") extend(tasks_kom1(opt));
  if (name == "kom2" || name == "all") extend(tasks_kom2(opt));
  if (name == "proj" || name == "all") extend(tasks_proj(opt));
  if (name == "summe" || name == "all") extend(tasks_summe(opt));
  if (name == "iota" || name == "all") extend(tasks_iota(opt));
  if (name == "projectors" || name == "all") extend(tasks_projectors(opt));
  if (name == "weitzenbock" || name == "all") extend(tasks_weitzenbock(opt));
  if (name == "twistor" || name == "all") extend(tasks_twistor(opt));
  if (name == "killing-curvature" || name == "all")
    extend(tasks_killing_curvature(opt));
  if (name == "laplace" || name == "all") extend(tasks_laplace(opt));
  if (name == "hermitian" || name == "all") extend(tasks_hermitian(opt));
  if (name == "wolf" || name == "all") extend(tasks_wolf(opt));

  SuiteResult out;
  out.suite = name;
  out.instances = run_tasks(std::move(tasks));
  return out;
}

std::string suite_result_json(const SuiteResult& res, bool timing) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = res.suite;
  j["instances"] = nlohmann::ordered_json::array();
  for (const auto& inst : res.instances) {
    nlohmann::ordered_json ji;
    ji["suite"] = inst.suite;
    ji["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inst.params) ji["params"][k] = v;
    ji["status"] = inst.status;
    if (!inst.witness.empty()) ji["witness"] = inst.witness;
    if (!inst.note.empty()) ji["note"] = inst.note;
    if (timing && inst.ms >= 0) ji["ms"] = inst.ms;
    j["instances"].push_back(ji);
  }
  j["status"] = res.pass() ? "pass" : "fail";
  return j.dump(2);
}

std::string suite_result_table(const SuiteResult& res, bool timing) {
  std::ostringstream os;
  for (const auto& inst : res.instances) {
    os << (inst.status == "pass"
               ? "[PASS]"
               : (inst.status == "skipped" ? "[SKIP]" : "[FAIL]"))
       << " " << inst.suite;
    for (const auto& [k, v] : inst.params) os << " " << k << "=" << v;
    if (timing && inst.ms >= 0) os << "  (" << inst.ms << " ms)";
    if (!inst.witness.empty()) os << "  -- " << inst.witness;
    if (!inst.note.empty()) os << "  -- " << inst.note;
    os << "\n";
  }
  os << (res.pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

std::vector<WolfRow> wolf_rows(int n_classical) {
  std::vector<WolfRow> rows;
  auto table = wolf_table(n_classical);
  for (auto& entry : table) {
    Report solved = check_trace_identity(&entry);
    WolfRow row;
    row.name = entry.name;
    row.n = entry.n;
    std::ostringstream ideals, ls, rhos;
    for (size_t i = 0; i < entry.ideals.size(); ++i) {
      const auto& ideal = entry.ideals[i];
      if (i) {
        ideals << ", ";
        ls << ", ";
        rhos << ", ";
      }
      ideals << ideal.name << ":" << ideal.dim;
      ls << ideal.l;
      rhos << (1 - ideal.l) / 2;
    }
    row.ideals = ideals.str();
    row.l_values = ls.str();
    row.rho_values = rhos.str();
    row.regularity =
        solved.pass() ? (is_regular(entry) ? "REGULAR" : "DEGENERATE")
                      : "INCONSISTENT";
    rows.push_back(row);
  }
  return rows;
}

std::string wolf_rows_table(const std::vector<WolfRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.name << "  (n=" << r.n << ")\n"
       << "  ideals: " << r.ideals << "\n"
       << "  l:      " << r.l_values << "\n"
       << "  rho:    " << r.rho_values << "\n"
       << "  " << r.regularity << "\n";
  }
  return os.str();
}

std::string wolf_rows_json(const std::vector<WolfRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = "wolf-table";
  j["instances"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json ji;
    ji["name"] = r.name;
    ji["n"] = r.n;
    ji["ideals"] = r.ideals;
    ji["l"] = r.l_values;
    ji["rho"] = r.rho_values;
    ji["regularity"] = r.regularity;
    j["instances"].push_back(ji);
  }
  j["status"] = "pass";
  return j.dump(2);
}

DimsResult compute_dims(int n) {
  DimsResult d;
  d.n = n;
  d.total = 0;
  d.expected_total = 1L << (2 * n);
  for (int r = 0; r <= n; ++r) {
    const long rank = (r + 1) * (binom(2 * n, n - r) - binom(2 * n, n - r - 2));
    d.ranks.push_back({r, rank});
    d.total += rank;
  }
  d.prim_dims_ok = true;
  EModel em(n);
  for (int s = 0; s <= n; ++s) {
    const long expect = binom(2 * n, s) - binom(2 * n, s - 2);
    if (em.lambda_contraction(s).kernel_basis().cols() != expect)
      d.prim_dims_ok = false;
  }
  return d;
}

std::string dims_table(const DimsResult& d) {
  std::ostringstream os;
  os << "n = " << d.n << "\n";
  for (const auto& row : d.ranks)
    os << "  rank S_" << row.r << " = " << row.rank << "\n";
  os << "  total = " << d.total << " (expected 2^{2n} = " << d.expected_total
     << ") " << (d.total == d.expected_total ? "ok" : "MISMATCH") << "\n";
  os << "  primitive dimensions vs kernel ranks: "
     << (d.prim_dims_ok ? "ok" : "MISMATCH") << "\n";
  return os.str();
}

std::string dims_json(const DimsResult& d) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = "dims";
  j["n"] = d.n;
  j["ranks"] = nlohmann::ordered_json::array();
  for (const auto& row : d.ranks) j["ranks"].push_back(row.rank);
  j["total"] = d.total;
  j["expected_total"] = d.expected_total;
  j["prim_dims_ok"] = d.prim_dims_ok;
  j["status"] =
      (d.total == d.expected_total && d.prim_dims_ok) ? "pass" : "fail";
  return j.dump(2);
}

}  // namespace qk
