#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qk/scalar.hpp"

namespace qk {

/// One named check inside a verification run. `skipped` marks instances whose
/// precondition leaves nothing to verify (listed, per report invariants).
struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string witness;  // serialized counterexample for failures
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, false, std::move(witness)});
  }
  void add_skipped(std::string name, std::string why) {
    checks.push_back({std::move(name), true, true, std::move(why)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
    return "";
  }
};

/// Deterministic source of small rational test data.
class Rng {
 public:
  explicit Rng(unsigned long seed = 0x51ee7) : gen_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    Rational q(num(gen_), den(gen_));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational() {
    while (true) {
      Rational q = rational();
      if (sgn(q) != 0) return q;
    }
  }
  std::vector<Scalar> rational_vector(int dim) {
    std::vector<Scalar> v(dim);
    for (auto& x : v) x = Scalar(rational());
    return v;
  }
  std::vector<Scalar> nonzero_rational_vector(int dim) {
    while (true) {
      auto v = rational_vector(dim);
      for (const auto& x : v)
        if (!x.is_zero()) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qk
