#pragma once

// The reference corpus: the cone, smooth quadric, symmetroid and linear
// examples, with one named check per acceptance criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussfano/grassmann.hpp"
#include "gaussfano/groebner.hpp"

namespace gaussfano::corpus {

struct Options {
  /// Step budget for every Gröbner computation in the run.
  std::optional<std::uint64_t> budget;
  /// Replace the expected cone chart ideal by a wrong one (harness self-test).
  bool perturb = false;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock limit in seconds; 0 means none.
  double limit = 0;
};

struct Instance {
  std::string family;
  Ideal variety;
  LineRep line;
};

Ideal cone();
Ideal smooth_quadric();
Ideal symmetroid();
/// P^2 = V(x3, x4) in P^4.
Ideal linear_plane();
/// The 2x2 minors of the generic symmetric 3x3 matrix in T0..T5.
Ideal veronese_minors();

/// All lines used by the theorem-equivalence check, grouped by family.
std::vector<Instance> theorem_instances();

std::vector<CheckResult> run(const Options& options = {});

/// Total run time limit for the whole corpus, in seconds.
inline constexpr double kCorpusLimitSeconds = 60.0;

}  // namespace gaussfano::corpus
