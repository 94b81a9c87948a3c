#pragma once

// Batch drivers over independent work items (charts, lines).  Each
// parallel kernel has a serial twin with identical output that the tests
// compare against and the benchmark times.

#include <optional>
#include <vector>

#include "gaussfano/fano.hpp"
#include "gaussfano/nbundle.hpp"

namespace gaussfano::kernels {

std::vector<FanoChartIdeal> fano_all_charts_serial(const Ideal& variety, Budget budget = Budget::standard());
std::vector<FanoChartIdeal> fano_all_charts(const Ideal& variety, Budget budget = Budget::standard());

std::vector<TheoremCheck> theorem_checks_serial(const Ideal& variety, const std::vector<LineRep>& lines,
                                                std::optional<std::size_t> dim_x = std::nullopt);
std::vector<TheoremCheck> theorem_checks(const Ideal& variety, const std::vector<LineRep>& lines,
                                         std::optional<std::size_t> dim_x = std::nullopt);

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace gaussfano::kernels
