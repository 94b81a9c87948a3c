#include "gaussfano/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gaussfano/gauss.hpp"

namespace gaussfano::kernels {

namespace {

// Runs body(i) for i in [0, n) across threads; the first exception (by
// index) is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::size_t resolve_dim(const Ideal& variety, std::optional<std::size_t> dim_x) {
  if (dim_x) return *dim_x;
  return variety.ring().nvars() - 1 - derived_codim(variety);
}

}  // namespace

std::vector<FanoChartIdeal> fano_all_charts_serial(const Ideal& variety, Budget budget) {
  std::vector<FanoChartIdeal> out;
  for (const auto& chart : charts(variety.ring().nvars() - 1)) out.push_back(fano_chart_ideal(variety, chart, budget));
  return out;
}

std::vector<FanoChartIdeal> fano_all_charts(const Ideal& variety, Budget budget) {
  const auto all = charts(variety.ring().nvars() - 1);
  std::vector<std::optional<FanoChartIdeal>> slots(all.size());
  parallel_for(all.size(), [&](std::size_t i) { slots[i] = fano_chart_ideal(variety, all[i], budget); });
  std::vector<FanoChartIdeal> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<TheoremCheck> theorem_checks_serial(const Ideal& variety, const std::vector<LineRep>& lines,
                                                std::optional<std::size_t> dim_x) {
  const std::size_t dim = resolve_dim(variety, dim_x);
  std::vector<TheoremCheck> out;
  for (const auto& line : lines) out.push_back(theorem_check(variety, line, dim));
  return out;
}

std::vector<TheoremCheck> theorem_checks(const Ideal& variety, const std::vector<LineRep>& lines,
                                         std::optional<std::size_t> dim_x) {
  const std::size_t dim = resolve_dim(variety, dim_x);
  std::vector<TheoremCheck> out(lines.size());
  parallel_for(lines.size(), [&](std::size_t i) { out[i] = theorem_check(variety, lines[i], dim); });
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gaussfano::kernels
