#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartqec/footprint.hpp"
#include "cartqec/quantum.hpp"

namespace cartqec {

/// One table row: CSS and Steane-enlarged parameters with their GV verdicts,
/// plus the guaranteed / bounded / actual dimension increases at delta.
/// Rows are presented at the designed distance delta (display_d); css.d may
/// exceed it when no monomial attains sigma = delta.
struct TableRow {
  std::uint64_t delta = 0;
  std::uint64_t display_d = 0;
  QuantumParams css;
  GvClass css_gv;
  QuantumParams steane;
  GvClass steane_gv;
  std::uint32_t prop4_increase = 0;  // the edge-count guarantee K
  std::uint64_t cor1_bound = 0;      // prime/square/composite refinement of K
  bool cor1_exact = false;
  bool bounds_defined = false;       // false when delta - 1 > p^{r_1}
  std::uint64_t actual_increase = 0; // tau(delta - 1)
  bool prop4_applies = false;
};

struct SkipNote {
  std::uint64_t delta = 0;
  std::string reason;
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<SkipNote> skipped;
};

/// Sweeps delta over [delta_lo, delta_hi]; deltas failing a hypothesis
/// (dual containment, tau(delta-1) >= 2, ...) become skip notes, not errors.
TableResult build_table(const ProductSpec& spec, std::uint64_t delta_lo, std::uint64_t delta_hi);

enum class OutputFormat { Text, Csv, Json };

const char* gv_word(GvVerdict v);    // "exceeds" / "meets" / "neither"
const char* gv_marker(GvVerdict v);  // "!" / "*" / ""

/// Renders "[[n,k,d]]" (plus ">=" before d when lower_bound is set).
std::string quantum_brackets(const QuantumParams& p, bool lower_bound = false);

/// CSV columns: delta,n,css_k,steane_k,d,css_gv,steane_gv,prop4,cor1,cor1_exact,actual
std::string render_table(const TableResult& table, const ProductSpec& spec, OutputFormat format);

/// The params report (classical, CSS, Steane, Singleton lines).
std::string render_params_report(const ProductSpec& spec, std::uint64_t delta);

/// Text rendering of sigma_grid: columns indexed by a_1, one printed row per
/// combination of the trailing exponents, blank line between a_2 layers.
std::string render_grid(const ProductSpec& spec);

/// tau / bound listing for s in [s_lo, s_hi], honoring the output format.
std::string render_tau(const ProductSpec& spec, std::uint64_t s_lo, std::uint64_t s_hi,
                       OutputFormat format);

}  // namespace cartqec
