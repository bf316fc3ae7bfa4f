#include "cartqec/table.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

#include "cartqec/util.hpp"

namespace cartqec {

namespace {

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string spec_comment(const ProductSpec& spec) {
  std::ostringstream os;
  os << "# p=" << spec.p() << " r=";
  for (std::size_t i = 0; i < spec.m(); ++i) {
    if (i) os << ',';
    os << spec.r_vec()[i];
  }
  os << " q=" << spec.ambient_q() << " n=" << spec.n();
  return os.str();
}

}  // namespace

const char* gv_word(GvVerdict v) {
  switch (v) {
    case GvVerdict::Exceeds: return "exceeds";
    case GvVerdict::Meets: return "meets";
    case GvVerdict::Neither: return "neither";
  }
  return "neither";
}

const char* gv_marker(GvVerdict v) {
  switch (v) {
    case GvVerdict::Exceeds: return "!";
    case GvVerdict::Meets: return "*";
    case GvVerdict::Neither: return "";
  }
  return "";
}

std::string quantum_brackets(const QuantumParams& p, bool lower_bound) {
  std::ostringstream os;
  os << "[[" << p.n << ',' << p.k << ',' << (lower_bound ? ">=" : "") << p.d << "]]";
  return os.str();
}

TableResult build_table(const ProductSpec& spec, std::uint64_t delta_lo, std::uint64_t delta_hi) {
  if (delta_lo < 2 || delta_hi > spec.n() + 1 || delta_lo > delta_hi)
    fail(Errc::BadDelta, "delta range must lie within [2, n+1]");
  TableResult out;
  for (std::uint64_t delta = delta_lo; delta <= delta_hi; ++delta) {
    try {
      if (!is_dual_containing(spec, delta)) {
        out.skipped.push_back({delta, "C(L(delta)) is not dual-containing"});
        continue;
      }
      const std::uint64_t increase = tau(spec, delta - 1);
      if (increase < 2) {
        out.skipped.push_back(
            {delta, "tau(delta-1) = " + std::to_string(increase) + " < 2, enlargement impossible"});
        continue;
      }
      TableRow row;
      row.delta = delta;
      row.css = css_params(spec, delta);
      const SteaneResult st = steane_params(spec, delta);
      row.steane = st.params;
      row.actual_increase = st.increase;
      row.prop4_applies = st.prop4_applies;
      // present both codes at the designed distance; classify there too
      row.display_d = std::min(row.css.d, row.steane.d);
      QuantumParams css_at_delta = row.css;
      css_at_delta.d = row.display_d;
      row.css_gv = gv_classify(css_at_delta);
      row.steane_gv = gv_classify(row.steane);
      if (delta - 1 >= 2 && delta - 1 <= spec.coord_size(0)) {
        const TauBound bound = tau_lower_bound(spec, delta - 1);
        row.prop4_increase = bound.K;
        row.cor1_bound = bound.bound;
        row.cor1_exact = bound.exact;
        row.bounds_defined = true;
      }
      out.rows.push_back(std::move(row));
    } catch (const Error& e) {
      out.skipped.push_back({delta, e.what()});
    }
  }
  return out;
}

std::string render_table(const TableResult& table, const ProductSpec& spec, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "delta,n,css_k,steane_k,d,css_gv,steane_gv,prop4,cor1,cor1_exact,actual\n";
    for (const auto& row : table.rows) {
      os << row.delta << ',' << row.css.n << ',' << row.css.k << ',' << row.steane.k << ','
         << row.display_d << ',' << gv_word(row.css_gv.verdict) << ','
         << gv_word(row.steane_gv.verdict) << ',';
      if (row.bounds_defined) {
        os << row.prop4_increase << ',' << row.cor1_bound << ','
           << (row.cor1_exact ? "true" : "false");
      } else {
        os << ",,";
      }
      os << ',' << row.actual_increase << '\n';
    }
    return os.str();
  }
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json obj;
      obj["delta"] = row.delta;
      obj["n"] = row.css.n;
      obj["css_k"] = row.css.k;
      obj["steane_k"] = row.steane.k;
      obj["d"] = row.display_d;
      obj["css_gv"] = gv_word(row.css_gv.verdict);
      obj["steane_gv"] = gv_word(row.steane_gv.verdict);
      if (row.bounds_defined) {
        obj["prop4"] = row.prop4_increase;
        obj["cor1"] = row.cor1_bound;
        obj["cor1_exact"] = row.cor1_exact;
      } else {
        obj["prop4"] = nullptr;
        obj["cor1"] = nullptr;
        obj["cor1_exact"] = nullptr;
      }
      obj["actual"] = row.actual_increase;
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  // text
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"delta", "css", "steane", "prop4", "cor1", "actual"});
  for (const auto& row : table.rows) {
    QuantumParams css_display = row.css;
    css_display.d = row.display_d;
    std::string css = quantum_brackets(css_display);
    if (*gv_marker(row.css_gv.verdict)) css += std::string(" ") + gv_marker(row.css_gv.verdict);
    std::string steane = quantum_brackets(row.steane);
    if (*gv_marker(row.steane_gv.verdict))
      steane += std::string(" ") + gv_marker(row.steane_gv.verdict);
    std::string prop4 = row.bounds_defined ? std::to_string(row.prop4_increase) : "-";
    std::string cor1 =
        row.bounds_defined ? std::to_string(row.cor1_bound) + (row.cor1_exact ? "*" : "") : "-";
    cells.push_back({std::to_string(row.delta), css, steane, prop4, cor1,
                     std::to_string(row.actual_increase)});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& line : cells)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], line[c].size());
  os << spec_comment(spec) << '\n';
  for (const auto& line : cells) {
    os << pad_left(line[0], width[0]) << "  " << pad_right(line[1], width[1]) << "  "
       << pad_right(line[2], width[2]) << "  " << pad_left(line[3], width[3]) << "  "
       << pad_left(line[4], width[4]) << "  " << pad_left(line[5], width[5]) << '\n';
  }
  return os.str();
}

std::string render_grid(const ProductSpec& spec) {
  const SigmaGrid grid = sigma_grid(spec);
  const std::size_t m = spec.m();
  const std::uint64_t s1 = spec.coord_size(0);
  const std::uint64_t tail = spec.n() / s1;  // combinations of trailing exponents
  std::size_t w = std::to_string(spec.n()).size();
  std::ostringstream os;
  for (std::uint64_t t = 0; t < tail; ++t) {
    // blank line between layers of the second coordinate when m = 3
    if (m == 3 && t > 0 && t % spec.coord_size(2) == 0) os << '\n';
    for (std::uint64_t a1 = 0; a1 < s1; ++a1) {
      if (a1) os << ' ';
      os << pad_left(std::to_string(grid.values[a1 * tail + t]), w);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_tau(const ProductSpec& spec, std::uint64_t s_lo, std::uint64_t s_hi,
                       OutputFormat format) {
  if (s_lo < 1 || s_lo > s_hi) fail(Errc::BadRange, "s range must satisfy 1 <= lo <= hi");
  struct Row {
    std::uint64_t s, tau_value;
    bool defined;
    TauBound bound;
  };
  std::vector<Row> rows;
  for (std::uint64_t s = s_lo; s <= s_hi; ++s) {
    Row row{s, tau(spec, s), false, {}};
    if (s >= 2 && s <= spec.coord_size(0)) {
      row.bound = tau_lower_bound(spec, s);
      row.defined = true;
    }
    rows.push_back(row);
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "s,tau,K,cor1,cor1_exact\n";
    for (const auto& row : rows) {
      os << row.s << ',' << row.tau_value << ',';
      if (row.defined)
        os << row.bound.K << ',' << row.bound.bound << ',' << (row.bound.exact ? "true" : "false");
      else
        os << ",,";
      os << '\n';
    }
    return os.str();
  }
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj;
      obj["s"] = row.s;
      obj["tau"] = row.tau_value;
      if (row.defined) {
        obj["K"] = row.bound.K;
        obj["cor1"] = row.bound.bound;
        obj["cor1_exact"] = row.bound.exact;
      } else {
        obj["K"] = nullptr;
        obj["cor1"] = nullptr;
        obj["cor1_exact"] = nullptr;
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  os << spec_comment(spec) << '\n';
  os << "s  tau  K  cor1  exact\n";
  for (const auto& row : rows) {
    os << row.s << "  " << row.tau_value << "  ";
    if (row.defined)
      os << row.bound.K << "  " << row.bound.bound << "  " << (row.bound.exact ? "yes" : "no");
    else
      os << "-  -  -";
    os << '\n';
  }
  return os.str();
}

std::string render_params_report(const ProductSpec& spec, std::uint64_t delta) {
  const ClassicalParams cls = classical_params(spec, delta);
  const QuantumParams css = css_params(spec, delta);
  const SteaneResult steane = steane_params(spec, delta);

  auto marker_or_empty = [](const QuantumParams& qp) -> std::string {
    try {
      const char* m = gv_marker(gv_classify(qp).verdict);
      return *m ? std::string(" ") + m : std::string();
    } catch (const Error&) {
      return {};
    }
  };

  const std::int64_t css_slack = singleton_slack(css);
  const std::int64_t steane_slack = singleton_slack(steane.params);
  // A lower-bound distance with zero Singleton slack is pinned: the true
  // distance cannot exceed it, so it is printed without ">=".
  const bool steane_d_pinned = steane_slack == 0;

  std::ostringstream os;
  os << "CLASSICAL: [" << cls.n << ',' << cls.k << ',' << cls.d << "]_" << spec.ambient_q()
     << '\n';
  os << "CSS:       " << quantum_brackets(css) << marker_or_empty(css) << '\n';
  os << "STEANE:    " << quantum_brackets(steane.params, !steane_d_pinned)
     << marker_or_empty(steane.params) << "  (increase " << steane.increase << ")\n";
  if (css_slack == 0 && steane_slack == 0)
    os << "SINGLETON: MDS (css, steane)\n";
  else if (steane_slack == 0)
    os << "SINGLETON: MDS (steane), css slack " << css_slack << '\n';
  else if (css_slack == 0)
    os << "SINGLETON: MDS (css), steane slack " << steane_slack << '\n';
  else
    os << "SINGLETON: css slack " << css_slack << ", steane slack " << steane_slack << '\n';
  return os.str();
}

}  // namespace cartqec
