#include "report.hpp"

#include <algorithm>
#include <iomanip>

namespace clustertilt::cli {

void print_report(std::ostream& os, const VerificationReport& r) {
  os << r.type << ": " << r.clusters << " clusters, " << r.variables << " variables (atlas " << std::fixed
     << std::setprecision(2) << r.atlas_seconds << " s)\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(7) << to_string(c.status)
       << std::right << std::setw(8) << std::setprecision(2) << c.seconds << " s ";
    bool first = true;
    for (const auto& [k, v] : c.counts) {
      os << (first ? " " : ", ") << k << "=" << v;
      first = false;
    }
    os << '\n';
    for (const auto& f : c.failures) os << "      FAIL " << f << '\n';
    for (const auto& n : c.notes) os << "      " << n << '\n';
    if (!c.table.empty()) {
      std::vector<std::size_t> w(c.table_header.size(), 0);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = c.table_header[i].size();
      for (const auto& row : c.table)
        for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        os << "      ";
        for (std::size_t i = 0; i < cells.size(); ++i)
          os << std::left << std::setw(static_cast<int>(i + 1 < cells.size() ? w[i] + 2 : 0)) << cells[i];
        os << std::right << '\n';
      };
      line(c.table_header);
      for (const auto& row : c.table) line(row);
    }
  }
  os << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace clustertilt::cli
