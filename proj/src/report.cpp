#include "ilac/report.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>

namespace ilac {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string frontier_csv(const SweepResult& sweep) {
  std::string csv(kFrontierCsvHeader);
  csv += '\n';
  for (const TradeoffPoint& point : sweep.points) {
    csv += sweep.domain == AllocationDomain::kTime ? "time" : "frequency";
    csv += ',';
    csv += format_double(point.alloc_fraction);
    csv += ',';
    csv += format_double(point.split.symbols_loc);
    csv += ',';
    csv += format_double(point.split.bandwidth_loc_hz);
    csv += ',';
    csv += format_double(point.capacity_nats);
    csv += ',';
    csv += format_double(point.capacity_nats / std::numbers::ln2);
    csv += ',';
    csv += format_double(point.crb_m2);
    csv += ',';
    csv += format_double(point.capacity_loss_nats);
    csv += ',';
    csv += format_double(point.crb_loss);
    csv += ',';
    csv += point.warn_negative_loss ? '1' : '0';
    csv += '\n';
  }
  return csv;
}

void write_frontier_csv(const SweepResult& sweep, const std::string& path) {
  std::ofstream output(path, std::ios::binary);
  if (!output) {
    throw ConfigError("cannot write CSV file: " + path);
  }
  output << frontier_csv(sweep);
  if (!output) {
    throw ConfigError("I/O error while writing CSV file: " + path);
  }
}

}  // namespace ilac
