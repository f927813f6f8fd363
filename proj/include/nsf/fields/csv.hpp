#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "nsf/core/types.hpp"

namespace nsf::fields {

// One row per diagnostic step; column order is fixed by the header row.
// Values are printed with 17 significant digits so reruns are bit-comparable.
class CsvWriter {
 public:
  CsvWriter() = default;

  void open(const std::string& path, const std::vector<std::string>& columns) {
    out_.open(path);
    require(out_.good(), "csv: cannot open '" + path + "' for writing");
    ncols_ = columns.size();
    for (size_t i = 0; i < columns.size(); ++i)
      out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  }

  void row(const std::vector<Scalar>& values) {
    require(values.size() == ncols_, "csv: row width mismatch");
    char buf[32];
    for (size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
      out_ << buf << (i + 1 < values.size() ? "," : "\n");
    }
  }

  void close() { out_.close(); }
  bool is_open() const { return out_.is_open(); }

 private:
  std::ofstream out_;
  size_t ncols_ = 0;
};

}  // namespace nsf::fields
