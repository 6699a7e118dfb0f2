#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bqm/numerics.hpp"

namespace bqm {

// Minimal deterministic CSV emitter: '#'-prefixed metadata block, then a
// header row, then data rows printed with %.17g.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw domain_error("cannot open output file: " + path);
  }

  void meta(const std::string& key, const std::string& value) {
    out_ << "# " << key << " = " << value << "\n";
  }
  void meta(const std::string& key, double value) {
    out_ << "# " << key << " = " << num(value) << "\n";
  }
  void meta(const std::string& key, long value) {
    out_ << "# " << key << " = " << value << "\n";
  }

  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }

  void row_s(const std::vector<std::string>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      out_ << (i ? "," : "") << vals[i];
    out_ << "\n";
  }

  void row(const std::vector<double>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      out_ << (i ? "," : "") << num(vals[i]);
    out_ << "\n";
  }

  void comment(const std::string& text) { out_ << "# " << text << "\n"; }

  static std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  std::ofstream out_;
};

}  // namespace bqm
