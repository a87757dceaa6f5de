#pragma once

#include <map>
#include <string>
#include <vector>

#include "cftlab/lattice.hpp"

namespace cftlab {

struct ConfigError : LatticeError {
  using LatticeError::LatticeError;
};

// Flat key=value configuration ('#' comments, blank lines allowed); parse
// errors report the offending line and key.
class Config {
 public:
  Config() = default;
  static Config fromFile(const std::string& path);
  static Config fromString(const std::string& text,
                           const std::string& origin = "<string>");

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double getDouble(const std::string& key, double fallback) const;
  int getInt(const std::string& key, int fallback) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Deterministic CSV formatting: %.17g cells, '\n' line ends.
std::string formatCsv(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);
void writeTextFile(const std::string& path, const std::string& content);

// Minimal gnuplot script plotting columns (xcol, ycol) of a CSV (1-based),
// logscale y.
std::string gnuplotScript(const std::string& csvName, const std::string& title,
                          int xcol, int ycol);

}  // namespace cftlab
