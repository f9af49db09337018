#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace fcpsim {

// Format a double with 12 significant digits (shortest form).
std::string format_sig(double v);

// Insert a suffix before the extension: ("out/run.csv", "_summary")
// -> "out/run_summary.csv".
std::string path_with_suffix(const std::string& path, const std::string& suffix);

// CSV writer with atomic publication: rows accumulate in a temporary
// file that is renamed onto the target only by commit().  If the
// writer is destroyed without commit, the temporary is removed and
// the target is left untouched.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();

  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  // '#'-prefixed comment line.
  void comment(const std::string& text);

  // Echo resolved configuration keys as comment lines.
  void echo_config(const std::vector<std::pair<std::string, std::string>>& kv);

  // One raw CSV line (no trailing newline).
  void row(const std::string& line);

  // Flush and atomically rename into place.
  void commit();

 private:
  std::string path_;
  std::string tmp_path_;
  std::ofstream stream_;
  bool committed_ = false;
};

// Split one CSV line on commas (the emitted dialect never quotes).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace fcpsim
