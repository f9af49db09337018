#include "fcpsim/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace fcpsim {

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string path_with_suffix(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  const std::string ext = p.extension().string();
  p.replace_extension();
  return p.string() + suffix + ext;
}

CsvWriter::CsvWriter(const std::string& path)
    : path_(path), tmp_path_(path + ".tmp") {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  stream_.open(tmp_path_, std::ios::binary | std::ios::trunc);
  if (!stream_) throw std::runtime_error("csv: cannot open " + tmp_path_);
}

CsvWriter::~CsvWriter() {
  if (!committed_) {
    stream_.close();
    std::error_code ec;
    std::filesystem::remove(tmp_path_, ec);  // leave the target untouched
  }
}

void CsvWriter::comment(const std::string& text) {
  stream_ << "# " << text << '\n';
}

void CsvWriter::echo_config(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [key, value] : kv) comment(key + " = " + value);
}

void CsvWriter::row(const std::string& line) { stream_ << line << '\n'; }

void CsvWriter::commit() {
  stream_.flush();
  if (!stream_) throw std::runtime_error("csv: write failed for " + tmp_path_);
  stream_.close();
  std::filesystem::rename(tmp_path_, path_);
  committed_ = true;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace fcpsim
