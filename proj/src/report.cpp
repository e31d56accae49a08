#include "egv/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace egv {

std::string fmt_g(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

void TextReport::kv(const std::string& key, const std::string& value) {
  body_ += key + " = " + value + "\n";
}
void TextReport::kv(const std::string& key, double value) { kv(key, fmt_g(value)); }
void TextReport::kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
void TextReport::kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
void TextReport::line(const std::string& s) { body_ += s + "\n"; }
void TextReport::section(const std::string& title) {
  body_ += "\n[" + title + "]\n";
}
void TextReport::table(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows, int precision) {
  body_ += columnar(columns, rows, precision);
}

std::string columnar(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows, int precision) {
  std::string out = "#";
  for (const auto& c : columns) out += " " + c;
  out += "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += " ";
      line += fmt_g(row[i], precision);
    }
    out += line + "\n";
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for write: " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

}  // namespace egv
