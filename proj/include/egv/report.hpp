#pragma once

#include <string>
#include <vector>

namespace egv {

// Deterministic text assembly for reports and columnar plot data. All float
// formatting goes through fmt_g so byte-identical reruns are possible.
std::string fmt_g(double v, int precision = 12);

class TextReport {
 public:
  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, double value);
  void kv(const std::string& key, long long value);
  void kv(const std::string& key, bool value);
  void line(const std::string& s = "");
  void section(const std::string& title);

  // columnar block with a '# col1 col2 ...' header
  void table(const std::vector<std::string>& columns,
             const std::vector<std::vector<double>>& rows, int precision = 12);

  const std::string& str() const { return body_; }

 private:
  std::string body_;
};

// Columnar plot file: '# col1 col2 ...' header then whitespace-separated rows.
std::string columnar(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows, int precision = 12);

// Atomic file write (temp + rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace egv
