#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "cutpath/roadmap.hpp"

namespace cutpath::detail {

// Line-oriented tokenizer for the whitespace-separated text formats.
// Blank lines and lines starting with '#' are skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().starts_with('#')) continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }

  double to_double(const std::string& s) const {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) fail("malformed number '" + s + "'");
      return v;
    } catch (const std::invalid_argument&) {
      fail("malformed number '" + s + "'");
    } catch (const std::out_of_range&) {
      fail("number out of range '" + s + "'");
    }
  }

  long long to_int(const std::string& s) const {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size()) fail("malformed integer '" + s + "'");
      return v;
    } catch (const std::invalid_argument&) {
      fail("malformed integer '" + s + "'");
    } catch (const std::out_of_range&) {
      fail("integer out of range '" + s + "'");
    }
  }

 private:
  std::istream& is_;
  std::size_t line_no_ = 0;
};

}  // namespace cutpath::detail
