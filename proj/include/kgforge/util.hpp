#ifndef KGFORGE_UTIL_HPP
#define KGFORGE_UTIL_HPP

#include <charconv>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kgforge {

// Error raised for malformed input files; carries "file:line: message" context.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
  ParseError(const std::string& file, size_t line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& stage, const std::string& msg)
      : std::runtime_error(stage + ": " + msg), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

std::string trim(std::string_view s);
std::string lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool iequals(std::string_view a, std::string_view b);

// Collapses whitespace runs to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

uint64_t fnv1a64(std::string_view data);
std::string hex64(uint64_t v);

// Shortest round-trip representation of a double (stable across runs).
std::string format_double(double v);
std::string format_fixed(double v, int precision);

std::string read_file(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);
// Writes via a temp file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);
void ensure_dir(const std::string& path);

// Deterministic RNG helpers. std::mt19937_64 is fully pinned by the
// standard; the derived draws below avoid unpinned distribution objects.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) {
    // Rejection sampling to kill modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Uniform double in [0, 1).
  double real01() { return (engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(below(v.size()))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kgforge

#endif  // KGFORGE_UTIL_HPP
