#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvekit/errors.hpp"
#include "curvekit/serialize.hpp"
#include "curvekit/version.hpp"

namespace curvekit::cli {

/// Output directory resolution: --out-dir flag, then CURVEKIT_OUT_DIR, then cwd.
inline std::filesystem::path resolve_out_dir(const std::string& flag_value) {
  std::filesystem::path dir;
  if (!flag_value.empty()) {
    dir = flag_value;
  } else if (const char* env = std::getenv("CURVEKIT_OUT_DIR"); env && *env) {
    dir = env;
  } else {
    dir = ".";
  }
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
}

inline void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

inline std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

/// Collects per-run metadata; wall-clock data stays here so every other
/// output file is byte-identical across identical runs.
class Manifest {
 public:
  Manifest(std::string command, const std::filesystem::path& out_dir)
      : command_(std::move(command)), out_dir_(out_dir),
        start_(std::chrono::steady_clock::now()) {}

  json& parameters() { return parameters_; }
  json& tolerances() { return tolerances_; }
  void set_seed(std::uint64_t seed) { seed_ = static_cast<long long>(seed); }

  std::filesystem::path record(const std::string& filename) {
    outputs_.push_back(filename);
    return out_dir_ / filename;
  }

  void write() const {
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json j{{"command", command_},
           {"parameters", parameters_},
           {"tolerances", tolerances_},
           {"version", kVersion},
           {"outputs", outputs_},
           {"duration_seconds", duration},
           {"timestamp",
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count()}};
    if (seed_ >= 0) j["seed"] = seed_;
    write_json_file(out_dir_ / (command_ + "_manifest.json"), j);
  }

 private:
  std::string command_;
  std::filesystem::path out_dir_;
  std::chrono::steady_clock::time_point start_;
  json parameters_ = json::object();
  json tolerances_ = json::object();
  long long seed_ = -1;
  std::vector<std::string> outputs_;
};

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw Error("cannot open " + path.string() + " for writing");
  }
  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

}  // namespace curvekit::cli
