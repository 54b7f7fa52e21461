#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpr/families.hpp"
#include "qpr/scaled_value.hpp"

namespace qpr::cli {

enum class Command { kAiry, kFq, kEval, kCoeffs, kConverge, kExpand, kBounds, kZeros, kFeq };
enum class Format { kCsv, kJson };

struct FamilyConfig {
  std::string name = "qinv-hermite";
  double alpha = 0.0;
  double c = 1.0;
  /// Named schedule for the generic kinds.
  std::string schedule;
};

/// Everything one invocation asks for. Fields a command does not use keep
/// their defaults.
struct JobConfig {
  Command command = Command::kAiry;
  std::string q_text = "0.5";
  double q = 0.5;
  double tol = 1e-16;
  std::int64_t max_terms = 4000;
  Format format = Format::kCsv;
  std::string out;

  FamilyConfig family;
  std::vector<Complex> z;
  std::string z_grid;
  Complex s{0.0, 0.0};
  std::vector<Complex> t;
  std::optional<Complex> x;
  std::vector<double> fb_x;
  std::int64_t n = 20;
  std::int64_t n_max = 40;
  bool exact = false;

  std::string kind = "hermite";
  std::int64_t terms = -1;
  std::string form = "corrected";
  double c1 = 0.0;
  Complex lambda0{0.0, 0.0};

  std::string t_grid = "1:4:0.5";
  std::int64_t angles = 16;
  std::optional<double> K;
  int sign = -1;
};

std::string command_name(Command c);

/// "re" or "re,im".
Complex parse_complex(const std::string& text);

/// start:stop:step, inclusive of start, keeping points up to stop + 1e-12.
std::vector<double> parse_grid(const std::string& text);

/// Throws InvalidArgument for unknown names and schedules.
FamilySpec make_family(const FamilyConfig& config);

}  // namespace qpr::cli
