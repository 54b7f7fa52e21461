#include "qpr/cli/job.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "qpr/errors.hpp"

namespace qpr::cli {

namespace {

double parse_real(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) throw InvalidArgument("cannot parse " + what + " '" + text + "'");
  return v;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::kAiry: return "airy";
    case Command::kFq: return "fq";
    case Command::kEval: return "eval";
    case Command::kCoeffs: return "coeffs";
    case Command::kConverge: return "converge";
    case Command::kExpand: return "expand";
    case Command::kBounds: return "bounds";
    case Command::kZeros: return "zeros";
    case Command::kFeq: return "feq";
  }
  return "unknown";
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, "number"), 0.0};
  return {parse_real(text.substr(0, comma), "real part"), parse_real(text.substr(comma + 1), "imaginary part")};
}

std::vector<double> parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
  if (b == std::string::npos) throw InvalidArgument("grid '" + text + "' is not start:stop:step");
  const double start = parse_real(text.substr(0, a), "grid start");
  const double stop = parse_real(text.substr(a + 1, b - a - 1), "grid stop");
  const double step = parse_real(text.substr(b + 1), "grid step");
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) throw InvalidArgument("grid '" + text + "' needs finite bounds and step > 0");
  if (stop < start) throw InvalidArgument("grid '" + text + "' has stop < start");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = start + static_cast<double>(i) * step;
    if (v > stop + 1e-12) break;
    out.push_back(v);
    if (out.size() > 1000000) throw InvalidArgument("grid '" + text + "' has more than 10^6 points");
  }
  return out;
}

FamilySpec make_family(const FamilyConfig& config) {
  const std::string& name = config.name;
  if (name == "qinv-hermite") return FamilySpec::q_inv_hermite();
  if (name == "q-laguerre") return FamilySpec::q_laguerre(config.alpha);
  if (name == "stieltjes-wigert") return FamilySpec::stieltjes_wigert();
  if (name == "generic-symmetric") {
    if (config.schedule == "unit") return FamilySpec::generic_symmetric(config.c, [](std::int64_t, double) { return 1.0; });
    if (config.schedule == "qinv-hermite" || config.schedule.empty()) {
      return FamilySpec::generic_symmetric(config.c, [](std::int64_t n, double q) { return 1.0 - std::pow(q, static_cast<double>(n)); });
    }
    throw InvalidArgument("unknown symmetric schedule '" + config.schedule + "' (unit, qinv-hermite)");
  }
  if (name == "generic-laguerre") {
    auto a = [](std::int64_t n, double q) { return -(1.0 - std::pow(q, static_cast<double>(n) + 1.0)); };
    if (config.schedule == "stieltjes-wigert" || config.schedule.empty()) {
      return FamilySpec::generic_laguerre_type(
          0.0, a, [](std::int64_t, double q) { return -q; },
          [](std::int64_t n, double q) { return 1.0 + q - std::pow(q, static_cast<double>(n) + 1.0); });
    }
    if (config.schedule == "q-laguerre") {
      const double al = config.alpha;
      return FamilySpec::generic_laguerre_type(
          al, a, [al](std::int64_t n, double q) { return -q * (1.0 - std::pow(q, static_cast<double>(n) + al)); },
          [al](std::int64_t n, double q) {
            const double dn = static_cast<double>(n);
            return 1.0 - std::pow(q, dn + 1.0) + q - std::pow(q, dn + al + 1.0);
          });
    }
    throw InvalidArgument("unknown Laguerre-type schedule '" + config.schedule + "' (stieltjes-wigert, q-laguerre)");
  }
  throw InvalidArgument("unknown family '" + name +
                        "' (qinv-hermite, q-laguerre, stieltjes-wigert, generic-symmetric, generic-laguerre)");
}

}  // namespace qpr::cli
