#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hwkb {

// Controlled abort of a run when the monitored quantity signals the end of
// the reliable existence window.  Carries the last time at which the state
// was still within bounds.
class GuardTrip : public std::runtime_error {
  public:
    GuardTrip(double last_valid_time, const std::string& detail)
        : std::runtime_error("approaching breakdown: " + detail +
                             " (last valid time t=" + std::to_string(last_valid_time) + ")"),
          last_valid_time_(last_valid_time) {}
    double last_valid_time() const { return last_valid_time_; }

  private:
    double last_valid_time_;
};

class BlowupError : public std::runtime_error {
  public:
    BlowupError(long step, const std::string& detail)
        : std::runtime_error("numerical blow-up at step " + std::to_string(step) + ": " + detail),
          step_(step) {}
    long step() const { return step_; }

  private:
    long step_;
};

// Refusal to run (or continue) a simulation whose oscillation content the
// grid cannot represent.
class ResolutionError : public std::runtime_error {
  public:
    explicit ResolutionError(const std::string& detail)
        : std::runtime_error("unresolvable oscillation: " + detail) {}
};

// Collected configuration violations; message lists all of them.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid configuration:";
        for (const auto& e : v) s += "\n  " + e;
        return s;
    }
    std::vector<std::string> violations_;
};

} // namespace hwkb
