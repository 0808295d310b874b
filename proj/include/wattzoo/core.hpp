#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wattzoo/errors.hpp"

namespace wattzoo {

// One telemetry row: OS-level utilization metrics, optional hardware
// counters, and the measured power draw. Scalar fields are optional at the
// trace level: a trace either carries a field on every sample or on none
// (schema homogeneity is checked by validate_trace, not by construction).
struct Sample {
  double timestamp = 0.0;               // seconds since trace start
  std::optional<double> power;          // watts
  std::optional<double> u_cpu;          // fraction in [0,1]
  std::optional<double> u_mem;
  std::optional<double> u_disk;
  std::optional<double> u_net;
  std::optional<double> throughput;     // application ops/s
  std::optional<double> temp_c;         // CPU temperature, deg C
  std::optional<double> freq_mhz;       // CPU frequency
  std::vector<std::pair<std::string, double>> counters;  // named, ordered

  // Resolves a metric or counter name ("u_cpu", "throughput", "c_*", ...).
  // Returns nullopt when the field is absent from this sample.
  std::optional<double> value_of(const std::string& name) const;

  const double* find_counter(const std::string& name) const;
};

struct Trace {
  std::vector<Sample> samples;
  std::string source;        // free-text provenance
  double resolution = 1.0;   // seconds per sample

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

// Idle / full-load power envelope of one server.
struct ServerProfile {
  double p_min = 0.0;  // idle watts
  double p_max = 0.0;  // full-load watts
  std::optional<double> throughput_max;

  double k() const { return p_min / p_max; }
};

// Feature basis transforms. PowerR carries its exponent; the exp-of-power
// family maps x to e^(x^a) for a in {1,2,3}.
enum class BasisFn { Identity, Power2, Power3, PowerR, ExpPow1, ExpPow2, ExpPow3 };

struct BasisTerm {
  BasisFn fn = BasisFn::Identity;
  double r = 1.0;  // exponent, used only by PowerR

  double apply(double x) const;
  std::string label() const;
};

enum class InterceptMode { Free, FixedPmin, None };

// Declarative recipe mapping a Sample to a numeric feature vector.
struct FeatureSpec {
  struct Input {
    std::string name;              // metric or counter name
    std::vector<BasisTerm> basis;  // transforms applied to this input
  };

  std::vector<Input> inputs;
  InterceptMode intercept_mode = InterceptMode::Free;

  std::size_t feature_count() const;
  std::vector<std::string> feature_names() const;  // one label per feature
  std::vector<std::string> input_names() const;

  // Convenience: every listed name with the identity basis.
  static FeatureSpec identity(std::vector<std::string> names,
                              InterceptMode mode = InterceptMode::Free);
};

struct Violation {
  std::size_t row = 0;   // 0-based sample index; row_valid=false for trace-level issues
  bool row_valid = false;
  std::string field;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;  // one line per violation
};

// Immutable fitted predictor. Concrete kinds live in formula_models,
// regression_models and ml_models; all of them expose watts = predict(sample).
class TrainedModel {
 public:
  virtual ~TrainedModel() = default;

  const std::string& kind() const { return kind_; }
  const FeatureSpec& feature_spec() const { return spec_; }
  const std::optional<ServerProfile>& profile() const { return profile_; }

  virtual double predict(const Sample& sample) const = 0;

 protected:
  TrainedModel(std::string kind, FeatureSpec spec, std::optional<ServerProfile> profile)
      : kind_(std::move(kind)), spec_(std::move(spec)), profile_(std::move(profile)) {}

  std::string kind_;
  FeatureSpec spec_;
  std::optional<ServerProfile> profile_;
};

using ModelPtr = std::shared_ptr<const TrainedModel>;

struct ReportEntry {
  std::string kind;
  double standard_error = 0.0;  // watts
  std::size_t n_samples = 0;
};

// Per-model standard errors on one named dataset. Entries are kept sorted
// ascending by error, ties broken by kind identifier.
struct EvaluationReport {
  std::string dataset_name;
  std::vector<ReportEntry> entries;
  std::vector<std::pair<std::string, std::string>> failures;  // kind -> reason
  std::uint64_t split_seed = 0;
  std::string created_at;  // informational; never rendered into report bytes

  void add(ReportEntry entry);  // inserts keeping sort order
  void sort_entries();
};

// Derives the power envelope from a measured trace: p_min is the mean power
// of samples at u_cpu <= idle_threshold, p_max the mean at
// u_cpu >= full_threshold. throughput_max is the trace maximum when the
// column is present.
ServerProfile derive_server_profile(const Trace& trace, double idle_threshold = 0.05,
                                    double full_threshold = 0.95);

// Checks every sample invariant plus resolvability of each spec input.
// Collects all violations instead of stopping at the first.
ValidationResult validate_trace(const Trace& trace, const FeatureSpec& spec);

}  // namespace wattzoo
