#include "wattzoo/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace wattzoo {

const double* Sample::find_counter(const std::string& name) const {
  for (const auto& [n, v] : counters) {
    if (n == name) return &v;
  }
  return nullptr;
}

std::optional<double> Sample::value_of(const std::string& name) const {
  if (name == "u_cpu") return u_cpu;
  if (name == "u_mem") return u_mem;
  if (name == "u_disk") return u_disk;
  if (name == "u_net") return u_net;
  if (name == "throughput") return throughput;
  if (name == "temp_c") return temp_c;
  if (name == "freq_mhz") return freq_mhz;
  if (name == "power") return power;
  if (const double* c = find_counter(name)) return *c;
  return std::nullopt;
}

double BasisTerm::apply(double x) const {
  switch (fn) {
    case BasisFn::Identity: return x;
    case BasisFn::Power2: return x * x;
    case BasisFn::Power3: return x * x * x;
    case BasisFn::PowerR: return std::pow(x, r);
    case BasisFn::ExpPow1: return std::exp(x);
    case BasisFn::ExpPow2: return std::exp(x * x);
    case BasisFn::ExpPow3: return std::exp(x * x * x);
  }
  return x;
}

std::string BasisTerm::label() const {
  switch (fn) {
    case BasisFn::Identity: return "x";
    case BasisFn::Power2: return "x^2";
    case BasisFn::Power3: return "x^3";
    case BasisFn::PowerR: {
      std::ostringstream os;
      os << "x^" << r;
      return os.str();
    }
    case BasisFn::ExpPow1: return "exp(x)";
    case BasisFn::ExpPow2: return "exp(x^2)";
    case BasisFn::ExpPow3: return "exp(x^3)";
  }
  return "x";
}

std::size_t FeatureSpec::feature_count() const {
  std::size_t n = 0;
  for (const auto& in : inputs) n += in.basis.size();
  return n;
}

std::vector<std::string> FeatureSpec::feature_names() const {
  std::vector<std::string> names;
  names.reserve(feature_count());
  for (const auto& in : inputs) {
    for (const auto& term : in.basis) {
      if (term.fn == BasisFn::Identity) {
        names.push_back(in.name);
      } else {
        std::string lbl = term.label();
        std::string out;
        for (char c : lbl) {
          if (c == 'x') out += in.name;
          else out += c;
        }
        names.push_back(out);
      }
    }
  }
  return names;
}

std::vector<std::string> FeatureSpec::input_names() const {
  std::vector<std::string> names;
  names.reserve(inputs.size());
  for (const auto& in : inputs) names.push_back(in.name);
  return names;
}

FeatureSpec FeatureSpec::identity(std::vector<std::string> names, InterceptMode mode) {
  FeatureSpec spec;
  spec.intercept_mode = mode;
  spec.inputs.reserve(names.size());
  for (auto& n : names) {
    spec.inputs.push_back({std::move(n), {BasisTerm{BasisFn::Identity, 1.0}}});
  }
  return spec;
}

std::string ValidationResult::describe() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    if (v.row_valid) os << "row " << v.row << ", ";
    os << v.field << ": " << v.message << "\n";
  }
  return os.str();
}

void EvaluationReport::add(ReportEntry entry) {
  entries.push_back(std::move(entry));
  sort_entries();
}

void EvaluationReport::sort_entries() {
  std::sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
    if (a.standard_error != b.standard_error) return a.standard_error < b.standard_error;
    return a.kind < b.kind;
  });
}

ServerProfile derive_server_profile(const Trace& trace, double idle_threshold,
                                    double full_threshold) {
  double idle_sum = 0.0, full_sum = 0.0;
  std::size_t idle_n = 0, full_n = 0;
  bool has_throughput = false;
  double throughput_max = 0.0;

  for (const Sample& s : trace.samples) {
    if (!s.power.has_value()) {
      throw Error(errc::MissingPower, "profile derivation requires power on every sample");
    }
    if (!s.u_cpu.has_value()) {
      throw Error(errc::MissingRegion, "profile derivation requires u_cpu on every sample");
    }
    if (*s.u_cpu <= idle_threshold) {
      idle_sum += *s.power;
      ++idle_n;
    }
    if (*s.u_cpu >= full_threshold) {
      full_sum += *s.power;
      ++full_n;
    }
    if (s.throughput.has_value()) {
      has_throughput = true;
      throughput_max = std::max(throughput_max, *s.throughput);
    }
  }
  if (idle_n == 0) throw Error(errc::MissingRegion, "no samples at or below idle threshold");
  if (full_n == 0) throw Error(errc::MissingRegion, "no samples at or above full-load threshold");

  ServerProfile profile;
  profile.p_min = idle_sum / static_cast<double>(idle_n);
  profile.p_max = full_sum / static_cast<double>(full_n);
  if (has_throughput) profile.throughput_max = throughput_max;

  if (!(profile.p_min >= 0.0) || !(profile.p_min < profile.p_max)) {
    std::ostringstream os;
    os << "derived p_min=" << profile.p_min << " p_max=" << profile.p_max
       << " violates 0 <= p_min < p_max";
    throw Error(errc::InvalidProfile, os.str());
  }
  return profile;
}

namespace {

struct SchemaFlags {
  bool power, u_cpu, u_mem, u_disk, u_net, throughput, temp_c, freq_mhz;
  std::vector<std::string> counter_names;

  bool operator==(const SchemaFlags&) const = default;
};

SchemaFlags schema_of(const Sample& s) {
  SchemaFlags f{s.power.has_value(), s.u_cpu.has_value(), s.u_mem.has_value(),
                s.u_disk.has_value(), s.u_net.has_value(), s.throughput.has_value(),
                s.temp_c.has_value(), s.freq_mhz.has_value(), {}};
  f.counter_names.reserve(s.counters.size());
  for (const auto& [n, v] : s.counters) f.counter_names.push_back(n);
  return f;
}

void check_fraction(const std::optional<double>& v, const char* name, std::size_t row,
                    ValidationResult& result) {
  if (!v.has_value()) return;
  if (!std::isfinite(*v) || *v < 0.0 || *v > 1.0) {
    std::ostringstream os;
    os << "value " << *v << " outside [0,1]";
    result.violations.push_back({row, true, name, os.str()});
  }
}

}  // namespace

ValidationResult validate_trace(const Trace& trace, const FeatureSpec& spec) {
  ValidationResult result;

  if (!(trace.resolution > 0.0)) {
    result.violations.push_back({0, false, "resolution", "must be positive"});
  }

  // Input resolution against the trace schema (sample 0 is representative
  // once homogeneity holds).
  if (!trace.empty()) {
    const Sample& first = trace.samples.front();
    for (const auto& name : spec.input_names()) {
      if (!first.value_of(name).has_value()) {
        result.violations.push_back({0, false, name, "input does not resolve in trace schema"});
      }
    }
  } else {
    for (const auto& name : spec.input_names()) {
      result.violations.push_back({0, false, name, "input does not resolve in empty trace"});
    }
  }

  SchemaFlags reference{};
  double prev_ts = 0.0;
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const Sample& s = trace.samples[i];

    if (i == 0) {
      reference = schema_of(s);
    } else if (schema_of(s) != reference) {
      result.violations.push_back({i, true, "schema", "optional fields differ from sample 0"});
    }

    if (!std::isfinite(s.timestamp) || s.timestamp < 0.0) {
      result.violations.push_back({i, true, "timestamp", "must be a non-negative real"});
    }
    if (i > 0 && !(s.timestamp > prev_ts)) {
      result.violations.push_back({i, true, "timestamp", "not strictly increasing"});
    }
    prev_ts = s.timestamp;

    check_fraction(s.u_cpu, "u_cpu", i, result);
    check_fraction(s.u_mem, "u_mem", i, result);
    check_fraction(s.u_disk, "u_disk", i, result);
    check_fraction(s.u_net, "u_net", i, result);

    if (s.power.has_value() && (!std::isfinite(*s.power) || *s.power < 0.0)) {
      result.violations.push_back({i, true, "power", "must be finite and >= 0"});
    }
    if (s.throughput.has_value() && (!std::isfinite(*s.throughput) || *s.throughput < 0.0)) {
      result.violations.push_back({i, true, "throughput", "must be finite and >= 0"});
    }

    std::set<std::string> seen;
    for (const auto& [name, value] : s.counters) {
      if (!seen.insert(name).second) {
        result.violations.push_back({i, true, name, "duplicate counter name"});
      }
      if (!std::isfinite(value) || value < 0.0) {
        result.violations.push_back({i, true, name, "counter must be a non-negative real"});
      }
    }
  }

  return result;
}

}  // namespace wattzoo
