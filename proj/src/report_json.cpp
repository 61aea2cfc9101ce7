// Copyright 2026 The kalamidas-nosignal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <string>

#include "kalamidas/experiment.hpp"

namespace kalamidas::experiment {

namespace {

// Minimal pretty-printing emitter. Key order is emission order, which keeps
// the document byte-stable for a given report.
class JsonWriter {
 public:
  std::string take() { return std::move(out_) + "\n"; }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    separate();
    quote(k);
    out_ += ": ";
    pending_key_ = true;
  }

  void value(double v) {
    prefix();
    if (!std::isfinite(v)) {
      out_ += "null";
      return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
  }
  void value(long long v) {
    prefix();
    out_ += std::to_string(v);
  }
  void value(int v) { value(static_cast<long long>(v)); }
  void value(unsigned long long v) {
    prefix();
    out_ += std::to_string(v);
  }
  void value(bool v) {
    prefix();
    out_ += v ? "true" : "false";
  }
  void value(const std::string& v) {
    prefix();
    quote(v);
  }

  template <typename T>
  void field(const std::string& k, const T& v) {
    key(k);
    value(v);
  }

 private:
  void open(char c) {
    prefix();
    out_ += c;
    ++depth_;
    first_ = true;
  }
  void close(char c) {
    --depth_;
    if (!first_) newline();
    out_ += c;
    first_ = false;
  }
  void separate() {
    if (!first_) out_ += ',';
    newline();
    first_ = false;
  }
  // values inside arrays need a separator; values after a key do not
  void prefix() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (depth_ > 0) separate();
  }
  void newline() {
    out_ += '\n';
    out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
  }
  void quote(const std::string& s) {
    out_ += '"';
    for (unsigned char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (ch < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out_ += buf;
          } else {
            out_ += static_cast<char>(ch);
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  int depth_ = 0;
  bool first_ = true;
  bool pending_key_ = false;
};

}  // namespace

std::string to_json(const Report& rep) {
  JsonWriter w;
  const ExperimentConfig& c = rep.config;
  w.begin_object();
  w.field("schema", std::string("kalamidas-nosignal/report-v1"));

  w.key("config");
  w.begin_object();
  w.field("alpha_re", c.alpha.real());
  w.field("alpha_im", c.alpha.imag());
  w.field("phi", c.phi);
  w.field("t", c.t);
  w.field("r", c.r());
  w.key("cutoffs");
  w.begin_object();
  for (Mode m : kAllModes) w.field(std::string(label(m)), rep.cutoffs[static_cast<std::size_t>(slot(m))]);
  w.end_object();
  w.field("seed", static_cast<unsigned long long>(c.seed));
  w.field("trials", c.trials);
  w.field("tolerance", c.tolerance);
  w.field("channel_trials", c.channel_trials);
  w.field("occupation_cap", c.occupation_cap);
  w.field("heisenberg_cutoff", c.heisenberg_cutoff);
  w.end_object();

  w.field("dimension", static_cast<long long>(rep.dimension));
  w.key("warnings");
  w.begin_array();
  for (const auto& s : rep.warnings) w.value(s);
  w.end_array();

  w.key("leakage");
  w.begin_object();
  w.field("initial_with_coherent", rep.leakage_initial_with_coherent);
  w.field("evolved_with_coherent", rep.leakage_evolved_with_coherent);
  w.field("evolved_bare", rep.leakage_evolved_bare);
  w.end_object();
  w.field("effective_tolerance", rep.effective_tolerance);

  w.field("left_trace_distance", rep.left_trace_distance);
  w.field("signaling_gap", rep.signaling_gap);
  w.key("heisenberg");
  w.begin_object();
  for (const auto& h : rep.heisenberg) w.field(h.name, h.residual);
  w.end_object();
  w.field("analytic_max_residual", rep.analytic_max_residual);
  w.field("displacement_unitarity_defect", rep.displacement_unitarity_defect);

  w.key("channels");
  w.begin_object();
  w.key("unitary");
  w.begin_object();
  w.field("trials", rep.unitary.trials);
  w.field("max_residual", rep.unitary.max_residual);
  w.end_object();
  w.key("projective");
  w.begin_object();
  w.field("outcomes", rep.projective.trials);
  w.field("max_residual", rep.projective.max_residual);
  w.end_object();
  w.key("kraus");
  w.begin_object();
  w.field("trials", rep.kraus.trials);
  w.field("max_residual", rep.kraus.max_residual);
  w.field("max_completeness_defect", rep.kraus_completeness_defect);
  w.end_object();
  w.end_object();

  w.key("selective");
  w.begin_object();
  w.field("outcome", rep.selective.outcome);
  w.field("probability", rep.selective.probability);
  w.field("conditional_trace_distance", rep.selective.conditional_trace_distance);
  w.field("mixture_residual", rep.selective.mixture_residual);
  w.field("outcomes", rep.selective.outcomes);
  w.field("null_outcomes", rep.selective.null_outcomes);
  w.field("contrast_found", rep.selective.contrast_found);
  w.end_object();

  w.key("density_checks");
  w.begin_object();
  w.field("states_checked", rep.density.states_checked);
  w.field("max_hermiticity_defect", rep.density.max_hermiticity_defect);
  w.field("min_eigenvalue", rep.density.min_eigenvalue);
  w.field("max_trace_defect", rep.density.max_trace_defect);
  w.end_object();

  w.field("verdict", std::string(rep.passed() ? "pass" : "fail"));
  w.key("failures");
  w.begin_array();
  for (const auto& f : rep.failures) w.value(f);
  w.end_array();
  w.end_object();
  return w.take();
}

}  // namespace kalamidas::experiment
