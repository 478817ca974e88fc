// Copyright 2026 The rbwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbwalk/simulator.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <omp.h>

#include "rbwalk/errors.hpp"
#include "rbwalk/io.hpp"
#include "rbwalk/stats.hpp"

namespace rbwalk {

std::string mode_name(ErrorMode mode) { return mode == ErrorMode::dephasing ? "dephasing" : "universal"; }

ExperimentConfig ExperimentConfig::dephasing(int J, int k, int n, NoiseModel model, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.J = J;
  cfg.k = k;
  cfg.n = n;
  cfg.mode = ErrorMode::dephasing;
  cfg.axes[axis_index(Axis::Z)] = std::move(model);
  cfg.master_seed = seed;
  return cfg;
}

ExperimentConfig ExperimentConfig::universal(int J, int k, int n, std::array<std::optional<NoiseModel>, 3> axes,
                                             std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.J = J;
  cfg.k = k;
  cfg.n = n;
  cfg.mode = ErrorMode::universal;
  cfg.axes = std::move(axes);
  cfg.master_seed = seed;
  return cfg;
}

void ExperimentConfig::validate() const {
  detail::require(J >= 2, "J must be >= 2 (the last gate closes the sequence)");
  detail::require(k >= 1, "k must be >= 1");
  detail::require(n >= 1, "n must be >= 1");
  if (mode == ErrorMode::dephasing) {
    detail::require(axes[2].has_value(), "dephasing mode needs a noise model on Z");
    detail::require(!axes[0] && !axes[1], "dephasing mode takes noise on Z only; use universal mode");
  }
  for (const auto& a : axes)
    if (a) rbwalk::validate(*a);
}

std::uint64_t sequence_seed(std::uint64_t master, int i) {
  return derive_seed(master, {static_cast<std::uint64_t>(StreamTag::sequence), static_cast<std::uint64_t>(i)});
}

std::uint64_t noise_seed(std::uint64_t master, int i, int j, Axis axis) {
  return derive_seed(master, {static_cast<std::uint64_t>(StreamTag::noise), static_cast<std::uint64_t>(i),
                              static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(axis_index(axis))});
}

SequenceSpec experiment_sequence(const ExperimentConfig& cfg, int i) {
  Stream rng(sequence_seed(cfg.master_seed, i));
  return sample_sequence(cfg.J, rng);
}

UniversalRealization experiment_noise(const ExperimentConfig& cfg, int i, int j) {
  UniversalRealization u;
  for (Axis a : kAxes) {
    const auto& model = cfg.axes[axis_index(a)];
    if (model) {
      Stream rng(noise_seed(cfg.master_seed, i, j, a));
      u.axes[axis_index(a)] = sample_realization(*model, cfg.J, rng);
    } else {
      u.axes[axis_index(a)].values.assign(static_cast<std::size_t>(cfg.J), 0.0);
    }
  }
  return u;
}

Mat2 noisy_sequence_unitary(const SequenceSpec& seq, const NoiseRealization& noise, const CliffordTable& table) {
  detail::require(noise.length() == seq.length(), "noise length does not match sequence length");
  Mat2 m = Mat2::identity();
  for (int j = 0; j < seq.length(); ++j) m = m * z_rotation(noise.values[j]) * table.element(seq[j]).matrix;
  return m;
}

Mat2 noisy_sequence_unitary(const SequenceSpec& seq, const UniversalRealization& noise, const CliffordTable& table) {
  for (const auto& a : noise.axes)
    detail::require(a.length() == seq.length(), "noise length does not match sequence length");
  Mat2 m = Mat2::identity();
  for (int j = 0; j < seq.length(); ++j) {
    const std::array<double, 3> d{noise.axes[0].values[j], noise.axes[1].values[j], noise.axes[2].values[j]};
    m = m * rotation(d) * table.element(seq[j]).matrix;
  }
  return m;
}

double trace_fidelity(const Mat2& u) {
  const double f = std::norm(u.trace()) / 4.0;
  if (!(f <= 1.0 + 1e-12))
    throw NumericalError("trace fidelity " + format_double(f) + " is outside [0, 1]; the product lost unitarity");
  return std::min(f, 1.0);
}

namespace {

// m <- m * diag(e^{-i d}, e^{i d}) * c, computed by scaling the rows of c.
inline void step_dephasing(Mat2& m, double d, const Mat2& c) {
  const Complex up{std::cos(d), -std::sin(d)};
  const Complex down{up.real(), -up.imag()};
  const Mat2 uc{{cmul(up, c.m[0]), cmul(up, c.m[1]), cmul(down, c.m[2]), cmul(down, c.m[3])}};
  m = m * uc;
}

inline void step_universal(Mat2& m, double dx, double dy, double dz, const Mat2& c) {
  if (dx == 0.0 && dy == 0.0) {
    step_dephasing(m, dz, c);
    return;
  }
  m = m * (rotation({dx, dy, dz}) * c);
}

}  // namespace

FidelityMatrix run_experiment(const ExperimentConfig& cfg, int threads) {
  cfg.validate();
  const CliffordTable& table = CliffordTable::instance();
  FidelityMatrix out{cfg.J, cfg.k, cfg.n, cfg.master_seed,
                     std::vector<double>(static_cast<std::size_t>(cfg.k) * cfg.n, 0.0)};

  std::array<std::optional<NoiseSampler>, 3> samplers;
  for (Axis a : kAxes)
    if (const auto& model = cfg.axes[axis_index(a)]) samplers[axis_index(a)].emplace(*model, cfg.J);

  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  bool failed = false;
  std::string failure;

#pragma omp parallel num_threads(nthreads)
  {
    std::vector<const Mat2*> gates(static_cast<std::size_t>(cfg.J));
    std::array<std::vector<double>, 3> delta;
    for (auto& d : delta) d.assign(static_cast<std::size_t>(cfg.J), 0.0);

#pragma omp for schedule(dynamic, 4)
    for (int i = 0; i < cfg.k; ++i) {
      try {
        Stream seq_rng(sequence_seed(cfg.master_seed, i));
        const SequenceSpec seq = sample_sequence(cfg.J, seq_rng, table);
        for (int g = 0; g < cfg.J; ++g) gates[g] = &table.element(seq[g]).matrix;

        for (int j = 0; j < cfg.n; ++j) {
          for (Axis a : kAxes) {
            const int ax = axis_index(a);
            if (samplers[ax]) {
              Stream noise_rng(noise_seed(cfg.master_seed, i, j, a));
              samplers[ax]->sample_into(noise_rng, delta[ax]);
            }
          }
          Mat2 m = Mat2::identity();
          if (cfg.mode == ErrorMode::dephasing) {
            const double* dz = delta[2].data();
            for (int g = 0; g < cfg.J; ++g) step_dephasing(m, dz[g], *gates[g]);
          } else {
            for (int g = 0; g < cfg.J; ++g) step_universal(m, delta[0][g], delta[1][g], delta[2][g], *gates[g]);
          }
          out(i, j) = trace_fidelity(m);
        }
      } catch (const std::exception& e) {
#pragma omp critical(rbwalk_run_experiment_failure)
        {
          if (!failed) failure = e.what();
          failed = true;
        }
      }
    }
  }
  if (failed) throw NumericalError(failure);
  return out;
}

namespace reference {

FidelityMatrix run_experiment_serial(const ExperimentConfig& cfg) {
  cfg.validate();
  FidelityMatrix out{cfg.J, cfg.k, cfg.n, cfg.master_seed,
                     std::vector<double>(static_cast<std::size_t>(cfg.k) * cfg.n, 0.0)};
  for (int i = 0; i < cfg.k; ++i) {
    const SequenceSpec seq = experiment_sequence(cfg, i);
    for (int j = 0; j < cfg.n; ++j) {
      const UniversalRealization noise = experiment_noise(cfg, i, j);
      const Mat2 u = cfg.mode == ErrorMode::dephasing ? noisy_sequence_unitary(seq, noise.axes[2])
                                                      : noisy_sequence_unitary(seq, noise);
      out(i, j) = trace_fidelity(u);
    }
  }
  return out;
}

}  // namespace reference

std::vector<double> row_average(const FidelityMatrix& f) {
  std::vector<double> rows(static_cast<std::size_t>(f.k));
  for (int i = 0; i < f.k; ++i) {
    NeumaierSum s;
    for (int j = 0; j < f.n; ++j) s.add(f(i, j));
    rows[i] = s.value() / f.n;
  }
  return rows;
}

double grand_mean(const FidelityMatrix& f) {
  detail::require(!f.values.empty(), "grand mean of an empty matrix");
  return compensated_mean(f.values);
}

void write_matrix_csv(std::ostream& out, const FidelityMatrix& f) {
  std::vector<std::string> header;
  for (int j = 1; j <= f.n; ++j) header.push_back("r=" + std::to_string(j));
  write_csv_row(out, header);
  std::vector<double> row(static_cast<std::size_t>(f.n));
  for (int i = 0; i < f.k; ++i) {
    for (int j = 0; j < f.n; ++j) row[j] = f(i, j);
    write_csv_row(out, row);
  }
}

FidelityMatrix read_matrix_csv(std::istream& in) {
  const CsvTable table = read_csv(in);
  for (std::size_t j = 0; j < table.header.size(); ++j)
    detail::require(table.header[j] == "r=" + std::to_string(j + 1), "matrix CSV header must be r=1..r=n");
  detail::require(!table.rows.empty() && !table.header.empty(), "matrix CSV has no data");
  FidelityMatrix f;
  f.k = static_cast<int>(table.rows.size());
  f.n = static_cast<int>(table.header.size());
  for (const auto& row : table.rows)
    for (double v : row) {
      detail::require(v >= -1e-12 && v <= 1.0 + 1e-12, "matrix CSV entry outside [0, 1]");
      f.values.push_back(v);
    }
  return f;
}

}  // namespace rbwalk
