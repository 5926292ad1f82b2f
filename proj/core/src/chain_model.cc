// Copyright 2026 The Claudette Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "claudette/chain_model.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "claudette/error.h"

namespace claudette {

ChainModel::ChainModel(std::size_t num_labels, std::size_t dim)
    : num_labels_(num_labels),
      dim_(dim),
      start_(num_labels, 0.0),
      transition_(num_labels * num_labels, 0.0),
      emission_(num_labels * dim, 0.0) {}

namespace {

// Per-position label scores plus start and transition tables.
struct Lattice {
  std::size_t length = 0;
  std::size_t labels = 0;
  std::vector<double> emit;   // [t][y]
  std::vector<double> start;  // [y]
  std::vector<double> trans;  // [from][to]

  double &Emit(std::size_t t, std::size_t y) { return emit[t * labels + y]; }
  double Emit(std::size_t t, std::size_t y) const { return emit[t * labels + y]; }
};

void CheckSequence(const ChainModel &model, std::span<const SparseVector> xs) {
  for (const SparseVector &x : xs) {
    if (x.dim() != model.dim()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "sentence width " + std::to_string(x.dim()) + " vs model width " +
                      std::to_string(model.dim()));
    }
  }
}

Lattice BuildLattice(const ChainModel &model, std::span<const SparseVector> xs) {
  CheckSequence(model, xs);
  Lattice lat;
  lat.length = xs.size();
  lat.labels = model.num_labels();
  lat.emit.resize(lat.length * lat.labels);
  for (std::size_t t = 0; t < lat.length; ++t) {
    for (std::size_t y = 0; y < lat.labels; ++y) {
      lat.Emit(t, y) = xs[t].Dot(model.emission(static_cast<int>(y)));
    }
  }
  lat.start.resize(lat.labels);
  lat.trans.resize(lat.labels * lat.labels);
  for (std::size_t a = 0; a < lat.labels; ++a) {
    lat.start[a] = model.start(static_cast<int>(a));
    for (std::size_t b = 0; b < lat.labels; ++b) {
      lat.trans[a * lat.labels + b] = model.transition(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return lat;
}

void AddHammingLoss(Lattice *lat, std::span<const int> gold) {
  for (std::size_t t = 0; t < lat->length; ++t) {
    for (std::size_t y = 0; y < lat->labels; ++y) {
      if (static_cast<int>(y) != gold[t]) lat->Emit(t, y) += 1.0;
    }
  }
}

Decoding Decode(const Lattice &lat) {
  Decoding out;
  if (lat.length == 0 || lat.labels == 0) return out;
  const std::size_t L = lat.labels;
  std::vector<double> best(lat.length * L);
  std::vector<int> back(lat.length * L, 0);
  for (std::size_t y = 0; y < L; ++y) best[y] = lat.start[y] + lat.Emit(0, y);
  for (std::size_t t = 1; t < lat.length; ++t) {
    for (std::size_t y = 0; y < L; ++y) {
      double top = best[(t - 1) * L] + lat.trans[y];
      int arg = 0;
      for (std::size_t p = 1; p < L; ++p) {
        double v = best[(t - 1) * L + p] + lat.trans[p * L + y];
        if (v > top) {  // strict: keep the lowest index on ties
          top = v;
          arg = static_cast<int>(p);
        }
      }
      best[t * L + y] = top + lat.Emit(t, y);
      back[t * L + y] = arg;
    }
  }
  const std::size_t last = lat.length - 1;
  int y = 0;
  for (std::size_t k = 1; k < L; ++k) {
    if (best[last * L + k] > best[last * L + static_cast<std::size_t>(y)]) y = static_cast<int>(k);
  }
  out.score = best[last * L + static_cast<std::size_t>(y)];
  out.labels.assign(lat.length, 0);
  for (std::size_t t = lat.length; t-- > 0;) {
    out.labels[t] = y;
    if (t > 0) y = back[t * L + static_cast<std::size_t>(y)];
  }
  return out;
}

void CheckLabels(std::span<const int> ys, std::size_t num_labels) {
  for (int y : ys) {
    if (y < 0 || static_cast<std::size_t>(y) >= num_labels) {
      throw Error(ErrorKind::kUnknownLabel, "label " + std::to_string(y) + " outside label set");
    }
  }
}

}  // namespace

double JointScore(const ChainModel &model, std::span<const SparseVector> xs,
                  std::span<const int> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::kLengthMismatch, "sentences and labels differ in length");
  }
  CheckLabels(ys, model.num_labels());
  CheckSequence(model, xs);
  if (ys.empty()) return 0.0;
  double score = model.start(ys[0]);
  for (std::size_t t = 0; t < xs.size(); ++t) score += xs[t].Dot(model.emission(ys[t]));
  for (std::size_t t = 1; t < ys.size(); ++t) score += model.transition(ys[t - 1], ys[t]);
  return score;
}

Decoding Viterbi(const ChainModel &model, std::span<const SparseVector> xs) {
  return Decode(BuildLattice(model, xs));
}

Decoding LossAugmentedViterbi(const ChainModel &model, std::span<const SparseVector> xs,
                              std::span<const int> gold) {
  if (gold.size() != xs.size()) {
    throw Error(ErrorKind::kLengthMismatch, "gold labels and sentences differ in length");
  }
  CheckLabels(gold, model.num_labels());
  Lattice lat = BuildLattice(model, xs);
  AddHammingLoss(&lat, gold);
  return Decode(lat);
}

double StructuredObjective(const ChainModel &model, std::span<const SeqExample> examples,
                           double c) {
  double norm2 = 0.0;
  for (std::size_t y = 0; y < model.num_labels(); ++y) {
    int label = static_cast<int>(y);
    norm2 += model.start(label) * model.start(label);
    for (std::size_t z = 0; z < model.num_labels(); ++z) {
      double v = model.transition(label, static_cast<int>(z));
      norm2 += v * v;
    }
    for (double v : model.emission(label)) norm2 += v * v;
  }
  double hinge = 0.0;
  for (const SeqExample &ex : examples) {
    Decoding worst = LossAugmentedViterbi(model, ex.xs, ex.ys);
    hinge += std::max(0.0, worst.score - JointScore(model, ex.xs, ex.ys));
  }
  return 0.5 * norm2 + c * hinge;
}

namespace {

// Flat parameter layout: [start L][transition L*L][emission L*V].
class FlatLayout {
 public:
  FlatLayout(std::size_t labels, std::size_t dim) : labels_(labels), dim_(dim) {}

  std::size_t size() const { return labels_ + labels_ * labels_ + labels_ * dim_; }
  std::size_t Start(int y) const { return static_cast<std::size_t>(y); }
  std::size_t Trans(int a, int b) const {
    return labels_ + static_cast<std::size_t>(a) * labels_ + static_cast<std::size_t>(b);
  }
  std::size_t Emit(int y, std::uint32_t f) const {
    return labels_ + labels_ * labels_ + static_cast<std::size_t>(y) * dim_ + f;
  }

  ChainModel ToModel(std::span<const double> w) const {
    ChainModel m(labels_, dim_);
    for (std::size_t a = 0; a < labels_; ++a) {
      int ia = static_cast<int>(a);
      m.start(ia) = w[Start(ia)];
      for (std::size_t b = 0; b < labels_; ++b) {
        m.transition(ia, static_cast<int>(b)) = w[Trans(ia, static_cast<int>(b))];
      }
      std::span<double> e = m.emission(ia);
      for (std::size_t f = 0; f < dim_; ++f) e[f] = w[Emit(ia, static_cast<std::uint32_t>(f))];
    }
    return m;
  }

 private:
  std::size_t labels_;
  std::size_t dim_;
};

void Shuffle(std::vector<std::size_t> *order, std::mt19937_64 *rng) {
  for (std::size_t i = order->size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>((*rng)() % i);
    std::swap((*order)[i - 1], (*order)[j]);
  }
}

}  // namespace

ChainTrainResult TrainChain(std::span<const SeqExample> examples, std::size_t num_labels,
                            const TrainConfig &config) {
  config.Validate();
  if (examples.empty()) throw Error(ErrorKind::kEmptyData, "no training sequences");
  if (num_labels == 0) throw Error(ErrorKind::kUnknownLabel, "empty label set");
  std::size_t dim = 0;
  bool have_dim = false;
  for (const SeqExample &ex : examples) {
    if (ex.xs.empty()) throw Error(ErrorKind::kEmptyData, "empty training sequence");
    if (ex.xs.size() != ex.ys.size()) {
      throw Error(ErrorKind::kLengthMismatch, "sentences and labels differ in length");
    }
    CheckLabels(ex.ys, num_labels);
    for (const SparseVector &x : ex.xs) {
      if (!have_dim) {
        dim = x.dim();
        have_dim = true;
      } else if (x.dim() != dim) {
        throw Error(ErrorKind::kDimensionMismatch, "mixed feature widths");
      }
    }
  }

  const FlatLayout layout(num_labels, dim);
  const std::size_t n = examples.size();
  const double reg = 1.0 / (config.c * static_cast<double>(n));

  // W = scale * u; the running sum of W_t is sigma * u - r.
  std::vector<double> u(layout.size(), 0.0);
  std::vector<double> r(layout.size(), 0.0);
  double scale = 1.0;
  double sigma = 0.0;
  double u_norm2 = 0.0;  // squared norm of u
  // The optimum satisfies reg/2 |W|^2 <= mean loss at W = 0 <= longest sequence.
  std::size_t longest = 0;
  for (const SeqExample &ex : examples) longest = std::max(longest, ex.xs.size());
  const double radius2 = 2.0 * static_cast<double>(longest) / reg;
  std::size_t t = 0;

  auto averaged = [&] {
    std::vector<double> avg(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      avg[k] = (sigma * u[k] - r[k]) / static_cast<double>(t);
    }
    return avg;
  };

  ChainTrainResult result;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(config.seed);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    Shuffle(&order, &rng);
    for (std::size_t idx : order) {
      const SeqExample &ex = examples[idx];
      ++t;

      Lattice lat;
      lat.length = ex.xs.size();
      lat.labels = num_labels;
      lat.emit.assign(lat.length * num_labels, 0.0);
      lat.start.resize(num_labels);
      lat.trans.resize(num_labels * num_labels);
      for (std::size_t a = 0; a < num_labels; ++a) {
        int ia = static_cast<int>(a);
        lat.start[a] = scale * u[layout.Start(ia)];
        for (std::size_t b = 0; b < num_labels; ++b) {
          lat.trans[a * num_labels + b] = scale * u[layout.Trans(ia, static_cast<int>(b))];
        }
        std::span<const double> e(u.data() + layout.Emit(ia, 0), dim);
        for (std::size_t s = 0; s < lat.length; ++s) {
          lat.Emit(s, a) = scale * ex.xs[s].Dot(e);
        }
      }
      // Gold score under the current weights, before the loss is added.
      double gold_score = lat.start[static_cast<std::size_t>(ex.ys[0])];
      for (std::size_t s = 0; s < lat.length; ++s) {
        gold_score += lat.Emit(s, static_cast<std::size_t>(ex.ys[s]));
        if (s > 0) {
          gold_score += lat.trans[static_cast<std::size_t>(ex.ys[s - 1]) * num_labels +
                                  static_cast<std::size_t>(ex.ys[s])];
        }
      }
      AddHammingLoss(&lat, ex.ys);
      Decoding worst = Decode(lat);
      bool violated = worst.labels != ex.ys && worst.score > gold_score;

      const double eta = 1.0 / (reg * static_cast<double>(t));
      if (t > 1) scale *= 1.0 - 1.0 / static_cast<double>(t);
      if (scale < 1e-9) {
        // Fold the running sum into r so sigma restarts from zero.
        u_norm2 = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) {
          r[k] -= sigma * u[k];
          u[k] *= scale;
          u_norm2 += u[k] * u[k];
        }
        sigma = 0.0;
        scale = 1.0;
      }
      if (violated) {
        const double step = eta / scale;
        auto add = [&](std::size_t k, double v) {
          const double delta = step * v;
          u_norm2 += delta * (2.0 * u[k] + delta);
          u[k] += delta;
          r[k] += sigma * delta;
        };
        add(layout.Start(ex.ys[0]), 1.0);
        add(layout.Start(worst.labels[0]), -1.0);
        for (std::size_t s = 0; s < lat.length; ++s) {
          int g = ex.ys[s];
          int p = worst.labels[s];
          if (s > 0) {
            add(layout.Trans(ex.ys[s - 1], g), 1.0);
            add(layout.Trans(worst.labels[s - 1], p), -1.0);
          }
          if (g == p) continue;
          for (const auto &[f, v] : ex.xs[s].entries()) {
            add(layout.Emit(g, f), v);
            add(layout.Emit(p, f), -v);
          }
        }
      }
      // Project back onto that ball.
      const double w_norm2 = scale * scale * std::max(u_norm2, 0.0);
      if (w_norm2 > radius2) scale *= std::sqrt(radius2 / w_norm2);
      sigma += scale;
    }
    if (config.record_trace) {
      std::vector<double> avg = averaged();
      result.epoch_objective.push_back(
          StructuredObjective(layout.ToModel(avg), examples, config.c));
    }
  }
  std::vector<double> avg = averaged();
  result.model = layout.ToModel(avg);
  return result;
}

}  // namespace claudette
