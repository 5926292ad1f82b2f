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

#include <benchmark/benchmark.h>

#include <random>

#include "claudette/chain_model.h"
#include "claudette/corpus.h"
#include "claudette/features.h"
#include "claudette/fragment_oracle.h"
#include "claudette/parse_tree.h"
#include "claudette/svm.h"
#include "claudette/tree_kernel.h"

namespace {

using namespace claudette;

const std::filesystem::path kData = CLAUDETTE_TEST_DATA_DIR;

std::vector<ParseTree> PlantedTrees() {
  std::vector<ParseTree> out;
  for (auto &group : ReadTreeGroups(kData / "planted" / "trees.txt")) {
    for (auto &t : group) out.push_back(std::move(t));
  }
  return out;
}

void BM_SstkPair(benchmark::State &state) {
  std::vector<ParseTree> trees = PlantedTrees();
  PreparedTree a(trees[0]);
  PreparedTree b(trees[1]);
  for (auto _ : state) benchmark::DoNotOptimize(Sstk(a, b, kDefaultLambda));
}
BENCHMARK(BM_SstkPair);

void BM_FragmentOracle(benchmark::State &state) {
  std::mt19937_64 rng(1);
  ParseTree a = RandomTree(rng, 12);
  ParseTree b = RandomTree(rng, 12);
  for (auto _ : state) benchmark::DoNotOptimize(FragmentKernel(a, b, 0.4));
}
BENCHMARK(BM_FragmentOracle);

void BM_GramMatrix(benchmark::State &state) {
  std::vector<ParseTree> all = PlantedTrees();
  std::vector<ParseTree> trees(all.begin(),
                               all.begin() + std::min<std::ptrdiff_t>(state.range(0), all.size()));
  for (auto _ : state) benchmark::DoNotOptimize(GramMatrix(trees, kDefaultLambda, true));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GramMatrix)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

struct Features {
  std::vector<SparseVector> x;
  std::vector<int> y;
  std::vector<SeqExample> sequences;
};

const Features &AdjacencyFeatures() {
  static const Features features = [] {
    Features f;
    Corpus corpus = LoadCorpus(kData / "adjacency" / "docs");
    std::vector<const LabeledSentence *> sentences;
    for (const Document &d : corpus.documents()) {
      for (const LabeledSentence &s : d.sentences) sentences.push_back(&s);
    }
    FeatureConfig config;
    Vocabulary vocab = BuildVocabulary(sentences, {}, config);
    for (const Document &d : corpus.documents()) {
      SeqExample ex;
      for (const LabeledSentence &s : d.sentences) {
        SparseVector v = Vectorize(s.sentence, nullptr, vocab, config);
        f.x.push_back(v);
        f.y.push_back(s.detection_label ? 1 : -1);
        ex.xs.push_back(std::move(v));
        ex.ys.push_back(s.detection_label ? 1 : 0);
      }
      f.sequences.push_back(std::move(ex));
    }
    return f;
  }();
  return features;
}

void BM_TrainLinear(benchmark::State &state) {
  const Features &f = AdjacencyFeatures();
  for (auto _ : state) benchmark::DoNotOptimize(TrainLinear(f.x, f.y, TrainConfig{}));
  state.counters["sentences"] = static_cast<double>(f.x.size());
}
BENCHMARK(BM_TrainLinear)->Unit(benchmark::kMillisecond);

void BM_TrainChain(benchmark::State &state) {
  const Features &f = AdjacencyFeatures();
  for (auto _ : state) benchmark::DoNotOptimize(TrainChain(f.sequences, 2, TrainConfig{}));
}
BENCHMARK(BM_TrainChain)->Unit(benchmark::kMillisecond);

void BM_Viterbi(benchmark::State &state) {
  const Features &f = AdjacencyFeatures();
  ChainModel model = TrainChain(f.sequences, 2, TrainConfig{}).model;
  const SeqExample &doc = f.sequences.front();
  for (auto _ : state) benchmark::DoNotOptimize(Viterbi(model, doc.xs));
  state.counters["sentences"] = static_cast<double>(doc.xs.size());
}
BENCHMARK(BM_Viterbi);

void BM_SmoOnGram(benchmark::State &state) {
  std::vector<ParseTree> all = PlantedTrees();
  std::vector<ParseTree> trees(all.begin(), all.begin() + 200);
  KernelGram gram = GramMatrix(trees, kDefaultLambda, true);
  std::vector<int> y;
  for (std::size_t i = 0; i < trees.size(); ++i) y.push_back(i % 3 == 0 ? 1 : -1);
  for (auto _ : state) benchmark::DoNotOptimize(TrainSmo(gram, y, TrainConfig{}));
}
BENCHMARK(BM_SmoOnGram)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
