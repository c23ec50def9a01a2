/*
 * Copyright 2026 The galmon Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "galmon/ends.hpp"
#include "galmon/fixtures.hpp"
#include "galmon/galois.hpp"

namespace {

using namespace galmon;

Monoid cyclic_of(const benchmark::State& state) {
  return fixtures::cyclic(static_cast<std::size_t>(state.range(0)));
}

// Repeated calls hit the exponential cache; this measures lookup cost.
void BM_ExponentialCached(benchmark::State& state) {
  const FinSet x = FinSet::range(static_cast<std::size_t>(state.range(0)));
  const FinSet z = FinSet::range(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponential(x, z).size());
  }
  state.counters["elements"] = static_cast<double>(exponential(x, z).size());
}
BENCHMARK(BM_ExponentialCached)->DenseRange(4, 8, 2);

void BM_SiteConstruction(benchmark::State& state) {
  const Monoid m = cyclic_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(default_site(m).morphism_count());
  }
}
BENCHMARK(BM_SiteConstruction)->DenseRange(2, 12, 2);

void BM_SiteConstructionS3(benchmark::State& state) {
  const Monoid m = fixtures::s3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(default_site(m).morphism_count());
  }
}
BENCHMARK(BM_SiteConstructionS3);

void BM_InternalEnd(benchmark::State& state) {
  const Monoid  m = cyclic_of(state);
  const Diagram u = forgetful_diagram(default_site(m));
  std::size_t   nodes = 0;
  for (auto _ : state) {
    const EndObject e = internal_nat(u, u);
    nodes             = e.nodes_visited();
    benchmark::DoNotOptimize(e.size());
  }
  state.counters["search_nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_InternalEnd)->DenseRange(2, 12, 2);

void BM_InternalEndS3(benchmark::State& state) {
  const Diagram u = forgetful_diagram(default_site(fixtures::s3()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(internal_nat(u, u).size());
  }
}
BENCHMARK(BM_InternalEndS3);

void BM_InvariantsEqualizer(benchmark::State& state) {
  const Monoid s3   = fixtures::s3();
  const Site   site = default_site(s3);
  const auto   subs = enumerate_submonoids(s3);
  for (auto _ : state) {
    for (const auto& s : subs) {
      benchmark::DoNotOptimize(invariants(s, site).total_size());
    }
  }
}
BENCHMARK(BM_InvariantsEqualizer);

void BM_InvariantsOracle(benchmark::State& state) {
  const Monoid s3   = fixtures::s3();
  const Site   site = default_site(s3);
  const auto   subs = enumerate_submonoids(s3);
  for (auto _ : state) {
    for (const auto& s : subs) {
      benchmark::DoNotOptimize(invariants_oracle(s.inclusion, site).total_size());
    }
  }
}
BENCHMARK(BM_InvariantsOracle);

void BM_StabilizerViaEnd(benchmark::State& state) {
  const Monoid        s3   = fixtures::s3();
  const Site          site = default_site(s3);
  const TannakianData data = tannakian_data(site);
  const Subfunctor    v    = Subfunctor::whole(site);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer_via_end(v, data).members.size());
  }
}
BENCHMARK(BM_StabilizerViaEnd);

void BM_GaloisCorrespondence(benchmark::State& state) {
  const Monoid m    = cyclic_of(state);
  const Site   site = default_site(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(galois_correspondence(site).pairs.size());
  }
}
BENCHMARK(BM_GaloisCorrespondence)->DenseRange(2, 12, 2);

void BM_ConnectionLawsS3(benchmark::State& state) {
  const Site site = default_site(fixtures::s3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(connection_laws(site).ok());
  }
}
BENCHMARK(BM_ConnectionLawsS3);

void BM_SubmonoidEnumeration(benchmark::State& state) {
  const Monoid m = cyclic_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_submonoids(m).size());
  }
}
BENCHMARK(BM_SubmonoidEnumeration)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
