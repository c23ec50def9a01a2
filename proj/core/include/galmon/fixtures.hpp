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

/**
 * @file
 *
 * Small named monoids and actions used by tests, benchmarks and the CLI.
 */

#ifndef GALMON_FIXTURES_HPP
#define GALMON_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galmon/actions.hpp"
#include "galmon/monoid.hpp"

namespace galmon::fixtures {

Monoid trivial();
/// Z/n with elements e, g, g2, ..., g{n-1}.
Monoid cyclic(std::size_t n);
Monoid z2();  // {e, s}
Monoid z3();
Monoid z4();
Monoid z5();
Monoid z6();
Monoid klein();  // {e, a, b, c}
/// Permutations of {1,2,3} in cycle notation, (στ)(x) = σ(τ(x)).
Monoid s3();
/// {e, z} with z² = z.
Monoid e2();

// Non-group monoids.
Monoid left_zero();  // {e, a, b}, xy = x for x ≠ e
Monoid nil3();       // {e, n, 0}, n² = 0
Monoid t2();         // all self-maps of {1,2}: e, t, c1, c2
Monoid trunc3();     // {e, a, a2}, a³ = a²
Monoid z2_zero();    // {e, s, 0}, Z2 with an adjoined zero

/// Every group of order at most 6, up to isomorphism.
std::vector<Monoid> small_groups();
/// The hand-built non-group monoids above plus e2.
std::vector<Monoid> non_groups();

std::vector<std::string> monoid_names();
std::optional<Monoid>    monoid_by_name(std::string_view name);

/// S3 on {1,2,3}.
MAction s3_natural();
/// Z2 swapping {0,1}.
MAction z2_swap();

}  // namespace galmon::fixtures

#endif  // GALMON_FIXTURES_HPP
