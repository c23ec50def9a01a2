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

// Backtracking enumerator for constraint systems whose constraints are all of
// the form value(to) == map[value(from)]. Equivariant maps and wedge families
// of an end are both systems of this shape.

#ifndef GALMON_DETAIL_FUNCTIONAL_CSP_HPP
#define GALMON_DETAIL_FUNCTIONAL_CSP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "galmon/error.hpp"
#include "galmon/finset.hpp"

namespace galmon::detail {

class FunctionalCsp {
 public:
  explicit FunctionalCsp(std::vector<std::size_t> domain_sizes)
      : sizes_(std::move(domain_sizes)),
        initial_(sizes_.size()),
        out_(sizes_.size()),
        in_(sizes_.size()) {
    for (std::size_t v = 0; v < sizes_.size(); ++v) {
      initial_[v].assign(sizes_[v], 1);
    }
  }

  std::size_t variables() const noexcept { return sizes_.size(); }

  /// value(to) == map[value(from)]; `map` must outlive solve().
  void add_link(Index from, Index to, const Index* map) {
    if (from == to) {
      // Self-loops are unary: keep the fixed points of `map`.
      for (Index a = 0; a < sizes_[from]; ++a) {
        if (map[a] != a) {
          initial_[from][a] = 0;
        }
      }
      return;
    }
    links_.push_back(Link{from, to, map});
    out_[from].push_back(links_.size() - 1);
    in_[to].push_back(links_.size() - 1);
  }

  /// Calls `on_solution(const std::vector<Index>&)` for every assignment.
  template <class F>
  void solve(F&& on_solution, std::size_t max_nodes, const std::string& what) {
    nodes_     = 0;
    max_nodes_ = max_nodes;
    what_      = &what;
    Domains domains = initial_;
    std::vector<Index> queue(sizes_.size());
    for (Index v = 0; v < sizes_.size(); ++v) {
      queue[v] = v;
    }
    if (!propagate(domains, queue)) {
      return;
    }
    search(domains, on_solution);
  }

  std::size_t nodes_visited() const noexcept { return nodes_; }

 private:
  struct Link {
    Index        from;
    Index        to;
    const Index* map;
  };
  using Domains = std::vector<std::vector<char>>;

  static std::size_t count(const std::vector<char>& d) {
    std::size_t c = 0;
    for (char x : d) {
      c += static_cast<std::size_t>(x != 0);
    }
    return c;
  }

  bool propagate(Domains& d, std::vector<Index> queue) {
    std::vector<char> queued(sizes_.size(), 0);
    for (Index v : queue) {
      queued[v] = 1;
    }
    std::vector<char> mark;
    while (!queue.empty()) {
      const Index v = queue.back();
      queue.pop_back();
      queued[v] = 0;
      for (std::size_t li : out_[v]) {
        const Link& l = links_[li];
        mark.assign(sizes_[l.to], 0);
        for (Index a = 0; a < sizes_[v]; ++a) {
          if (d[v][a]) {
            mark[l.map[a]] = 1;
          }
        }
        bool changed = false;
        bool any     = false;
        for (Index b = 0; b < sizes_[l.to]; ++b) {
          if (d[l.to][b] && !mark[b]) {
            d[l.to][b] = 0;
            changed    = true;
          }
          any = any || d[l.to][b];
        }
        if (!any) {
          return false;
        }
        if (changed && !queued[l.to]) {
          queued[l.to] = 1;
          queue.push_back(l.to);
        }
      }
      for (std::size_t li : in_[v]) {
        const Link& l       = links_[li];
        bool        changed = false;
        bool        any     = false;
        for (Index a = 0; a < sizes_[l.from]; ++a) {
          if (d[l.from][a] && !d[v][l.map[a]]) {
            d[l.from][a] = 0;
            changed      = true;
          }
          any = any || d[l.from][a];
        }
        if (!any) {
          return false;
        }
        if (changed && !queued[l.from]) {
          queued[l.from] = 1;
          queue.push_back(l.from);
        }
      }
    }
    return true;
  }

  template <class F>
  void search(Domains& d, F& on_solution) {
    if (++nodes_ > max_nodes_) {
      throw SizingError(*what_ + ": search exceeded "
                        + std::to_string(max_nodes_) + " nodes");
    }
    Index       branch = sizes_.size();
    std::size_t best   = 0;
    for (Index v = 0; v < sizes_.size(); ++v) {
      const std::size_t c = count(d[v]);
      if (c == 0) {
        return;
      }
      if (c > 1 && (branch == sizes_.size() || c < best)) {
        branch = v;
        best   = c;
      }
    }
    if (branch == sizes_.size()) {
      std::vector<Index> solution(sizes_.size());
      for (Index v = 0; v < sizes_.size(); ++v) {
        for (Index a = 0; a < sizes_[v]; ++a) {
          if (d[v][a]) {
            solution[v] = a;
            break;
          }
        }
      }
      on_solution(solution);
      return;
    }
    for (Index a = 0; a < sizes_[branch]; ++a) {
      if (!d[branch][a]) {
        continue;
      }
      Domains next = d;
      next[branch].assign(sizes_[branch], 0);
      next[branch][a] = 1;
      if (propagate(next, {branch})) {
        search(next, on_solution);
      }
    }
  }

  std::vector<std::size_t>              sizes_;
  Domains                               initial_;
  std::vector<Link>                     links_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::size_t                           nodes_     = 0;
  std::size_t                           max_nodes_ = 0;
  const std::string*                    what_      = nullptr;
};

}  // namespace galmon::detail

#endif  // GALMON_DETAIL_FUNCTIONAL_CSP_HPP
