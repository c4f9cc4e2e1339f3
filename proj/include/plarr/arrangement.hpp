/*
   Copyright 2026 The plarr authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PLARR_ARRANGEMENT_HPP
#define PLARR_ARRANGEMENT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plarr/projgeom.hpp"

namespace plarr {

/// Selector over point multiplicities (the n side of a point-line operator)
/// or over per-line incidence counts (the m side).  ExactIn keeps values in a
/// finite set; AtLeast keeps values >= a threshold.
struct Selector {
  enum class Mode { ExactIn, AtLeast };
  Mode mode = Mode::AtLeast;
  std::set<int> values;  // ExactIn
  int threshold = 2;     // AtLeast

  static Selector exact_in(std::set<int> v) {
    if (v.empty()) throw std::invalid_argument("ExactIn selector needs a nonempty set");
    for (int x : v)
      if (x < 2) throw std::invalid_argument("selector values must be >= 2");
    Selector s;
    s.mode = Mode::ExactIn;
    s.values = std::move(v);
    return s;
  }
  static Selector at_least(int t) {
    if (t < 2) throw std::invalid_argument("selector threshold must be >= 2");
    Selector s;
    s.mode = Mode::AtLeast;
    s.threshold = t;
    return s;
  }

  bool accepts(int v) const {
    return mode == Mode::ExactIn ? values.count(v) > 0 : v >= threshold;
  }

  std::string str() const {
    std::string out;
    if (mode == Mode::ExactIn) {
      out = "exact:";
      bool first = true;
      for (int v : values) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(v);
      }
    } else {
      out = "atleast:" + std::to_string(threshold);
    }
    return out;
  }
};

using MultSelector = Selector;
using CountSelector = Selector;

/// A deduplicated, canonically ordered set of projective lines over one field.
class Arrangement {
 public:
  Arrangement(FieldPtr field, std::vector<ProjLine> lines, std::string label)
      : field_(std::move(field)), lines_(std::move(lines)), label_(std::move(label)) {}

  const FieldPtr& field() const { return field_; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const std::string& label() const { return label_; }
  size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }

  static Arrangement empty_result(const FieldPtr& f, std::string label) {
    return Arrangement(f, {}, std::move(label));
  }

  bool same_line_set(const Arrangement& other) const {
    if (lines_.size() != other.lines_.size()) return false;
    for (size_t i = 0; i < lines_.size(); ++i)
      if (!(lines_[i] == other.lines_[i])) return false;
    return true;
  }

 private:
  FieldPtr field_;
  std::vector<ProjLine> lines_;  // sorted, unique
  std::string label_;
};

struct BuildResult {
  Arrangement arrangement;
  std::vector<std::string> warnings;  // duplicate lines are dropped with a note
};

/// Deduplicate and sort; duplicates produce warnings rather than failures.
inline BuildResult build_arrangement(const FieldPtr& field, const std::vector<ProjLine>& input,
                                     std::string label = "") {
  if (input.empty()) throw std::invalid_argument("build_arrangement: need at least one line");
  std::vector<std::string> warnings;
  std::vector<ProjLine> lines;
  for (const auto& l : input) {
    require_same_field(field, l.field(), "build_arrangement");
    lines.push_back(l);
  }
  std::sort(lines.begin(), lines.end());
  std::vector<ProjLine> unique;
  for (const auto& l : lines) {
    if (!unique.empty() && unique.back() == l) {
      warnings.push_back("DuplicateLine: " + l.str() + " dropped");
      continue;
    }
    unique.push_back(l);
  }
  return BuildResult{Arrangement(field, std::move(unique), std::move(label)),
                     std::move(warnings)};
}

struct IncidencePoint {
  ProjPoint point;
  std::vector<int> line_indices;  // sorted
  int multiplicity() const { return static_cast<int>(line_indices.size()); }
};

struct LatticeSummary {
  std::vector<IncidencePoint> points;  // sorted by point
  std::map<int, long> nk;              // multiplicity -> count

  long pair_count() const {
    long s = 0;
    for (const auto& [k, c] : nk) s += c * (static_cast<long>(k) * (k - 1) / 2);
    return s;
  }
  int max_multiplicity() const { return nk.empty() ? 0 : nk.rbegin()->first; }
  long point_count() const { return static_cast<long>(points.size()); }
};

/// All pairwise intersections grouped by equal point.  For n lines the n_k
/// table satisfies sum_k n_k * C(k,2) = C(n,2).
inline LatticeSummary lattice(const Arrangement& arr) {
  const auto& ls = arr.lines();
  size_t n = ls.size();
  if (n < 2) throw std::invalid_argument("lattice: need at least 2 lines");
  std::map<ProjPoint, std::set<int>> groups;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ProjPoint p = meet(ls[i], ls[j]);
      auto& g = groups[p];
      g.insert(static_cast<int>(i));
      g.insert(static_cast<int>(j));
    }
  LatticeSummary out;
  for (auto& [p, g] : groups) {
    IncidencePoint ip{p, std::vector<int>(g.begin(), g.end())};
    out.nk[ip.multiplicity()] += 1;
    out.points.push_back(std::move(ip));
  }
  return out;
}

struct RichLineEntry {
  ProjLine line;
  int count = 0;  // how many of the input points lie on the line
};

struct RichLineReport {
  std::vector<RichLineEntry> lines;  // after filtering, sorted by line
  std::map<int, long> lr;            // r -> number of r-rich lines, before filtering
};

/// Every line through at least two of the input points, each with its exact
/// incidence count; the l_r table is tallied before the selector filter.
inline RichLineReport rich_lines(const std::vector<ProjPoint>& points,
                                 const CountSelector& sel) {
  if (points.size() < 2)
    throw std::invalid_argument("rich_lines: need at least 2 points");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("rich_lines: points must be pairwise distinct");
  std::set<ProjLine> candidates;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      candidates.insert(join(points[i], points[j]));
  RichLineReport out;
  for (const auto& l : candidates) {
    int cnt = 0;
    for (const auto& p : points)
      if (incident(p, l)) ++cnt;
    out.lr[cnt] += 1;
    if (sel.accepts(cnt)) out.lines.push_back({l, cnt});
  }
  return out;
}

/// The point-line operator: select intersection points of the arrangement by
/// multiplicity, then return the lines carrying an accepted number of the
/// selected points.  By double duality the output lines live in the original
/// plane.  An empty output is a legal value.
inline Arrangement lambda_operator(const Arrangement& arr, const MultSelector& mult_sel,
                                   const CountSelector& count_sel,
                                   std::string label = "") {
  LatticeSummary lat = lattice(arr);
  std::vector<ProjPoint> selected;
  for (const auto& ip : lat.points)
    if (mult_sel.accepts(ip.multiplicity())) selected.push_back(ip.point);
  if (label.empty())
    label = "lambda(" + arr.label() + ";" + mult_sel.str() + ";" + count_sel.str() + ")";
  if (selected.size() < 2) return Arrangement::empty_result(arr.field(), label);
  RichLineReport rich = rich_lines(selected, count_sel);
  if (rich.lines.empty()) return Arrangement::empty_result(arr.field(), label);
  std::vector<ProjLine> lines;
  lines.reserve(rich.lines.size());
  for (const auto& e : rich.lines) lines.push_back(e.line);
  return build_arrangement(arr.field(), lines, label).arrangement;
}

/// Apply a field automorphism (given by the image of the generator) to every
/// line.  Combinatorial invariants must be unchanged.
inline Arrangement galois_image(const Arrangement& arr, const FieldElement& gen_image) {
  std::vector<ProjLine> lines;
  lines.reserve(arr.size());
  for (const auto& l : arr.lines()) {
    lines.emplace_back(l.coeffs()[0].substitute_generator(gen_image),
                       l.coeffs()[1].substitute_generator(gen_image),
                       l.coeffs()[2].substitute_generator(gen_image));
  }
  return build_arrangement(gen_image.field(), lines, arr.label() + "^sigma").arrangement;
}

}  // namespace plarr

#endif  // PLARR_ARRANGEMENT_HPP
