#pragma once

#include "octoform/modforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octoform {

// The five weight-4 spaces the formulas live in.
enum class SpaceId { M4_16_chi8, M4_48_triv, M4_48_chi8, M4_48_chi12, M4_48_chi24 };

int dimension(SpaceId space);
const char* space_name(SpaceId space);
std::optional<SpaceId> space_from_name(std::string_view name);
const std::vector<SpaceId>& all_spaces();

// One labeled basis element: an alpha-indexed label matching the published
// enumeration order, the recipe it was built from, and its expansion.
struct BasisElement {
  std::string label;    // "f17", "g3", "h25", "F19"; recipe-style at level 16
  std::string recipe;   // e.g. "f_{4,8}(3z)"
  std::string base;     // registry name of the undilated form
  int dilation = 1;
  bool eisenstein_type = false;
  QSeries series;
};

struct Basis {
  SpaceId space = SpaceId::M4_48_triv;
  int precision = 0;
  std::vector<BasisElement> elements;

  const BasisElement& element(int alpha) const { return elements.at(static_cast<std::size_t>(alpha - 1)); }
};

// Fresh construction; throws if prec < 34 (the working floor that covers the
// level-48 coefficient bound plus the constant term).
Basis build_basis(SpaceId space, int prec);

// Cached construction; identical output, shared across threads.
const Basis& basis_for_space(SpaceId space, int prec);

// Exact rank of the dimension x prec coefficient matrix. A rank below the
// declared dimension is a reported finding carrying the dependent labels and
// the rational combination certifying each dependency.
struct RankReport {
  SpaceId space = SpaceId::M4_48_triv;
  int precision = 0;
  int rank = 0;
  int declared_dimension = 0;
  struct Dependency {
    std::vector<std::pair<std::string, Rational>> combination;  // label -> weight
    std::string describe() const;
  };
  std::vector<Dependency> dependencies;

  bool full_rank() const { return rank == declared_dimension; }
};

RankReport verify_rank(SpaceId space, int prec);

// Cached wrapper around verify_rank at the given precision.
const RankReport& rank_report(SpaceId space, int prec);

}  // namespace octoform
