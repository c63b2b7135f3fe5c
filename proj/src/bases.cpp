#include "octoform/bases.hpp"

#include "octoform/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace octoform {

int dimension(SpaceId space) {
  switch (space) {
    case SpaceId::M4_16_chi8: return 8;
    case SpaceId::M4_48_triv: return 30;
    case SpaceId::M4_48_chi8: return 28;
    case SpaceId::M4_48_chi12: return 30;
    case SpaceId::M4_48_chi24: return 28;
  }
  throw std::logic_error("unknown space");
}

const char* space_name(SpaceId space) {
  switch (space) {
    case SpaceId::M4_16_chi8: return "M4_16_chi8";
    case SpaceId::M4_48_triv: return "M4_48_triv";
    case SpaceId::M4_48_chi8: return "M4_48_chi8";
    case SpaceId::M4_48_chi12: return "M4_48_chi12";
    case SpaceId::M4_48_chi24: return "M4_48_chi24";
  }
  throw std::logic_error("unknown space");
}

std::optional<SpaceId> space_from_name(std::string_view name) {
  for (SpaceId space : all_spaces())
    if (name == space_name(space)) return space;
  return std::nullopt;
}

const std::vector<SpaceId>& all_spaces() {
  static const std::vector<SpaceId> spaces = {
      SpaceId::M4_16_chi8, SpaceId::M4_48_triv, SpaceId::M4_48_chi8,
      SpaceId::M4_48_chi12, SpaceId::M4_48_chi24};
  return spaces;
}

namespace {

// Shared builder: expands each distinct base form once, then dilates.
class BasisAssembler {
 public:
  explicit BasisAssembler(int prec) : prec_(prec) {}

  BasisElement make(const std::string& label_prefix, int alpha,
                    const std::string& base_name, int dilation) {
    const NamedForm* base = form_registry().find(base_name);
    if (!base) throw std::logic_error("basis element refers to unregistered form " + base_name);
    auto it = cache_.find(base_name);
    if (it == cache_.end()) {
      try {
        it = cache_.emplace(base_name, base->expand(prec_)).first;
      } catch (const std::exception& error) {
        throw std::runtime_error("while constructing " + base_name + ": " + error.what());
      }
    }
    BasisElement element{
        .label = label_prefix.empty() ? std::string() : label_prefix + std::to_string(alpha),
        .recipe = base_name + "(" + (dilation == 1 ? "" : std::to_string(dilation)) + "z)",
        .base = base_name,
        .dilation = dilation,
        .eisenstein_type = !base->cusp_type,
        .series = dilation == 1 ? it->second : dilate(it->second, dilation)};
    if (element.label.empty()) element.label = element.recipe;
    return element;
  }

 private:
  int prec_;
  std::map<std::string, QSeries> cache_;
};

Basis build_m4_16_chi8(int prec) {
  Basis basis{SpaceId::M4_16_chi8, prec, {}};
  BasisAssembler assemble(prec);
  int alpha = 0;
  for (int t : {1, 2})
    for (const char* name : {"E_{4,1,chi8}", "E_{4,chi8,1}", "f_{4,8,chi8;1}", "f_{4,8,chi8;2}"})
      basis.elements.push_back(assemble.make("", ++alpha, name, t));
  return basis;
}

Basis build_m4_48_triv(int prec) {
  Basis basis{SpaceId::M4_48_triv, prec, {}};
  BasisAssembler assemble(prec);
  int alpha = 0;
  auto push = [&](const std::string& base, int t) {
    basis.elements.push_back(assemble.make("f", ++alpha, base, t));
  };
  for (int t : {1, 2, 3, 4, 6, 8, 12, 16, 24, 48}) push("E_4", t);
  push("E_{4,chi-4,chi-4}", 1);
  push("E_{4,chi-4,chi-4}", 3);
  for (int t : {1, 2, 4, 8}) push("f_{4,6}", t);
  for (int t : {1, 2, 3, 6}) push("f_{4,8}", t);
  for (int t : {1, 2, 4}) push("f_{4,12}", t);
  for (int t : {1, 3}) push("f_{4,16}", t);
  for (int t : {1, 2}) push("f_{4,24}*chi4", t);
  push("f_{4,6}*chi-4", 1);
  push("f_{4,12}*chi-4", 1);
  push("f_{4,24}*chi-4", 1);
  return basis;
}

Basis build_m4_48_chi8(int prec) {
  Basis basis{SpaceId::M4_48_chi8, prec, {}};
  BasisAssembler assemble(prec);
  int alpha = 0;
  auto push = [&](const std::string& base, int t) {
    basis.elements.push_back(assemble.make("g", ++alpha, base, t));
  };
  for (int t : {1, 2, 3, 6}) push("E_{4,1,chi8}", t);
  for (int t : {1, 2, 3, 6}) push("E_{4,chi8,1}", t);
  for (int t : {1, 2, 3, 6}) push("f_{4,8,chi8;1}", t);
  for (int t : {1, 2, 3, 6}) push("f_{4,8,chi8;2}", t);
  for (int j = 1; j <= 6; ++j)
    for (int t : {1, 2}) push("f_{4,24,chi8;" + std::to_string(j) + "}", t);
  return basis;
}

Basis build_m4_48_chi12(int prec) {
  Basis basis{SpaceId::M4_48_chi12, prec, {}};
  BasisAssembler assemble(prec);
  int alpha = 0;
  auto push = [&](const std::string& base, int t) {
    basis.elements.push_back(assemble.make("h", ++alpha, base, t));
  };
  for (int t : {1, 2, 4})
    for (const char* name :
         {"E_{4,1,chi12}", "E_{4,chi12,1}", "E_{4,chi-4,chi-3}", "E_{4,chi-3,chi-4}"})
      push(name, t);
  for (int t : {1, 2, 4})
    for (int j = 1; j <= 4; ++j) push("f_{4,12,chi12;" + std::to_string(j) + "}", t);
  for (int j = 1; j <= 6; ++j) push("f_{4,48,chi12;" + std::to_string(j) + "}", 1);
  return basis;
}

Basis build_m4_48_chi24(int prec) {
  Basis basis{SpaceId::M4_48_chi24, prec, {}};
  BasisAssembler assemble(prec);
  int alpha = 0;
  auto push = [&](const std::string& base, int t) {
    basis.elements.push_back(assemble.make("F", ++alpha, base, t));
  };
  for (const char* name :
       {"E_{4,1,chi24}", "E_{4,chi-8,chi-3}", "E_{4,chi24,1}", "E_{4,chi-3,chi-8}"})
    for (int t : {1, 2}) push(name, t);
  for (int j = 1; j <= 10; ++j)
    for (int t : {1, 2}) push("f_{4,24,chi24;" + std::to_string(j) + "}", t);
  return basis;
}

}  // namespace

Basis build_basis(SpaceId space, int prec) {
  if (prec < 34) throw std::domain_error("basis precision must be at least 34");
  Basis basis;
  switch (space) {
    case SpaceId::M4_16_chi8: basis = build_m4_16_chi8(prec); break;
    case SpaceId::M4_48_triv: basis = build_m4_48_triv(prec); break;
    case SpaceId::M4_48_chi8: basis = build_m4_48_chi8(prec); break;
    case SpaceId::M4_48_chi12: basis = build_m4_48_chi12(prec); break;
    case SpaceId::M4_48_chi24: basis = build_m4_48_chi24(prec); break;
  }
  if (static_cast<int>(basis.elements.size()) != dimension(space))
    throw std::logic_error(std::string("basis for ") + space_name(space) +
                           " has the wrong element count");
  return basis;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::unique_ptr<Basis>> basis_cache;
std::map<std::pair<int, int>, std::unique_ptr<RankReport>> rank_cache;

std::pair<int, int> cache_key(SpaceId space, int prec) {
  return {static_cast<int>(space), prec};
}

}  // namespace

const Basis& basis_for_space(SpaceId space, int prec) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = basis_cache.find(cache_key(space, prec));
    if (it != basis_cache.end()) return *it->second;
  }
  auto built = std::make_unique<Basis>(build_basis(space, prec));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = basis_cache.emplace(cache_key(space, prec), std::move(built));
  return *it->second;
}

std::string RankReport::Dependency::describe() const {
  std::string out;
  for (const auto& [label, weight] : combination) {
    if (!out.empty()) out += " + ";
    out += "(" + to_fraction_string(weight) + ")*" + label;
  }
  return out + " = 0";
}

RankReport verify_rank(SpaceId space, int prec) {
  const Basis& basis = basis_for_space(space, prec);
  RationalMatrix rows;
  rows.reserve(basis.elements.size());
  for (const auto& element : basis.elements) {
    auto coeffs = element.series.coefficients();
    rows.emplace_back(coeffs.begin(), coeffs.end());
  }
  RowReduction reduction = row_reduce_with_certificate(std::move(rows));

  RankReport report;
  report.space = space;
  report.precision = prec;
  report.rank = reduction.rank;
  report.declared_dimension = dimension(space);
  for (const auto& dep : reduction.dependencies) {
    RankReport::Dependency named;
    for (std::size_t j = 0; j < dep.combination.size(); ++j)
      if (dep.combination[j] != 0)
        named.combination.emplace_back(basis.elements[j].label, dep.combination[j]);
    report.dependencies.push_back(std::move(named));
  }
  return report;
}

const RankReport& rank_report(SpaceId space, int prec) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = rank_cache.find(cache_key(space, prec));
    if (it != rank_cache.end()) return *it->second;
  }
  auto computed = std::make_unique<RankReport>(verify_rank(space, prec));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = rank_cache.emplace(cache_key(space, prec), std::move(computed));
  return *it->second;
}

}  // namespace octoform
