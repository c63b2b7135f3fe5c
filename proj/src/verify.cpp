#include "octoform/verify.hpp"

#include <json.hpp>

#include <fstream>

namespace octoform {

std::vector<std::uint64_t> brute_force_counts(const std::array<int, 8>& coefficients, int n_max) {
  if (n_max < 0) throw std::domain_error("n_max must be nonnegative");
  const std::size_t size = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::uint64_t> counts(size);
  counts[0] = 1;
  std::vector<std::uint64_t> next(size);
  for (int a : coefficients) {
    if (a < 1) throw std::domain_error("coefficients must be positive");
    // counts of a*x^2 = t for t <= n_max
    std::vector<std::uint64_t> squares(size);
    squares[0] = 1;
    for (long x = 1; a * x * x <= n_max; ++x)
      squares[static_cast<std::size_t>(a * x * x)] = 2;
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t t = 0; t < size; ++t) {
      if (squares[t] == 0) continue;
      for (std::size_t s = 0; s + t < size; ++s) {
        if (counts[s] == 0) continue;
        next[s + t] += counts[s] * squares[t];
      }
    }
    counts.swap(next);
  }
  return counts;
}

std::uint64_t brute_force_count(const std::array<int, 8>& coefficients, int n) {
  return brute_force_counts(coefficients, n)[static_cast<std::size_t>(n)];
}

namespace {

std::uint64_t enumerate(const std::array<int, 8>& coefficients, std::size_t index, int remaining) {
  if (index == coefficients.size()) return remaining == 0 ? 1 : 0;
  std::uint64_t total = 0;
  int a = coefficients[index];
  for (long x = 0; a * x * x <= remaining; ++x) {
    std::uint64_t tail = enumerate(coefficients, index + 1,
                                   remaining - static_cast<int>(a * x * x));
    total += x == 0 ? tail : 2 * tail;
  }
  return total;
}

}  // namespace

std::uint64_t brute_force_count_exhaustive(const std::array<int, 8>& coefficients, int n) {
  if (n < 0) throw std::domain_error("n must be nonnegative");
  return enumerate(coefficients, 0, n);
}

Rational evaluate_formula(const Formula& formula, const Basis& basis, int n) {
  if (formula.space != basis.space)
    throw std::invalid_argument("formula and basis belong to different spaces");
  Rational total = 0;
  for (std::size_t a = 0; a < formula.coefficients.size(); ++a) {
    const Rational& weight = formula.coefficients[a];
    if (weight == 0) continue;
    total += weight * basis.elements[a].series.coefficient(n);
  }
  return total;
}

int VerificationReport::first_mismatch() const {
  for (const auto& entry : entries)
    if (!entry.match) return entry.n;
  return -1;
}

VerificationReport verify_form(const QuadraticForm& form, int n_max) {
  if (n_max < 1) throw std::domain_error("n_max must be positive");
  VerificationReport report;
  report.form = form;
  report.n_max = n_max;

  int prec = std::max(34, n_max + 1);
  Formula formula;
  try {
    formula = derive_formula(form, prec);
  } catch (const std::exception& error) {
    report.status = VerificationReport::Status::Refused;
    report.refusal = error.what();
    return report;
  }

  const Basis& basis = basis_for_space(formula.space, prec);
  std::vector<std::uint64_t> oracle = brute_force_counts(form.coefficients(), n_max);

  report.status = VerificationReport::Status::AllMatch;
  for (int n = 0; n <= n_max; ++n) {
    VerificationReport::Entry entry;
    entry.n = n;
    entry.formula_value = evaluate_formula(formula, basis, n);
    entry.oracle_value = oracle[static_cast<std::size_t>(n)];
    entry.match = is_integer(entry.formula_value) &&
                  entry.formula_value == Rational(static_cast<unsigned long>(entry.oracle_value));
    if (!entry.match) report.status = VerificationReport::Status::Mismatch;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

FormCatalogue load_form_catalogue(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open form catalogue " + file.string());
  nlohmann::json doc = nlohmann::json::parse(in);

  FormCatalogue catalogue;
  for (const auto& triple : doc.at("level16")) {
    catalogue.level16.push_back(
        QuadraticForm{triple.at(0).get<int>(), triple.at(1).get<int>(), 0,
                      triple.at(2).get<int>(), 0});
  }
  auto read_batch = [](const nlohmann::json& rows,
                       std::vector<std::pair<QuadraticForm, SpaceId>>& out) {
    for (const auto& row : rows) {
      const auto& e = row.at("exponents");
      QuadraticForm form{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                         e.at(3).get<int>(), e.at(4).get<int>()};
      auto space = space_from_name(row.at("space").get<std::string>());
      if (!space) throw std::runtime_error("unknown space in form catalogue");
      out.emplace_back(form, *space);
    }
  };
  read_batch(doc.at("batch_1234"), catalogue.batch_1234);
  read_batch(doc.at("batch_12346"), catalogue.batch_12346);
  return catalogue;
}

}  // namespace octoform
