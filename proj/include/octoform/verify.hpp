#pragma once

#include "octoform/solver.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace octoform {

// Number of integer solutions of n = sum a_r x_r^2 over the eight
// coefficients, counted by convolving the per-coefficient square counts.
// No modular-forms machinery anywhere on this path.
std::uint64_t brute_force_count(const std::array<int, 8>& coefficients, int n);

// The whole range 0..n_max at once (the convolution computes it anyway).
std::vector<std::uint64_t> brute_force_counts(const std::array<int, 8>& coefficients, int n_max);

// Plain nested enumeration; only sensible for small n. Kept as the
// cross-check on the convolution counter.
std::uint64_t brute_force_count_exhaustive(const std::array<int, 8>& coefficients, int n);

// sum_alpha c_alpha * coefficient(series_alpha, n); integral for a correct
// formula.
Rational evaluate_formula(const Formula& formula, const Basis& basis, int n);

// Per-form verdict of formula-vs-oracle agreement over 0..n_max.
struct VerificationReport {
  QuadraticForm form;
  int n_max = 0;
  enum class Status { AllMatch, Mismatch, Refused };
  Status status = Status::Refused;
  std::string refusal;  // classification / solve diagnostic when refused

  struct Entry {
    int n = 0;
    bool match = false;
    Rational formula_value;
    std::uint64_t oracle_value = 0;
  };
  std::vector<Entry> entries;  // one per n when a formula was derived

  // smallest offending n, or -1
  int first_mismatch() const;
};

VerificationReport verify_form(const QuadraticForm& form, int n_max);

// The published form catalogue: the twelve level-16 triples and the two
// level-48 batches with their printed space assignments.
struct FormCatalogue {
  std::vector<QuadraticForm> level16;
  std::vector<std::pair<QuadraticForm, SpaceId>> batch_1234;   // m = 0
  std::vector<std::pair<QuadraticForm, SpaceId>> batch_12346;  // m >= 1
};

FormCatalogue load_form_catalogue(const std::filesystem::path& file);

}  // namespace octoform
