#pragma once

#include "octoform/solver.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace octoform {

// Published coefficient tables, shipped as data files with exact "p/q"
// strings. Structurally bad rows (duplicate keys, lengths that do not match
// the space dimension, unparsable cells) are quarantined at load with a
// diagnostic, never silently dropped.
struct PublishedRow {
  std::string key;                  // exponent string, e.g. "0062" or "00026"
  std::vector<Rational> constants;  // one per basis element
};

struct PublishedTable {
  int id = 0;  // 3..10
  SpaceId space = SpaceId::M4_48_triv;
  std::vector<PublishedRow> rows;

  struct Anomaly {
    std::string key;
    std::string reason;
  };
  std::vector<Anomaly> anomalies;

  const PublishedRow* find_row(const std::string& key) const;
  bool quarantined(const std::string& key) const;
};

PublishedTable load_table(const std::filesystem::path& file);

// Loads table<N>.json for every N present in the directory, keyed by id.
std::map<int, PublishedTable> load_tables(const std::filesystem::path& directory);

// Expands a 4-digit table key to a five-exponent form (m = 0), 5-digit keys
// directly. Throws std::invalid_argument on anything else.
QuadraticForm form_from_key(const std::string& key);

// Positional comparison of a published row against the freshly derived
// constants for the same form.
struct RowComparison {
  enum class Status { Match, Mismatch, Blocked, Quarantined, Missing, DeriveFailed };
  int table = 0;
  std::string key;
  Status status = Status::Missing;
  std::string note;
  struct Cell {
    int position = 0;  // 1-based basis index
    Rational published;
    Rational derived;
    bool match = false;
  };
  std::vector<Cell> cells;
};

const char* to_string(RowComparison::Status status);

RowComparison check_table_row(const PublishedTable& table, const std::string& key, int prec = 34);

}  // namespace octoform
