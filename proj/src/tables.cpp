#include "octoform/tables.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

namespace octoform {

const PublishedRow* PublishedTable::find_row(const std::string& key) const {
  for (const auto& row : rows)
    if (row.key == key) return &row;
  return nullptr;
}

bool PublishedTable::quarantined(const std::string& key) const {
  for (const auto& anomaly : anomalies)
    if (anomaly.key == key) return true;
  return false;
}

PublishedTable load_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open table file " + file.string());
  nlohmann::json doc = nlohmann::json::parse(in);

  PublishedTable table;
  table.id = doc.at("table").get<int>();
  auto space = space_from_name(doc.at("space").get<std::string>());
  if (!space) throw std::runtime_error("unknown space in " + file.string());
  table.space = *space;
  const int expected_length = dimension(table.space);

  // first pass: spot duplicated keys, which poison every copy
  std::map<std::string, int> key_counts;
  for (const auto& row : doc.at("rows")) key_counts[row.at("key").get<std::string>()]++;

  std::set<std::string> quarantined_keys;
  for (const auto& row : doc.at("rows")) {
    std::string key = row.at("key").get<std::string>();
    if (key_counts[key] > 1) {
      if (!quarantined_keys.count(key)) {
        quarantined_keys.insert(key);
        table.anomalies.push_back({key, "duplicated row key (" +
                                            std::to_string(key_counts[key]) +
                                            " occurrences)"});
      }
      continue;
    }
    PublishedRow parsed;
    parsed.key = key;
    bool bad = false;
    for (const auto& cell : row.at("constants")) {
      try {
        parsed.constants.push_back(rational_from_string(cell.get<std::string>()));
      } catch (const std::exception& error) {
        table.anomalies.push_back({key, std::string("unparsable constant: ") + error.what()});
        bad = true;
        break;
      }
    }
    if (bad) continue;
    if (static_cast<int>(parsed.constants.size()) != expected_length) {
      table.anomalies.push_back(
          {key, "row length " + std::to_string(parsed.constants.size()) +
                    " does not match space dimension " + std::to_string(expected_length)});
      continue;
    }
    table.rows.push_back(std::move(parsed));
  }
  return table;
}

std::map<int, PublishedTable> load_tables(const std::filesystem::path& directory) {
  std::map<int, PublishedTable> tables;
  for (int id = 3; id <= 10; ++id) {
    auto file = directory / ("table" + std::to_string(id) + ".json");
    if (!std::filesystem::exists(file)) continue;
    PublishedTable table = load_table(file);
    if (table.id != id)
      throw std::runtime_error("table id mismatch in " + file.string());
    tables.emplace(id, std::move(table));
  }
  return tables;
}

QuadraticForm form_from_key(const std::string& key) {
  if (key.size() != 4 && key.size() != 5)
    throw std::invalid_argument("form key must have 4 or 5 digits: " + key);
  std::array<int, 5> exponents{};
  for (std::size_t pos = 0; pos < key.size(); ++pos) {
    if (key[pos] < '0' || key[pos] > '9')
      throw std::invalid_argument("form key must be decimal digits: " + key);
    exponents[pos] = key[pos] - '0';
  }
  return QuadraticForm{exponents[0], exponents[1], exponents[2], exponents[3], exponents[4]};
}

const char* to_string(RowComparison::Status status) {
  switch (status) {
    case RowComparison::Status::Match: return "match";
    case RowComparison::Status::Mismatch: return "mismatch";
    case RowComparison::Status::Blocked: return "blocked";
    case RowComparison::Status::Quarantined: return "quarantined";
    case RowComparison::Status::Missing: return "missing";
    case RowComparison::Status::DeriveFailed: return "derive-failed";
  }
  return "unknown";
}

RowComparison check_table_row(const PublishedTable& table, const std::string& key, int prec) {
  RowComparison comparison;
  comparison.table = table.id;
  comparison.key = key;

  if (table.quarantined(key)) {
    comparison.status = RowComparison::Status::Quarantined;
    for (const auto& anomaly : table.anomalies)
      if (anomaly.key == key) comparison.note = anomaly.reason;
    return comparison;
  }
  const PublishedRow* row = table.find_row(key);
  if (!row) {
    comparison.status = RowComparison::Status::Missing;
    comparison.note = "row key not present in table " + std::to_string(table.id);
    return comparison;
  }

  QuadraticForm form;
  try {
    form = form_from_key(key);
  } catch (const std::exception& error) {
    comparison.status = RowComparison::Status::Quarantined;
    comparison.note = error.what();
    return comparison;
  }

  int working = std::max(prec, 34);
  const RankReport& rank = rank_report(table.space, working);
  if (!rank.full_rank()) {
    comparison.status = RowComparison::Status::Blocked;
    comparison.note = std::string("blocked by source ambiguity: basis for ") +
                      space_name(table.space) + " has rank " + std::to_string(rank.rank) +
                      " of " + std::to_string(rank.declared_dimension);
    return comparison;
  }

  Formula derived;
  try {
    derived = derive_formula(form, working);
  } catch (const std::exception& error) {
    comparison.status = RowComparison::Status::DeriveFailed;
    comparison.note = error.what();
    return comparison;
  }
  if (derived.space != table.space) {
    comparison.status = RowComparison::Status::DeriveFailed;
    comparison.note = std::string("form classifies into ") + space_name(derived.space) +
                      ", not " + space_name(table.space);
    return comparison;
  }

  comparison.status = RowComparison::Status::Match;
  for (std::size_t pos = 0; pos < row->constants.size(); ++pos) {
    RowComparison::Cell cell;
    cell.position = static_cast<int>(pos) + 1;
    cell.published = row->constants[pos];
    cell.derived = derived.coefficients[pos];
    cell.match = cell.published == cell.derived;
    if (!cell.match) comparison.status = RowComparison::Status::Mismatch;
    comparison.cells.push_back(std::move(cell));
  }
  return comparison;
}

}  // namespace octoform
