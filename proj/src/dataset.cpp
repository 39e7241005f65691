#include "overrule/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "overrule/errors.hpp"

#include <json.hpp>

namespace overrule {

namespace {

FeatureKind kind_from_string(const std::string& s) {
  if (s == "continuous") return FeatureKind::continuous;
  if (s == "categorical") return FeatureKind::categorical;
  if (s == "binary") return FeatureKind::binary;
  throw ConfigError("unknown feature kind '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One CSV record honoring double-quoted fields ("" escapes a quote).
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && begin != end;
}

bool is_missing(const std::string& s) {
  return s.empty() || s == "NA" || s == "nan" || s == "NaN" || s == "null";
}

struct ColumnPlan {
  std::vector<int> feature_col;  // csv column per schema feature
  int group_col = -1;
  int policy_col = -1;
};

ColumnPlan plan_columns(const std::vector<std::string>& header, const Schema& schema,
                        const std::string& origin) {
  ColumnPlan plan;
  auto find = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };
  for (const auto& f : schema.features) {
    int c = find(f.name);
    if (c < 0)
      throw DataError(origin + ": column '" + f.name + "' declared in schema is missing");
    plan.feature_col.push_back(c);
  }
  if (schema.group_column) {
    plan.group_col = find(*schema.group_column);
    if (plan.group_col < 0)
      throw DataError(origin + ": group column '" + *schema.group_column + "' is missing");
  }
  if (schema.policy_column) {
    plan.policy_col = find(*schema.policy_column);
    if (plan.policy_col < 0)
      throw DataError(origin + ": policy column '" + *schema.policy_column + "' is missing");
  }
  return plan;
}

int32_t code_for(std::vector<std::string>& categories, const std::string& value,
                 bool closed, bool* unknown) {
  auto it = std::find(categories.begin(), categories.end(), value);
  if (it != categories.end()) return static_cast<int32_t>(it - categories.begin());
  if (closed) {
    if (unknown) {
      *unknown = true;
      return -1;
    }
    throw DataError("category '" + value + "' not in declared set");
  }
  categories.push_back(value);
  return static_cast<int32_t>(categories.size() - 1);
}

Dataset parse_rows(const std::string& csv_text, const Schema& schema,
                   const std::string& origin,
                   const std::vector<FeatureMeta>* fixed_features) {
  std::istringstream in(csv_text);
  std::string line;
  if (!std::getline(in, line)) throw DataError(origin + ": empty file");
  const auto header = split_csv_line(line);
  const auto plan = plan_columns(header, schema, origin);

  Dataset ds;
  const std::size_t nf = schema.features.size();
  ds.features.resize(nf);
  ds.numeric.resize(nf);
  ds.coded.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    auto& meta = ds.features[f];
    if (fixed_features) {
      meta = (*fixed_features)[f];
      if (meta.name != schema.features[f].name)
        throw DataError(origin + ": schema feature order does not match the model");
    } else {
      const auto& sf = schema.features[f];
      meta.name = sf.name;
      meta.kind = sf.kind;
      meta.categories = sf.categories;
      meta.thresholds = sf.thresholds;
      if (sf.kind == FeatureKind::binary) meta.categories = {"0", "1"};
      if (sf.min) meta.min = *sf.min;
      if (sf.max) meta.max = *sf.max;
    }
  }
  ds.group_column = schema.group_column;
  ds.policy_column = schema.policy_column;

  // Declared category sets are closed; inferred ones grow as rows arrive.
  std::vector<bool> closed(nf, false);
  for (std::size_t f = 0; f < nf; ++f)
    closed[f] = fixed_features != nullptr || !schema.features[f].categories.empty() ||
                schema.features[f].kind == FeatureKind::binary;
  const bool closed_groups = fixed_features != nullptr;

  std::map<std::string, std::size_t> missing_by_column;
  std::vector<bool> seen_value(nf, false);
  std::vector<double> obs_min(nf, std::numeric_limits<double>::infinity());
  std::vector<double> obs_max(nf, -std::numeric_limits<double>::infinity());

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw DataError(origin + ": row " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(header.size()));

    bool row_missing = false;
    for (std::size_t f = 0; f < nf; ++f) {
      if (is_missing(cells[plan.feature_col[f]])) {
        ++missing_by_column[schema.features[f].name];
        row_missing = true;
      }
    }
    if (plan.group_col >= 0 && is_missing(cells[plan.group_col])) {
      ++missing_by_column[*schema.group_column];
      row_missing = true;
    }
    if (row_missing) continue;  // reported collectively after the pass

    bool unknown_category = false;
    for (std::size_t f = 0; f < nf; ++f) {
      const std::string& cell = cells[plan.feature_col[f]];
      auto& meta = ds.features[f];
      if (meta.kind == FeatureKind::continuous) {
        double v;
        if (!parse_double(cell, v))
          throw DataError(origin + ": row " + std::to_string(line_no) + ", column '" +
                          meta.name + "': cannot parse '" + cell + "' as a number");
        ds.numeric[f].push_back(v);
        obs_min[f] = std::min(obs_min[f], v);
        obs_max[f] = std::max(obs_max[f], v);
      } else {
        bool unk = false;
        int32_t code = code_for(meta.categories, cell, closed[f],
                                fixed_features ? &unk : nullptr);
        if (meta.kind == FeatureKind::binary && code < 0 && !unk)
          throw DataError(origin + ": row " + std::to_string(line_no) + ", column '" +
                          meta.name + "': binary value must be 0 or 1, got '" + cell + "'");
        unknown_category |= unk;
        ds.coded[f].push_back(code);
      }
      seen_value[f] = true;
    }
    if (plan.group_col >= 0) {
      bool unk = false;
      int32_t g = code_for(ds.group_values, cells[plan.group_col], closed_groups,
                           closed_groups ? &unk : nullptr);
      if (unk)
        throw DataError(origin + ": row " + std::to_string(line_no) +
                        ": group value '" + cells[plan.group_col] + "' not in model");
      ds.group.push_back(g);
    }
    if (plan.policy_col >= 0) {
      ds.policy_allowed.emplace_back();  // resolved against groups in a later pass
      std::istringstream ps(cells[plan.policy_col]);
      std::string tok;
      while (std::getline(ps, tok, '|')) {
        if (tok.empty()) continue;
        int32_t g = code_for(ds.group_values, tok, closed_groups, nullptr);
        ds.policy_allowed.back().push_back(g);
      }
    }
    ds.unknown_category_row.push_back(unknown_category ? 1 : 0);
    ++ds.n_rows;
  }

  if (!missing_by_column.empty()) {
    std::ostringstream msg;
    msg << origin << ": missing values are not supported (";
    bool first = true;
    for (const auto& [col, n] : missing_by_column) {
      if (!first) msg << ", ";
      msg << col << ": " << n;
      first = false;
    }
    msg << ")";
    throw DataError(msg.str());
  }
  if (ds.n_rows == 0) throw DataError(origin + ": no data rows");

  if (!fixed_features) {
    for (std::size_t f = 0; f < nf; ++f) {
      auto& meta = ds.features[f];
      if (meta.kind != FeatureKind::continuous) continue;
      if (!schema.features[f].min) meta.min = obs_min[f];
      if (!schema.features[f].max) meta.max = obs_max[f];
      if (meta.min > meta.max)
        throw DataError(origin + ": declared range for '" + meta.name +
                        "' excludes every observed value");
    }
  }
  return ds;
}

}  // namespace

Schema parse_schema_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("schema is not valid JSON: ") + e.what());
  }
  Schema schema;
  if (!j.contains("features") || !j["features"].is_array() || j["features"].empty())
    throw ConfigError("schema must declare a non-empty 'features' array");
  for (const auto& jf : j["features"]) {
    Schema::Field f;
    f.name = jf.at("name").get<std::string>();
    f.kind = kind_from_string(jf.at("kind").get<std::string>());
    if (jf.contains("min")) f.min = jf["min"].get<double>();
    if (jf.contains("max")) f.max = jf["max"].get<double>();
    if (jf.contains("categories"))
      f.categories = jf["categories"].get<std::vector<std::string>>();
    if (jf.contains("thresholds"))
      f.thresholds = jf["thresholds"].get<std::vector<double>>();
    schema.features.push_back(std::move(f));
  }
  if (j.contains("group_column")) schema.group_column = j["group_column"].get<std::string>();
  if (j.contains("policy_column")) schema.policy_column = j["policy_column"].get<std::string>();
  return schema;
}

Schema load_schema(const std::string& path) {
  return parse_schema_json(read_file(path));
}

Dataset parse_csv(const std::string& csv_text, const Schema& schema,
                  const std::string& origin) {
  return parse_rows(csv_text, schema, origin, nullptr);
}

Dataset load_csv(const std::string& path, const Schema& schema) {
  return parse_rows(read_file(path), schema, path, nullptr);
}

Dataset parse_csv_like(const std::string& csv_text,
                       const std::vector<FeatureMeta>& features, const Schema& schema,
                       const std::string& origin) {
  if (features.size() != schema.features.size())
    throw DataError(origin + ": schema does not match the model's feature universe");
  return parse_rows(csv_text, schema, origin, &features);
}

int Dataset::feature_index(const std::string& name) const {
  for (std::size_t f = 0; f < features.size(); ++f)
    if (features[f].name == name) return static_cast<int>(f);
  return -1;
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& rows) const {
  Dataset out;
  out.features = features;
  out.group_column = group_column;
  out.group_values = group_values;
  out.policy_column = policy_column;
  out.n_rows = rows.size();
  out.numeric.resize(features.size());
  out.coded.resize(features.size());
  for (std::size_t f = 0; f < features.size(); ++f) {
    if (!numeric[f].empty()) {
      out.numeric[f].reserve(rows.size());
      for (auto r : rows) out.numeric[f].push_back(numeric[f][r]);
    }
    if (!coded[f].empty()) {
      out.coded[f].reserve(rows.size());
      for (auto r : rows) out.coded[f].push_back(coded[f][r]);
    }
  }
  if (!group.empty())
    for (auto r : rows) out.group.push_back(group[r]);
  if (!policy_allowed.empty())
    for (auto r : rows) out.policy_allowed.push_back(policy_allowed[r]);
  if (!unknown_category_row.empty())
    for (auto r : rows) out.unknown_category_row.push_back(unknown_category_row[r]);
  return out;
}

Dataset make_binary_dataset(const std::vector<std::string>& names,
                            const std::vector<std::vector<uint8_t>>& values) {
  Dataset ds;
  const std::size_t nf = names.size();
  ds.features.resize(nf);
  ds.numeric.resize(nf);
  ds.coded.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    ds.features[f].name = names[f];
    ds.features[f].kind = FeatureKind::binary;
    ds.features[f].categories = {"0", "1"};
    ds.coded[f].reserve(values.size());
  }
  for (const auto& row : values) {
    if (row.size() != nf) throw DataError("binary dataset row width mismatch");
    for (std::size_t f = 0; f < nf; ++f) ds.coded[f].push_back(row[f] ? 1 : 0);
  }
  ds.n_rows = values.size();
  ds.unknown_category_row.assign(ds.n_rows, 0);
  return ds;
}

}  // namespace overrule
