#pragma once

#include <optional>
#include <string>
#include <vector>

namespace overrule {

enum class FeatureKind { continuous, categorical, binary };

struct FeatureMeta {
  std::string name;
  FeatureKind kind = FeatureKind::continuous;
  // Observed (or declared) range for continuous features.
  double min = 0.0;
  double max = 0.0;
  // Category labels for categorical features. Binary features use {"0","1"}.
  std::vector<std::string> categories;
  // Ordered interior cut points, filled in by binarize() for continuous
  // features (strictly increasing, strictly inside (min, max)).
  std::vector<double> thresholds;
};

// Declarative description of a CSV file: which columns are features, their
// kinds, plus the optional group and policy columns.
struct Schema {
  struct Field {
    std::string name;
    FeatureKind kind = FeatureKind::continuous;
    std::optional<double> min, max;          // continuous, optional
    std::vector<std::string> categories;     // categorical: closed set if given
    std::vector<double> thresholds;          // optional explicit cut points
  };
  std::vector<Field> features;
  std::optional<std::string> group_column;
  std::optional<std::string> policy_column;  // per-row allowed treatments, '|'-separated
};

Schema load_schema(const std::string& path);
Schema parse_schema_json(const std::string& json_text);

// Dense, immutable covariate table. Continuous features live in `numeric`,
// categorical and binary features in `coded` (index into categories).
struct Dataset {
  std::vector<FeatureMeta> features;
  std::vector<std::vector<double>> numeric;   // per feature; empty unless continuous
  std::vector<std::vector<int32_t>> coded;    // per feature; empty if continuous

  std::optional<std::string> group_column;
  std::vector<std::string> group_values;      // the group set T
  std::vector<int32_t> group;                 // per row, index into group_values

  std::optional<std::string> policy_column;
  std::vector<std::vector<int32_t>> policy_allowed;  // per row, group indices

  std::size_t n_rows = 0;

  int feature_index(const std::string& name) const;
  // Rows flagged during ingestion as carrying a category outside the
  // feature's recorded set (only possible when loading against a fixed
  // feature universe, e.g. at prediction time).
  std::vector<uint8_t> unknown_category_row;

  Dataset select_rows(const std::vector<std::size_t>& rows) const;
};

Dataset load_csv(const std::string& path, const Schema& schema);
Dataset parse_csv(const std::string& csv_text, const Schema& schema,
                  const std::string& origin_name = "<memory>");

// Like parse_csv but coerces rows into an existing feature universe instead
// of inferring ranges/categories; unseen categories flag the row rather than
// erroring. Used when scoring new data under a fitted model.
Dataset parse_csv_like(const std::string& csv_text,
                       const std::vector<FeatureMeta>& features,
                       const Schema& schema,
                       const std::string& origin_name = "<memory>");

// Programmatic construction used by the synthetic generator and tests:
// all features binary, values[r][f] in {0,1}.
Dataset make_binary_dataset(const std::vector<std::string>& names,
                            const std::vector<std::vector<uint8_t>>& values);

}  // namespace overrule
