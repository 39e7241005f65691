#include "overrule/binarize.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "overrule/errors.hpp"
#include "overrule/rng.hpp"

namespace overrule {

namespace {

// Linear-interpolation quantile of a sorted sample (numpy's default).
double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.size() == 1) return sorted[0];
  double pos = p * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo >= sorted.size() - 1) return sorted.back();
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<double> quantile_cuts(std::vector<double> values, int num_quantiles,
                                  double lo, double hi) {
  std::sort(values.begin(), values.end());
  std::vector<double> cuts;
  for (int j = 1; j < num_quantiles; ++j) {
    double q = quantile_sorted(values, static_cast<double>(j) / num_quantiles);
    if (q > lo && q < hi) cuts.push_back(q);
  }
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::vector<Literal> build_literals(std::vector<FeatureMeta>& features,
                                    const Dataset* data, const BinarizationConfig& cfg,
                                    std::vector<std::string>* warnings) {
  std::vector<Literal> lits;
  for (std::size_t f = 0; f < features.size(); ++f) {
    auto& meta = features[f];
    switch (meta.kind) {
      case FeatureKind::continuous: {
        const double range = meta.max - meta.min;
        if (range <= 0.0) {
          if (warnings)
            warnings->push_back("feature '" + meta.name + "' is constant; no literals emitted");
          meta.thresholds.clear();
          break;
        }
        if (meta.thresholds.empty() && data != nullptr)
          meta.thresholds = quantile_cuts(data->numeric[f], cfg.num_quantiles, meta.min, meta.max);
        if (meta.thresholds.empty() && warnings)
          warnings->push_back("feature '" + meta.name +
                              "' has no interior quantile cuts; no literals emitted");
        for (double q : meta.thresholds) {
          double frac = (q - meta.min) / range;
          lits.push_back({static_cast<int>(f), LitOp::le, q, -1, frac});
          if (cfg.include_negations)
            lits.push_back({static_cast<int>(f), LitOp::gt, q, -1, 1.0 - frac});
        }
        break;
      }
      case FeatureKind::binary:
        lits.push_back({static_cast<int>(f), LitOp::eq, 0.0, 1, 0.5});
        lits.push_back({static_cast<int>(f), LitOp::eq, 0.0, 0, 0.5});
        break;
      case FeatureKind::categorical: {
        const std::size_t c = meta.categories.size();
        if (c < 2) {
          if (warnings)
            warnings->push_back("feature '" + meta.name + "' is constant; no literals emitted");
          break;
        }
        for (std::size_t v = 0; v < c; ++v) {
          lits.push_back({static_cast<int>(f), LitOp::eq, 0.0, static_cast<int>(v),
                          1.0 / static_cast<double>(c)});
          if (cfg.include_negations)
            lits.push_back({static_cast<int>(f), LitOp::ne, 0.0, static_cast<int>(v),
                            (static_cast<double>(c) - 1.0) / static_cast<double>(c)});
        }
        break;
      }
    }
  }
  std::sort(lits.begin(), lits.end());
  return lits;
}

void fill_columns(BinarizedDataset& out, const Dataset& data) {
  const auto& lits = out.literals();
  for (std::size_t li = 0; li < lits.size(); ++li) {
    const Literal& lit = lits[li];
    BitVec& col = out.column(li);
    if (out.features()[lit.feature].kind == FeatureKind::continuous) {
      const auto& vals = data.numeric[lit.feature];
      for (std::size_t r = 0; r < vals.size(); ++r)
        if (lit.holds_numeric(vals[r])) col.set(r);
    } else {
      const auto& codes = data.coded[lit.feature];
      for (std::size_t r = 0; r < codes.size(); ++r)
        if (lit.holds_coded(codes[r])) col.set(r);
    }
  }
}

}  // namespace

BinarizedDataset::BinarizedDataset(std::vector<FeatureMeta> features,
                                   std::vector<Literal> literals, std::size_t n_rows,
                                   SampleKind kind)
    : features_(std::move(features)),
      literals_(std::move(literals)),
      n_rows_(n_rows),
      kind_(kind) {
  columns_.assign(literals_.size(), BitVec(n_rows_));
}

int BinarizedDataset::literal_index(const Literal& lit) const {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), lit);
  if (it != literals_.end() && *it == lit)
    return static_cast<int>(it - literals_.begin());
  return -1;
}

BitVec BinarizedDataset::cover(const Conjunction& c) const {
  BitVec out(n_rows_, true);
  for (const Literal& lit : c.literals()) {
    int idx = literal_index(lit);
    if (idx < 0)
      throw Error("literal " + lit.to_string(features_) + " is not in this universe");
    out &= columns_[idx];
  }
  return out;
}

bool BinarizedDataset::same_universe(const BinarizedDataset& other) const {
  return literals_ == other.literals_;
}

BinarizedDataset binarize(const Dataset& data, const BinarizationConfig& cfg) {
  if (data.n_rows == 0) throw DataError("cannot binarize an empty dataset");
  if (cfg.num_quantiles < 2) throw ConfigError("num_quantiles must be at least 2");
  std::vector<FeatureMeta> features = data.features;
  std::vector<std::string> warnings;
  auto lits = build_literals(features, &data, cfg, &warnings);
  BinarizedDataset out(std::move(features), std::move(lits), data.n_rows, SampleKind::data);
  out.warnings = std::move(warnings);
  out.unknown_category_row = data.unknown_category_row;
  fill_columns(out, data);
  return out;
}

BinarizedDataset binarize_with(const Dataset& data,
                               const std::vector<FeatureMeta>& features,
                               const std::vector<Literal>& literals) {
  if (features.size() != data.features.size())
    throw DataError("dataset feature count does not match the literal universe");
  BinarizedDataset out(features, literals, data.n_rows, SampleKind::data);
  out.unknown_category_row = data.unknown_category_row;
  fill_columns(out, data);
  return out;
}

BinarizedDataset sample_reference(const std::vector<FeatureMeta>& features,
                                  const std::vector<Literal>& literals,
                                  std::size_t count, uint64_t seed) {
  if (count == 0)
    throw ConfigError("reference sample count must be positive (the solver needs a non-empty negative class)");
  for (const auto& meta : features)
    if (meta.kind == FeatureKind::continuous &&
        (!std::isfinite(meta.min) || !std::isfinite(meta.max)))
      throw DataError("feature '" + meta.name + "' has a non-finite range");

  BinarizedDataset out(features, literals, count, SampleKind::reference);
  // Literal columns grouped by feature so each drawn value is tested once.
  std::vector<std::vector<std::size_t>> by_feature(features.size());
  for (std::size_t li = 0; li < literals.size(); ++li)
    by_feature[literals[li].feature].push_back(li);

  Rng rng(seed);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t f = 0; f < features.size(); ++f) {
      const auto& meta = features[f];
      if (by_feature[f].empty()) continue;
      if (meta.kind == FeatureKind::continuous) {
        double v = rng.uniform(meta.min, meta.max);
        for (auto li : by_feature[f])
          if (out.literals()[li].holds_numeric(v)) out.column(li).set(r);
      } else {
        std::size_t n_cat = meta.kind == FeatureKind::binary ? 2 : meta.categories.size();
        int32_t v = static_cast<int32_t>(rng.index(n_cat));
        for (auto li : by_feature[f])
          if (out.literals()[li].holds_coded(v)) out.column(li).set(r);
      }
    }
  }
  out.unknown_category_row.assign(count, 0);
  return out;
}

}  // namespace overrule
