#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "overrule/bitvec.hpp"
#include "overrule/dataset.hpp"
#include "overrule/rules.hpp"

namespace overrule {

struct BinarizationConfig {
  int num_quantiles = 10;        // deciles by default
  bool include_negations = true; // emit both polarities of each cut/category
};

enum class SampleKind : uint8_t { data, reference };

// Literal-indicator expansion of a dataset: one bit column per literal.
class BinarizedDataset {
 public:
  BinarizedDataset() = default;
  BinarizedDataset(std::vector<FeatureMeta> features, std::vector<Literal> literals,
                   std::size_t n_rows, SampleKind kind);

  std::size_t n_rows() const { return n_rows_; }
  SampleKind sample_kind() const { return kind_; }
  const std::vector<Literal>& literals() const { return literals_; }
  const std::vector<FeatureMeta>& features() const { return features_; }
  const BitVec& column(std::size_t lit_index) const { return columns_[lit_index]; }
  BitVec& column(std::size_t lit_index) { return columns_[lit_index]; }

  // Index of a literal in this universe, or -1.
  int literal_index(const Literal& lit) const;

  bool test(std::size_t lit_index, std::size_t row) const {
    return columns_[lit_index].test(row);
  }

  // AND of the literal columns of c (all-true conjunction covers every row).
  // Throws if a literal of c is not part of this universe.
  BitVec cover(const Conjunction& c) const;

  bool same_universe(const BinarizedDataset& other) const;

  // Rows whose raw record carried a category outside the literal universe.
  std::vector<uint8_t> unknown_category_row;

 private:
  std::vector<FeatureMeta> features_;
  std::vector<Literal> literals_;
  std::vector<BitVec> columns_;
  std::size_t n_rows_ = 0;
  SampleKind kind_ = SampleKind::data;
};

// Build the literal universe from the data (quantile cuts on continuous
// features, category indicators otherwise) and evaluate it on every row.
BinarizedDataset binarize(const Dataset& data, const BinarizationConfig& cfg = {});

// Evaluate an existing literal universe on (possibly new) rows.
BinarizedDataset binarize_with(const Dataset& data,
                               const std::vector<FeatureMeta>& features,
                               const std::vector<Literal>& literals);

// `count` rows drawn per-feature independently and uniformly over the
// feature's range / category set, binarized with the given universe.
BinarizedDataset sample_reference(const std::vector<FeatureMeta>& features,
                                  const std::vector<Literal>& literals,
                                  std::size_t count, uint64_t seed);

}  // namespace overrule
