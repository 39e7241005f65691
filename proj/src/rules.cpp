#include "overrule/rules.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>

#include "overrule/binarize.hpp"
#include "overrule/errors.hpp"

namespace overrule {

namespace {

std::string num_to_string(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Per-feature view of a conjunction's conditions after merging.
struct FeatureSlot {
  const Literal* le = nullptr;
  const Literal* gt = nullptr;
  const Literal* eq = nullptr;
  const Literal* ne = nullptr;
};

// Merges literals feature by feature; returns false on a contradiction or an
// unrepresentable combination (two conditions on the same (feature, op)).
bool merge_into_slots(const std::vector<Literal>& lits,
                      std::map<int, FeatureSlot>& slots, bool merge_same_op) {
  for (const Literal& lit : lits) {
    FeatureSlot& slot = slots[lit.feature];
    switch (lit.op) {
      case LitOp::le:
        if (slot.le == nullptr)
          slot.le = &lit;
        else if (merge_same_op) {
          if (lit.value < slot.le->value) slot.le = &lit;  // tightest upper bound
        } else
          return false;
        break;
      case LitOp::gt:
        if (slot.gt == nullptr)
          slot.gt = &lit;
        else if (merge_same_op) {
          if (lit.value > slot.gt->value) slot.gt = &lit;  // tightest lower bound
        } else
          return false;
        break;
      case LitOp::eq:
        if (slot.eq != nullptr && slot.eq->category != lit.category) return false;
        slot.eq = &lit;
        break;
      case LitOp::ne:
        if (slot.ne != nullptr && slot.ne->category != lit.category) return false;
        slot.ne = &lit;
        break;
    }
    // Interval on a continuous feature must stay non-empty: (gt, le].
    if (slot.le && slot.gt && slot.le->value <= slot.gt->value) return false;
    // x = v together with x != v is empty; x = v with x != w is just x = v.
    if (slot.eq && slot.ne) {
      if (slot.eq->category == slot.ne->category) return false;
      slot.ne = nullptr;
    }
  }
  return true;
}

std::vector<Literal> slots_to_literals(const std::map<int, FeatureSlot>& slots) {
  std::vector<Literal> out;
  for (const auto& [feature, slot] : slots) {
    if (slot.le) out.push_back(*slot.le);
    if (slot.gt) out.push_back(*slot.gt);
    if (slot.eq) out.push_back(*slot.eq);
    if (slot.ne) out.push_back(*slot.ne);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string Literal::to_string(const std::vector<FeatureMeta>& features) const {
  const FeatureMeta& meta = features.at(feature);
  switch (op) {
    case LitOp::le:
      return meta.name + " <= " + num_to_string(value);
    case LitOp::gt:
      return meta.name + " > " + num_to_string(value);
    case LitOp::eq:
      if (meta.kind == FeatureKind::binary) return category == 1 ? meta.name : "¬" + meta.name;
      return meta.name + " = " + meta.categories.at(category);
    case LitOp::ne:
      if (meta.kind == FeatureKind::binary)
        return category == 1 ? "¬" + meta.name : meta.name;
      return meta.name + " ≠ " + meta.categories.at(category);
  }
  return {};
}

Conjunction::Conjunction(std::vector<Literal> literals) {
  std::map<int, FeatureSlot> slots;
  if (!merge_into_slots(literals, slots, /*merge_same_op=*/true))
    throw ConfigError("contradictory conjunction");
  lits_ = slots_to_literals(slots);
}

std::optional<Conjunction> Conjunction::extended(const Literal& lit) const {
  // A slot already holding the same (feature, op) is not extendable; the
  // tightened form is reachable as a different conjunction.
  for (const Literal& l : lits_) {
    if (l.feature != lit.feature) continue;
    if (l.op == lit.op) return std::nullopt;
    if ((l.op == LitOp::eq && lit.op == LitOp::ne) ||
        (l.op == LitOp::ne && lit.op == LitOp::eq))
      return std::nullopt;
  }
  std::vector<Literal> merged = lits_;
  merged.push_back(lit);
  std::map<int, FeatureSlot> slots;
  if (!merge_into_slots(merged, slots, /*merge_same_op=*/false)) return std::nullopt;
  Conjunction out;
  out.lits_ = slots_to_literals(slots);
  return out;
}

uint64_t Conjunction::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const Literal& l : lits_) {
    mix(static_cast<uint64_t>(l.feature));
    mix(static_cast<uint64_t>(l.op));
    uint64_t bits;
    static_assert(sizeof(bits) == sizeof(l.value));
    std::memcpy(&bits, &l.value, sizeof(bits));
    mix(bits);
    mix(static_cast<uint64_t>(static_cast<int64_t>(l.category)));
  }
  return h;
}

std::string Conjunction::to_string(const std::vector<FeatureMeta>& features,
                                   const std::string& joiner) const {
  if (lits_.empty()) return "(always)";
  std::string out;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) out += joiner;
    out += lits_[i].to_string(features);
  }
  return out;
}

std::size_t RuleSet::literal_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses) n += static_cast<std::size_t>(c.degree());
  return n;
}

bool eval_conjunction(const Conjunction& c, const BinarizedDataset& data, std::size_t row) {
  for (const Literal& lit : c.literals()) {
    int idx = data.literal_index(lit);
    if (idx < 0)
      throw Error("literal " + lit.to_string(data.features()) + " is not in this universe");
    if (!data.test(static_cast<std::size_t>(idx), row)) return false;
  }
  return true;
}

bool eval_ruleset(const RuleSet& r, const BinarizedDataset& data, std::size_t row) {
  bool any = false;
  for (const auto& c : r.clauses) {
    if (eval_conjunction(c, data, row)) {
      any = true;
      break;
    }
  }
  return r.form == RuleForm::DNF ? any : !any;
}

double exact_clause_volume(const Conjunction& c, const std::vector<FeatureMeta>& features) {
  std::map<int, FeatureSlot> slots;
  if (!merge_into_slots(c.literals(), slots, /*merge_same_op=*/true))
    throw ConfigError("contradictory conjunction");
  double volume = 1.0;
  for (const auto& [feature, slot] : slots) {
    (void)features.at(static_cast<std::size_t>(feature));
    double frac = 1.0;
    if (slot.le && slot.gt)
      frac = slot.le->fraction + slot.gt->fraction - 1.0;  // (gt, le] interval
    else if (slot.le)
      frac = slot.le->fraction;
    else if (slot.gt)
      frac = slot.gt->fraction;
    if (slot.eq) frac *= slot.eq->fraction;
    if (slot.ne) frac *= slot.ne->fraction;
    volume *= std::max(0.0, frac);
  }
  return volume;
}

double complexity(const RuleSet& r, double lambda0, double lambda1) {
  if (lambda0 < 0 || lambda1 < 0) throw ConfigError("complexity penalties must be nonnegative");
  double total = 0.0;
  for (const auto& c : r.clauses) {
    if (c.degree() == 0) continue;  // the all-true clause is free
    total += lambda0 + lambda1 * static_cast<double>(c.degree());
  }
  return total;
}

}  // namespace overrule
