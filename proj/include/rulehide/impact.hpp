#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rulehide/hiding.hpp"
#include "rulehide/rules.hpp"
#include "rulehide/transaction_db.hpp"

namespace rulehide {

struct LevelDelta {
    std::size_t level = 0;
    std::int64_t before = 0;
    std::int64_t after = 0;

    bool operator==(const LevelDelta&) const = default;
};

/// Side effects of sanitization, measured by re-mining both databases at
/// the public thresholds (the safety margin is the hider's private cushion;
/// an adversary mines at min_support / min_confidence).
///
/// hidden / lost / unchanged partition the original rule set; new_rules are
/// the ghosts, minable only after sanitization. Rule statistics come from
/// the database each rule was mined from: the original for hidden and lost,
/// the sanitized one for new and failed.
struct SideEffectReport {
    std::vector<AssociationRule> hidden_rules;  // sensitive, gone after sanitization
    std::vector<AssociationRule> lost_rules;    // non-sensitive casualties
    std::vector<AssociationRule> new_rules;     // ghosts
    std::vector<AssociationRule> failed_rules;  // sensitive, still minable
    std::vector<LevelDelta> itemset_delta;      // frequent-itemset counts per level
    std::int64_t deletions = 0;
    Rational distortion_ratio;  // deletions / item occurrences in the original
    Dictionary dictionary;      // for rendering
};

/// Diffs the rule sets and frequent-itemset levels of two databases that
/// share a dictionary and transaction count, where each sanitized
/// transaction is a subset of its original.
SideEffectReport compare(const TransactionDB& original, const TransactionDB& sanitized,
                         const HidingParams& params, std::span<const RuleSpec> sensitive);

/// Deterministic text: key=value header lines (counts, distortion ratio to
/// six decimals, per-level itemset counts), then one section per non-empty
/// rule class listing rules as "A -> B support=<count> conf=<num>/<den>".
std::string render_report(const SideEffectReport& report);

}  // namespace rulehide
