#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rulehide/apriori.hpp"
#include "rulehide/rational.hpp"
#include "rulehide/rules.hpp"
#include "rulehide/transaction_db.hpp"

namespace rulehide {

/// How strongly a non-sensitive rule counts towards a transaction's
/// priority: its confidence, or a flat 1 per rule.
enum class WeightMode { kConfidence, kUnit };

/// Mining thresholds plus the hiding cushion. A sensitive rule counts as
/// hidden once its confidence drops below target = min_confidence -
/// safety_margin, or its support drops below the support threshold; the
/// margin keeps hidden rules comfortably below what an adversary mining at
/// the public thresholds can see.
struct HidingParams {
    MiningParams min_support = MiningParams::absolute(1);
    Rational min_confidence;           // alpha in [0, 1]
    Rational safety_margin;            // SM in [0, alpha)
    WeightMode weight = WeightMode::kConfidence;

    Rational confidence_target() const { return min_confidence - safety_margin; }
    /// Throws ParamError unless alpha in [0, 1], SM >= 0 and target > 0.
    void validate() const;
};

struct TransactionPriority {
    Tid tid = 0;
    Rational priority;

    bool operator==(const TransactionPriority&) const = default;
};

/// One item removed from one transaction. (tid, item) pairs never repeat
/// across a log; replaying the log on the original database reproduces the
/// sanitized one exactly.
struct Modification {
    std::size_t step = 0;        // batch index; one batch per rule processed
    Tid tid = 0;
    ItemId item = 0;
    std::size_t rule_index = 0;  // into the sensitive-spec list
};

enum class RuleOutcomeStatus {
    kAlreadyHidden,  // below target (or antecedent support 0) when reached
    kHidden,         // pushed below target by deletions
};

struct RuleOutcome {
    RuleSpec rule;
    RuleOutcomeStatus status = RuleOutcomeStatus::kAlreadyHidden;
    std::int64_t initial_support = 0;             // support(X u Y) before sanitization
    std::int64_t initial_antecedent_support = 0;  // support(X) before sanitization
    std::int64_t final_support = 0;
    std::int64_t final_antecedent_support = 0;
    std::vector<Tid> touched;  // in deletion order
};

struct SanitizationResult {
    TransactionDB db;
    std::vector<Modification> log;
    std::vector<RuleOutcome> outcomes;

    std::int64_t deletion_count() const noexcept {
        return static_cast<std::int64_t>(log.size());
    }
};

/// Smallest k >= 0 such that deleting an antecedent item from k supporting
/// transactions hides the rule: with a = support(X u Y) and b = support(X),
/// either (a-k)/(b-k) < target (0/0 counts as hidden) or a-k falls below
/// threshold_count. Deleting an X-item from a transaction containing X u Y
/// lowers a and b together, so the ratio is non-increasing and k <= a
/// always suffices. target <= 0 is a parameter error; support(X) = 0 a
/// contract violation.
std::int64_t hiding_count(const TransactionDB& db, const Itemset& antecedent,
                          const Itemset& consequent, const Rational& target,
                          std::int64_t threshold_count = 1);

/// Strength proxy used by the priority sum.
Rational rule_weight(const AssociationRule& rule, WeightMode mode = WeightMode::kConfidence);

/// Priority of each candidate transaction: the summed weight of every
/// non-sensitive strong rule whose generating itemset the transaction
/// contains. Sorted ascending by (priority, tid) — the front of the list is
/// what sanitization distorts first, precisely because those transactions
/// carry the least non-sensitive knowledge.
std::vector<TransactionPriority> transaction_priorities(
    const TransactionDB& db, const RuleSet& strong_rules, std::span<const RuleSpec> sensitive,
    std::span<const Tid> candidate_tids, WeightMode mode = WeightMode::kConfidence);

/// Weight-based sorting distortion. Processes sensitive rules in input
/// order; for each rule still above target it deletes the rule's first
/// antecedent item from the lowest-priority supporting transactions, then
/// re-mines before the next rule. Passes repeat until no sensitive rule is
/// visible, so overlapping rules that resurface get hidden again. On
/// return every sensitive rule is below target, and the log replays the
/// original database into the returned one.
SanitizationResult sanitize(TransactionDB db, std::vector<RuleSpec> sensitive,
                            const HidingParams& params);

/// Replays a modification log against a database copy.
TransactionDB apply_modifications(TransactionDB db, std::span<const Modification> log);

/// True when every spec is below (threshold, target) in db; the
/// post-sanitization re-check the CLI runs before trusting a result.
bool all_hidden(const TransactionDB& db, std::span<const RuleSpec> sensitive,
                const HidingParams& params);

}  // namespace rulehide
