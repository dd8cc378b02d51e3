#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rulehide/apriori.hpp"
#include "rulehide/rational.hpp"
#include "rulehide/transaction_db.hpp"

namespace rulehide {

/// Rule X => Y with disjoint non-empty sides. The confidence is carried as
/// the exact pair (support of X u Y, support of X); Rational comparison on
/// it never suffers float tie ambiguity.
struct AssociationRule {
    Itemset antecedent;
    Itemset consequent;
    std::int64_t support = 0;             // support(X u Y)
    std::int64_t antecedent_support = 0;  // support(X)

    Rational confidence() const { return Rational(support, antecedent_support); }
    Itemset generating_itemset() const { return set_union(antecedent, consequent); }

    bool operator==(const AssociationRule&) const = default;
};

/// (antecedent, consequent) pair without statistics; how sensitive rules
/// are declared.
struct RuleSpec {
    Itemset antecedent;
    Itemset consequent;

    bool operator==(const RuleSpec&) const = default;
};

struct RuleParams {
    MiningParams min_support = MiningParams::absolute(1);
    Rational min_confidence;  // alpha in [0, 1]
    /// Skip antecedents whose supersets already failed the confidence test
    /// (shrinking the antecedent can only lower confidence). Pure
    /// optimization; the output set is identical either way.
    bool antecedent_prune = true;
};

/// Rules in canonical order: by generating-itemset size, then antecedent,
/// then consequent. No duplicate (X, Y) pairs.
struct RuleSet {
    std::vector<AssociationRule> rules;

    std::size_t size() const noexcept { return rules.size(); }
    bool contains(const Itemset& antecedent, const Itemset& consequent) const;
    const AssociationRule* find(const Itemset& antecedent, const Itemset& consequent) const;
};

/// Generates every rule x => (I - x) over non-empty proper subsets x of
/// every frequent itemset I with |I| >= 2, keeping those with confidence
/// >= min_confidence (inclusive, exact comparison). The collection must
/// carry the supports the database currently yields; stale supports are a
/// contract violation.
RuleSet mine_rules(const FrequentCollection& freq, const TransactionDB& db,
                   const RuleParams& params);

/// support(X u Y) / support(X) as an exact rational. X and Y must be
/// non-empty and disjoint; support(X) = 0 leaves confidence undefined and
/// throws ContractViolation.
Rational confidence(const TransactionDB& db, const Itemset& antecedent,
                    const Itemset& consequent);

/// Parses rule lines "A B -> C" against the database dictionary. '#' lines
/// and blank lines are skipped. Unknown items, an empty side, overlapping
/// sides, or a missing/duplicated arrow are parse errors with line numbers.
std::vector<RuleSpec> parse_rules_file(std::string_view text, const TransactionDB& db);

/// "A B -> C" in canonical item order.
std::string format_rule(const Dictionary& dictionary, const Itemset& antecedent,
                        const Itemset& consequent);

}  // namespace rulehide
