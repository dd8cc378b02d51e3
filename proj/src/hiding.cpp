#include "rulehide/hiding.hpp"

#include <algorithm>

#include "rulehide/errors.hpp"

namespace rulehide {

void HidingParams::validate() const {
    if (min_confidence < Rational(0) || min_confidence > Rational(1)) {
        throw ParamError("min-confidence must lie in [0, 1], got " +
                         min_confidence.to_fraction_string());
    }
    if (safety_margin < Rational(0)) {
        throw ParamError("safety margin must be non-negative");
    }
    if (confidence_target() <= Rational(0)) {
        throw ParamError("hiding target min_confidence - safety_margin must be positive, got " +
                         confidence_target().to_fraction_string());
    }
}

namespace {

bool rule_is_hidden(std::int64_t support, std::int64_t antecedent_support,
                    const Rational& target, std::int64_t threshold_count) {
    if (support < threshold_count) return true;
    if (antecedent_support == 0) return true;  // 0/0: the rule has vanished
    return Rational(support, antecedent_support) < target;
}

}  // namespace

std::int64_t hiding_count(const TransactionDB& db, const Itemset& antecedent,
                          const Itemset& consequent, const Rational& target,
                          std::int64_t threshold_count) {
    if (target <= Rational(0)) {
        throw ParamError("hiding target must be positive, got " + target.to_fraction_string());
    }
    if (antecedent.empty() || consequent.empty() || antecedent.intersects(consequent)) {
        throw ContractViolation("hiding_count requires disjoint non-empty rule sides");
    }
    const std::int64_t b = db.support_count(antecedent);
    if (b == 0) {
        throw ContractViolation("hiding_count: antecedent has zero support");
    }
    const std::int64_t a = db.support_count(set_union(antecedent, consequent));
    for (std::int64_t k = 0;; ++k) {
        if (rule_is_hidden(a - k, b - k, target, threshold_count)) return k;
    }
}

Rational rule_weight(const AssociationRule& rule, WeightMode mode) {
    return mode == WeightMode::kConfidence ? rule.confidence() : Rational(1);
}

std::vector<TransactionPriority> transaction_priorities(const TransactionDB& db,
                                                        const RuleSet& strong_rules,
                                                        std::span<const RuleSpec> sensitive,
                                                        std::span<const Tid> candidate_tids,
                                                        WeightMode mode) {
    auto is_sensitive = [&](const AssociationRule& r) {
        return std::any_of(sensitive.begin(), sensitive.end(), [&](const RuleSpec& s) {
            return s.antecedent == r.antecedent && s.consequent == r.consequent;
        });
    };

    struct Weighted {
        Itemset generating;
        Rational weight;
    };
    std::vector<Weighted> weighted;
    weighted.reserve(strong_rules.size());
    for (const auto& r : strong_rules.rules) {
        if (is_sensitive(r)) continue;
        weighted.push_back(Weighted{r.generating_itemset(), rule_weight(r, mode)});
    }

    std::vector<TransactionPriority> out;
    out.reserve(candidate_tids.size());
    for (Tid tid : candidate_tids) {
        const Transaction& t = db.transaction(tid);
        Rational priority(0);
        for (const auto& w : weighted) {
            if (t.items.contains_all(w.generating)) priority = priority + w.weight;
        }
        out.push_back(TransactionPriority{tid, priority});
    }
    std::sort(out.begin(), out.end(), [](const TransactionPriority& a, const TransactionPriority& b) {
        if (a.priority != b.priority) return a.priority < b.priority;
        return a.tid < b.tid;
    });
    return out;
}

SanitizationResult sanitize(TransactionDB db, std::vector<RuleSpec> sensitive,
                            const HidingParams& params) {
    params.validate();
    const std::int64_t threshold = params.min_support.threshold_for(db.transaction_count());
    const Rational target = params.confidence_target();

    SanitizationResult result;
    result.outcomes.reserve(sensitive.size());
    for (const auto& spec : sensitive) {
        if (spec.antecedent.empty() || spec.consequent.empty() ||
            spec.antecedent.intersects(spec.consequent)) {
            throw ContractViolation("sensitive rule sides must be non-empty and disjoint");
        }
        RuleOutcome outcome;
        outcome.rule = spec;
        outcome.initial_support = db.support_count(set_union(spec.antecedent, spec.consequent));
        outcome.initial_antecedent_support = db.support_count(spec.antecedent);
        result.outcomes.push_back(std::move(outcome));
    }

    std::size_t step = 0;
    bool any_visible = true;
    while (any_visible) {
        any_visible = false;
        for (std::size_t idx = 0; idx < sensitive.size(); ++idx) {
            const RuleSpec& spec = sensitive[idx];
            const Itemset generating = set_union(spec.antecedent, spec.consequent);
            const std::int64_t a = db.support_count(generating);
            const std::int64_t b = db.support_count(spec.antecedent);
            if (rule_is_hidden(a, b, target, threshold)) continue;
            any_visible = true;

            const std::int64_t k = hiding_count(db, spec.antecedent, spec.consequent, target,
                                                threshold);
            // Strong rules and priorities reflect the current state of the
            // database, deletions from earlier rules included.
            RuleSet strong = mine_rules(apriori(db, params.min_support), db,
                                        RuleParams{params.min_support, params.min_confidence});
            std::vector<Tid> candidates = db.supporting_tids(generating);
            std::vector<TransactionPriority> order =
                transaction_priorities(db, strong, sensitive, candidates, params.weight);

            const ItemId victim = spec.antecedent.first();
            const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k),
                                                           order.size());
            for (std::size_t i = 0; i < take; ++i) {
                db.delete_item(order[i].tid, victim);
                result.log.push_back(Modification{step, order[i].tid, victim, idx});
                result.outcomes[idx].touched.push_back(order[i].tid);
            }
            ++step;
        }
    }

    for (std::size_t idx = 0; idx < sensitive.size(); ++idx) {
        RuleOutcome& outcome = result.outcomes[idx];
        outcome.final_support =
            db.support_count(set_union(sensitive[idx].antecedent, sensitive[idx].consequent));
        outcome.final_antecedent_support = db.support_count(sensitive[idx].antecedent);
        outcome.status = outcome.touched.empty() ? RuleOutcomeStatus::kAlreadyHidden
                                                 : RuleOutcomeStatus::kHidden;
    }
    result.db = std::move(db);
    return result;
}

TransactionDB apply_modifications(TransactionDB db, std::span<const Modification> log) {
    for (const auto& mod : log) {
        db.delete_item(mod.tid, mod.item);
    }
    return db;
}

bool all_hidden(const TransactionDB& db, std::span<const RuleSpec> sensitive,
                const HidingParams& params) {
    const std::int64_t threshold = params.min_support.threshold_for(db.transaction_count());
    const Rational target = params.confidence_target();
    return std::all_of(sensitive.begin(), sensitive.end(), [&](const RuleSpec& spec) {
        return rule_is_hidden(db.support_count(set_union(spec.antecedent, spec.consequent)),
                              db.support_count(spec.antecedent), target, threshold);
    });
}

}  // namespace rulehide
