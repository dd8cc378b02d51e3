#include "rulehide/impact.hpp"

#include <algorithm>

#include "rulehide/apriori.hpp"
#include "rulehide/errors.hpp"

namespace rulehide {

namespace {

using RuleKey = std::pair<Itemset, Itemset>;

RuleKey key_of(const AssociationRule& r) {
    return {r.antecedent, r.consequent};
}

}  // namespace

SideEffectReport compare(const TransactionDB& original, const TransactionDB& sanitized,
                         const HidingParams& params, std::span<const RuleSpec> sensitive) {
    if (original.transaction_count() != sanitized.transaction_count()) {
        throw ContractViolation("databases differ in transaction count");
    }
    if (!(original.dictionary() == sanitized.dictionary())) {
        throw ContractViolation("databases do not share a dictionary");
    }
    for (const auto& t : original.transactions()) {
        if (!t.items.contains_all(sanitized.transaction(t.tid).items)) {
            throw ContractViolation("transaction " + std::to_string(t.tid) +
                                    " of the sanitized database is not a subset of the original");
        }
    }

    const RuleParams rule_params{params.min_support, params.min_confidence};
    const FrequentCollection freq_before = apriori(original, params.min_support);
    const FrequentCollection freq_after = apriori(sanitized, params.min_support);
    const RuleSet before = mine_rules(freq_before, original, rule_params);
    const RuleSet after = mine_rules(freq_after, sanitized, rule_params);

    std::vector<RuleKey> sensitive_keys;
    sensitive_keys.reserve(sensitive.size());
    for (const auto& s : sensitive) sensitive_keys.emplace_back(s.antecedent, s.consequent);
    auto is_sensitive = [&](const AssociationRule& r) {
        return std::find(sensitive_keys.begin(), sensitive_keys.end(), key_of(r)) !=
               sensitive_keys.end();
    };

    SideEffectReport report;
    report.dictionary = original.dictionary();

    for (const auto& r : before.rules) {
        const bool still_minable = after.contains(r.antecedent, r.consequent);
        if (is_sensitive(r)) {
            if (!still_minable) report.hidden_rules.push_back(r);
        } else if (!still_minable) {
            report.lost_rules.push_back(r);
        }
    }
    for (const auto& r : after.rules) {
        if (is_sensitive(r)) report.failed_rules.push_back(r);
        if (!before.contains(r.antecedent, r.consequent)) report.new_rules.push_back(r);
    }

    const std::size_t levels = std::max(freq_before.level_count(), freq_after.level_count());
    for (std::size_t k = 1; k <= levels; ++k) {
        report.itemset_delta.push_back(
            LevelDelta{k, static_cast<std::int64_t>(freq_before.level(k).size()),
                       static_cast<std::int64_t>(freq_after.level(k).size())});
    }

    report.deletions = original.occurrence_count() - sanitized.occurrence_count();
    report.distortion_ratio = original.occurrence_count() > 0
                                  ? Rational(report.deletions, original.occurrence_count())
                                  : Rational(0);
    return report;
}

namespace {

void render_section(std::string& out, const char* title,
                    const std::vector<AssociationRule>& rules, const Dictionary& dictionary) {
    if (rules.empty()) return;
    out += "# ";
    out += title;
    out += '\n';
    for (const auto& r : rules) {
        out += format_rule(dictionary, r.antecedent, r.consequent);
        out += " support=" + std::to_string(r.support);
        out += " conf=" + std::to_string(r.support) + "/" + std::to_string(r.antecedent_support);
        out += '\n';
    }
}

}  // namespace

std::string render_report(const SideEffectReport& report) {
    std::string out;
    out += "hidden=" + std::to_string(report.hidden_rules.size()) + "\n";
    out += "lost=" + std::to_string(report.lost_rules.size()) + "\n";
    out += "new=" + std::to_string(report.new_rules.size()) + "\n";
    out += "failed=" + std::to_string(report.failed_rules.size()) + "\n";
    out += "deletions=" + std::to_string(report.deletions) + "\n";
    out += "distortion_ratio=" + report.distortion_ratio.to_decimal_string(6) + "\n";
    out += "levels=" + std::to_string(report.itemset_delta.size()) + "\n";
    for (const auto& delta : report.itemset_delta) {
        out += "level" + std::to_string(delta.level) + "_before=" +
               std::to_string(delta.before) + "\n";
        out += "level" + std::to_string(delta.level) + "_after=" + std::to_string(delta.after) +
               "\n";
    }
    render_section(out, "hidden", report.hidden_rules, report.dictionary);
    render_section(out, "lost", report.lost_rules, report.dictionary);
    render_section(out, "new", report.new_rules, report.dictionary);
    render_section(out, "failed", report.failed_rules, report.dictionary);
    return out;
}

}  // namespace rulehide
