#include "rulehide/rules.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "rulehide/errors.hpp"

namespace rulehide {

namespace {

bool rule_order(const AssociationRule& a, const AssociationRule& b) {
    const std::size_t size_a = a.antecedent.size() + a.consequent.size();
    const std::size_t size_b = b.antecedent.size() + b.consequent.size();
    if (size_a != size_b) return size_a < size_b;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
}

}  // namespace

bool RuleSet::contains(const Itemset& antecedent, const Itemset& consequent) const {
    return find(antecedent, consequent) != nullptr;
}

const AssociationRule* RuleSet::find(const Itemset& antecedent,
                                     const Itemset& consequent) const {
    for (const auto& r : rules) {
        if (r.antecedent == antecedent && r.consequent == consequent) return &r;
    }
    return nullptr;
}

RuleSet mine_rules(const FrequentCollection& freq, const TransactionDB& db,
                   const RuleParams& params) {
    if (params.min_confidence < Rational(0) || params.min_confidence > Rational(1)) {
        throw ParamError("min-confidence must lie in [0, 1], got " +
                         params.min_confidence.to_fraction_string());
    }
    // The collection must match what the database currently yields; a hider
    // that forgot to re-mine after deletions would otherwise propagate stale
    // confidences silently.
    for (const auto& fi : freq.flatten()) {
        if (db.support_count(fi.items) != fi.support) {
            throw ContractViolation("frequent collection is stale: recorded support " +
                                    std::to_string(fi.support) + " != current " +
                                    std::to_string(db.support_count(fi.items)));
        }
    }

    RuleSet out;
    for (std::size_t size = 2; size <= freq.level_count(); ++size) {
        for (const auto& fi : freq.level(size)) {
            const auto& ids = fi.items.ids();
            const std::uint32_t full = (1u << ids.size()) - 1;

            // Antecedents that failed the confidence test, by popcount;
            // consulted when pruning is enabled (any superset antecedent
            // failing means this one fails too).
            std::vector<std::set<Itemset>> failed(ids.size() + 1);

            auto masked = [&](std::uint32_t mask) {
                std::vector<ItemId> picked;
                for (std::size_t bit = 0; bit < ids.size(); ++bit) {
                    if (mask & (1u << bit)) picked.push_back(ids[bit]);
                }
                return Itemset::from_sorted_unique(std::move(picked));
            };

            // Walk antecedent sizes largest-first so the prune sets are
            // ready before their subsets come up.
            for (std::size_t want = ids.size() - 1; want >= 1; --want) {
                for (std::uint32_t mask = 1; mask < full; ++mask) {
                    if (static_cast<std::size_t>(std::popcount(mask)) != want) continue;
                    Itemset antecedent = masked(mask);

                    if (params.antecedent_prune && !failed[want + 1].empty()) {
                        bool doomed = false;
                        for (ItemId extra : fi.items) {
                            if (antecedent.contains(extra)) continue;
                            if (failed[want + 1].count(set_union(
                                    antecedent, Itemset::from_sorted_unique({extra})))) {
                                doomed = true;
                                break;
                            }
                        }
                        if (doomed) {
                            failed[want].insert(std::move(antecedent));
                            continue;
                        }
                    }

                    auto antecedent_support = freq.support_of(antecedent);
                    if (!antecedent_support) {
                        throw ContractViolation(
                            "downward closure violated: subset missing from collection");
                    }
                    if (Rational(fi.support, *antecedent_support) >= params.min_confidence) {
                        out.rules.push_back(AssociationRule{
                            antecedent, set_difference(fi.items, antecedent), fi.support,
                            *antecedent_support});
                    } else {
                        failed[want].insert(std::move(antecedent));
                    }
                }
                if (want == 1) break;
            }
        }
    }
    std::sort(out.rules.begin(), out.rules.end(), rule_order);
    return out;
}

Rational confidence(const TransactionDB& db, const Itemset& antecedent,
                    const Itemset& consequent) {
    if (antecedent.empty() || consequent.empty()) {
        throw ContractViolation("confidence requires non-empty rule sides");
    }
    if (antecedent.intersects(consequent)) {
        throw ContractViolation("confidence requires disjoint rule sides");
    }
    const std::int64_t base = db.support_count(antecedent);
    if (base == 0) {
        throw ContractViolation("confidence undefined: antecedent has zero support");
    }
    return Rational(db.support_count(set_union(antecedent, consequent)), base);
}

std::vector<RuleSpec> parse_rules_file(std::string_view text, const TransactionDB& db) {
    std::vector<RuleSpec> specs;
    std::size_t file_line = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line;
        if (eol == std::string_view::npos) {
            line = text.substr(pos);
            pos = text.size();
        } else {
            line = text.substr(pos, eol - pos);
            pos = eol + 1;
        }
        ++file_line;
        if (!line.empty() && line.front() == '#') continue;

        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;  // blank line

        auto arrow = std::find(tokens.begin(), tokens.end(), "->");
        if (arrow == tokens.end()) {
            throw ParseError(file_line, "rule line is missing '->'");
        }
        if (std::find(arrow + 1, tokens.end(), "->") != tokens.end()) {
            throw ParseError(file_line, "rule line has more than one '->'");
        }

        auto resolve = [&](auto begin, auto end) {
            std::vector<ItemId> ids;
            for (auto it = begin; it != end; ++it) {
                auto id = db.dictionary().find(*it);
                if (!id) {
                    throw ParseError(file_line, "unknown item '" + *it + "'");
                }
                ids.push_back(*id);
            }
            return Itemset(std::move(ids));
        };
        Itemset antecedent = resolve(tokens.begin(), arrow);
        Itemset consequent = resolve(arrow + 1, tokens.end());
        if (antecedent.empty() || consequent.empty()) {
            throw ParseError(file_line, "rule sides must both be non-empty");
        }
        if (antecedent.intersects(consequent)) {
            throw ParseError(file_line, "rule sides must be disjoint");
        }
        specs.push_back(RuleSpec{std::move(antecedent), std::move(consequent)});
    }
    return specs;
}

std::string format_rule(const Dictionary& dictionary, const Itemset& antecedent,
                        const Itemset& consequent) {
    std::string out;
    for (ItemId id : antecedent) {
        if (!out.empty()) out += ' ';
        out += dictionary.name(id);
    }
    out += " ->";
    for (ItemId id : consequent) {
        out += ' ';
        out += dictionary.name(id);
    }
    return out;
}

}  // namespace rulehide
