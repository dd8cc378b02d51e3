#pragma once

// Deterministic random basket corpus and definition-level oracles shared by
// the unit and acceptance suites. Everything here derives expected values
// straight from the definitions (exhaustive enumeration, direct support
// scans) and stays off the production mining/hiding code paths it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rulehide/apriori.hpp"
#include "rulehide/rational.hpp"
#include "rulehide/rules.hpp"
#include "rulehide/transaction_db.hpp"

namespace testsupport {

// Five-transaction desk database used across the suites.
inline constexpr const char* kDeskBasket = "A B C\nA B\nA C\nB C\nA B C\n";

inline std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

// Random basket text with up to max_items single-letter items and up to
// max_txns transactions, at a per-database density between 20% and 80%.
inline std::string random_basket_text(std::mt19937& rng, std::uint32_t max_items = 8,
                                      std::uint32_t max_txns = 12) {
    const std::uint32_t m = 1 + draw(rng, max_items);
    const std::uint32_t n = draw(rng, max_txns + 1);
    const std::uint32_t density_pct = 20 + draw(rng, 61);
    std::string text;
    for (std::uint32_t row = 0; row < n; ++row) {
        bool first = true;
        for (std::uint32_t item = 0; item < m; ++item) {
            if (draw(rng, 100) < density_pct) {
                if (!first) text += ' ';
                text += static_cast<char>('A' + item);
                first = false;
            }
        }
        text += '\n';
    }
    return text;
}

inline rulehide::Itemset items_of(const rulehide::TransactionDB& db,
                                  const std::vector<std::string>& names) {
    std::vector<rulehide::ItemId> ids;
    for (const auto& name : names) {
        ids.push_back(*db.dictionary().find(name));
    }
    return rulehide::Itemset(std::move(ids));
}

// Every rule x => (I - x) over every frequent itemset I, kept when
// support(I)/support(x) >= alpha, supports re-counted from the database.
// Canonical order, same as RuleSet.
inline std::vector<rulehide::AssociationRule> oracle_rules(const rulehide::TransactionDB& db,
                                                           const rulehide::MiningParams& support,
                                                           const rulehide::Rational& alpha) {
    using namespace rulehide;
    std::vector<AssociationRule> out;
    for (const auto& fi : brute_force_frequent(db, support).flatten()) {
        const auto& ids = fi.items.ids();
        if (ids.size() < 2) continue;
        const auto full = static_cast<std::uint32_t>(1u << ids.size()) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            std::vector<ItemId> antecedent_ids;
            std::vector<ItemId> consequent_ids;
            for (std::size_t bit = 0; bit < ids.size(); ++bit) {
                if (mask & (1u << bit)) {
                    antecedent_ids.push_back(ids[bit]);
                } else {
                    consequent_ids.push_back(ids[bit]);
                }
            }
            Itemset antecedent = Itemset::from_sorted_unique(std::move(antecedent_ids));
            Itemset consequent = Itemset::from_sorted_unique(std::move(consequent_ids));
            const std::int64_t a = db.support_count(fi.items);
            const std::int64_t b = db.support_count(antecedent);
            if (Rational(a, b) >= alpha) {
                out.push_back(AssociationRule{std::move(antecedent), std::move(consequent), a, b});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AssociationRule& x, const AssociationRule& y) {
        const std::size_t sx = x.antecedent.size() + x.consequent.size();
        const std::size_t sy = y.antecedent.size() + y.consequent.size();
        if (sx != sy) return sx < sy;
        if (x.antecedent != y.antecedent) return x.antecedent < y.antecedent;
        return x.consequent < y.consequent;
    });
    return out;
}

// (itemset, support) pairs of a collection, for set-equality checks.
inline std::vector<rulehide::FrequentItemset> flat(const rulehide::FrequentCollection& c) {
    return c.flatten();
}

}  // namespace testsupport
