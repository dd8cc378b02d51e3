#include <random>

#include "doctest.h"
#include "rulehide/apriori.hpp"
#include "rulehide/errors.hpp"
#include "rulehide/hiding.hpp"
#include "rulehide/rules.hpp"
#include "support/corpus.hpp"

using namespace rulehide;
using testsupport::items_of;
using testsupport::kDeskBasket;

namespace {

HidingParams desk_params(const Rational& alpha, const Rational& margin = Rational(0)) {
    HidingParams params;
    params.min_support = MiningParams::absolute(2);
    params.min_confidence = alpha;
    params.safety_margin = margin;
    return params;
}

}  // namespace

TEST_CASE("hiding params validate their ranges") {
    CHECK_THROWS_AS(desk_params(Rational(11, 10)).validate(), ParamError);
    CHECK_THROWS_AS(desk_params(Rational(1, 2), Rational(1, 2)).validate(), ParamError);  // target 0
    CHECK_THROWS_AS(desk_params(Rational(1, 2), Rational(-1, 10)).validate(), ParamError);
    CHECK_NOTHROW(desk_params(Rational(1, 2), Rational(1, 10)).validate());
}

TEST_CASE("hiding_count walks the shrinking confidence ratio") {
    TransactionDB db = parse_basket(kDeskBasket);
    Itemset a = items_of(db, {"A"});
    Itemset b = items_of(db, {"B"});

    CHECK(hiding_count(db, a, b, Rational(7, 10)) == 1);  // 2/3 < 7/10
    CHECK(hiding_count(db, a, b, Rational(8, 10)) == 0);  // 3/4 already below
    CHECK(hiding_count(db, a, b, Rational(1, 2)) == 3);   // 2/3, 1/2, then gone

    // with a real support threshold, the support clause can fire first
    CHECK(hiding_count(db, a, b, Rational(1, 2), 2) == 2);  // 3-2 = 1 < 2

    CHECK_THROWS_AS(hiding_count(db, a, b, Rational(0)), ParamError);

    TransactionDB zero = parse_basket("B\nC\n");
    CHECK_THROWS_AS(
        hiding_count(zero, items_of(zero, {"A", "B"}), items_of(zero, {"C"}), Rational(1, 2)),
        ContractViolation);
}

TEST_CASE("hiding_count returns the minimal sufficient k") {
    std::mt19937 rng(307);
    for (int round = 0; round < 40; ++round) {
        TransactionDB db = parse_basket(testsupport::random_basket_text(rng));
        if (db.item_count() < 2) continue;
        Itemset x = Itemset::from_sorted_unique({0});
        Itemset y = Itemset::from_sorted_unique({1});
        const std::int64_t b = db.support_count(x);
        if (b == 0) continue;
        const std::int64_t a = db.support_count(set_union(x, y));
        Rational target(1 + testsupport::draw(rng, 4), 5);
        std::int64_t threshold = 1 + testsupport::draw(rng, 2);

        auto hidden_at = [&](std::int64_t k) {
            if (a - k < threshold) return true;
            if (b - k == 0) return true;
            return Rational(a - k, b - k) < target;
        };
        const std::int64_t k = hiding_count(db, x, y, target, threshold);
        CHECK(hidden_at(k));
        if (k > 0) CHECK_FALSE(hidden_at(k - 1));
    }
}

TEST_CASE("rule weight is the confidence, or 1 in unit mode") {
    AssociationRule rule{Itemset::from_sorted_unique({0}), Itemset::from_sorted_unique({1}), 3, 4};
    CHECK(rule_weight(rule) == Rational(3, 4));
    CHECK(rule_weight(rule, WeightMode::kUnit) == Rational(1));
    AssociationRule certain{rule.antecedent, rule.consequent, 4, 4};
    CHECK(rule_weight(certain) == Rational(1));
}

TEST_CASE("transaction priorities on the desk database") {
    TransactionDB db = parse_basket(kDeskBasket);
    MiningParams support = MiningParams::absolute(2);
    RuleSet strong = mine_rules(apriori(db, support), db, RuleParams{support, Rational(7, 10)});
    std::vector<RuleSpec> sensitive{{items_of(db, {"A"}), items_of(db, {"B"})}};
    std::vector<Tid> candidates{1, 2, 5};

    auto order = transaction_priorities(db, strong, sensitive, candidates);
    REQUIRE(order.size() == 3);
    // T2 = {A,B} supports only B => A among the five non-sensitive rules
    CHECK(order[0].tid == 2);
    CHECK(order[0].priority == Rational(3, 4));
    CHECK(order[1].tid == 1);
    CHECK(order[1].priority == Rational(15, 4));
    CHECK(order[2].tid == 5);
    CHECK(order[2].priority == Rational(15, 4));
}

TEST_CASE("empty strong-rule set gives zero priorities and tid tie-break") {
    TransactionDB db = parse_basket(kDeskBasket);
    std::vector<Tid> candidates{5, 1, 2};
    auto order = transaction_priorities(db, RuleSet{}, {}, candidates);
    REQUIRE(order.size() == 3);
    CHECK(order[0].tid == 1);
    CHECK(order[1].tid == 2);
    CHECK(order[2].tid == 5);
    for (const auto& p : order) CHECK(p.priority == Rational(0));
}

TEST_CASE("sanitize hides the desk rule with a single deletion") {
    TransactionDB db = parse_basket(kDeskBasket);
    std::vector<RuleSpec> sensitive{{items_of(db, {"A"}), items_of(db, {"B"})}};
    SanitizationResult result = sanitize(db, sensitive, desk_params(Rational(7, 10)));

    REQUIRE(result.log.size() == 1);
    CHECK(result.log[0].tid == 2);
    CHECK(result.log[0].item == *db.dictionary().find("A"));
    CHECK(result.log[0].rule_index == 0);
    CHECK(result.db.transaction(2).items == items_of(db, {"B"}));
    CHECK(serialize_basket(result.db) == "A B C\nB\nA C\nB C\nA B C\n");

    REQUIRE(result.outcomes.size() == 1);
    const RuleOutcome& outcome = result.outcomes[0];
    CHECK(outcome.status == RuleOutcomeStatus::kHidden);
    CHECK(Rational(outcome.initial_support, outcome.initial_antecedent_support) ==
          Rational(3, 4));
    CHECK(Rational(outcome.final_support, outcome.final_antecedent_support) == Rational(2, 3));
    CHECK(outcome.touched == std::vector<Tid>{2});
}

TEST_CASE("sanitize with no sensitive rules changes nothing") {
    TransactionDB db = parse_basket(kDeskBasket);
    SanitizationResult result = sanitize(db, {}, desk_params(Rational(7, 10)));
    CHECK(result.log.empty());
    CHECK(result.db == db);
}

TEST_CASE("rules already below the target are skipped untouched") {
    TransactionDB db = parse_basket(kDeskBasket);
    std::vector<RuleSpec> sensitive{{items_of(db, {"A"}), items_of(db, {"B"})}};
    // alpha 0.9, margin 0.1: target 0.8, and conf(A => B) = 0.75 < 0.8
    SanitizationResult result =
        sanitize(db, sensitive, desk_params(Rational(9, 10), Rational(1, 10)));
    CHECK(result.log.empty());
    CHECK(result.db == db);
    CHECK(result.outcomes[0].status == RuleOutcomeStatus::kAlreadyHidden);
}

TEST_CASE("a zero-support antecedent is reported already hidden, not an error") {
    TransactionDB db = parse_basket("A B\nC\n");
    std::vector<RuleSpec> sensitive{{items_of(db, {"A", "C"}), items_of(db, {"B"})}};
    SanitizationResult result = sanitize(db, sensitive, desk_params(Rational(1, 2)));
    CHECK(result.log.empty());
    CHECK(result.outcomes[0].status == RuleOutcomeStatus::kAlreadyHidden);
    CHECK(result.outcomes[0].initial_antecedent_support == 0);
}

TEST_CASE("overlapping rules that resurface are hidden again") {
    // Hiding A => C deletes A from {A,C} rows, which raises conf(A => B)
    // back above the target; the pass loop must catch that.
    TransactionDB db = parse_basket("A B\nA B\nA B\nA C\nA C\nA C\n");
    std::vector<RuleSpec> sensitive{
        {items_of(db, {"A"}), items_of(db, {"B"})},
        {items_of(db, {"A"}), items_of(db, {"C"})},
    };
    HidingParams params;
    params.min_support = MiningParams::absolute(1);
    params.min_confidence = Rational(1, 2);

    SanitizationResult result = sanitize(db, sensitive, params);
    CHECK(all_hidden(result.db, sensitive, params));
    CHECK(result.db.support_count(items_of(db, {"A"})) == 0);
    CHECK(result.log.size() == 6);  // every A in the database had to go
    CHECK(result.db.transaction_count() == 6);
    CHECK(apply_modifications(db, result.log) == result.db);
}

TEST_CASE("the modification log replays the original into the sanitized database") {
    TransactionDB db = parse_basket(kDeskBasket);
    std::vector<RuleSpec> sensitive{{items_of(db, {"A"}), items_of(db, {"B"})}};
    SanitizationResult result = sanitize(db, sensitive, desk_params(Rational(7, 10)));
    TransactionDB replayed = apply_modifications(db, result.log);
    CHECK(replayed == result.db);
    CHECK(serialize_basket(replayed) == serialize_basket(result.db));
}

TEST_CASE("sanitize is deterministic") {
    TransactionDB db = parse_basket(kDeskBasket);
    std::vector<RuleSpec> sensitive{{items_of(db, {"A"}), items_of(db, {"B"})},
                                    {items_of(db, {"C"}), items_of(db, {"B"})}};
    HidingParams params = desk_params(Rational(7, 10));
    SanitizationResult first = sanitize(db, sensitive, params);
    SanitizationResult second = sanitize(db, sensitive, params);
    CHECK(serialize_basket(first.db) == serialize_basket(second.db));
    REQUIRE(first.log.size() == second.log.size());
    for (std::size_t i = 0; i < first.log.size(); ++i) {
        CHECK(first.log[i].tid == second.log[i].tid);
        CHECK(first.log[i].item == second.log[i].item);
        CHECK(first.log[i].step == second.log[i].step);
        CHECK(first.log[i].rule_index == second.log[i].rule_index);
    }
}

TEST_CASE("invalid targets and malformed specs are rejected") {
    TransactionDB db = parse_basket(kDeskBasket);
    std::vector<RuleSpec> sensitive{{items_of(db, {"A"}), items_of(db, {"B"})}};
    CHECK_THROWS_AS(sanitize(db, sensitive, desk_params(Rational(1, 2), Rational(1, 2))),
                    ParamError);
    std::vector<RuleSpec> overlapping{{items_of(db, {"A"}), items_of(db, {"A"})}};
    CHECK_THROWS_AS(sanitize(db, overlapping, desk_params(Rational(1, 2))), ContractViolation);
}

TEST_CASE("deletion-only invariant holds across random sanitizations") {
    std::mt19937 rng(401);
    int instances = 0;
    while (instances < 25) {
        TransactionDB db = parse_basket(testsupport::random_basket_text(rng));
        HidingParams params;
        params.min_support = MiningParams::absolute(1 + testsupport::draw(rng, 2));
        params.min_confidence = Rational(1 + testsupport::draw(rng, 2), 2);  // 1/2 or 1

        RuleSet minable = mine_rules(apriori(db, params.min_support), db,
                                     RuleParams{params.min_support, params.min_confidence});
        if (minable.size() == 0) continue;
        ++instances;

        const AssociationRule& pick =
            minable.rules[testsupport::draw(rng, static_cast<std::uint32_t>(minable.size()))];
        std::vector<RuleSpec> sensitive{{pick.antecedent, pick.consequent}};

        SanitizationResult result = sanitize(db, sensitive, params);
        CHECK(all_hidden(result.db, sensitive, params));
        CHECK(result.db.transaction_count() == db.transaction_count());
        for (const auto& t : db.transactions()) {
            CHECK(t.items.contains_all(result.db.transaction(t.tid).items));
        }
        CHECK(apply_modifications(db, result.log) == result.db);
    }
}
