#include "rulehide/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "rulehide/apriori.hpp"
#include "rulehide/errors.hpp"
#include "rulehide/hiding.hpp"
#include "rulehide/impact.hpp"
#include "rulehide/rules.hpp"
#include "rulehide/transaction_db.hpp"

namespace rulehide {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

MiningParams support_params(const CliConfig& cfg) {
    if (cfg.support_count) {
        if (*cfg.support_count < 1) {
            throw ParamError("--min-support-count must be at least 1");
        }
        return MiningParams::absolute(*cfg.support_count);
    }
    return MiningParams::fraction(Rational::from_decimal(*cfg.support_fraction));
}

HidingParams hiding_params(const CliConfig& cfg) {
    HidingParams params;
    params.min_support = support_params(cfg);
    params.min_confidence = Rational::from_decimal(cfg.min_confidence);
    params.safety_margin = Rational::from_decimal(cfg.safety_margin);
    params.weight = cfg.weight == "unit" ? WeightMode::kUnit : WeightMode::kConfidence;
    params.validate();
    return params;
}

Rational confidence_param(const CliConfig& cfg) {
    Rational alpha = Rational::from_decimal(cfg.min_confidence);
    if (alpha < Rational(0) || alpha > Rational(1)) {
        throw ParamError("--min-confidence must lie in [0, 1]");
    }
    return alpha;
}

std::string render_itemsets(const FrequentCollection& freq, const Dictionary& dictionary) {
    std::string out;
    for (std::size_t k = 1; k <= freq.level_count(); ++k) {
        for (const auto& fi : freq.level(k)) {
            bool first = true;
            for (ItemId id : fi.items) {
                if (!first) out += ' ';
                out += dictionary.name(id);
                first = false;
            }
            out += " support=" + std::to_string(fi.support) + "\n";
        }
    }
    out += "scans=" + std::to_string(freq.scan_count()) + "\n";
    return out;
}

std::string render_rules(const RuleSet& rules, const Dictionary& dictionary) {
    std::string out;
    for (const auto& r : rules.rules) {
        out += format_rule(dictionary, r.antecedent, r.consequent);
        out += " support=" + std::to_string(r.support);
        out += " conf=" + std::to_string(r.support) + "/" + std::to_string(r.antecedent_support);
        out += '\n';
    }
    return out;
}

std::string render_log(const std::vector<Modification>& log,
                       const std::vector<RuleSpec>& sensitive, const Dictionary& dictionary) {
    std::string out;
    for (const auto& mod : log) {
        const RuleSpec& spec = sensitive[mod.rule_index];
        out += "step=" + std::to_string(mod.step);
        out += " tid=" + std::to_string(mod.tid);
        out += " item=" + dictionary.name(mod.item);
        out += " rule=" + format_rule(dictionary, spec.antecedent, spec.consequent);
        out += '\n';
    }
    return out;
}

int run_mine(const CliConfig& cfg, std::ostream& out) {
    TransactionDB db = parse_basket(read_file(cfg.input_path));
    FrequentCollection freq = apriori(db, support_params(cfg));
    emit(render_itemsets(freq, db.dictionary()), cfg.output_path, out);
    return kExitOk;
}

int run_rules(const CliConfig& cfg, std::ostream& out) {
    TransactionDB db = parse_basket(read_file(cfg.input_path));
    MiningParams support = support_params(cfg);
    RuleSet rules = mine_rules(apriori(db, support), db,
                               RuleParams{support, confidence_param(cfg)});
    emit(render_rules(rules, db.dictionary()), cfg.output_path, out);
    return kExitOk;
}

int run_hide(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    HidingParams params = hiding_params(cfg);
    TransactionDB db = parse_basket(read_file(cfg.input_path));
    std::vector<RuleSpec> sensitive = parse_rules_file(read_file(cfg.sensitive_path), db);

    SanitizationResult result = sanitize(std::move(db), sensitive, params);
    if (!all_hidden(result.db, sensitive, params)) {
        err << "error: sanitized database still exposes a sensitive rule\n";
        return kExitHidingFailure;
    }
    emit(serialize_basket(result.db), cfg.output_path, out);
    if (!cfg.log_path.empty()) {
        emit(render_log(result.log, sensitive, result.db.dictionary()), cfg.log_path, out);
    }
    return kExitOk;
}

int run_diff(const CliConfig& cfg, std::ostream& out) {
    HidingParams params;
    params.min_support = support_params(cfg);
    params.min_confidence = confidence_param(cfg);

    TransactionDB original = parse_basket(read_file(cfg.input_path));
    TransactionDB sanitized = parse_basket(read_file(cfg.second_path), original.dictionary());
    if (original.transaction_count() != sanitized.transaction_count()) {
        throw IoError("databases differ in transaction count");
    }
    for (const auto& t : original.transactions()) {
        if (!t.items.contains_all(sanitized.transaction(t.tid).items)) {
            throw IoError("sanitized transaction " + std::to_string(t.tid) +
                          " is not a subset of the original");
        }
    }

    std::vector<RuleSpec> sensitive;
    if (!cfg.sensitive_path.empty()) {
        sensitive = parse_rules_file(read_file(cfg.sensitive_path), original);
    }
    SideEffectReport report = compare(original, sanitized, params, sensitive);
    out << render_report(report);
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frequent-itemset mining, association rules, and sensitive-rule hiding "
                 "over basket files"};
    app.name("rulehide");
    app.require_subcommand(1);

    CliConfig cfg;

    auto add_support = [&cfg](CLI::App* sub) {
        auto* group = sub->add_option_group("support", "minimum support threshold");
        group->add_option("--min-support", cfg.support_fraction,
                          "Minimum support as a fraction of the transaction count");
        group->add_option("--min-support-count", cfg.support_count,
                          "Minimum support as an absolute transaction count");
        group->require_option(1);
    };
    auto add_confidence = [&cfg](CLI::App* sub) {
        sub->add_option("--min-confidence", cfg.min_confidence, "Minimum rule confidence in [0, 1]")
            ->required();
    };

    CLI::App* mine = app.add_subcommand("mine", "List frequent itemsets with supports");
    mine->add_option("input", cfg.input_path, "Basket file")->required();
    add_support(mine);
    mine->add_option("--output", cfg.output_path, "Write the listing here instead of stdout");

    CLI::App* rules = app.add_subcommand("rules", "List association rules with support and "
                                                  "confidence");
    rules->add_option("input", cfg.input_path, "Basket file")->required();
    add_support(rules);
    add_confidence(rules);
    rules->add_option("--output", cfg.output_path, "Write the listing here instead of stdout");

    CLI::App* hide = app.add_subcommand("hide", "Sanitize a basket file so the sensitive rules "
                                                "cannot be mined");
    hide->add_option("input", cfg.input_path, "Basket file")->required();
    add_support(hide);
    add_confidence(hide);
    hide->add_option("--sensitive", cfg.sensitive_path, "Rules file declaring the rules to hide")
        ->required();
    hide->add_option("--safety-margin", cfg.safety_margin,
                     "Cushion subtracted from the confidence threshold (default 0)");
    hide->add_option("--weight", cfg.weight, "Priority weight per strong rule")
        ->check(CLI::IsMember({"confidence", "unit"}));
    hide->add_option("--output", cfg.output_path,
                     "Write the sanitized basket here instead of stdout");
    hide->add_option("--log", cfg.log_path, "Write the modification log here");

    CLI::App* diff = app.add_subcommand("diff", "Report sanitization side effects between two "
                                                "basket files");
    diff->add_option("original", cfg.input_path, "Original basket file")->required();
    diff->add_option("sanitized", cfg.second_path, "Sanitized basket file")->required();
    add_support(diff);
    add_confidence(diff);
    diff->add_option("--sensitive", cfg.sensitive_path,
                     "Rules file declaring which hidden rules were intended");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (mine->parsed()) {
            cfg.subcommand = "mine";
            return run_mine(cfg, out);
        }
        if (rules->parsed()) {
            cfg.subcommand = "rules";
            return run_rules(cfg, out);
        }
        if (hide->parsed()) {
            cfg.subcommand = "hide";
            return run_hide(cfg, out, err);
        }
        cfg.subcommand = "diff";
        return run_diff(cfg, out);
    } catch (const ParamError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace rulehide
