#ifndef NETGLUE_TEST_CORPUS_HPP
#define NETGLUE_TEST_CORPUS_HPP

#include <string>
#include <vector>

#include "helpers.hpp"
#include "netglue/formula.hpp"

namespace netglue::testing {

/// Seeded generator of closed MSO formulas with quantifier rank <= depth.
class FormulaCorpus {
public:
    explicit FormulaCorpus(Rng& rng) : rng_(rng) {}

    std::string text(std::size_t depth) {
        points_.clear();
        sets_.clear();
        counter_ = 0;
        // start with a quantifier so atoms always have a variable in scope
        return quantified(depth == 0 ? 1 : depth);
    }

    Formula formula(std::size_t depth) { return parse_formula(text(depth)); }

private:
    std::string quantified(std::size_t depth) {
        // a set variable may lead only when enough depth remains to still
        // bind the point variable every atom needs
        const bool may_set = !points_.empty() || depth > 1;
        const bool set_var =
            may_set && (points_.empty() ? pick(rng_, 3) == 0 : pick(rng_, 4) == 0);
        std::string name = (set_var ? "S" : "v") + std::to_string(counter_++);
        const char* word = set_var ? (pick(rng_, 2) ? "existsS " : "forallS ")
                                   : (pick(rng_, 2) ? "exists " : "forall ");
        if (set_var)
            sets_.push_back(name);
        else
            points_.push_back(name);
        std::string body = rest(depth - 1);
        if (set_var)
            sets_.pop_back();
        else
            points_.pop_back();
        return std::string(word) + name + ". " + body;
    }

    std::string rest(std::size_t depth) {
        if (depth > 0 && (points_.empty() || pick(rng_, 2) == 0)) return quantified(depth);
        return boolean(2);
    }

    std::string boolean(std::size_t budget) {
        if (budget == 0 || pick(rng_, 3) == 0) return atom();
        switch (pick(rng_, 4)) {
            case 0: return "(" + boolean(budget - 1) + " & " + boolean(budget - 1) + ")";
            case 1: return "(" + boolean(budget - 1) + " | " + boolean(budget - 1) + ")";
            case 2: return "(" + boolean(budget - 1) + " => " + boolean(budget - 1) + ")";
            default: return "!(" + boolean(budget - 1) + ")";
        }
    }

    std::string atom() {
        const std::string& x = points_[pick(rng_, points_.size())];
        if (!sets_.empty() && pick(rng_, 3) == 0)
            return x + " in " + sets_[pick(rng_, sets_.size())];
        const std::string& y = points_[pick(rng_, points_.size())];
        switch (pick(rng_, 3)) {
            case 0: return x + " -> " + y;
            case 1: return x + " = " + y;
            default: return x + " != " + y;
        }
    }

    Rng& rng_;
    std::vector<std::string> points_;
    std::vector<std::string> sets_;
    int counter_ = 0;
};

}  // namespace netglue::testing

#endif
