#include "modgroup/pda.hpp"

#include <algorithm>
#include <stdexcept>

namespace modgroup {

PdaConfiguration PdaConfiguration::from_top_first(const std::vector<StackSymbol>& symbols) {
    if (symbols.empty() || symbols.back() != StackSymbol::Bottom)
        throw std::invalid_argument("bottom marker must close the symbol list");
    if (std::count(symbols.begin(), symbols.end(), StackSymbol::Bottom) != 1)
        throw std::invalid_argument("bottom marker must appear exactly once");
    PdaConfiguration c;
    c.stack_.assign(symbols.rbegin(), symbols.rend());
    return c;
}

PdaConfiguration::Undo PdaConfiguration::apply(Letter l) {
    StackSymbol t = stack_.back();
    if (l == Letter::U) {
        switch (t) {
            case StackSymbol::Bottom:
            case StackSymbol::OneS:
                stack_.push_back(StackSymbol::OneU);
                return {Undo::Action::Pushed, t};
            case StackSymbol::OneU:
                stack_.back() = StackSymbol::TwoU;
                return {Undo::Action::Replaced, t};
            case StackSymbol::TwoU:
                stack_.pop_back();
                return {Undo::Action::Popped, t};
        }
    } else {
        if (t == StackSymbol::OneS) {
            stack_.pop_back();
            return {Undo::Action::Popped, t};
        }
        stack_.push_back(StackSymbol::OneS);
        return {Undo::Action::Pushed, t};
    }
    throw std::logic_error("unreachable");
}

void PdaConfiguration::revert(const Undo& u) {
    switch (u.action) {
        case Undo::Action::Pushed: stack_.pop_back(); break;
        case Undo::Action::Replaced: stack_.back() = u.old_top; break;
        case Undo::Action::Popped: stack_.push_back(u.old_top); break;
    }
}

PdaConfiguration step(PdaConfiguration c, Letter l) {
    c.apply(l);
    return c;
}

bool accepts(const Word& w) {
    PdaConfiguration c;
    for (Letter l : w.letters()) c.apply(l);
    return c.at_bottom();
}

Word stack_to_normal_form(const PdaConfiguration& c) {
    std::vector<Letter> letters;
    for (std::size_t i = 1; i < c.symbols().size(); ++i) {
        switch (c.symbols()[i]) {
            case StackSymbol::OneU: letters.push_back(Letter::U); break;
            case StackSymbol::TwoU:
                letters.push_back(Letter::U);
                letters.push_back(Letter::U);
                break;
            case StackSymbol::OneS: letters.push_back(Letter::S); break;
            case StackSymbol::Bottom:
                throw std::invalid_argument("bottom marker above the bottom");
        }
    }
    return Word(std::move(letters));
}

const std::vector<GrammarProduction>& grammar() {
    using GS = GrammarSymbol;
    static const std::vector<GrammarProduction> productions = {
        {0, {GS::u(), GS::nt(1), GS::nt(0)}},  // reading U with bottom exposed
        {1, {GS::u(), GS::nt(2)}},
        {2, {GS::u()}},
        {3, {GS::u(), GS::nt(1), GS::nt(3)}},
        {0, {GS::s(), GS::nt(3), GS::nt(0)}},
        {1, {GS::s(), GS::nt(3), GS::nt(1)}},
        {2, {GS::s(), GS::nt(3), GS::nt(2)}},
        {3, {GS::s()}},
        {0, {GS::end()}},
    };
    return productions;
}

}  // namespace modgroup
