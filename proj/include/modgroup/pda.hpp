#pragma once

#include <cstdint>
#include <vector>

#include "modgroup/words.hpp"

namespace modgroup {

// Stack alphabet of the single-state pushdown automaton that decides the
// word problem for positive {U,S}-words.  The stack holds the normal form
// of the consumed prefix in coded form.
enum class StackSymbol : std::uint8_t {
    Bottom = 0,  // bottom-of-stack marker
    OneU = 1,    // a single U
    TwoU = 2,    // U^2
    OneS = 3,    // S
};

// A PDA configuration: the stack, bottom marker at index 0.
class PdaConfiguration {
public:
    PdaConfiguration() : stack_{StackSymbol::Bottom} {}

    // Builds a configuration from symbols listed top first (bottom marker
    // last).  Throws std::invalid_argument if the bottom marker is missing,
    // duplicated, or not at the bottom.
    static PdaConfiguration from_top_first(const std::vector<StackSymbol>& symbols);

    StackSymbol top() const { return stack_.back(); }
    std::size_t size() const { return stack_.size(); }
    bool at_bottom() const { return stack_.size() == 1; }

    // Symbols from bottom (index 0, always Bottom) to top.
    const std::vector<StackSymbol>& symbols() const { return stack_; }

    // Applies the transition for letter l in place.  The returned record
    // undoes it via revert(); this keeps depth-first searches O(1) per move.
    struct Undo {
        enum class Action : std::uint8_t { Pushed, Replaced, Popped };
        Action action;
        StackSymbol old_top;
    };
    Undo apply(Letter l);
    void revert(const Undo& u);

    friend bool operator==(const PdaConfiguration&, const PdaConfiguration&) = default;

private:
    std::vector<StackSymbol> stack_;
};

// The pure transition step: apply exactly one of the eight moves keyed by
// (letter, top symbol).
PdaConfiguration step(PdaConfiguration c, Letter l);

// Runs the automaton over w from the initial configuration; accepts iff the
// final stack is the bare bottom marker.  O(length) time.
bool accepts(const Word& w);

// Decodes the stack bottom-up (1 -> U, 2 -> UU, 3 -> S); equals the normal
// form of the consumed prefix.
Word stack_to_normal_form(const PdaConfiguration& c);

// The unambiguous context-free grammar derived from the automaton.
// Nonterminals are indices 0..3; the start symbol is 0.
struct GrammarSymbol {
    enum class Kind : std::uint8_t { TerminalU, TerminalS, TerminalEnd, Nonterminal };
    Kind kind;
    int nonterminal = -1;

    static GrammarSymbol u() { return {Kind::TerminalU}; }
    static GrammarSymbol s() { return {Kind::TerminalS}; }
    static GrammarSymbol end() { return {Kind::TerminalEnd}; }
    static GrammarSymbol nt(int i) { return {Kind::Nonterminal, i}; }

    friend bool operator==(const GrammarSymbol&, const GrammarSymbol&) = default;
};

struct GrammarProduction {
    int head;  // nonterminal index 0..3
    std::vector<GrammarSymbol> body;

    friend bool operator==(const GrammarProduction&, const GrammarProduction&) = default;
};

// The fixed nine productions, in transition order.
const std::vector<GrammarProduction>& grammar();

}  // namespace modgroup
