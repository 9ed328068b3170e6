#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace modgroup {

// The two generators of the modular group: U of order 3, S of order 2.
enum class Letter : std::uint8_t { U, S };

inline char to_char(Letter l) { return l == Letter::U ? 'U' : 'S'; }

// A finite word over {U, S}.  Plain value type; the empty word is allowed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Parses a string of 'U'/'S' characters; throws std::invalid_argument
    // on anything else.
    static Word parse(std::string_view text);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter at(std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    std::string str() const;

    Word prefix(std::size_t len) const;
    Word rotated_left(std::size_t k) const;

    bool contains_ss() const;
    std::size_t count(Letter l) const;

    void push_back(Letter l) { letters_.push_back(l); }
    void pop_back() { letters_.pop_back(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// All cyclic rotations of w in rotation order; the empty word has a single
// (empty) rotation.
std::vector<Word> rotations(const Word& w);

}  // namespace modgroup
