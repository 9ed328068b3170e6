#include "modgroup/words.hpp"

#include <stdexcept>

namespace modgroup {

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U': letters.push_back(Letter::U); break;
            case 'S': letters.push_back(Letter::S); break;
            default:
                throw std::invalid_argument("word may contain only 'U' and 'S', got '" +
                                            std::string(1, c) + "'");
        }
    }
    return Word(std::move(letters));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(to_char(l));
    return s;
}

Word Word::prefix(std::size_t len) const {
    if (len > letters_.size()) len = letters_.size();
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<long>(len)));
}

Word Word::rotated_left(std::size_t k) const {
    if (letters_.empty()) return {};
    k %= letters_.size();
    std::vector<Letter> out;
    out.reserve(letters_.size());
    out.insert(out.end(), letters_.begin() + static_cast<long>(k), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<long>(k));
    return Word(std::move(out));
}

bool Word::contains_ss() const {
    for (std::size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i - 1] == Letter::S && letters_[i] == Letter::S) return true;
    return false;
}

std::size_t Word::count(Letter l) const {
    std::size_t n = 0;
    for (Letter x : letters_)
        if (x == l) ++n;
    return n;
}

std::vector<Word> rotations(const Word& w) {
    if (w.empty()) return {Word{}};
    std::vector<Word> out;
    out.reserve(w.length());
    for (std::size_t k = 0; k < w.length(); ++k) out.push_back(w.rotated_left(k));
    return out;
}

}  // namespace modgroup
