#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "fuchs/errors.hpp"

namespace fuchs {

/// Freely reduced word in the two generators, letters a, b with inverses
/// written A, B. The empty word prints as "1".
class Word {
public:
    Word() = default;

    static Word generator(char c) {
        if (c != 'a' && c != 'b') throw input_error("generator must be 'a' or 'b'");
        return Word(std::string(1, c));
    }

    static Word parse(std::string_view text) {
        if (text == "1") return Word();
        Word out;
        for (char c : text) {
            if (c != 'a' && c != 'b' && c != 'A' && c != 'B')
                throw input_error("bad word letter '" + std::string(1, c) + "'");
            out.append(c);
        }
        return out;
    }

    Word inverse() const {
        Word out;
        for (auto it = w_.rbegin(); it != w_.rend(); ++it) out.append(flip(*it));
        return out;
    }

    friend Word operator*(const Word& u, const Word& v) {
        Word out = u;
        for (char c : v.w_) out.append(c);
        return out;
    }

    bool empty() const { return w_.empty(); }
    std::size_t length() const { return w_.size(); }
    std::string str() const { return w_.empty() ? "1" : w_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    explicit Word(std::string w) : w_(std::move(w)) {}

    static char flip(char c) {
        return static_cast<char>(std::islower(static_cast<unsigned char>(c))
                                     ? std::toupper(static_cast<unsigned char>(c))
                                     : std::tolower(static_cast<unsigned char>(c)));
    }
    static bool cancels(char x, char y) {
        return x != y && std::toupper(static_cast<unsigned char>(x)) ==
                             std::toupper(static_cast<unsigned char>(y));
    }
    void append(char c) {
        if (!w_.empty() && cancels(w_.back(), c)) w_.pop_back();
        else w_.push_back(c);
    }

    std::string w_;
};

} // namespace fuchs
