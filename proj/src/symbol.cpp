#include "rekit/symbol.hpp"

#include "rekit/error.hpp"

#include <charconv>

namespace rekit {

namespace {
constexpr std::uint32_t kSingleLetters = 26;
}

std::string symbolName(Symbol s) {
    if (s.id < kSingleLetters)
        return std::string(1, static_cast<char>('a' + s.id));
    return "a_" + std::to_string(s.id - kSingleLetters);
}

Symbol symbolFromName(std::string_view name) {
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z')
        return Symbol{static_cast<std::uint32_t>(name[0] - 'a')};
    if (name.size() > 2 && name.substr(0, 2) == "a_") {
        std::uint32_t n = 0;
        auto digits = name.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n <= UINT32_MAX - kSingleLetters)
            return Symbol{kSingleLetters + n};
    }
    throw Error("malformed symbol name '" + std::string(name) + "'");
}

Symbol standardLetter(std::size_t index, std::size_t k) {
    if (index >= k)
        throw Error("letter index out of range");
    if (k <= kSingleLetters)
        return Symbol{static_cast<std::uint32_t>(index)};
    return Symbol{static_cast<std::uint32_t>(kSingleLetters + index + 1)};
}

Alphabet standardAlphabet(std::size_t k) {
    Alphabet out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(standardLetter(i, k));
    return out;
}

} // namespace rekit
