#include "rekit/oracle.hpp"

#include "rekit/error.hpp"

#include <algorithm>
#include <numeric>

namespace rekit {

namespace {

constexpr unsigned kBits = 7;
constexpr std::uint32_t kMaxSymbolId = (1u << kBits) - 2;

using Layers = std::vector<std::vector<std::uint64_t>>;

void normalize(std::vector<std::uint64_t> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint64_t letterCode(Symbol s) {
    if (s.id > kMaxSymbolId)
        throw Error("symbol id too large for bounded enumeration");
    return s.id + 1;
}

// Appends every u·v with u in `left` (length i) and v in `right` (length j).
void appendProducts(const std::vector<std::uint64_t> &left, const std::vector<std::uint64_t> &right, std::size_t j,
                    std::vector<std::uint64_t> &out) {
    for (std::uint64_t u : left)
        for (std::uint64_t v : right)
            out.push_back((u << (kBits * j)) | v);
}

Layers languageOf(const Regex &r, std::size_t maxLength) {
    Layers out(maxLength + 1);
    switch (r.kind()) {
    case RegexKind::Empty:
        break;
    case RegexKind::Epsilon:
        out[0].push_back(0);
        break;
    case RegexKind::Letter:
        if (maxLength >= 1)
            out[1].push_back(letterCode(r.symbol()));
        break;
    case RegexKind::Union: {
        Layers a = languageOf(r.left(), maxLength);
        Layers b = languageOf(r.right(), maxLength);
        for (std::size_t n = 0; n <= maxLength; ++n) {
            out[n] = std::move(a[n]);
            out[n].insert(out[n].end(), b[n].begin(), b[n].end());
            normalize(out[n]);
        }
        break;
    }
    case RegexKind::Concat: {
        Layers a = languageOf(r.left(), maxLength);
        Layers b = languageOf(r.right(), maxLength);
        for (std::size_t n = 0; n <= maxLength; ++n) {
            for (std::size_t i = 0; i <= n; ++i)
                appendProducts(a[i], b[n - i], n - i, out[n]);
            normalize(out[n]);
        }
        break;
    }
    case RegexKind::Star: {
        Layers a = languageOf(r.child(), maxLength);
        out[0].push_back(0);
        for (std::size_t n = 1; n <= maxLength; ++n) {
            for (std::size_t i = 1; i <= n; ++i)
                appendProducts(a[i], out[n - i], n - i, out[n]);
            normalize(out[n]);
        }
        break;
    }
    }
    return out;
}

bool nextRestrictedGrowth(std::vector<std::uint32_t> &labels) {
    // Restricted growth strings enumerate set partitions: labels[0] == 0 and
    // labels[i] <= 1 + max(labels[0..i-1]).
    const std::size_t n = labels.size();
    for (std::size_t i = n; i-- > 1;) {
        std::uint32_t prefixMax = 0;
        for (std::size_t j = 0; j < i; ++j)
            prefixMax = std::max(prefixMax, labels[j]);
        if (labels[i] <= prefixMax) {
            ++labels[i];
            std::fill(labels.begin() + static_cast<std::ptrdiff_t>(i) + 1, labels.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

BoundedLanguage::BoundedLanguage(std::size_t maxLength) {
    if (maxLength > kMaxLength)
        throw Error("bounded enumeration supports words of length at most 9");
    byLength_.resize(maxLength + 1);
}

std::size_t BoundedLanguage::size() const noexcept {
    std::size_t n = 0;
    for (const auto &layer : byLength_)
        n += layer.size();
    return n;
}

std::uint64_t BoundedLanguage::encode(std::span<const Symbol> word) {
    if (word.size() > kMaxLength)
        throw Error("word too long for bounded enumeration");
    std::uint64_t code = 0;
    for (Symbol s : word)
        code = (code << kBits) | letterCode(s);
    return code;
}

bool BoundedLanguage::contains(std::span<const Symbol> word) const {
    if (word.size() > maxLength())
        return false;
    const auto &layer = byLength_[word.size()];
    return std::binary_search(layer.begin(), layer.end(), encode(word));
}

std::set<Word> BoundedLanguage::words() const {
    std::set<Word> out;
    for (std::size_t n = 0; n < byLength_.size(); ++n)
        for (std::uint64_t code : byLength_[n]) {
            Word w(n);
            for (std::size_t i = n; i-- > 0;) {
                w[i] = Symbol{static_cast<std::uint32_t>((code & ((1u << kBits) - 1)) - 1)};
                code >>= kBits;
            }
            out.insert(std::move(w));
        }
    return out;
}

std::set<std::string> BoundedLanguage::renderedWords() const {
    std::set<std::string> out;
    for (const Word &w : words()) {
        std::string s;
        for (Symbol x : w)
            s += symbolName(x);
        out.insert(std::move(s));
    }
    return out;
}

BoundedLanguage enumerateRe(const Regex &r, std::size_t maxLength) {
    BoundedLanguage out(maxLength);
    Layers layers = languageOf(r, maxLength);
    for (std::size_t n = 0; n <= maxLength; ++n)
        out.ofLength(n) = std::move(layers[n]);
    return out;
}

BoundedLanguage enumerateNfa(const Nfa &a, std::size_t maxLength) {
    BoundedLanguage out(maxLength);
    // accepted[q][n]: words of length n accepted from state q.
    std::vector<Layers> accepted(a.numStates(), Layers(maxLength + 1));
    for (State q : a.finals())
        accepted[q][0].push_back(0);
    for (std::size_t n = 1; n <= maxLength; ++n)
        for (State q = 0; q < a.numStates(); ++q) {
            auto &layer = accepted[q][n];
            for (const Transition &t : a.outgoing(q)) {
                const std::uint64_t head = letterCode(a.symbolOf(t.label)) << (kBits * (n - 1));
                for (std::uint64_t tail : accepted[t.to][n - 1])
                    layer.push_back(head | tail);
            }
            normalize(layer);
        }
    for (std::size_t n = 0; n <= maxLength; ++n) {
        auto &layer = out.ofLength(n);
        for (State q : a.initials())
            layer.insert(layer.end(), accepted[q][n].begin(), accepted[q][n].end());
        normalize(layer);
    }
    return out;
}

Partition bruteCoarsestRightInvariant(const Nfa &a) {
    const std::size_t n = a.numStates();
    if (n > kBruteForceStateLimit)
        throw Error("brute-force search is limited to 8 states");
    if (n == 0)
        return Partition();
    std::vector<Partition> valid;
    std::vector<std::uint32_t> labels(n, 0);
    do {
        Partition candidate(labels);
        if (isRightInvariant(a, candidate))
            valid.push_back(std::move(candidate));
    } while (nextRestrictedGrowth(labels));
    // The identity is always right-invariant, so `valid` is nonempty.
    const auto coarsest = std::min_element(valid.begin(), valid.end(), [](const auto &x, const auto &y) {
        return x.numBlocks() < y.numBlocks();
    });
    for (const Partition &p : valid)
        if (!p.isFinerThan(*coarsest))
            throw Error("right-invariant equivalences have no coarsest element");
    return *coarsest;
}

} // namespace rekit
