#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rq/errors.hpp"

namespace rq {

/// One letter of a free-group word: a generator index with exponent +1 or -1.
struct Letter {
    int gen = 0;
    int exp = +1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Letter order used everywhere: a < a^-1 < b < b^-1 < ...
inline bool letter_less(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.exp > b.exp;
}

/// A named generating set. Cheap to copy; compares by name list.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return names_ ? static_cast<int>(names_->size()) : 0; }
    const std::string& name(int i) const;
    std::optional<int> index_of(std::string_view name) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        if (a.names_ == b.names_) return true;
        if (!a.names_ || !b.names_) return a.size() == 0 && b.size() == 0;
        return *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// A freely reduced word over a fixed alphabet. Immutable; the empty word is
/// the group identity.
class ReducedWord {
public:
    ReducedWord() = default;
    explicit ReducedWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    /// Reduces an arbitrary letter string. Letters must index into `alphabet`.
    static ReducedWord reduce(Alphabet alphabet, const std::vector<Letter>& letters);

    static ReducedWord generator(const Alphabet& alphabet, int gen, int exp = +1);

    const Alphabet& alphabet() const { return alphabet_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const Letter& letter(int i) const { return letters_[static_cast<size_t>(i)]; }
    const std::vector<Letter>& letters() const { return letters_; }

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }

    /// Length-lexicographic order (alphabets assumed equal).
    friend bool operator<(const ReducedWord& a, const ReducedWord& b);

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& u);

/// g x g^-1, reduced.
ReducedWord conjugate(const ReducedWord& g, const ReducedWord& x);

/// Conjugacy test in the free group: cyclic reduction plus rotation matching.
bool are_conjugate(const ReducedWord& u, const ReducedWord& v);

/// Strips matching inverse letters from the two ends until none remain.
ReducedWord cyclically_reduce(const ReducedWord& u);

/// All freely reduced words of length <= max_length, each once, in
/// length-lexicographic order.
std::vector<ReducedWord> enumerate_words(const Alphabet& alphabet, int max_length);

/// Token format: generators separated by blanks, inverses marked `^-1`;
/// the empty word prints and parses as `1`.
std::string to_string(const ReducedWord& u);
ReducedWord parse_word(const Alphabet& alphabet, std::string_view text);

} // namespace rq
