#include "rq/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rq {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void require_same_alphabet(const ReducedWord& u, const ReducedWord& v) {
    if (!(u.alphabet() == v.alphabet()))
        throw InputError("words are over different alphabets");
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
    for (const auto& n : names) {
        if (!valid_name(n))
            throw InputError("invalid generator name '" + n + "'");
    }
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw InputError("duplicate generator name '" + names[i] + "'");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::string& Alphabet::name(int i) const {
    if (i < 0 || i >= size()) throw InputError("generator index out of range");
    return (*names_)[static_cast<size_t>(i)];
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if ((*names_)[static_cast<size_t>(i)] == name) return i;
    return std::nullopt;
}

ReducedWord ReducedWord::reduce(Alphabet alphabet, const std::vector<Letter>& letters) {
    ReducedWord w(std::move(alphabet));
    for (const Letter& l : letters) {
        if (l.gen < 0 || l.gen >= w.alphabet_.size())
            throw InputError("letter generator index out of range");
        if (l.exp != 1 && l.exp != -1)
            throw InputError("letter exponent must be +1 or -1");
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().exp == -l.exp) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

ReducedWord ReducedWord::generator(const Alphabet& alphabet, int gen, int exp) {
    return reduce(alphabet, {Letter{gen, exp}});
}

bool operator<(const ReducedWord& a, const ReducedWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (int i = 0; i < a.length(); ++i) {
        if (a.letters_[static_cast<size_t>(i)] == b.letters_[static_cast<size_t>(i)]) continue;
        return letter_less(a.letters_[static_cast<size_t>(i)], b.letters_[static_cast<size_t>(i)]);
    }
    return false;
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
    require_same_alphabet(u, v);
    std::vector<Letter> cat = u.letters();
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    return ReducedWord::reduce(u.alphabet(), cat);
}

ReducedWord invert(const ReducedWord& u) {
    std::vector<Letter> rev;
    rev.reserve(u.letters().size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        rev.push_back(Letter{it->gen, -it->exp});
    return ReducedWord::reduce(u.alphabet(), rev);
}

ReducedWord conjugate(const ReducedWord& g, const ReducedWord& x) {
    require_same_alphabet(g, x);
    return multiply(multiply(g, x), invert(g));
}

ReducedWord cyclically_reduce(const ReducedWord& u) {
    std::vector<Letter> ls = u.letters();
    while (ls.size() >= 2 && ls.front().gen == ls.back().gen &&
           ls.front().exp == -ls.back().exp) {
        ls.erase(ls.begin());
        ls.pop_back();
    }
    return ReducedWord::reduce(u.alphabet(), ls);
}

bool are_conjugate(const ReducedWord& u, const ReducedWord& v) {
    require_same_alphabet(u, v);
    ReducedWord cu = cyclically_reduce(u);
    ReducedWord cv = cyclically_reduce(v);
    if (cu.length() != cv.length()) return false;
    int n = cu.length();
    if (n == 0) return true;
    // cu against every rotation of cv
    for (int s = 0; s < n; ++s) {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            match = cu.letter(i) == cv.letter((i + s) % n);
        if (match) return true;
    }
    return false;
}

std::vector<ReducedWord> enumerate_words(const Alphabet& alphabet, int max_length) {
    if (max_length < 0) throw InputError("max_length must be >= 0");
    std::vector<Letter> all;
    for (int g = 0; g < alphabet.size(); ++g) {
        all.push_back(Letter{g, +1});
        all.push_back(Letter{g, -1});
    }
    std::vector<ReducedWord> out;
    out.push_back(ReducedWord(alphabet));
    std::vector<ReducedWord> frontier = {ReducedWord(alphabet)};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<ReducedWord> next;
        for (const ReducedWord& w : frontier) {
            for (const Letter& l : all) {
                if (!w.empty() && w.letters().back().gen == l.gen &&
                    w.letters().back().exp == -l.exp)
                    continue;
                std::vector<Letter> ext = w.letters();
                ext.push_back(l);
                next.push_back(ReducedWord::reduce(alphabet, ext));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::string to_string(const ReducedWord& u) {
    if (u.empty()) return "1";
    std::ostringstream os;
    for (int i = 0; i < u.length(); ++i) {
        if (i) os << ' ';
        os << u.alphabet().name(u.letter(i).gen);
        if (u.letter(i).exp < 0) os << "^-1";
    }
    return os.str();
}

ReducedWord parse_word(const Alphabet& alphabet, std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens[0] == "1") return ReducedWord(alphabet);
    std::vector<Letter> letters;
    for (const std::string& t : tokens) {
        std::string base = t;
        int exp = +1;
        if (auto pos = t.find('^'); pos != std::string::npos) {
            base = t.substr(0, pos);
            std::string suffix = t.substr(pos + 1);
            if (suffix != "-1")
                throw InputError("bad exponent '" + suffix + "' in token '" + t + "'");
            exp = -1;
        }
        auto idx = alphabet.index_of(base);
        if (!idx) throw InputError("unknown generator '" + base + "'");
        letters.push_back(Letter{*idx, exp});
    }
    return ReducedWord::reduce(alphabet, letters);
}

} // namespace rq
