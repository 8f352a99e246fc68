#include "rq/free_models.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rq {

namespace {

ReducedWord strip_trailing(const ReducedWord& w, int gen) {
    std::vector<Letter> ls = w.letters();
    while (!ls.empty() && ls.back().gen == gen) ls.pop_back();
    return ReducedWord::reduce(w.alphabet(), ls);
}

ReducedWord delete_generator(const ReducedWord& w, int gen) {
    std::vector<Letter> ls;
    for (const Letter& l : w.letters())
        if (l.gen != gen) ls.push_back(l);
    return ReducedWord::reduce(w.alphabet(), ls);
}

long long exponent_sum(const ReducedWord& w, int gen) {
    long long k = 0;
    for (const Letter& l : w.letters())
        if (l.gen == gen) k += l.exp;
    return k;
}

} // namespace

FreeModel parse_free_model(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "fr") return FreeModel::rack;
    if (s == "fq") return FreeModel::quandle;
    if (s == "frstar" || s == "fr*") return FreeModel::pointed_rack;
    if (s == "frfixed" || s == "fr_fixed") return FreeModel::fixed_rack;
    if (s == "fqstar" || s == "fq*") return FreeModel::pointed_quandle;
    throw InputError("unknown free model '" + std::string(name) +
                     "' (expected FR, FQ, FRstar, FRfixed, FQstar)");
}

std::string free_model_name(FreeModel m) {
    switch (m) {
        case FreeModel::rack: return "FR";
        case FreeModel::quandle: return "FQ";
        case FreeModel::pointed_rack: return "FRstar";
        case FreeModel::fixed_rack: return "FRfixed";
        case FreeModel::pointed_quandle: return "FQstar";
    }
    return "?";
}

bool operator<(const FreeElement& a, const FreeElement& b) {
    if (a.basepoint_class != b.basepoint_class) return a.basepoint_class;
    if (a.gen != b.gen) return a.gen < b.gen;
    if (!(a.word == b.word)) return a.word < b.word;
    return a.p_exponent < b.p_exponent;
}

FreeAlgebra::FreeAlgebra(Alphabet alphabet, FreeModel model, std::optional<int> basepoint)
    : alphabet_(std::move(alphabet)), model_(model), basepoint_(basepoint) {
    if (alphabet_.size() == 0) throw InputError("free model needs at least one generator");
    const bool needs_basepoint = model_ == FreeModel::pointed_rack ||
                                 model_ == FreeModel::fixed_rack ||
                                 model_ == FreeModel::pointed_quandle;
    if (needs_basepoint) {
        if (!basepoint_) throw InputError("model " + free_model_name(model_) + " needs a basepoint");
        if (*basepoint_ < 0 || *basepoint_ >= alphabet_.size())
            throw InputError("basepoint index out of range");
    } else if (basepoint_) {
        throw InputError("model " + free_model_name(model_) + " does not take a basepoint");
    }
}

void FreeAlgebra::check_element(const FreeElement& a) const {
    if (a.basepoint_class) {
        if (model_ != FreeModel::fixed_rack)
            throw InputError("basepoint-class element outside the fixed-rack model");
        return;
    }
    if (a.gen < 0 || a.gen >= alphabet_.size()) throw InputError("element generator out of range");
    if (!(a.word.alphabet() == alphabet_)) throw InputError("element word over a different alphabet");
}

FreeElement FreeAlgebra::make(const ReducedWord& g, int x) const {
    if (!(g.alphabet() == alphabet_)) throw InputError("word over a different alphabet");
    if (x < 0 || x >= alphabet_.size()) throw InputError("generator index out of range");
    FreeElement a;
    switch (model_) {
        case FreeModel::rack:
            a.word = g;
            a.gen = x;
            break;
        case FreeModel::quandle:
        case FreeModel::pointed_quandle:
            a.word = strip_trailing(g, x);
            a.gen = x;
            break;
        case FreeModel::pointed_rack:
            a.word = x == *basepoint_ ? strip_trailing(g, x) : g;
            a.gen = x;
            break;
        case FreeModel::fixed_rack:
            if (x == *basepoint_) {
                a.word = ReducedWord(alphabet_);
                a.gen = *basepoint_;
                a.basepoint_class = true;
            } else {
                a.word = delete_generator(g, *basepoint_);
                a.p_exponent = exponent_sum(g, *basepoint_);
                a.gen = x;
            }
            break;
    }
    return a;
}

FreeElement FreeAlgebra::generator(int x) const { return make(ReducedWord(alphabet_), x); }

FreeElement FreeAlgebra::basepoint_element() const {
    if (!basepoint_) throw InputError("model has no basepoint");
    return make(ReducedWord(alphabet_), *basepoint_);
}

std::pair<ReducedWord, int> FreeAlgebra::representative(const FreeElement& a) const {
    check_element(a);
    if (a.basepoint_class) return {ReducedWord(alphabet_), *basepoint_};
    if (model_ == FreeModel::fixed_rack) {
        ReducedWord g = a.word;
        const long long k = a.p_exponent;
        for (long long i = 0; i < (k < 0 ? -k : k); ++i)
            g = multiply(g, ReducedWord::generator(alphabet_, *basepoint_, k < 0 ? -1 : +1));
        return {g, a.gen};
    }
    return {a.word, a.gen};
}

FreeElement FreeAlgebra::op(const FreeElement& a, const FreeElement& b) const {
    auto [g, x] = representative(a);
    auto [h, y] = representative(b);
    ReducedWord gx = multiply(g, ReducedWord::generator(alphabet_, x));
    return make(multiply(multiply(gx, invert(g)), h), y);
}

FreeElement FreeAlgebra::op_inverse(const FreeElement& a, const FreeElement& b) const {
    auto [g, x] = representative(a);
    auto [h, y] = representative(b);
    ReducedWord gxinv = multiply(g, ReducedWord::generator(alphabet_, x, -1));
    return make(multiply(multiply(gxinv, invert(g)), h), y);
}

std::vector<FreeElement> FreeAlgebra::enumerate(int max_word_length) const {
    std::set<FreeElement> seen;
    for (const ReducedWord& g : enumerate_words(alphabet_, max_word_length))
        for (int x = 0; x < alphabet_.size(); ++x) seen.insert(make(g, x));
    return std::vector<FreeElement>(seen.begin(), seen.end());
}

std::string FreeAlgebra::to_string(const FreeElement& a) const {
    check_element(a);
    if (a.basepoint_class) return "*";
    std::ostringstream os;
    os << '(' << rq::to_string(a.word);
    if (model_ == FreeModel::fixed_rack)
        os << " ; " << alphabet_.name(*basepoint_) << '^' << a.p_exponent;
    os << " ; " << alphabet_.name(a.gen) << ')';
    return os.str();
}

FreeElement project_to_free_quandle(const FreeElement& a) {
    if (a.basepoint_class || a.p_exponent != 0)
        throw InputError("projection expects a plain free-rack element");
    FreeElement q;
    q.word = strip_trailing(a.word, a.gen);
    q.gen = a.gen;
    return q;
}

RackMorphism FreeAlgebra::extend_to_rack(const FiniteRack& target,
                                         const std::vector<int>& generator_images) const {
    return RackMorphism(target, alphabet_, model_, basepoint_, generator_images);
}

RackMorphism::RackMorphism(FiniteRack target, Alphabet alphabet, FreeModel model,
                           std::optional<int> basepoint, std::vector<int> generator_images)
    : target_(std::move(target)), alphabet_(std::move(alphabet)), model_(model),
      basepoint_(basepoint), images_(std::move(generator_images)) {
    if (!target_.is_rack()) throw InputError("extension target is not a valid rack");
    if (static_cast<int>(images_.size()) != alphabet_.size())
        throw InputError("generator image list has wrong length");
    for (int v : images_)
        if (v < 0 || v >= target_.size()) throw InputError("generator image out of range");
    const bool quandle_model = model_ == FreeModel::quandle || model_ == FreeModel::pointed_quandle;
    if (quandle_model && !target_.is_quandle())
        throw InputError("free-quandle extension needs a quandle target");
    if (basepoint_) {
        const int q = images_[static_cast<size_t>(*basepoint_)];
        const ElementFlags f = target_.flags(q);
        if (model_ == FreeModel::pointed_rack && !f.is_pointable)
            throw InputError("image of the basepoint fails is_pointable (q |> q != q)");
        if (model_ == FreeModel::fixed_rack && !f.is_fixed)
            throw InputError("image of the basepoint fails is_fixed (x |> q != q for some x)");
    }
}

int RackMorphism::act(const ReducedWord& g, int start) const {
    int r = start;
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
        const int s = images_[static_cast<size_t>(it->gen)];
        r = it->exp > 0 ? target_.op(s, r) : target_.op_inverse(s, r);
    }
    return r;
}

int RackMorphism::operator()(const FreeElement& a) const {
    if (a.basepoint_class) return images_[static_cast<size_t>(*basepoint_)];
    ReducedWord g = a.word;
    if (model_ == FreeModel::fixed_rack && a.p_exponent != 0) {
        const long long k = a.p_exponent;
        for (long long i = 0; i < (k < 0 ? -k : k); ++i)
            g = multiply(g, ReducedWord::generator(alphabet_, *basepoint_, k < 0 ? -1 : +1));
    }
    return act(g, images_[static_cast<size_t>(a.gen)]);
}

} // namespace rq
