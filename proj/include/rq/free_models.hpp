#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rq/finite_rack.hpp"
#include "rq/words.hpp"

namespace rq {

/// The five free models on a generating set X, with basepoint p where one is
/// required:
///   rack            F(X) x X with (g,x) |> (h,y) = (g x g^-1 h, y)
///   quandle         conjugates of generators in F(X); canonical form (w, x)
///                   with w carrying no trailing x letter
///   pointed_rack    rack model with (g,p) ~ (g p^k, p); canonical form
///                   strips trailing p letters when the generator is p
///   fixed_rack      all (g,p) collapse to one basepoint class; for x != p
///                   the class of (g,x) is determined by (g with p deleted,
///                   total p-exponent of g, x)
///   pointed_quandle quandle model with (e,p) as the designated basepoint
enum class FreeModel { rack, quandle, pointed_rack, fixed_rack, pointed_quandle };

FreeModel parse_free_model(std::string_view name); // FR, FQ, FRstar, FRfixed, FQstar
std::string free_model_name(FreeModel m);

/// Normal form of an element of a free model. Interpretation of the fields
/// depends on the model; equality of normal forms is element equality.
struct FreeElement {
    ReducedWord word;
    int gen = -1;
    long long p_exponent = 0;   // fixed_rack, gen != p only
    bool basepoint_class = false; // fixed_rack only

    friend bool operator==(const FreeElement&, const FreeElement&) = default;
    friend bool operator<(const FreeElement& a, const FreeElement& b);
};

class RackMorphism;

class FreeAlgebra {
public:
    FreeAlgebra(Alphabet alphabet, FreeModel model,
                std::optional<int> basepoint = std::nullopt);

    const Alphabet& alphabet() const { return alphabet_; }
    FreeModel model() const { return model_; }
    std::optional<int> basepoint() const { return basepoint_; }
    bool quandle_model() const {
        return model_ == FreeModel::quandle || model_ == FreeModel::pointed_quandle;
    }

    /// Normal form of the class of the raw pair (g, x).
    FreeElement make(const ReducedWord& g, int x) const;
    FreeElement generator(int x) const;
    FreeElement basepoint_element() const;

    FreeElement op(const FreeElement& a, const FreeElement& b) const;
    /// The unique c with op(a, c) = b.
    FreeElement op_inverse(const FreeElement& a, const FreeElement& b) const;

    /// A representative (g, x) in the plain free rack F(X) x X.
    std::pair<ReducedWord, int> representative(const FreeElement& a) const;

    /// All distinct normal forms reached by raw pairs (g, x) with
    /// |g| <= max_word_length, sorted, no duplicates.
    std::vector<FreeElement> enumerate(int max_word_length) const;

    std::string to_string(const FreeElement& a) const;

    /// The induced morphism into a finite rack extending
    /// generator i -> generator_images[i]. Validates the model's condition
    /// on the image of the basepoint and, for quandle models, that the
    /// target is a quandle.
    RackMorphism extend_to_rack(const FiniteRack& target,
                                const std::vector<int>& generator_images) const;

private:
    void check_element(const FreeElement& a) const;

    Alphabet alphabet_;
    FreeModel model_;
    std::optional<int> basepoint_;
};

/// FR(X) -> FQ(X), (g, x) -> the canonical form of the conjugate g x g^-1.
FreeElement project_to_free_quandle(const FreeElement& rack_element);

/// Evaluator for the universal-property extension of a generator assignment.
class RackMorphism {
public:
    RackMorphism(FiniteRack target, Alphabet alphabet, FreeModel model,
                 std::optional<int> basepoint, std::vector<int> generator_images);

    int operator()(const FreeElement& a) const;
    const FiniteRack& target() const { return target_; }

private:
    friend class FreeAlgebra;
    int act(const ReducedWord& g, int start) const;

    FiniteRack target_;
    Alphabet alphabet_;
    FreeModel model_;
    std::optional<int> basepoint_;
    std::vector<int> images_;
};

} // namespace rq
