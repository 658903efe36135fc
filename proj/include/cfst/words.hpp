#pragma once

// Finite and infinite words over small integer alphabets, plus the
// generators used as partial-quotient sources: (eventually) periodic words,
// morphic fixed points with codings, automatic sequences (DFAO), standard
// Sturmian words, and explicit prefixes.
//
// Letters are 1-indexed at the InfiniteWord interface (a_1 a_2 ...); when a
// word feeds the continued-fraction layer every letter must be >= 1.

#include "cfst/kernels.hpp"
#include "cfst/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cfst {

using FiniteWord = std::vector<Letter>;

enum class WordKind {
    Periodic,
    EventuallyPeriodic,
    MorphicFixedPoint,
    Automatic,
    SturmianStandard,
    ExplicitPrefix,
};

// Fractional word power W^x: W repeated floor(x) times, then the prefix of W
// of length ceil((x - floor(x)) * |W|).
FiniteWord word_power(const FiniteWord& w, const BigRat& x);

class WordSource {
  public:
    virtual ~WordSource() = default;
    virtual WordKind kind() const = 0;
    // Exactly the first n letters. Throws std::out_of_range when the source
    // cannot produce that many (explicit prefixes only).
    virtual FiniteWord prefix(std::size_t n) const = 0;
};

// Immutable handle on a lazy infinite word. prefix/letter_at are pure, so
// concurrent readers are safe; there is no shared mutable state.
class InfiniteWord {
  public:
    explicit InfiniteWord(std::shared_ptr<const WordSource> src) : src_(std::move(src)) {}

    FiniteWord prefix(std::size_t n) const { return src_->prefix(n); }
    Letter letter_at(std::size_t i) const;  // 1-indexed
    WordKind kind() const { return src_->kind(); }

  private:
    std::shared_ptr<const WordSource> src_;
};

class Morphism {
  public:
    // Every letter occurring in an image must itself have a rule. Empty
    // images are allowed (erasing morphisms are representable; the fixed
    // point constructor rejects them when the tail dies).
    explicit Morphism(std::map<Letter, FiniteWord> images);

    bool contains(Letter a) const { return images_.count(a) != 0; }
    const FiniteWord& image(Letter a) const;
    const std::map<Letter, FiniteWord>& images() const { return images_; }
    std::vector<Letter> alphabet() const;
    std::optional<std::size_t> uniform_width() const { return uniform_; }

    FiniteWord apply(const FiniteWord& w) const;

  private:
    std::map<Letter, FiniteWord> images_;
    std::optional<std::size_t> uniform_;
};

class Coding {
  public:
    explicit Coding(std::map<Letter, Letter> map) : map_(std::move(map)) {}
    static Coding identity(const std::vector<Letter>& alphabet);

    Letter apply(Letter a) const;
    FiniteWord apply(const FiniteWord& w) const;
    const std::map<Letter, Letter>& map() const { return map_; }

  private:
    std::map<Letter, Letter> map_;
};

// Deterministic finite automaton with output; reads base-k digits of n
// most-significant-first (no leading zeros, n = 0 reads the empty string).
struct Dfao {
    int base = 2;
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> transitions;  // [state][digit]
    std::vector<Letter> output;                         // [state]

    std::size_t num_states() const { return output.size(); }
    void validate() const;
};

Letter automatic_letter(const Dfao& d, std::uint64_t n);

// --- generator constructors ---------------------------------------------

InfiniteWord periodic_word(FiniteWord cycle);
InfiniteWord eventually_periodic_word(FiniteWord preperiod, FiniteWord cycle);
InfiniteWord explicit_prefix_word(FiniteWord letters);
InfiniteWord automatic_word(const Dfao& d);  // letter_at(i) = output on i-1

// Standard sequence s_n = s_{n-1}^{d_n} s_{n-2} with s_{-1} = 1, s_0 = 0.
// A finite directive list is cycled; all-ones yields the Fibonacci word.
InfiniteWord sturmian_standard(std::vector<int> directives);

InfiniteWord coded_word(const InfiniteWord& u, const Coding& phi);

// --- morphic machinery ----------------------------------------------------

FiniteWord morphism_iterate(const Morphism& sigma, Letter a, unsigned n);

// Letters some iterate of sigma erases entirely (least fixed point).
std::set<Letter> mortal_letters(const Morphism& sigma);

// sigma(a) = aW with sigma^n(W) non-empty for every n.
bool is_prolongable(const Morphism& sigma, Letter a);

InfiniteWord fixed_point(const Morphism& sigma, Letter a);

// True iff every letter occurring in the fixed point occurs at least twice
// in it. Decided symbolically from capped letter counts, not from a prefix.
bool is_recurrent_generator(const Morphism& sigma, Letter a);

// --- text formats ----------------------------------------------------------

// "0->01;1->0". Letters are single decimal digits; unknown letters rejected.
Morphism parse_morphism(const std::string& text);
// "0=>1;1=>2".
Coding parse_coding(const std::string& text);

}  // namespace cfst
